#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <iterator>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "topo/chain_complex.hpp"
#include "topo/corpus.hpp"
#include "topo/cw_complex.hpp"
#include "topo/error.hpp"
#include "topo/io.hpp"
#include "topo/lattice.hpp"
#include "topo/morse.hpp"
#include "topo/rotation_index.hpp"
#include "topo/surface.hpp"
#include "topo/triangulate.hpp"

namespace topo::cli {

enum ExitCode : int { kOk = 0, kRejected = 1, kUsage = 2 };

struct Environment {
  std::optional<std::uint64_t> seed;  // TOPO_SEED
};

using json = nlohmann::json;

namespace detail {

/// Raised for results that are well-formed input the tool rejects.
struct Rejection : Error {
  using Error::Error;
};

inline std::string homology_line(const std::vector<HomologyGroup>& groups) {
  std::string s;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (i) s += ", ";
    s += "H_" + std::to_string(i) + " = " + groups[i].to_string();
  }
  return s;
}

inline json homology_json(const std::vector<HomologyGroup>& groups) {
  json a = json::array();
  for (const auto& g : groups) {
    json t = json::array();
    for (const auto& d : g.torsion) t.push_back(d.str());
    a.push_back({{"betti", g.betti}, {"torsion", t}, {"group", g.to_string()}});
  }
  return a;
}

inline json surface_json(const SurfaceType& s) {
  return {{"orientable", s.orientable},
          {"genus_or_crosscaps", s.genus_or_crosscaps},
          {"boundary_components", s.boundary_components},
          {"name", surface_name(s)}};
}

inline std::string surface_text(const SurfaceType& s) {
  std::ostringstream o;
  o << "orientable: " << (s.orientable ? "yes" : "no") << "\n"
    << (s.orientable ? "genus: " : "crosscaps: ") << s.genus_or_crosscaps << "\n"
    << "boundary components: " << s.boundary_components << "\n"
    << "name: " << surface_name(s) << "\n";
  return o.str();
}

inline CVector c_vector_of(const AnyComplex& c) {
  return std::visit([](const auto& k) { return c_vector(k); }, c);
}

inline std::string kind(const AnyComplex& c) {
  return std::holds_alternative<SimplicialComplex>(c) ? "simplicial" : "rcc";
}

inline ChainComplex chain_of(const AnyComplex& c) {
  if (const auto* k = std::get_if<SimplicialComplex>(&c)) return chain_complex_from_simplicial(*k);
  return chain_complex_from_rcc(std::get<RegularCWComplex>(c));
}

inline CellLattice lattice_of(const AnyComplex& c) {
  if (const auto* k = std::get_if<SimplicialComplex>(&c)) return CellLattice::from_simplicial(*k);
  return CellLattice::from_rcc(std::get<RegularCWComplex>(c));
}

inline SurfaceType classify_any(const AnyComplex& c) {
  if (const auto* k = std::get_if<SimplicialComplex>(&c)) return classify_surface(*k);
  const auto& x = std::get<RegularCWComplex>(c);
  if (x.dim() != 2) throw NotASurface("cell complex is not 2-dimensional");
  return classify_surface(triangulate_rcc(x).complex);
}

inline void require_valid(const AnyComplex& c) {
  if (const auto* x = std::get_if<RegularCWComplex>(&c)) {
    auto report = validate_rcc(*x);
    if (!report.valid()) throw Rejection("complex is not regular: " + report.violations.front());
  }
}

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out, Environment env) : in_(in), out_(out), env_(env) {}

  bool json_output = false;

  void validate(const std::string& path) {
    auto c = parse_complex_file(path);
    std::vector<std::string> violations;
    if (const auto* x = std::get_if<RegularCWComplex>(&c)) violations = validate_rcc(*x).violations;
    auto cv = c_vector_of(c);
    if (json_output) {
      emit({{"command", "validate"}, {"file", path}, {"kind", kind(c)}, {"valid", violations.empty()},
            {"c", cv.counts}, {"violations", violations}});
    } else {
      out_ << kind(c) << " complex, c = " << cv.to_string() << "\n";
      if (violations.empty()) out_ << "valid\n";
      for (const auto& v : violations) out_ << "violation: " << v << "\n";
    }
    if (!violations.empty()) throw Silent{};
  }

  void euler(const std::string& path) {
    auto c = parse_complex_file(path);
    auto cv = c_vector_of(c);
    long long chi = euler_characteristic(cv);
    if (json_output)
      emit({{"command", "euler"}, {"file", path}, {"c", cv.counts}, {"chi", chi}});
    else
      out_ << "c = " << cv.to_string() << "\nchi = " << chi << "\n";
  }

  void homology(const std::string& path) {
    auto c = parse_complex_file(path);
    require_valid(c);
    auto groups = homology_groups(chain_of(c));
    if (json_output)
      emit({{"command", "homology"}, {"file", path}, {"homology", homology_json(groups)}});
    else
      out_ << homology_line(groups) << "\n";
  }

  void classify(const std::string& path) {
    auto c = parse_complex_file(path);
    require_valid(c);
    SurfaceType s;
    try {
      s = classify_any(c);
    } catch (const NotASurface& e) {
      throw Rejection(std::string("not a surface: ") + e.what());
    }
    if (json_output)
      emit({{"command", "classify"}, {"file", path}, {"surface", surface_json(s)}});
    else
      out_ << surface_text(s);
  }

  void morse(const std::string& path, const std::string& function_file, const std::string& field_file) {
    auto c = parse_complex_file(path);
    require_valid(c);
    auto l = lattice_of(c);
    DiscreteVectorField v;
    std::string source;
    if (!function_file.empty()) {
      source = "function";
      auto f = parse_morse_function(read_file(function_file));
      auto check = is_discrete_morse(f, l);
      if (!check.ok)
        throw Rejection("not a discrete Morse function at cell " + std::to_string(check.violating.value_or(-1)));
      v = gradient_field_of(f, l);
    } else if (!field_file.empty()) {
      source = "field";
      v = parse_field(read_file(field_file));
      auto check = validate_field(v, l);
      if (!check.ok) throw Rejection("not a discrete vector field: " + check.violation);
      if (!is_gradient(v, l)) throw Rejection("vector field has a closed V-path");
    } else {
      source = "greedy";
      v = env_.seed ? greedy_matching(l, shuffled_priority(l, *env_.seed)) : greedy_matching(l);
    }
    auto mc = morse_chain_complex(v, l);
    auto groups = homology_groups(mc.chain);
    long long alternating = 0;
    for (std::size_t d = 0; d < mc.critical.size(); ++d)
      alternating += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(mc.critical[d].size());
    long long chi = euler_characteristic(c_vector_of(c));

    if (json_output) {
      json crit = json::array();
      for (const auto& layer : mc.critical) crit.push_back(layer);
      json pairs = json::array();
      for (auto [a, b] : v.pairs) pairs.push_back({a, b});
      emit({{"command", "morse"},       {"file", path},          {"source", source},
            {"pairs", pairs},           {"critical", crit},      {"alternating_sum", alternating},
            {"chi", chi},               {"homology", homology_json(groups)}});
      return;
    }
    out_ << "field: " << source << ", " << v.pairs.size() << " pairs\n";
    out_ << "critical: ";
    for (std::size_t d = 0; d < mc.critical.size(); ++d)
      out_ << (d ? ", " : "") << "dim " << d << ": " << mc.critical[d].size();
    out_ << "\n" << format_critical(mc.critical);
    out_ << "alternating sum = " << alternating << ", chi = " << chi << "\n";
    out_ << homology_line(groups) << "\n";
  }

  void index(const std::string& loop_file, const std::string& circle, std::optional<std::size_t> samples,
             std::optional<double> radius) {
    LoopSamples loop;
    json extra = json::object();
    if (!loop_file.empty()) {
      loop = parse_loop_csv(read_file(loop_file));
      if (!loop.positions.empty() && signed_area2(loop.positions) <= 0)
        throw Rejection("loop positions are not counterclockwise");
      extra["file"] = loop_file;
    } else {
      auto parts = topo::detail::split(circle, ',');
      if (parts.size() != 3) throw InvalidInput("--circle expects \"cx,cy,r\"");
      double cx = topo::detail::parse_double(parts[0], 1), cy = topo::detail::parse_double(parts[1], 1);
      double r = radius.value_or(topo::detail::parse_double(parts[2], 1));
      if (!(r > 0)) throw InvalidInput("radius must be positive");
      std::string text((std::istreambuf_iterator<char>(in_)), std::istreambuf_iterator<char>());
      loop = parse_loop_csv(text);
      if (!loop.positions.empty()) throw InvalidInput("circle mode reads 'u,v' rows");
      if (samples && loop.vectors.size() != *samples)
        throw InvalidInput("expected " + std::to_string(*samples) + " samples, got " +
                           std::to_string(loop.vectors.size()));
      extra["center"] = {cx, cy};
      extra["radius"] = r;
    }
    RotationIndex idx;
    try {
      idx = rotation_index(loop.vectors);
    } catch (const SamplingError& e) {
      throw Rejection(e.what());
    }
    if (json_output) {
      extra["command"] = "index";
      extra["samples"] = loop.vectors.size();
      extra["index"] = idx.value;
      emit(extra);
    } else {
      out_ << "samples = " << loop.vectors.size() << "\nindex = " << idx.value << "\n";
    }
  }

  void corpus_cmd(const std::string& name) {
    if (name.empty()) {
      auto entries = corpus();
      if (json_output) {
        json a = json::array();
        for (const auto& e : entries) a.push_back({{"name", e.name}, {"description", e.description}});
        emit({{"command", "corpus"}, {"entries", a}});
      } else {
        for (const auto& e : entries) out_ << e.name << "  " << e.description << "\n";
      }
      return;
    }
    auto e = corpus_entry(name);
    if (!e) throw InvalidInput("no corpus entry named '" + name + "'");
    const auto& x = e->expected;
    if (json_output) {
      json j = {{"command", "corpus"}, {"name", e->name}, {"description", e->description},
                {"kind", kind(e->complex)}, {"chi", x.chi}, {"homology", homology_json(x.homology)},
                {"complex", serialize(e->complex)}};
      if (x.surface) j["surface"] = surface_json(*x.surface);
      if (x.c) j["c"] = x.c->counts;
      emit(j);
      return;
    }
    out_ << "# " << e->name << ": " << e->description << "\n";
    if (x.c) out_ << "# c = " << x.c->to_string() << "\n";
    out_ << "# chi = " << x.chi << "\n# " << homology_line(x.homology) << "\n";
    if (x.surface) out_ << "# surface: " << surface_name(*x.surface) << "\n";
    out_ << serialize(e->complex);
  }

  /// Exit with status 1 after having printed the report.
  struct Silent {};

 private:
  void emit(const json& j) { out_ << j.dump(2) << "\n"; }

  std::istream& in_;
  std::ostream& out_;
  Environment env_;
};

}  // namespace detail

inline std::optional<std::uint64_t> seed_from_env(const char* value) {
  if (value == nullptr || *value == '\0') return std::nullopt;
  std::uint64_t seed = 0;
  std::string s(value);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw InvalidInput("TOPO_SEED must be an unsigned integer");
  return seed;
}

/// Runs one command; `args` excludes the program name.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err,
               Environment env = {}) {
  CLI::App app{"Computational topology toolkit", "topo"};
  app.require_subcommand(1);
  bool json_flag = false;
  app.add_flag("--json", json_flag, "Structured JSON output");

  std::string file, function_file, field_file, loop_file, circle, name;
  std::optional<std::size_t> samples;
  std::optional<double> radius;
  bool greedy = false;

  auto* validate = app.add_subcommand("validate", "Check that a complex file is well formed and regular");
  auto* euler = app.add_subcommand("euler", "Print the c-vector and Euler characteristic");
  auto* homology = app.add_subcommand("homology", "Integral homology groups");
  auto* classify = app.add_subcommand("classify", "Classify a triangulated surface");
  auto* morse = app.add_subcommand("morse", "Discrete Morse complex and Morse homology");
  auto* index = app.add_subcommand("index", "Rotation index of a sampled planar vector field");
  auto* corpus_sc = app.add_subcommand("corpus", "List or print built-in example complexes");
  for (auto* sc : {validate, euler, homology, classify, morse}) {
    sc->add_option("FILE", file, "Complex file")->required();
    sc->add_flag("--json", json_flag, "Structured JSON output");
  }
  auto* fn = morse->add_option("--function", function_file, "Discrete Morse function file");
  auto* fd = morse->add_option("--field", field_file, "Discrete vector field file");
  auto* gr = morse->add_flag("--greedy", greedy, "Build a greedy acyclic matching (default)");
  fn->excludes(fd)->excludes(gr);
  fd->excludes(gr);
  auto* lp = index->add_option("--loop", loop_file, "CSV of x,y,u,v rows in curve order");
  auto* cc = index->add_option("--circle", circle, "\"cx,cy,r\"; u,v samples are read from stdin");
  index->add_option("--samples", samples, "Expected number of circle samples");
  index->add_option("--radius", radius, "Circle radius, overriding r");
  index->add_flag("--json", json_flag, "Structured JSON output");
  lp->excludes(cc);
  corpus_sc->add_option("NAME", name, "Entry to print");
  corpus_sc->add_flag("--json", json_flag, "Structured JSON output");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }
  if (index->parsed() && loop_file.empty() && circle.empty()) {
    err << "topo index: one of --loop or --circle is required\n";
    return kUsage;
  }

  detail::Runner r(in, out, env);
  r.json_output = json_flag;
  try {
    if (validate->parsed()) r.validate(file);
    if (euler->parsed()) r.euler(file);
    if (homology->parsed()) r.homology(file);
    if (classify->parsed()) r.classify(file);
    if (morse->parsed()) r.morse(file, function_file, field_file);
    if (index->parsed()) r.index(loop_file, circle, samples, radius);
    if (corpus_sc->parsed()) r.corpus_cmd(name);
  } catch (const detail::Runner::Silent&) {
    return kRejected;
  } catch (const detail::Rejection& e) {
    err << "rejected: " << e.what() << "\n";
    return kRejected;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "rejected: " << e.what() << "\n";
    return kRejected;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kRejected;
  }
  return kOk;
}

}  // namespace topo::cli
