#pragma once

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "topo/cw_complex.hpp"
#include "topo/error.hpp"
#include "topo/morse.hpp"
#include "topo/rotation_index.hpp"
#include "topo/simplicial_complex.hpp"

namespace topo {

using AnyComplex = std::variant<SimplicialComplex, RegularCWComplex>;

namespace detail {

struct Line {
  std::size_t number;
  std::string text;
};

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

/// Non-blank lines with '#' comments removed, with 1-based line numbers.
inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto raw = text.substr(pos, end - pos);
    raw = raw.substr(0, raw.find('#'));
    std::string line = trim(raw);
    if (!line.empty()) out.push_back({number, std::move(line)});
    pos = end + 1;
  }
  return out;
}

inline std::vector<std::string> split(std::string_view s, char sep = ' ') {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep || (sep == ' ' && c == '\t')) {
      if (!cur.empty() || sep != ' ') out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || sep != ' ') out.push_back(trim(cur));
  if (sep == ' ') std::erase_if(out, [](const std::string& t) { return t.empty(); });
  return out;
}

template <class Int>
Int parse_int(const std::string& tok, std::size_t line, const char* what) {
  Int v{};
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
  return v;
}

inline double parse_double(const std::string& tok, std::size_t line) {
  try {
    std::size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected a number, got '" + tok + "'");
  }
}

inline std::vector<CellId> parse_ids(const std::string& s, std::size_t line) {
  std::vector<CellId> out;
  for (const auto& tok : split(s)) {
    auto v = parse_int<CellId>(tok, line, "a non-negative integer id");
    if (v < 0) throw ParseError(line, "negative id " + tok);
    out.push_back(v);
  }
  return out;
}

inline SimplicialComplex parse_simplicial_body(const std::vector<Line>& lines) {
  std::vector<Simplex> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<Vertex> vs;
    for (const auto& tok : split(lines[i].text)) vs.push_back(parse_int<Vertex>(tok, lines[i].number, "a vertex label"));
    try {
      gens.emplace_back(std::move(vs));
    } catch (const InvalidInput& e) {
      throw ParseError(lines[i].number, e.what());
    }
  }
  return generate_complex(gens);
}

/// Explicit "k id:" lines are added first; shorthand lines are then added
/// together so that fresh ids sit above every id the file mentions.
inline RegularCWComplex parse_rcc_body(const std::vector<Line>& lines) {
  RegularCWComplex x;
  std::map<CellId, std::size_t> line_of;
  struct Shorthand {
    std::size_t line;
    std::optional<CellId> id;
    std::vector<CellId> cycle;
  };
  std::vector<Shorthand> shorthand;
  CellId floor = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, text] = lines[i];
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError(number, "expected 'k id: boundary...' or '2cell: v1 v2 ...'");
    auto head = split(text.substr(0, colon));
    auto body = parse_ids(text.substr(colon + 1), number);
    for (CellId b : body) floor = std::max(floor, b + 1);
    try {
      if (!head.empty() && head[0] == "2cell") {
        if (head.size() > 2) throw ParseError(number, "malformed 2cell header");
        std::optional<CellId> id;
        if (head.size() == 2) id = parse_int<CellId>(head[1], number, "a cell id");
        RegularCWComplex::check_shorthand(body);
        shorthand.push_back({number, id, std::move(body)});
      } else {
        if (head.size() != 2) throw ParseError(number, "expected 'k id:' before the colon");
        int dim = parse_int<int>(head[0], number, "a dimension");
        CellId id = parse_int<CellId>(head[1], number, "a cell id");
        x.add_cell(dim, id, body);
        line_of[id] = number;
      }
    } catch (const InvalidInput& e) {
      throw ParseError(number, e.what());
    }
  }
  std::set<CellId> named;
  for (const auto& sh : shorthand) {
    for (CellId v : sh.cycle)
      if (x.contains(v) && x.cell(v).dim != 0)
        throw ParseError(sh.line, "id " + std::to_string(v) + " is not a 0-cell");
    if (sh.id && (x.contains(*sh.id) || !named.insert(*sh.id).second))
      throw ParseError(sh.line, "duplicate cell id " + std::to_string(*sh.id));
  }
  std::vector<std::vector<CellId>> cycles;
  std::vector<std::optional<CellId>> ids;
  for (const auto& sh : shorthand) {
    cycles.push_back(sh.cycle);
    ids.push_back(sh.id);
  }
  auto faces = x.add_two_cells(cycles, ids, floor);
  for (std::size_t k = 0; k < faces.size(); ++k) {
    line_of.try_emplace(faces[k], shorthand[k].line);
    for (CellId e : x.cell(faces[k]).boundary) line_of.try_emplace(e, shorthand[k].line);
    for (CellId v : shorthand[k].cycle) line_of.try_emplace(v, shorthand[k].line);
  }
  for (const auto& [id, c] : x.cells())
    for (CellId b : c.boundary)
      if (!x.contains(b)) throw ParseError(line_of[id], "cell " + std::to_string(id) + " references unknown cell " + std::to_string(b));
  return x;
}

}  // namespace detail

/// Auto-detects the format from the header line ("simplicial" or "rcc").
inline AnyComplex parse_complex_text(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(1, "empty file");
  const auto& header = lines.front();
  if (lines.size() == 1) throw ParseError(header.number, "complex has no cells");
  if (header.text == "simplicial") return detail::parse_simplicial_body(lines);
  if (header.text == "rcc") return detail::parse_rcc_body(lines);
  throw ParseError(header.number, "expected header 'simplicial' or 'rcc', got '" + header.text + "'");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline AnyComplex parse_complex_file(const std::string& path) { return parse_complex_text(read_file(path)); }

/// Maximal simplices, one per line.
inline std::string serialize(const SimplicialComplex& k) {
  std::string s = "simplicial\n";
  for (const Simplex& m : k.maximal_simplices()) {
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? " " : "") + std::to_string(m[i]);
    s += "\n";
  }
  return s;
}

/// Every cell as "k id: b1 b2 ...", ordered by dimension then id.
inline std::string serialize(const RegularCWComplex& x) {
  std::string s = "rcc\n";
  for (int d = 0; d <= x.dim(); ++d)
    for (CellId id : x.cells_of_dim(d)) {
      s += std::to_string(d) + " " + std::to_string(id) + ":";
      for (CellId b : x.cell(id).boundary) s += " " + std::to_string(b);
      s += "\n";
    }
  return s;
}

inline std::string serialize(const AnyComplex& c) {
  return std::visit([](const auto& k) { return serialize(k); }, c);
}

/// Lines "cell_id value".
inline DiscreteFunction parse_morse_function(std::string_view text) {
  DiscreteFunction f;
  for (const auto& [number, line] : detail::content_lines(text)) {
    auto tok = detail::split(line);
    if (tok.size() != 2) throw ParseError(number, "expected 'cell_id value'");
    auto id = detail::parse_int<CellId>(tok[0], number, "a cell id");
    if (!f.emplace(id, detail::parse_double(tok[1], number)).second)
      throw ParseError(number, "duplicate value for cell " + tok[0]);
  }
  return f;
}

inline std::string serialize(const DiscreteFunction& f) {
  std::ostringstream s;
  for (const auto& [id, v] : f) s << id << ' ' << v << '\n';
  return s.str();
}

/// Lines "sigma_id tau_id".
inline DiscreteVectorField parse_field(std::string_view text) {
  DiscreteVectorField v;
  for (const auto& [number, line] : detail::content_lines(text)) {
    auto tok = detail::split(line);
    if (tok.size() != 2) throw ParseError(number, "expected 'sigma_id tau_id'");
    v.pairs.push_back({detail::parse_int<CellId>(tok[0], number, "a cell id"),
                       detail::parse_int<CellId>(tok[1], number, "a cell id")});
  }
  v.normalize();
  return v;
}

inline std::string serialize(const DiscreteVectorField& v) {
  std::string s;
  for (auto [a, b] : v.pairs) s += std::to_string(a) + " " + std::to_string(b) + "\n";
  return s;
}

struct LoopSamples {
  std::vector<Vec2> positions;  // empty when only vectors were supplied
  std::vector<Vec2> vectors;
};

/// CSV rows "x,y,u,v" (or "u,v" without positions), in curve order. A
/// non-numeric first row is treated as a header.
inline LoopSamples parse_loop_csv(std::string_view text) {
  LoopSamples out;
  auto lines = detail::content_lines(text);
  std::size_t width = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto cols = detail::split(lines[i].text, ',');
    if (i == 0 && !cols.empty() && !cols[0].empty() &&
        (std::isalpha(static_cast<unsigned char>(cols[0][0])) != 0))
      continue;
    if (cols.size() != 2 && cols.size() != 4) throw ParseError(lines[i].number, "expected 'x,y,u,v' or 'u,v'");
    if (width == 0) width = cols.size();
    if (cols.size() != width) throw ParseError(lines[i].number, "inconsistent column count");
    std::vector<double> v;
    for (const auto& c : cols) v.push_back(detail::parse_double(c, lines[i].number));
    if (width == 4) {
      out.positions.push_back({v[0], v[1]});
      out.vectors.push_back({v[2], v[3]});
    } else {
      out.vectors.push_back({v[0], v[1]});
    }
  }
  if (out.vectors.empty()) throw ParseError(1, "no samples");
  return out;
}

/// "dim k: id id ..." per dimension.
inline std::string format_critical(const std::vector<std::vector<CellId>>& critical) {
  std::string s;
  for (std::size_t d = 0; d < critical.size(); ++d) {
    s += "dim " + std::to_string(d) + ":";
    for (CellId id : critical[d]) s += " " + std::to_string(id);
    s += "\n";
  }
  return s;
}

}  // namespace topo
