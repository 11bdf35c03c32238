#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "topo/chain_complex.hpp"
#include "topo/lattice.hpp"

namespace topo {

/// Real value on every cell, keyed by cell id.
using DiscreteFunction = std::map<CellId, double>;

/// Pairs (sigma, tau) with sigma a facet of tau.
struct DiscreteVectorField {
  std::vector<std::pair<CellId, CellId>> pairs;

  void normalize() { std::sort(pairs.begin(), pairs.end()); }
  friend bool operator==(const DiscreteVectorField&, const DiscreteVectorField&) = default;
};

struct CriticalCell {
  CellId id = 0;
  int index = 0;  // equals the cell dimension
  friend bool operator==(const CriticalCell&, const CriticalCell&) = default;
};

struct MorseCheck {
  bool ok = true;
  std::optional<CellId> violating;
};

struct FieldCheck {
  bool ok = true;
  std::string violation;
};

struct GradientPath {
  /// from, sigma_0, tau_0, sigma_1, ..., sigma_m (= to)
  std::vector<CellId> cells;
  int sign = 1;
};

struct MorseComplex {
  std::vector<std::vector<CellId>> critical;  // per dimension, ascending id
  ChainComplex chain;
};

namespace detail {

inline constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

inline std::vector<double> values_by_index(const DiscreteFunction& f, const CellLattice& l) {
  std::vector<double> out(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    auto it = f.find(l[i].id);
    if (it == f.end()) throw InvalidInput("discrete function has no value for cell " + std::to_string(l[i].id));
    out[i] = it->second;
  }
  for (const auto& [id, v] : f)
    if (!l.index_of(id)) throw InvalidInput("discrete function assigns a value to unknown cell " + std::to_string(id));
  return out;
}

/// (wrong-way facets, wrong-way cofacets) for each cell.
inline std::vector<std::pair<int, int>> wrong_way_counts(const std::vector<double>& f, const CellLattice& l) {
  std::vector<std::pair<int, int>> out(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (auto [fi, s] : l[i].facets)
      if (f[fi] >= f[i]) ++out[i].first;
    for (std::size_t ci : l[i].cofacets)
      if (f[ci] <= f[i]) ++out[i].second;
  }
  return out;
}

/// Partner index per cell, or kUnmatched. Empty optional with a message when
/// the pairs do not form a matching of facet/cofacet pairs.
inline std::optional<std::vector<std::size_t>> partners(const DiscreteVectorField& v, const CellLattice& l,
                                                        std::string* why) {
  std::vector<std::size_t> p(l.size(), kUnmatched);
  for (auto [sid, tid] : v.pairs) {
    auto si = l.index_of(sid), ti = l.index_of(tid);
    if (!si || !ti) {
      *why = "pair (" + std::to_string(sid) + ", " + std::to_string(tid) + ") names an unknown cell";
      return std::nullopt;
    }
    if (l[*ti].dim != l[*si].dim + 1) {
      *why = "pair (" + std::to_string(sid) + ", " + std::to_string(tid) + ") does not step up one dimension";
      return std::nullopt;
    }
    if (l.incidence(*ti, *si) == 0) {
      *why = "cell " + std::to_string(sid) + " is not a facet of " + std::to_string(tid);
      return std::nullopt;
    }
    for (std::size_t c : {*si, *ti})
      if (p[c] != kUnmatched) {
        *why = "cell " + std::to_string(l[c].id) + " belongs to two pairs";
        return std::nullopt;
      }
    p[*si] = *ti;
    p[*ti] = *si;
  }
  return p;
}

inline std::vector<std::size_t> checked_partners(const DiscreteVectorField& v, const CellLattice& l) {
  std::string why;
  auto p = partners(v, l, &why);
  if (!p) throw InvalidInput("invalid discrete vector field: " + why);
  return *p;
}

inline bool paired_up(const std::vector<std::size_t>& p, const CellLattice& l, std::size_t i) {
  return p[i] != kUnmatched && l[p[i]].dim > l[i].dim;
}

/// V-path successors of a k-cell: the other facets of its partner (k+1)-cell.
template <class Visit>
void for_each_step(const std::vector<std::size_t>& p, const CellLattice& l, std::size_t sigma, Visit&& visit) {
  if (!paired_up(p, l, sigma)) return;
  std::size_t tau = p[sigma];
  int in = l.incidence(tau, sigma);
  for (auto [next, out] : l[tau].facets)
    if (next != sigma) visit(next, tau, -in * out);
}

/// Topological order of the V-path digraph on cells of dimension d; empty
/// optional when it has a cycle.
inline std::optional<std::vector<std::size_t>> topological_order(const std::vector<std::size_t>& p,
                                                                 const CellLattice& l, int d) {
  auto nodes = l.cells_of_dim(d);
  std::map<std::size_t, int> indeg;
  for (std::size_t n : nodes) indeg[n] = 0;
  for (std::size_t n : nodes) for_each_step(p, l, n, [&](std::size_t next, std::size_t, int) { ++indeg[next]; });
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (auto [n, k] : indeg)
    if (k == 0) ready.push(n);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    std::size_t n = ready.top();
    ready.pop();
    order.push_back(n);
    for_each_step(p, l, n, [&](std::size_t next, std::size_t, int) {
      if (--indeg[next] == 0) ready.push(next);
    });
  }
  if (order.size() != nodes.size()) return std::nullopt;
  return order;
}

inline bool acyclic(const std::vector<std::size_t>& p, const CellLattice& l) {
  for (int d = 0; d < l.dim(); ++d)
    if (!topological_order(p, l, d)) return false;
  return true;
}

}  // namespace detail

/// For every cell: (#facets with f >= f(cell)) + (#cofacets with f <= f(cell)) <= 1.
inline MorseCheck is_discrete_morse(const DiscreteFunction& f, const CellLattice& l) {
  auto values = detail::values_by_index(f, l);
  auto counts = detail::wrong_way_counts(values, l);
  for (std::size_t i = 0; i < l.size(); ++i)
    if (counts[i].first + counts[i].second > 1) return {false, l[i].id};
  return {};
}

/// Cells with no wrong-way neighbour, in (dim, id) order.
inline std::vector<CriticalCell> critical_cells(const DiscreteFunction& f, const CellLattice& l) {
  auto check = is_discrete_morse(f, l);
  if (!check.ok) throw InvalidInput("not a discrete Morse function at cell " + std::to_string(*check.violating));
  auto counts = detail::wrong_way_counts(detail::values_by_index(f, l), l);
  std::vector<CriticalCell> out;
  for (std::size_t i = 0; i < l.size(); ++i)
    if (counts[i].first == 0 && counts[i].second == 0) out.push_back({l[i].id, l[i].dim});
  return out;
}

/// Pairs (sigma, tau) where sigma is a facet of tau with f(sigma) >= f(tau).
inline DiscreteVectorField gradient_field_of(const DiscreteFunction& f, const CellLattice& l) {
  auto check = is_discrete_morse(f, l);
  if (!check.ok) throw InvalidInput("not a discrete Morse function at cell " + std::to_string(*check.violating));
  auto values = detail::values_by_index(f, l);
  DiscreteVectorField v;
  for (std::size_t t = 0; t < l.size(); ++t)
    for (auto [s, sign] : l[t].facets)
      if (values[s] >= values[t]) v.pairs.push_back({l[s].id, l[t].id});
  v.normalize();
  return v;
}

inline FieldCheck validate_field(const DiscreteVectorField& v, const CellLattice& l) {
  std::string why;
  if (!detail::partners(v, l, &why)) return {false, why};
  return {};
}

/// True iff no closed nontrivial V-path exists.
inline bool is_gradient(const DiscreteVectorField& v, const CellLattice& l) {
  return detail::acyclic(detail::checked_partners(v, l), l);
}

/// Cells belonging to no pair, in (dim, id) order.
inline std::vector<CriticalCell> critical_cells(const DiscreteVectorField& v, const CellLattice& l) {
  auto p = detail::checked_partners(v, l);
  std::vector<CriticalCell> out;
  for (std::size_t i = 0; i < l.size(); ++i)
    if (p[i] == detail::kUnmatched) out.push_back({l[i].id, l[i].dim});
  return out;
}

/// All gradient paths from critical (k+1)-cell `from` to critical k-cell `to`.
/// The sign is [from : sigma_0] times -[tau_i : sigma_i][tau_i : sigma_{i+1}] per step.
inline std::vector<GradientPath> enumerate_paths(const DiscreteVectorField& v, const CellLattice& l, CellId from,
                                                 CellId to) {
  auto p = detail::checked_partners(v, l);
  if (!detail::acyclic(p, l)) throw InvalidInput("vector field has a closed V-path");
  std::size_t a = l.at_id(from), b = l.at_id(to);
  if (l[a].dim != l[b].dim + 1) throw InvalidInput("path endpoints must have adjacent dimensions");
  if (p[a] != detail::kUnmatched || p[b] != detail::kUnmatched) throw InvalidInput("path endpoints must be critical");

  std::vector<GradientPath> out;
  std::vector<CellId> trail{from};
  auto walk = [&](auto&& self, std::size_t sigma, int sign) -> void {
    trail.push_back(l[sigma].id);
    if (sigma == b) {
      out.push_back({trail, sign});
    } else {
      detail::for_each_step(p, l, sigma, [&](std::size_t next, std::size_t tau, int step) {
        trail.push_back(l[tau].id);
        self(self, next, sign * step);
        trail.pop_back();
      });
    }
    trail.pop_back();
  };
  for (auto [sigma, s] : l[a].facets) walk(walk, sigma, s);
  return out;
}

/// Signed number of gradient paths from `from` to `to`.
inline BigInt incidence_index(const DiscreteVectorField& v, const CellLattice& l, CellId from, CellId to) {
  BigInt sum = 0;
  for (const auto& path : enumerate_paths(v, l, from, to)) sum += path.sign;
  return sum;
}

/// Chain complex on the critical cells; boundary entries are signed path
/// counts, accumulated along a topological order of the V-path digraph.
inline MorseComplex morse_chain_complex(const DiscreteVectorField& v, const CellLattice& l) {
  auto p = detail::checked_partners(v, l);
  const int n = l.dim();
  std::vector<std::optional<std::vector<std::size_t>>> order(static_cast<std::size_t>(n + 1));
  for (int d = 0; d <= n; ++d) {
    order[static_cast<std::size_t>(d)] = detail::topological_order(p, l, d);
    if (!order[static_cast<std::size_t>(d)]) throw InvalidInput("vector field has a closed V-path");
  }

  MorseComplex mc;
  std::vector<std::vector<std::size_t>> crit(static_cast<std::size_t>(n + 1));
  std::vector<std::size_t> pos(l.size(), detail::kUnmatched);
  for (std::size_t i = 0; i < l.size(); ++i)
    if (p[i] == detail::kUnmatched) {
      auto& layer = crit[static_cast<std::size_t>(l[i].dim)];
      pos[i] = layer.size();
      layer.push_back(i);
    }
  std::vector<std::size_t> ranks;
  std::vector<std::vector<std::string>> basis;
  for (const auto& layer : crit) {
    ranks.push_back(layer.size());
    auto& ids = mc.critical.emplace_back();
    auto& names = basis.emplace_back();
    for (std::size_t i : layer) {
      ids.push_back(l[i].id);
      names.push_back(l[i].label);
    }
  }

  std::vector<IntegerMatrix> mats;
  for (int d = 1; d <= n; ++d) {
    const auto& cols = crit[static_cast<std::size_t>(d)];
    IntegerMatrix m(crit[static_cast<std::size_t>(d - 1)].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      std::map<std::size_t, BigInt> weight;
      for (auto [sigma, s] : l[cols[j]].facets) weight[sigma] += s;
      for (std::size_t sigma : *order[static_cast<std::size_t>(d - 1)]) {
        auto it = weight.find(sigma);
        if (it == weight.end() || it->second == 0) continue;
        BigInt w = it->second;
        if (p[sigma] == detail::kUnmatched) {
          m(pos[sigma], j) += w;
          continue;
        }
        detail::for_each_step(p, l, sigma, [&](std::size_t next, std::size_t, int step) { weight[next] += w * step; });
      }
    }
    mats.push_back(std::move(m));
  }
  mc.chain = ChainComplex(std::move(ranks), std::move(mats), std::move(basis));
  auto check = verify_chain_complex(mc.chain);
  if (!check.ok) throw std::logic_error("Morse boundary maps do not compose to zero at D_" + std::to_string(*check.failing_dim));
  return mc;
}

/// Processing priority per lattice index; lower values are handled first.
using Priority = std::vector<std::size_t>;

inline Priority identity_priority(const CellLattice& l) {
  Priority p(l.size());
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

inline Priority shuffled_priority(const CellLattice& l, std::uint64_t seed) {
  Priority p = identity_priority(l);
  std::mt19937_64 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Acyclic matching built from the top dimension down: each unmatched cell
/// (in priority order) is paired with its first unmatched facet, by priority
/// then id, whose pairing closes no V-path cycle.
inline DiscreteVectorField greedy_matching(const CellLattice& l, const Priority& priority) {
  if (priority.size() != l.size()) throw InvalidInput("priority must rank every cell");
  std::vector<std::size_t> p(l.size(), detail::kUnmatched);
  auto before = [&](std::size_t a, std::size_t b) {
    return priority[a] != priority[b] ? priority[a] < priority[b] : l[a].id < l[b].id;
  };
  // Would pairing (sigma, tau) let some other facet of tau reach sigma?
  auto closes_cycle = [&](std::size_t sigma, std::size_t tau) {
    std::vector<std::size_t> stack;
    for (auto [f, s] : l[tau].facets)
      if (f != sigma) stack.push_back(f);
    std::set<std::size_t> seen;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      if (x == sigma) return true;
      if (!seen.insert(x).second) continue;
      detail::for_each_step(p, l, x, [&](std::size_t next, std::size_t, int) { stack.push_back(next); });
    }
    return false;
  };
  for (int d = l.dim(); d >= 1; --d) {
    auto cells = l.cells_of_dim(d);
    std::sort(cells.begin(), cells.end(), before);
    for (std::size_t tau : cells) {
      if (p[tau] != detail::kUnmatched) continue;
      std::vector<std::size_t> facets;
      for (auto [f, s] : l[tau].facets)
        if (p[f] == detail::kUnmatched) facets.push_back(f);
      std::sort(facets.begin(), facets.end(), before);
      for (std::size_t sigma : facets)
        if (!closes_cycle(sigma, tau)) {
          p[sigma] = tau;
          p[tau] = sigma;
          break;
        }
    }
  }
  DiscreteVectorField v;
  for (std::size_t i = 0; i < l.size(); ++i)
    if (detail::paired_up(p, l, i)) v.pairs.push_back({l[i].id, l[p[i]].id});
  v.normalize();
  return v;
}

inline DiscreteVectorField greedy_matching(const CellLattice& l) { return greedy_matching(l, identity_priority(l)); }

/// A discrete Morse function whose gradient field is `v`: paired cells share a
/// value, and values strictly increase along every unpaired facet relation.
inline DiscreteFunction morse_function_from_field(const DiscreteVectorField& v, const CellLattice& l) {
  auto p = detail::checked_partners(v, l);
  // Node of a cell: the lower cell of its pair, or itself.
  auto node = [&](std::size_t i) { return detail::paired_up(p, l, i) || p[i] == detail::kUnmatched ? i : p[i]; };
  std::map<std::size_t, std::vector<std::size_t>> succ;
  std::map<std::size_t, int> indeg;
  for (std::size_t i = 0; i < l.size(); ++i) indeg.try_emplace(node(i), 0);
  for (std::size_t t = 0; t < l.size(); ++t)
    for (auto [s, sign] : l[t].facets) {
      if (p[s] == t) continue;
      succ[node(s)].push_back(node(t));
      ++indeg[node(t)];
    }
  auto key = [&](std::size_t n) { return std::pair{l[n].dim, l[n].id}; };
  auto cmp = [&](std::size_t a, std::size_t b) { return key(a) > key(b); };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)> ready(cmp);
  for (auto [n, k] : indeg)
    if (k == 0) ready.push(n);
  std::map<std::size_t, double> level;
  double next = 0;
  while (!ready.empty()) {
    std::size_t n = ready.top();
    ready.pop();
    level[n] = next++;
    for (std::size_t m : succ[n])
      if (--indeg[m] == 0) ready.push(m);
  }
  if (level.size() != indeg.size()) throw InvalidInput("vector field has a closed V-path");
  DiscreteFunction f;
  for (std::size_t i = 0; i < l.size(); ++i) f[l[i].id] = level.at(node(i));
  return f;
}

}  // namespace topo
