#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "topo/error.hpp"
#include "topo/simplicial_complex.hpp"

namespace topo {

using CellId = std::int64_t;

struct Cell {
  CellId id = 0;
  int dim = 0;
  std::vector<CellId> boundary;  // ids of (dim-1)-cells

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Cells indexed by id, each listing the cells of one dimension lower on its
/// boundary. Boundary ids may dangle until validate_rcc() is run.
class RegularCWComplex {
 public:
  void add_cell(int dim, CellId id, std::vector<CellId> boundary) {
    if (dim < 0) throw InvalidInput("negative cell dimension");
    if (id < 0) throw InvalidInput("negative cell id " + std::to_string(id));
    if (dim == 0 && !boundary.empty()) throw InvalidInput("0-cell " + std::to_string(id) + " has a boundary");
    if (cells_.contains(id)) throw InvalidInput("duplicate cell id " + std::to_string(id));
    std::sort(boundary.begin(), boundary.end());
    cells_.emplace(id, Cell{id, dim, std::move(boundary)});
    if (dim == 1) {
      const auto& b = cells_.at(id).boundary;
      if (b.size() == 2) edge_index_.try_emplace({b[0], b[1]}, id);
    }
  }

  /// Adds 0-cell `id` unless it already exists; throws if `id` is a higher cell.
  void ensure_vertex(CellId id) {
    auto it = cells_.find(id);
    if (it == cells_.end()) add_cell(0, id, {});
    else if (it->second.dim != 0) throw InvalidInput("id " + std::to_string(id) + " is not a 0-cell");
  }

  /// Shorthand [v1,...,vk]: a 2-cell bounded by edges {v1,v2},...,{vk,v1}.
  /// Missing 0- and 1-cells are created; existing edges are reused.
  CellId add_two_cell(std::span<const CellId> cycle, std::optional<CellId> id = std::nullopt) {
    return add_two_cells({std::vector<CellId>(cycle.begin(), cycle.end())}, {id}).front();
  }

  /// Several shorthand 2-cells at once. Vertex labels become 0-cell ids; fresh
  /// ids start above `floor` and every id already present or requested, going
  /// first to the new edges in order of appearance, then to unnamed faces.
  std::vector<CellId> add_two_cells(const std::vector<std::vector<CellId>>& cycles,
                                    std::vector<std::optional<CellId>> ids = {}, CellId floor = 0) {
    ids.resize(cycles.size());
    CellId fresh = std::max(floor, next_id());
    std::set<CellId> requested;
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      check_shorthand(cycles[c]);
      for (CellId v : cycles[c]) {
        auto it = cells_.find(v);
        if (it != cells_.end() && it->second.dim != 0) throw InvalidInput("id " + std::to_string(v) + " is not a 0-cell");
        fresh = std::max(fresh, v + 1);
      }
      if (const auto& id = ids[c]) {
        if (cells_.contains(*id) || !requested.insert(*id).second)
          throw InvalidInput("duplicate cell id " + std::to_string(*id));
        fresh = std::max(fresh, *id + 1);
      }
    }
    for (const auto& cycle : cycles)
      for (CellId v : cycle) ensure_vertex(v);
    std::vector<std::vector<CellId>> edges(cycles.size());
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      const auto& cycle = cycles[c];
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        CellId a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        auto e = find_edge(a, b);
        if (!e) {
          e = fresh++;
          add_cell(1, *e, {a, b});
        }
        edges[c].push_back(*e);
      }
    }
    std::vector<CellId> faces;
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      CellId face = ids[c] ? *ids[c] : fresh++;
      add_cell(2, face, std::move(edges[c]));
      faces.push_back(face);
    }
    return faces;
  }

  /// k >= 3, no repeated consecutive vertex, no repeated edge.
  static void check_shorthand(std::span<const CellId> cycle) {
    const std::size_t k = cycle.size();
    if (k < 3) throw InvalidInput("2-cell shorthand needs at least 3 vertices");
    std::set<std::pair<CellId, CellId>> seen;
    for (std::size_t i = 0; i < k; ++i) {
      CellId a = cycle[i], b = cycle[(i + 1) % k];
      if (a == b) throw InvalidInput("repeated consecutive vertex " + std::to_string(a) + " in 2-cell shorthand");
      if (!seen.insert(std::minmax(a, b)).second)
        throw InvalidInput("edge {" + std::to_string(a) + "," + std::to_string(b) + "} repeated in 2-cell shorthand");
    }
  }

  CellId next_id() const { return cells_.empty() ? 0 : cells_.rbegin()->first + 1; }

  bool contains(CellId id) const { return cells_.contains(id); }
  const Cell& cell(CellId id) const {
    auto it = cells_.find(id);
    if (it == cells_.end()) throw InvalidInput("unknown cell id " + std::to_string(id));
    return it->second;
  }
  const std::map<CellId, Cell>& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }

  int dim() const {
    int d = -1;
    for (const auto& [id, c] : cells_) d = std::max(d, c.dim);
    return d;
  }

  std::vector<CellId> cells_of_dim(int d) const {
    std::vector<CellId> out;
    for (const auto& [id, c] : cells_)
      if (c.dim == d) out.push_back(id);
    return out;
  }

  std::optional<CellId> find_edge(CellId a, CellId b) const {
    auto it = edge_index_.find(std::minmax(a, b));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }

  /// All cells in the closure of `id`, including itself. Dangling ids are skipped.
  std::set<CellId> closure(CellId id) const {
    std::set<CellId> out;
    std::vector<CellId> stack{id};
    while (!stack.empty()) {
      CellId c = stack.back();
      stack.pop_back();
      auto it = cells_.find(c);
      if (it == cells_.end() || !out.insert(c).second) continue;
      for (CellId b : it->second.boundary) stack.push_back(b);
    }
    return out;
  }

  std::vector<CellId> vertices_of(CellId id) const {
    std::vector<CellId> out;
    for (CellId c : closure(id))
      if (cells_.at(c).dim == 0) out.push_back(c);
    return out;
  }

  /// First cell of dimension `d` whose vertex set equals `vertices`.
  std::optional<CellId> find_cell(int d, std::vector<CellId> vertices) const {
    std::sort(vertices.begin(), vertices.end());
    for (const auto& [id, c] : cells_)
      if (c.dim == d && vertices_of(id) == vertices) return id;
    return std::nullopt;
  }

  /// Vertex cycle of a 2-cell, starting at its lowest vertex and heading to the
  /// lower of that vertex's two neighbours. Requires a simple-cycle boundary.
  std::vector<CellId> boundary_cycle(CellId face) const {
    std::map<CellId, std::vector<CellId>> adj;
    for (CellId e : cell(face).boundary) {
      const auto& b = cell(e).boundary;
      if (b.size() != 2) throw InvalidInput("edge " + std::to_string(e) + " does not have two endpoints");
      adj[b[0]].push_back(b[1]);
      adj[b[1]].push_back(b[0]);
    }
    std::vector<CellId> cycle;
    if (adj.empty()) return cycle;
    CellId start = adj.begin()->first, prev = start;
    CellId cur = *std::min_element(adj[start].begin(), adj[start].end());
    cycle.push_back(start);
    while (cur != start && cycle.size() <= adj.size()) {
      cycle.push_back(cur);
      const auto& nb = adj[cur];
      if (nb.size() != 2) break;
      CellId next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    return cycle;
  }

  std::string label(CellId id) const {
    const Cell& c = cell(id);
    auto join = [](const std::vector<CellId>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s;
    };
    if (c.dim == 0) return "{" + std::to_string(id) + "}";
    if (c.dim == 1) return "{" + join(c.boundary) + "}";
    if (c.dim == 2) return "[" + join(boundary_cycle(id)) + "]";
    return "<" + std::to_string(id) + ">";
  }

  friend bool operator==(const RegularCWComplex& a, const RegularCWComplex& b) { return a.cells_ == b.cells_; }

 private:
  std::map<CellId, Cell> cells_;
  std::map<std::pair<CellId, CellId>, CellId> edge_index_;
};

inline CVector c_vector(const RegularCWComplex& x) {
  CVector c;
  int d = x.dim();
  if (d < 0) throw InvalidInput("empty complex");
  c.counts.assign(static_cast<std::size_t>(d) + 1, 0);
  for (const auto& [id, cell] : x.cells()) ++c.counts[static_cast<std::size_t>(cell.dim)];
  return c;
}

inline long long euler_characteristic(const RegularCWComplex& x) { return euler_characteristic(c_vector(x)); }

inline RegularCWComplex skeleton(const RegularCWComplex& x, int n) {
  if (n < 0) throw InvalidInput("skeleton dimension must be non-negative");
  RegularCWComplex out;
  for (const auto& [id, c] : x.cells())
    if (c.dim <= n) out.add_cell(c.dim, id, c.boundary);
  return out;
}

/// Signed boundary incidences [cell : facet], keyed by cell id.
using IncidenceTable = std::map<CellId, std::vector<std::pair<CellId, int>>>;

namespace detail {

/// Orients the facets of a cell of dimension >= 2 so that the induced
/// incidences cancel on every codimension-2 face: s(F1)[F1:r] + s(F2)[F2:r] = 0.
/// The lowest facet id gets +1. Fails (nullopt, with reason) when a
/// codimension-2 face is not shared by exactly two facets, the facets are not
/// connected through such faces, or the sign constraints conflict.
inline std::optional<std::vector<std::pair<CellId, int>>> orient_facets(const Cell& cell, const IncidenceTable& lower,
                                                                         std::string* why = nullptr) {
  auto fail = [&](std::string msg) -> std::optional<std::vector<std::pair<CellId, int>>> {
    if (why) *why = std::move(msg);
    return std::nullopt;
  };
  const auto& facets = cell.boundary;
  if (facets.empty()) return fail("empty boundary");
  std::map<CellId, std::vector<std::pair<std::size_t, int>>> ridges;  // ridge -> (facet index, [F:r])
  for (std::size_t i = 0; i < facets.size(); ++i) {
    auto it = lower.find(facets[i]);
    if (it == lower.end()) return fail("facet " + std::to_string(facets[i]) + " has no orientation");
    for (const auto& [r, s] : it->second) ridges[r].push_back({i, s});
  }
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(facets.size());  // neighbour, relative sign
  for (const auto& [r, users] : ridges) {
    if (users.size() != 2)
      return fail("face " + std::to_string(r) + " lies on " + std::to_string(users.size()) + " boundary cells");
    int rel = -users[0].second * users[1].second;
    adj[users[0].first].push_back({users[1].first, rel});
    adj[users[1].first].push_back({users[0].first, rel});
  }
  std::vector<int> sign(facets.size(), 0);
  sign[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t f = queue.front();
    queue.pop_front();
    for (auto [g, rel] : adj[f]) {
      int want = sign[f] * rel;
      if (sign[g] == 0) {
        sign[g] = want;
        queue.push_back(g);
      } else if (sign[g] != want) {
        return fail("boundary is not orientable");
      }
    }
  }
  std::vector<std::pair<CellId, int>> out;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (sign[i] == 0) return fail("boundary is disconnected");
    out.push_back({facets[i], sign[i]});
  }
  return out;
}

inline std::vector<std::pair<CellId, int>> orient_edge(const Cell& edge) {
  return {{edge.boundary[0], -1}, {edge.boundary[1], 1}};
}

}  // namespace detail

struct ValidationReport {
  std::vector<std::string> violations;
  bool valid() const noexcept { return violations.empty(); }
};

/// Combinatorial regularity checks:
///  (a) boundaries list cells of exactly one dimension lower;
///  (b) every 1-cell has two distinct endpoints;
///  (c) every 2-cell boundary is a single simple cycle;
///  (d) every 3-cell boundary is a connected closed orientable surface with chi = 2;
///  (e) two closures meet in the empty set or in the closure of a single cell.
/// Cells of dimension >= 4 get (a) and (e) only. Throws StructuralError on dangling ids.
inline ValidationReport validate_rcc(const RegularCWComplex& x) {
  ValidationReport report;
  auto& v = report.violations;
  if (x.empty()) throw InvalidInput("empty complex");
  for (const auto& [id, c] : x.cells())
    for (CellId b : c.boundary)
      if (!x.contains(b))
        throw StructuralError("cell " + std::to_string(id) + " references unknown cell " + std::to_string(b));

  for (const auto& [id, c] : x.cells()) {
    if (std::adjacent_find(c.boundary.begin(), c.boundary.end()) != c.boundary.end())
      v.push_back("cell " + std::to_string(id) + " lists a boundary cell twice");
    for (CellId b : c.boundary)
      if (x.cell(b).dim != c.dim - 1)
        v.push_back("cell " + std::to_string(id) + " (dim " + std::to_string(c.dim) + ") has boundary cell " +
                    std::to_string(b) + " of dim " + std::to_string(x.cell(b).dim));
    if (c.dim >= 1 && c.boundary.empty()) v.push_back("cell " + std::to_string(id) + " has empty boundary");
  }
  if (!v.empty()) return report;

  IncidenceTable inc;
  for (const auto& [id, c] : x.cells()) {
    if (c.dim == 0) inc[id] = {};
    if (c.dim != 1) continue;
    if (c.boundary.size() != 2) {
      v.push_back("1-cell " + std::to_string(id) + " does not have two distinct endpoints");
      continue;
    }
    inc[id] = detail::orient_edge(c);
  }
  for (int d = 2; d <= x.dim(); ++d) {
    for (CellId id : x.cells_of_dim(d)) {
      const Cell& c = x.cell(id);
      std::string why;
      auto oriented = detail::orient_facets(c, inc, &why);
      if (oriented) inc[id] = *oriented;
      if (d == 2 && !oriented) v.push_back("2-cell " + std::to_string(id) + " boundary is not a simple cycle: " + why);
      if (d != 3) continue;
      if (!oriented) {
        v.push_back("3-cell " + std::to_string(id) + " boundary is not a closed orientable surface: " + why);
        continue;
      }
      std::set<CellId> verts, edges;
      for (CellId f : c.boundary)
        for (CellId e : x.cell(f).boundary) {
          edges.insert(e);
          for (CellId p : x.cell(e).boundary) verts.insert(p);
        }
      long long chi = static_cast<long long>(verts.size()) - static_cast<long long>(edges.size()) +
                      static_cast<long long>(c.boundary.size());
      if (chi != 2)
        v.push_back("3-cell " + std::to_string(id) + " boundary has Euler characteristic " + std::to_string(chi));
      // Vertex links: the boundary 2-cells around each vertex must form one cycle.
      for (CellId p : verts) {
        std::map<CellId, std::vector<CellId>> link;  // edge at p -> faces
        std::size_t faces_at_p = 0;
        for (CellId f : c.boundary) {
          std::vector<CellId> at;
          for (CellId e : x.cell(f).boundary) {
            const auto& eb = x.cell(e).boundary;
            if (eb[0] == p || eb[1] == p) at.push_back(e);
          }
          if (at.empty()) continue;
          ++faces_at_p;
          for (CellId e : at) link[e].push_back(f);
        }
        // Each edge at p is shared by two faces (checked above); count components.
        std::set<CellId> seen;
        std::vector<CellId> stack{link.begin()->first};
        while (!stack.empty()) {
          CellId e = stack.back();
          stack.pop_back();
          if (!seen.insert(e).second) continue;
          for (CellId f : link[e])
            for (CellId e2 : x.cell(f).boundary)
              if (link.contains(e2)) stack.push_back(e2);
        }
        if (seen.size() != link.size() || faces_at_p != link.size())
          v.push_back("3-cell " + std::to_string(id) + " boundary is not a surface at vertex " + std::to_string(p));
      }
    }
  }

  std::map<CellId, std::vector<CellId>> star;  // vertex -> cells whose closure contains it
  std::map<CellId, std::set<CellId>> closures;
  for (const auto& [id, c] : x.cells()) {
    closures[id] = x.closure(id);
    for (CellId p : closures[id])
      if (x.cell(p).dim == 0) star[p].push_back(id);
  }
  std::set<std::pair<CellId, CellId>> checked;
  for (const auto& [p, cells] : star)
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (std::size_t j = i + 1; j < cells.size(); ++j) {
        if (!checked.insert({cells[i], cells[j]}).second) continue;
        const auto& a = closures[cells[i]];
        const auto& b = closures[cells[j]];
        std::vector<CellId> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        int top = -1;
        for (CellId c : common) top = std::max(top, x.cell(c).dim);
        bool ok = false;
        for (CellId c : common)
          if (x.cell(c).dim == top && closures[c].size() == common.size()) ok = true;
        if (!ok)
          v.push_back("closures of cells " + std::to_string(cells[i]) + " and " + std::to_string(cells[j]) +
                      " meet in a set that is not the closure of a cell");
      }
  return report;
}

/// Cellular incidences for every cell of a complex that passes validate_rcc.
inline IncidenceTable cellular_incidences(const RegularCWComplex& x) {
  IncidenceTable inc;
  for (int d = 0; d <= x.dim(); ++d)
    for (CellId id : x.cells_of_dim(d)) {
      const Cell& c = x.cell(id);
      if (d == 0) {
        inc[id] = {};
      } else if (d == 1) {
        if (c.boundary.size() != 2) throw InvalidInput("1-cell " + std::to_string(id) + " is not an arc");
        inc[id] = detail::orient_edge(c);
      } else {
        std::string why;
        auto o = detail::orient_facets(c, inc, &why);
        if (!o) throw InvalidInput("cannot orient cell " + std::to_string(id) + ": " + why);
        inc[id] = *o;
      }
    }
  return inc;
}

}  // namespace topo
