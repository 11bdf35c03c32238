#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "topo/chain_complex.hpp"
#include "topo/lattice.hpp"
#include "topo/smith.hpp"

namespace topo {

struct Letter {
  std::size_t generator = 0;
  int exponent = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<CellId> generator_edges;  // 1-cell behind each generator
  std::vector<Word> relators;

  std::string to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < generators.size(); ++i) s += (i ? ", " : " ") + generators[i];
    s += generators.empty() ? "|" : " |";
    for (std::size_t r = 0; r < relators.size(); ++r) {
      s += r ? ", " : " ";
      if (relators[r].empty()) s += "1";
      for (const Letter& l : relators[r])
        s += generators[l.generator] + (l.exponent < 0 ? "^-1" : "");
    }
    return s + " >";
  }
};

/// Generators: 1-cells off a breadth-first spanning tree of the 1-skeleton
/// rooted at the lowest vertex id. Relators: boundary words of the 2-cells,
/// read along each cell's orientation. Cells of dimension > 2 are ignored.
inline GroupPresentation fundamental_group_presentation(const CellLattice& l) {
  auto verts = l.cells_of_dim(0);
  if (verts.empty()) throw InvalidInput("complex has no vertices");
  // edge index -> (tail, head) with [e:head] = +1
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> ends;
  std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> adj;  // vertex -> (edge, other)
  for (std::size_t e : l.cells_of_dim(1)) {
    std::size_t tail = 0, head = 0;
    for (auto [f, s] : l[e].facets) (s > 0 ? head : tail) = f;
    ends[e] = {tail, head};
    adj[tail].push_back({e, head});
    adj[head].push_back({e, tail});
  }
  std::set<std::size_t> tree, reached{verts.front()};
  std::deque<std::size_t> queue{verts.front()};
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    auto nbrs = adj[v];
    std::sort(nbrs.begin(), nbrs.end(),
              [&](const auto& a, const auto& b) { return l[a.first].id < l[b.first].id; });
    for (auto [e, w] : nbrs)
      if (reached.insert(w).second) {
        tree.insert(e);
        queue.push_back(w);
      }
  }
  if (reached.size() != verts.size()) throw InvalidInput("complex is not connected");

  GroupPresentation p;
  std::map<std::size_t, std::size_t> gen_of;
  for (std::size_t e : l.cells_of_dim(1))
    if (!tree.contains(e)) {
      gen_of[e] = p.generators.size();
      p.generators.push_back("e" + std::to_string(l[e].id));
      p.generator_edges.push_back(l[e].id);
    }
  for (std::size_t f : l.cells_of_dim(2)) {
    // Walk the boundary cycle so each edge is traversed along sign([f:e]).
    std::map<std::size_t, std::vector<std::pair<std::size_t, int>>> out_edges;  // vertex -> (edge, exponent)
    for (auto [e, s] : l[f].facets) {
      auto [tail, head] = ends.at(e);
      if (s > 0) out_edges[tail].push_back({e, 1});
      else out_edges[head].push_back({e, -1});
    }
    std::size_t lowest = l[f].facets.front().first;
    for (auto [e, s] : l[f].facets)
      if (l[e].id < l[lowest].id) lowest = e;
    Word w;
    std::size_t e = lowest;
    int expo = 0;
    for (auto [e2, s] : l[f].facets)
      if (e2 == lowest) expo = s;
    for (std::size_t steps = 0; steps < l[f].facets.size(); ++steps) {
      if (gen_of.contains(e)) w.push_back({gen_of[e], expo});
      auto [tail, head] = ends.at(e);
      std::size_t at = expo > 0 ? head : tail;
      const auto& next = out_edges[at];
      if (next.size() != 1) throw InvalidInput("boundary of 2-cell " + l[f].label + " is not a cycle");
      e = next.front().first;
      expo = next.front().second;
    }
    p.relators.push_back(std::move(w));
  }
  return p;
}

/// Exponent-sum matrix of the relators (rows) over the generators (columns).
inline IntegerMatrix relator_matrix(const GroupPresentation& p) {
  IntegerMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (const Letter& l : p.relators[r]) m(r, l.generator) += l.exponent;
  return m;
}

/// The abelianized group Z^n / (relator rows) as a HomologyGroup.
inline HomologyGroup abelianization(const GroupPresentation& p) {
  HomologyGroup g;
  auto m = relator_matrix(p);
  auto s = smith_invariants(m);
  g.betti = p.generators.size() - s.rank;
  for (const auto& d : s.invariants)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

}  // namespace topo
