#pragma once

#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "topo/error.hpp"
#include "topo/simplicial_complex.hpp"

namespace topo {

struct SurfaceType {
  bool orientable = true;
  /// Genus when orientable, number of crosscaps otherwise.
  unsigned genus_or_crosscaps = 0;
  unsigned boundary_components = 0;

  long long euler_characteristic() const {
    long long handles = orientable ? 2LL * genus_or_crosscaps : genus_or_crosscaps;
    return 2 - handles - static_cast<long long>(boundary_components);
  }

  std::string to_string() const {
    std::string s = orientable ? "orientable, genus " : "non-orientable, crosscaps ";
    s += std::to_string(genus_or_crosscaps);
    s += ", boundary components " + std::to_string(boundary_components);
    return s;
  }

  friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
};

/// Classifies a connected triangulated compact surface (possibly with boundary).
/// Throws NotASurface naming the offending simplex when an edge lies in more
/// than two triangles (or none), a vertex link is not a single cycle or arc,
/// or the complex is disconnected.
inline SurfaceType classify_surface(const SimplicialComplex& k) {
  if (k.dim() != 2) throw NotASurface("complex has dimension " + std::to_string(k.dim()) + ", expected 2");
  const auto& edges = k.simplices(1);
  const auto& tris = k.simplices(2);

  std::map<Simplex, std::vector<std::size_t>> edge_tris;
  for (std::size_t t = 0; t < tris.size(); ++t)
    for (const Simplex& e : tris[t].facets()) edge_tris[e].push_back(t);
  for (const Simplex& e : edges) {
    auto n = edge_tris[e].size();
    if (n == 0 || n > 2)
      throw NotASurface("edge " + e.to_string() + " lies in " + std::to_string(n) + " triangles");
  }

  for (Vertex v : k.vertices()) {
    // Link of v: opposite edges of the triangles at v, as a graph on vertices.
    std::map<Vertex, std::vector<Vertex>> link;
    for (const Simplex& t : tris) {
      if (!t.contains(v)) continue;
      std::vector<Vertex> opp;
      for (Vertex w : t.vertices())
        if (w != v) opp.push_back(w);
      link[opp[0]].push_back(opp[1]);
      link[opp[1]].push_back(opp[0]);
    }
    auto bad = [&] { return NotASurface("link of vertex " + std::to_string(v) + " is not a single cycle or arc"); };
    if (link.empty()) throw bad();
    std::size_t ends = 0;
    for (const auto& [w, nb] : link) {
      if (nb.size() > 2) throw bad();
      if (nb.size() == 1) ++ends;
    }
    std::set<Vertex> seen;
    std::vector<Vertex> stack{link.begin()->first};
    while (!stack.empty()) {
      Vertex w = stack.back();
      stack.pop_back();
      if (!seen.insert(w).second) continue;
      for (Vertex u : link[w]) stack.push_back(u);
    }
    if (seen.size() != link.size() || (ends != 0 && ends != 2)) throw bad();
  }

  // Connectedness via the 1-skeleton.
  {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const Simplex& e : edges) {
      adj[e[0]].push_back(e[1]);
      adj[e[1]].push_back(e[0]);
    }
    std::set<Vertex> seen;
    std::vector<Vertex> stack{k.vertices().front()};
    while (!stack.empty()) {
      Vertex w = stack.back();
      stack.pop_back();
      if (!seen.insert(w).second) continue;
      for (Vertex u : adj[w]) stack.push_back(u);
    }
    if (seen.size() != k.simplices(0).size()) throw NotASurface("complex is not connected");
  }

  // Boundary edges (in exactly one triangle) form disjoint cycles; count them.
  unsigned boundary_components = 0;
  {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const auto& [e, ts] : edge_tris)
      if (ts.size() == 1) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
      }
    std::set<Vertex> seen;
    for (const auto& [start, nb] : adj) {
      if (seen.contains(start)) continue;
      ++boundary_components;
      std::vector<Vertex> stack{start};
      while (!stack.empty()) {
        Vertex w = stack.back();
        stack.pop_back();
        if (!seen.insert(w).second) continue;
        for (Vertex u : adj[w]) stack.push_back(u);
      }
    }
  }

  // Orientation propagation: neighbours across an interior edge must induce
  // opposite signs on it. Induced sign of t on its i-th facet is (-1)^i.
  bool orientable = true;
  {
    std::vector<int> orient(tris.size(), 0);
    auto facet_sign = [&](std::size_t t, const Simplex& e) {
      for (std::size_t i = 0; i < 3; ++i)
        if (tris[t].facet(i) == e) return i % 2 == 0 ? 1 : -1;
      return 0;
    };
    orient[0] = 1;
    std::deque<std::size_t> queue{0};
    while (!queue.empty() && orientable) {
      std::size_t t = queue.front();
      queue.pop_front();
      for (const Simplex& e : tris[t].facets()) {
        const auto& ts = edge_tris[e];
        if (ts.size() != 2) continue;
        std::size_t u = ts[0] == t ? ts[1] : ts[0];
        int want = -orient[t] * facet_sign(t, e) * facet_sign(u, e);
        if (orient[u] == 0) {
          orient[u] = want;
          queue.push_back(u);
        } else if (orient[u] != want) {
          orientable = false;
          break;
        }
      }
    }
  }

  long long chi = euler_characteristic(k);
  long long handles = 2 - chi - static_cast<long long>(boundary_components);
  SurfaceType out;
  out.orientable = orientable;
  out.boundary_components = boundary_components;
  if (orientable) {
    if (handles < 0 || handles % 2 != 0) throw NotASurface("inconsistent Euler characteristic " + std::to_string(chi));
    out.genus_or_crosscaps = static_cast<unsigned>(handles / 2);
  } else {
    if (handles < 1) throw NotASurface("inconsistent Euler characteristic " + std::to_string(chi));
    out.genus_or_crosscaps = static_cast<unsigned>(handles);
  }
  return out;
}

/// Conventional name for closed or bordered surfaces of small type.
inline std::string surface_name(const SurfaceType& s) {
  std::string base;
  if (s.orientable) {
    if (s.genus_or_crosscaps == 0) base = "sphere";
    else if (s.genus_or_crosscaps == 1) base = "torus";
    else base = "genus-" + std::to_string(s.genus_or_crosscaps) + " surface";
  } else {
    if (s.genus_or_crosscaps == 1) base = "projective plane";
    else if (s.genus_or_crosscaps == 2) base = "Klein bottle";
    else base = "non-orientable surface with " + std::to_string(s.genus_or_crosscaps) + " crosscaps";
  }
  unsigned holes = s.boundary_components;
  if (holes == 0) return base;
  if (s.orientable && s.genus_or_crosscaps == 0 && holes == 1) return "disk";
  if (!s.orientable && s.genus_or_crosscaps == 1) {
    base = "Moebius strip";
    if (--holes == 0) return base;
  }
  return base + " with " + std::to_string(holes) + " hole" + (holes > 1 ? "s" : "");
}

}  // namespace topo
