#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "topo/chain_complex.hpp"
#include "topo/cw_complex.hpp"
#include "topo/io.hpp"
#include "topo/morse.hpp"
#include "topo/simplicial_complex.hpp"
#include "topo/surface.hpp"

namespace topo {

struct Expected {
  long long chi = 0;
  std::vector<HomologyGroup> homology;
  std::optional<SurfaceType> surface;
  std::optional<CVector> c;
};

struct CorpusEntry {
  std::string name;
  std::string description;
  AnyComplex complex;
  Expected expected;
};

namespace corpus_detail {

inline std::vector<HomologyGroup> groups(std::initializer_list<std::pair<std::size_t, std::vector<int>>> list) {
  std::vector<HomologyGroup> out;
  for (const auto& [b, t] : list) {
    HomologyGroup g;
    g.betti = b;
    for (int d : t) g.torsion.push_back(d);
    out.push_back(std::move(g));
  }
  return out;
}

/// Triangulated n x m grid of squares with boundary identifications given by
/// `label(i, j)` for 0 <= i <= n, 0 <= j <= m. Each square (i,j) is split
/// along its (i,j)-(i+1,j+1) diagonal.
inline SimplicialComplex grid_surface(int n, int m, const std::function<Vertex(int, int)>& label) {
  std::vector<Simplex> tris;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      Vertex a = label(i, j), b = label(i + 1, j), c = label(i + 1, j + 1), d = label(i, j + 1);
      tris.push_back(Simplex{a, b, c});
      tris.push_back(Simplex{a, c, d});
    }
  return generate_complex(tris);
}

/// Removes `count` pairwise vertex-disjoint triangles whose vertices are all
/// interior, opening one new boundary circle per triangle.
inline SimplicialComplex punch(const SimplicialComplex& k, std::size_t count) {
  std::set<Vertex> on_boundary;
  std::map<Simplex, int> uses;
  for (const Simplex& t : k.simplices(2))
    for (const Simplex& e : t.facets()) ++uses[e];
  for (const auto& [e, n] : uses)
    if (n == 1) on_boundary.insert(e.vertices().begin(), e.vertices().end());
  std::set<Vertex> used;
  std::set<Simplex> removed;
  for (const Simplex& t : k.simplices(2)) {
    if (removed.size() == count) break;
    bool ok = true;
    for (Vertex v : t.vertices())
      if (on_boundary.contains(v) || used.contains(v)) ok = false;
    if (!ok) continue;
    removed.insert(t);
    used.insert(t.vertices().begin(), t.vertices().end());
  }
  if (removed.size() != count) throw std::logic_error("not enough room to punch holes");
  std::set<Simplex> rest = k.all();
  for (const Simplex& t : removed) rest.erase(t);
  return SimplicialComplex(rest);
}

inline SimplicialComplex boundary_of_simplex(int n) {
  std::vector<Simplex> facets;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<Vertex> vs;
    for (int v = 0; v <= n; ++v)
      if (v != skip) vs.push_back(static_cast<Vertex>(v));
    facets.emplace_back(std::move(vs));
  }
  return generate_complex(facets);
}

}  // namespace corpus_detail

/// The 3x3 torus of nine quadrilaterals.
inline RegularCWComplex torus_rcc() {
  RegularCWComplex x;
  const std::vector<std::vector<CellId>> quads = {{0, 1, 7, 4}, {1, 2, 8, 7}, {2, 0, 4, 8}, {3, 4, 7, 5}, {5, 7, 8, 6},
                                                  {3, 6, 8, 4}, {0, 3, 5, 1}, {1, 5, 6, 2}, {0, 2, 6, 3}};
  x.add_two_cells(quads);
  return x;
}

/// Boundary of the 4-simplex: ten triangles and five tetrahedra. Triangle k
/// of the listing below has id s3_triangle_id(k).
inline constexpr CellId s3_triangle_id(std::size_t k) { return 15 + static_cast<CellId>(k); }

inline RegularCWComplex s3_rcc() {
  RegularCWComplex x;
  const std::vector<std::vector<CellId>> triangles = {{2, 3, 4}, {0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3},
                                                      {0, 2, 4}, {0, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}};
  x.add_two_cells(triangles);
  const std::vector<std::vector<std::size_t>> tets = {{0, 7, 8, 9}, {4, 5, 6, 0}, {2, 3, 6, 9}, {1, 3, 5, 8}, {1, 2, 4, 7}};
  for (const auto& t : tets) {
    std::vector<CellId> b;
    for (std::size_t k : t) b.push_back(s3_triangle_id(k));
    x.add_cell(3, x.next_id(), b);
  }
  return x;
}

/// Cubical 3-torus on a 3x3x3 periodic grid.
inline RegularCWComplex torus3_rcc() {
  RegularCWComplex x;
  constexpr int n = 3;
  auto vid = [](int i, int j, int k) { return static_cast<CellId>(((i + n) % n) + n * ((j + n) % n) + n * n * ((k + n) % n)); };
  using P = std::array<int, 3>;
  auto shift = [](P p, int axis) {
    p[static_cast<std::size_t>(axis)] += 1;
    return p;
  };
  auto id_of = [&](P p) { return vid(p[0], p[1], p[2]); };
  std::map<std::pair<CellId, int>, CellId> edge, square;  // (base vertex, axis or missing axis)
  std::vector<P> points;
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) points.push_back({i, j, k});
  for (const P& p : points) x.add_cell(0, id_of(p), {});
  for (const P& p : points)
    for (int a = 0; a < 3; ++a) {
      CellId e = x.next_id();
      x.add_cell(1, e, {id_of(p), id_of(shift(p, a))});
      edge[{id_of(p), a}] = e;
    }
  for (const P& p : points)
    for (int missing = 0; missing < 3; ++missing) {
      int a = (missing + 1) % 3, b = (missing + 2) % 3;
      CellId s = x.next_id();
      x.add_cell(2, s,
                 {edge[{id_of(p), a}], edge[{id_of(p), b}], edge[{id_of(shift(p, a)), b}], edge[{id_of(shift(p, b)), a}]});
      square[{id_of(p), missing}] = s;
    }
  for (const P& p : points) {
    std::vector<CellId> faces;
    for (int missing = 0; missing < 3; ++missing) {
      faces.push_back(square[{id_of(p), missing}]);
      faces.push_back(square[{id_of(shift(p, missing)), missing}]);
    }
    x.add_cell(3, x.next_id(), faces);
  }
  return x;
}

inline SimplicialComplex torus_triangulation() {
  return corpus_detail::grid_surface(3, 3, [](int i, int j) { return static_cast<Vertex>((i % 3) + 3 * (j % 3)); });
}

inline SimplicialComplex klein_bottle_triangulation() {
  constexpr int n = 3, m = 3;
  return corpus_detail::grid_surface(n, m, [](int i, int j) {
    if (j == m) {
      i = (n - i) % n;
      j = 0;
    }
    return static_cast<Vertex>((i % n) + n * j);
  });
}

inline SimplicialComplex mobius_triangulation() {
  return generate_complex(std::vector<std::vector<Vertex>>{{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}, {4, 0, 1}});
}

inline SimplicialComplex projective_plane_triangulation() {
  return generate_complex(std::vector<std::vector<Vertex>>{
      {1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2}, {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}});
}

/// Discrete Morse function on torus_rcc(): critical cells are
/// vertex 0, edges {1,2} and {3,4}, and the square [5,6,8,7].
inline DiscreteFunction torus_morse_function(const RegularCWComplex& torus) {
  struct Value {
    int dim;
    std::vector<CellId> vertices;
    double value;
  };
  const std::vector<Value> table = {
      {0, {0}, 0},         {0, {1}, 1},         {0, {2}, 1},         {0, {3}, 1},         {0, {4}, 1},
      {0, {5}, 2},         {0, {6}, 4},         {0, {7}, 2},         {0, {8}, 3},         {1, {0, 1}, 1},
      {1, {0, 2}, 1},      {1, {0, 3}, 1},      {1, {0, 4}, 1},      {1, {1, 7}, 2},      {1, {3, 5}, 2},
      {1, {7, 8}, 3},      {1, {6, 8}, 4},      {1, {1, 2}, 5},      {1, {3, 4}, 5},      {1, {4, 7}, 6},
      {1, {1, 5}, 6},      {1, {2, 8}, 6},      {1, {4, 8}, 7},      {1, {5, 7}, 7},      {1, {3, 6}, 8},
      {1, {2, 6}, 9},      {1, {5, 6}, 10},     {2, {0, 1, 4, 7}, 6}, {2, {0, 1, 3, 5}, 6}, {2, {1, 2, 7, 8}, 6},
      {2, {0, 2, 4, 8}, 7}, {2, {3, 4, 5, 7}, 7}, {2, {3, 4, 6, 8}, 8}, {2, {0, 2, 3, 6}, 9}, {2, {1, 2, 5, 6}, 10},
      {2, {5, 6, 7, 8}, 11}};
  DiscreteFunction f;
  for (const auto& [dim, vs, value] : table) {
    auto id = torus.find_cell(dim, vs);
    if (!id) throw std::logic_error("torus cell missing");
    f[*id] = value;
  }
  return f;
}

inline std::vector<CorpusEntry> corpus() {
  using corpus_detail::groups;
  using corpus_detail::punch;
  std::vector<CorpusEntry> out;
  auto surface = [](bool orientable, unsigned g, unsigned b) { return SurfaceType{orientable, g, b}; };

  out.push_back({"point", "a single vertex", generate_complex(std::vector<std::vector<Vertex>>{{0}}),
                 {1, groups({{1, {}}}), std::nullopt, CVector{{1}}}});
  out.push_back({"example1", "<03, 04, 05, 24, 012>",
                 generate_complex(std::vector<std::vector<Vertex>>{{0, 3}, {0, 4}, {0, 5}, {2, 4}, {0, 1, 2}}),
                 {0, groups({{1, {}}, {1, {}}, {0, {}}}), std::nullopt, CVector{{6, 7, 1}}}});
  out.push_back({"disk", "a single triangle", generate_complex(std::vector<std::vector<Vertex>>{{0, 1, 2}}),
                 {1, groups({{1, {}}, {0, {}}, {0, {}}}), surface(true, 0, 1), CVector{{3, 3, 1}}}});
  out.push_back({"circle", "boundary of a triangle",
                 generate_complex(std::vector<std::vector<Vertex>>{{0, 1}, {0, 2}, {1, 2}}),
                 {0, groups({{1, {}}, {1, {}}}), std::nullopt, CVector{{3, 3}}}});
  out.push_back({"sphere", "boundary of the 3-simplex", corpus_detail::boundary_of_simplex(3),
                 {2, groups({{1, {}}, {0, {}}, {1, {}}}), surface(true, 0, 0), CVector{{4, 6, 4}}}});
  out.push_back({"torus", "regular cell complex of nine squares", torus_rcc(),
                 {0, groups({{1, {}}, {2, {}}, {1, {}}}), std::nullopt, CVector{{9, 18, 9}}}});
  out.push_back({"torus_tri", "triangulated 3x3 torus", torus_triangulation(),
                 {0, groups({{1, {}}, {2, {}}, {1, {}}}), surface(true, 1, 0), CVector{{9, 27, 18}}}});
  out.push_back({"torus_1hole", "torus with one hole", punch(torus_triangulation(), 1),
                 {-1, groups({{1, {}}, {2, {}}, {0, {}}}), surface(true, 1, 1), std::nullopt}});
  out.push_back({"torus_2holes", "torus with two holes", punch(torus_triangulation(), 2),
                 {-2, groups({{1, {}}, {3, {}}, {0, {}}}), surface(true, 1, 2), std::nullopt}});
  out.push_back({"sphere_3holes", "sphere with three holes",
                 punch(barycentric_subdivision(corpus_detail::boundary_of_simplex(3)), 3),
                 {-1, groups({{1, {}}, {2, {}}, {0, {}}}), surface(true, 0, 3), std::nullopt}});
  out.push_back({"klein", "triangulated 3x3 Klein bottle", klein_bottle_triangulation(),
                 {0, groups({{1, {}}, {1, {2}}, {0, {}}}), surface(false, 2, 0), std::nullopt}});
  out.push_back({"mobius", "five-triangle Moebius strip", mobius_triangulation(),
                 {0, groups({{1, {}}, {1, {}}, {0, {}}}), surface(false, 1, 1), CVector{{5, 10, 5}}}});
  out.push_back({"mobius_hole", "Moebius strip with a hole", punch(barycentric_subdivision(barycentric_subdivision(mobius_triangulation())), 1),
                 {-1, groups({{1, {}}, {2, {}}, {0, {}}}), surface(false, 1, 2), std::nullopt}});
  out.push_back({"klein_2holes", "Klein bottle with two holes", punch(klein_bottle_triangulation(), 2),
                 {-2, groups({{1, {}}, {3, {}}, {0, {}}}), surface(false, 2, 2), std::nullopt}});
  out.push_back({"rp2", "six-vertex projective plane", projective_plane_triangulation(),
                 {1, groups({{1, {}}, {0, {2}}, {0, {}}}), surface(false, 1, 0), CVector{{6, 15, 10}}}});
  out.push_back({"s3", "boundary of the 4-simplex as a cell complex", s3_rcc(),
                 {0, groups({{1, {}}, {0, {}}, {0, {}}, {1, {}}}), std::nullopt, CVector{{5, 10, 10, 5}}}});
  out.push_back({"torus3", "cubical 3-torus", torus3_rcc(),
                 {0, groups({{1, {}}, {3, {}}, {3, {}}, {1, {}}}), std::nullopt, CVector{{27, 81, 81, 27}}}});
  return out;
}

inline std::optional<CorpusEntry> corpus_entry(const std::string& name) {
  for (auto& e : corpus())
    if (e.name == name) return e;
  return std::nullopt;
}

}  // namespace topo
