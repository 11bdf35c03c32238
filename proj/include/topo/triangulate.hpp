#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <vector>

#include "topo/cw_complex.hpp"
#include "topo/simplicial_complex.hpp"

namespace topo {

struct Triangulation {
  SimplicialComplex complex;
  /// Top-dimensional simplices subdividing each cell.
  std::map<CellId, std::vector<Simplex>> cell_simplices;
  /// Cone apex introduced for each cell of dimension >= 2.
  std::map<CellId, Vertex> apex;
};

/// Cone construction by induction on dimension: 0-cells keep their ids as
/// vertex labels, 1-cells become edges, and every cell of dimension >= 2 is the
/// cone from a fresh apex over the triangulation of its boundary.
inline Triangulation triangulate_rcc(const RegularCWComplex& x) {
  auto report = validate_rcc(x);
  if (!report.valid()) throw InvalidInput("complex is not regular: " + report.violations.front());
  std::map<CellId, std::vector<Simplex>> pieces;
  std::map<CellId, Vertex> apex;
  CellId max_vertex = 0;
  for (CellId v : x.cells_of_dim(0)) max_vertex = std::max(max_vertex, v);
  if (max_vertex > std::numeric_limits<Vertex>::max() / 2) throw InvalidInput("vertex id too large");
  auto next = static_cast<Vertex>(max_vertex + 1);
  std::vector<Simplex> all;
  for (int d = 0; d <= x.dim(); ++d)
    for (CellId id : x.cells_of_dim(d)) {
      const Cell& c = x.cell(id);
      std::vector<Simplex>& mine = pieces[id];
      if (d == 0) {
        mine.push_back(Simplex{static_cast<Vertex>(id)});
      } else if (d == 1) {
        mine.push_back(Simplex{static_cast<Vertex>(c.boundary[0]), static_cast<Vertex>(c.boundary[1])});
      } else {
        Vertex a = next++;
        apex[id] = a;
        for (CellId f : c.boundary)
          for (const Simplex& s : pieces.at(f)) {
            std::vector<Vertex> vs = s.vertices();
            vs.push_back(a);
            mine.emplace_back(std::move(vs));
          }
      }
      all.insert(all.end(), mine.begin(), mine.end());
    }
  return {generate_complex(all), std::move(pieces), std::move(apex)};
}

}  // namespace topo
