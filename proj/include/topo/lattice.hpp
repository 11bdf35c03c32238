#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topo/chain_complex.hpp"
#include "topo/cw_complex.hpp"
#include "topo/simplicial_complex.hpp"
#include "topo/triangulate.hpp"

namespace topo {

struct LatticeCell {
  CellId id = 0;
  int dim = 0;
  std::string label;
  std::vector<std::pair<std::size_t, int>> facets;  // (cell index, incidence sign)
  std::vector<std::size_t> cofacets;
};

/// Face poset of a simplicial or regular CW complex with oriented incidences.
/// Cells are stored in (dim, id) order; `index` refers to that position.
class CellLattice {
 public:
  /// Cell ids are the dimension-major global indices of the simplices.
  static CellLattice from_simplicial(const SimplicialComplex& k) {
    CellLattice out;
    for (int d = 0; d <= k.dim(); ++d)
      for (const Simplex& s : k.simplices(d)) {
        LatticeCell c;
        c.id = static_cast<CellId>(k.global_index(s));
        c.dim = d;
        c.label = s.to_string();
        if (d > 0)
          for (std::size_t f = 0; f < s.size(); ++f)
            c.facets.push_back({k.global_index(s.facet(f)), f % 2 == 0 ? 1 : -1});
        out.cells_.push_back(std::move(c));
      }
    out.finish();
    return out;
  }

  /// Requires validate_rcc(x) to pass. Ids are the complex's cell ids.
  static CellLattice from_rcc(const RegularCWComplex& x) {
    auto report = validate_rcc(x);
    if (!report.valid()) throw InvalidInput("complex is not regular: " + report.violations.front());
    auto inc = cellular_incidences(x);
    CellLattice out;
    for (int d = 0; d <= x.dim(); ++d)
      for (CellId id : x.cells_of_dim(d)) {
        LatticeCell c;
        c.id = id;
        c.dim = d;
        c.label = x.label(id);
        out.cells_.push_back(std::move(c));
      }
    out.index_ids();
    for (auto& c : out.cells_)
      for (auto [f, s] : inc.at(c.id)) c.facets.push_back({out.index_of(f).value(), s});
    out.finish();
    return out;
  }

  std::size_t size() const noexcept { return cells_.size(); }
  const LatticeCell& operator[](std::size_t i) const { return cells_[i]; }
  const std::vector<LatticeCell>& cells() const noexcept { return cells_; }
  int dim() const noexcept { return cells_.empty() ? -1 : cells_.back().dim; }

  std::optional<std::size_t> index_of(CellId id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t at_id(CellId id) const {
    auto i = index_of(id);
    if (!i) throw InvalidInput("unknown cell id " + std::to_string(id));
    return *i;
  }

  /// [cell : facet], 0 when `facet` is not a facet of `cell`.
  int incidence(std::size_t cell, std::size_t facet) const {
    for (auto [f, s] : cells_[cell].facets)
      if (f == facet) return s;
    return 0;
  }

  std::vector<std::size_t> cells_of_dim(int d) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cells_.size(); ++i)
      if (cells_[i].dim == d) out.push_back(i);
    return out;
  }

  std::optional<std::size_t> find_label(const std::string& label) const {
    for (std::size_t i = 0; i < cells_.size(); ++i)
      if (cells_[i].label == label) return i;
    return std::nullopt;
  }

 private:
  void index_ids() {
    by_id_.clear();
    for (std::size_t i = 0; i < cells_.size(); ++i) by_id_[cells_[i].id] = i;
  }
  void finish() {
    index_ids();
    for (std::size_t i = 0; i < cells_.size(); ++i)
      for (auto [f, s] : cells_[i].facets) cells_[f].cofacets.push_back(i);
  }

  std::vector<LatticeCell> cells_;
  std::map<CellId, std::size_t> by_id_;
};

/// Chain complex whose D_i holds the lattice incidences.
inline ChainComplex cellular_chain_complex(const CellLattice& l) {
  const int n = l.dim();
  std::vector<std::vector<std::size_t>> by_dim(static_cast<std::size_t>(n + 1));
  std::vector<std::size_t> pos(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    auto& layer = by_dim[static_cast<std::size_t>(l[i].dim)];
    pos[i] = layer.size();
    layer.push_back(i);
  }
  std::vector<std::size_t> ranks;
  std::vector<std::vector<std::string>> basis;
  for (const auto& layer : by_dim) {
    ranks.push_back(layer.size());
    auto& names = basis.emplace_back();
    for (std::size_t i : layer) names.push_back(l[i].label);
  }
  std::vector<IntegerMatrix> mats;
  for (int d = 1; d <= n; ++d) {
    const auto& layer = by_dim[static_cast<std::size_t>(d)];
    IntegerMatrix m(by_dim[static_cast<std::size_t>(d - 1)].size(), layer.size());
    for (std::size_t j = 0; j < layer.size(); ++j)
      for (auto [f, s] : l[layer[j]].facets) m(pos[f], j) = s;
    mats.push_back(std::move(m));
  }
  return ChainComplex(std::move(ranks), std::move(mats), std::move(basis));
}

/// Homology of a regular CW complex, computed on its cone triangulation.
inline ChainComplex chain_complex_from_rcc(const RegularCWComplex& x) {
  return chain_complex_from_simplicial(triangulate_rcc(x).complex);
}

}  // namespace topo
