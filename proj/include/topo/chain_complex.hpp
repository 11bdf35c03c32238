#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topo/error.hpp"
#include "topo/integer_matrix.hpp"
#include "topo/simplicial_complex.hpp"
#include "topo/smith.hpp"

namespace topo {

/// Free chain groups C_0..C_n with boundary matrices D_i : C_i -> C_{i-1}.
/// D_i has rank(C_{i-1}) rows and rank(C_i) columns.
class ChainComplex {
 public:
  ChainComplex() = default;

  ChainComplex(std::vector<std::size_t> ranks, std::vector<IntegerMatrix> boundaries,
               std::vector<std::vector<std::string>> basis = {})
      : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)), basis_(std::move(basis)) {}

  /// Group ranks are read off the matrix shapes: C_0 = rows(D_1), C_i = cols(D_i).
  static ChainComplex from_matrices(std::vector<IntegerMatrix> boundaries) {
    std::vector<std::size_t> ranks;
    if (!boundaries.empty()) ranks.push_back(boundaries.front().rows());
    for (const auto& d : boundaries) ranks.push_back(d.cols());
    return ChainComplex(std::move(ranks), std::move(boundaries));
  }

  /// Highest degree with a chain group, -1 when there are none.
  int top_dim() const noexcept { return static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int i) const {
    if (i < 0 || i > top_dim()) return 0;
    return ranks_[static_cast<std::size_t>(i)];
  }
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }

  std::size_t boundary_count() const noexcept { return boundaries_.size(); }
  /// D_i, 1 <= i <= boundary_count().
  const IntegerMatrix& boundary(int i) const { return boundaries_.at(static_cast<std::size_t>(i - 1)); }

  const std::vector<std::vector<std::string>>& basis() const noexcept { return basis_; }

 private:
  std::vector<std::size_t> ranks_;
  std::vector<IntegerMatrix> boundaries_;
  std::vector<std::vector<std::string>> basis_;
};

struct ChainCheck {
  bool ok = true;
  /// Smallest i with D_i * D_{i+1} != 0.
  std::optional<int> failing_dim;
  IntegerMatrix product;
};

/// Checks D_i * D_{i+1} = 0 for all i. Throws StructuralError on shape mismatch.
inline ChainCheck verify_chain_complex(const ChainComplex& c) {
  const int n = static_cast<int>(c.boundary_count());
  for (int i = 1; i <= n; ++i) {
    const auto& d = c.boundary(i);
    if (d.rows() != c.rank(i - 1) || d.cols() != c.rank(i))
      throw StructuralError("D_" + std::to_string(i) + " has shape " + d.shape() + ", expected " +
                            std::to_string(c.rank(i - 1)) + "x" + std::to_string(c.rank(i)));
  }
  for (int i = 1; i < n; ++i) {
    auto p = c.boundary(i) * c.boundary(i + 1);
    if (!p.is_zero()) return {false, i, std::move(p)};
  }
  return {};
}

/// Boundary matrices from the alternating face formula, bases in lexicographic order.
inline ChainComplex chain_complex_from_simplicial(const SimplicialComplex& k) {
  std::vector<std::size_t> ranks;
  std::vector<std::vector<std::string>> basis;
  for (int d = 0; d <= k.dim(); ++d) {
    ranks.push_back(k.simplices(d).size());
    auto& labels = basis.emplace_back();
    for (const Simplex& s : k.simplices(d)) labels.push_back(s.to_string());
  }
  std::vector<IntegerMatrix> mats;
  for (int d = 1; d <= k.dim(); ++d) {
    const auto& cols = k.simplices(d);
    IntegerMatrix m(k.simplices(d - 1).size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t f = 0; f < cols[j].size(); ++f)
        m(*k.index_in_dim(cols[j].facet(f)), j) = (f % 2 == 0) ? 1 : -1;
    mats.push_back(std::move(m));
  }
  return ChainComplex(std::move(ranks), std::move(mats), std::move(basis));
}

struct HomologyGroup {
  std::size_t betti = 0;
  /// Invariant factors > 1, each dividing the next.
  std::vector<BigInt> torsion;

  bool is_trivial() const { return betti == 0 && torsion.empty(); }

  /// "Z^2 + Z/2", "Z", "0".
  std::string to_string() const {
    std::string s;
    if (betti == 1) s = "Z";
    else if (betti > 1) s = "Z^" + std::to_string(betti);
    for (const auto& t : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + t.str();
    return s.empty() ? "0" : s;
  }

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// H_i = ker D_i / im D_{i+1}: betti_i = rank C_i - rank D_i - rank D_{i+1},
/// torsion_i = invariant factors > 1 of D_{i+1}. Rejects when D_i D_{i+1} != 0.
inline std::vector<HomologyGroup> homology_groups(const ChainComplex& c) {
  auto check = verify_chain_complex(c);
  if (!check.ok) throw InvalidInput("boundary maps do not compose to zero at D_" + std::to_string(*check.failing_dim));
  const int n = c.top_dim();
  std::vector<SmithInvariants> snf(static_cast<std::size_t>(n + 2));
  for (int i = 1; i <= static_cast<int>(c.boundary_count()); ++i)
    snf[static_cast<std::size_t>(i)] = smith_invariants(c.boundary(i));
  std::vector<HomologyGroup> out;
  for (int i = 0; i <= n; ++i) {
    HomologyGroup g;
    std::size_t rk_in = snf[static_cast<std::size_t>(i)].rank;
    const auto& next = snf[static_cast<std::size_t>(i + 1)];
    g.betti = c.rank(i) - rk_in - next.rank;
    for (const auto& d : next.invariants)
      if (d > 1) g.torsion.push_back(d);
    out.push_back(std::move(g));
  }
  return out;
}

inline long long euler_from_homology(const std::vector<HomologyGroup>& groups) {
  long long chi = 0;
  for (std::size_t i = 0; i < groups.size(); ++i)
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(groups[i].betti);
  return chi;
}

inline std::string format_homology(const std::vector<HomologyGroup>& groups) {
  std::string s;
  for (std::size_t i = 0; i < groups.size(); ++i) s += "H_" + std::to_string(i) + " = " + groups[i].to_string() + "\n";
  return s;
}

}  // namespace topo
