#include <gtest/gtest.h>

#include <set>

#include "topo/chain_complex.hpp"
#include "topo/corpus.hpp"
#include "topo/morse.hpp"

using namespace topo;

namespace {

struct TorusSetup {
  RegularCWComplex x = torus_rcc();
  CellLattice l = CellLattice::from_rcc(x);
  DiscreteFunction f = torus_morse_function(x);
  CellId id(int dim, std::vector<CellId> vs) const { return x.find_cell(dim, vs).value(); }
};

DiscreteFunction by_dimension(const CellLattice& l) {
  DiscreteFunction f;
  for (const auto& c : l.cells()) f[c.id] = c.dim;
  return f;
}

CellLattice edge_lattice() {
  return CellLattice::from_simplicial(generate_complex(std::vector<std::vector<Vertex>>{{0, 1}}));
}

CellLattice circle_lattice() {
  return CellLattice::from_simplicial(generate_complex(std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}, {0, 2}}));
}

std::vector<std::size_t> counts(const std::vector<CriticalCell>& cs, int dims) {
  std::vector<std::size_t> c(static_cast<std::size_t>(dims + 1), 0);
  for (const auto& cell : cs) ++c[static_cast<std::size_t>(cell.index)];
  return c;
}

}  // namespace

TEST(DiscreteMorse, DimensionFunctionIsMorse) {
  TorusSetup t;
  EXPECT_TRUE(is_discrete_morse(by_dimension(t.l), t.l).ok);
  EXPECT_EQ(critical_cells(by_dimension(t.l), t.l).size(), t.l.size());
  EXPECT_TRUE(gradient_field_of(by_dimension(t.l), t.l).pairs.empty());
}

TEST(DiscreteMorse, TorusFunctionIsMorse) {
  TorusSetup t;
  EXPECT_TRUE(is_discrete_morse(t.f, t.l).ok);
}

TEST(DiscreteMorse, TorusCriticalCells) {
  TorusSetup t;
  std::vector<CriticalCell> expected = {
      {t.id(0, {0}), 0}, {t.id(1, {1, 2}), 1}, {t.id(1, {3, 4}), 1}, {t.id(2, {5, 6, 8, 7}), 2}};
  std::sort(expected.begin(), expected.end(), [](auto& a, auto& b) { return std::pair{a.index, a.id} < std::pair{b.index, b.id}; });
  EXPECT_EQ(critical_cells(t.f, t.l), expected);
  EXPECT_EQ(t.l[t.l.at_id(t.id(2, {5, 6, 8, 7}))].label, "[5,6,8,7]");
}

TEST(DiscreteMorse, TorusGradientField) {
  TorusSetup t;
  auto v = gradient_field_of(t.f, t.l);
  EXPECT_EQ(v.pairs.size(), 16u);
  EXPECT_TRUE(validate_field(v, t.l).ok);
  EXPECT_TRUE(is_gradient(v, t.l));
  std::set<std::pair<CellId, CellId>> pairs(v.pairs.begin(), v.pairs.end());
  EXPECT_TRUE(pairs.contains({t.id(0, {1}), t.id(1, {0, 1})}));
  EXPECT_TRUE(pairs.contains({t.id(0, {6}), t.id(1, {6, 8})}));
  EXPECT_TRUE(pairs.contains({t.id(1, {5, 6}), t.id(2, {1, 5, 6, 2})}));
  EXPECT_TRUE(pairs.contains({t.id(1, {1, 5}), t.id(2, {0, 3, 5, 1})}));
  EXPECT_EQ(critical_cells(v, t.l), critical_cells(t.f, t.l));
}

TEST(DiscreteMorse, EdgeBelowBothEndpointsFails) {
  auto l = edge_lattice();
  // ids: vertices 0, 1; edge 2.
  DiscreteFunction f{{0, 1}, {1, 1}, {2, 0}};
  auto check = is_discrete_morse(f, l);
  EXPECT_FALSE(check.ok);
  EXPECT_EQ(check.violating, 2);
  EXPECT_THROW(critical_cells(f, l), InvalidInput);
}

TEST(DiscreteMorse, IncreasingEdgeIsAllCritical) {
  auto l = edge_lattice();
  DiscreteFunction f{{0, 0}, {1, 1}, {2, 2}};
  EXPECT_EQ(critical_cells(f, l).size(), 3u);
}

TEST(DiscreteMorse, TiedEndpointPairs) {
  auto l = edge_lattice();
  DiscreteFunction f{{0, 1}, {1, 0}, {2, 1}};
  auto v = gradient_field_of(f, l);
  ASSERT_EQ(v.pairs.size(), 1u);
  EXPECT_EQ(v.pairs[0], (std::pair<CellId, CellId>{0, 2}));
}

TEST(DiscreteMorse, MissingValueRejected) {
  auto l = edge_lattice();
  DiscreteFunction f{{0, 0}, {1, 1}};
  EXPECT_THROW(is_discrete_morse(f, l), InvalidInput);
}

TEST(VectorField, SharingACellIsInvalid) {
  auto l = edge_lattice();
  DiscreteVectorField v{{{0, 2}, {1, 2}}};
  EXPECT_FALSE(validate_field(v, l).ok);
  EXPECT_THROW(is_gradient(v, l), InvalidInput);
}

TEST(VectorField, DimensionGapIsInvalid) {
  auto l = CellLattice::from_simplicial(generate_complex(std::vector<std::vector<Vertex>>{{0, 1, 2}}));
  DiscreteVectorField v{{{0, 6}}};  // vertex with the triangle
  EXPECT_FALSE(validate_field(v, l).ok);
}

TEST(VectorField, NonFacetIsInvalid) {
  auto l = circle_lattice();
  // Vertex 2 with edge {0,1} (id 3).
  DiscreteVectorField v{{{2, 3}}};
  EXPECT_FALSE(validate_field(v, l).ok);
}

TEST(VectorField, ClosedPathOnCircleIsNotGradient) {
  auto l = circle_lattice();
  // Edges: 3 = {0,1}, 4 = {0,2}, 5 = {1,2}; 0 -> {0,1} -> 1 -> {1,2} -> 2 -> {0,2} -> 0.
  DiscreteVectorField v{{{0, 3}, {1, 5}, {2, 4}}};
  EXPECT_TRUE(validate_field(v, l).ok);
  EXPECT_FALSE(is_gradient(v, l));
  EXPECT_THROW(morse_chain_complex(v, l), InvalidInput);
  DiscreteVectorField two{{{0, 3}, {1, 5}}};
  EXPECT_TRUE(is_gradient(two, l));
}

TEST(VectorField, EmptyIsGradient) {
  TorusSetup t;
  EXPECT_TRUE(is_gradient({}, t.l));
}

TEST(GradientPaths, TorusEdgeToVertex) {
  TorusSetup t;
  auto v = gradient_field_of(t.f, t.l);
  for (auto edge : {t.id(1, {1, 2}), t.id(1, {3, 4})}) {
    auto paths = enumerate_paths(v, t.l, edge, t.id(0, {0}));
    ASSERT_EQ(paths.size(), 2u);
    EXPECT_EQ(paths[0].sign + paths[1].sign, 0);
    EXPECT_EQ(incidence_index(v, t.l, edge, t.id(0, {0})), 0);
  }
}

TEST(GradientPaths, TorusSquareToEdges) {
  TorusSetup t;
  auto v = gradient_field_of(t.f, t.l);
  auto q = t.id(2, {5, 6, 7, 8});
  auto paths = enumerate_paths(v, t.l, q, t.id(1, {1, 2}));
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(paths[0].sign, -paths[1].sign);
  std::set<std::size_t> lengths{paths[0].cells.size(), paths[1].cells.size()};
  // One path crosses one square, the other five.
  EXPECT_EQ(lengths, (std::set<std::size_t>{4, 12}));
  for (const auto& p : paths) {
    EXPECT_EQ(p.cells.front(), q);
    EXPECT_EQ(p.cells.back(), t.id(1, {1, 2}));
  }
  EXPECT_EQ(incidence_index(v, t.l, q, t.id(1, {1, 2})), 0);
  EXPECT_EQ(incidence_index(v, t.l, q, t.id(1, {3, 4})), 0);
}

TEST(GradientPaths, DirectIncidence) {
  auto l = edge_lattice();
  auto paths = enumerate_paths({}, l, 2, 1);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].cells, (std::vector<CellId>{2, 1}));
  EXPECT_EQ(std::abs(paths[0].sign), 1);
  EXPECT_EQ(abs(incidence_index({}, l, 2, 0)), 1);
  EXPECT_EQ(incidence_index({}, l, 2, 0), -incidence_index({}, l, 2, 1));
}

TEST(GradientPaths, EndpointsMustBeCritical) {
  TorusSetup t;
  auto v = gradient_field_of(t.f, t.l);
  EXPECT_THROW(enumerate_paths(v, t.l, t.id(1, {0, 1}), t.id(0, {0})), InvalidInput);
  EXPECT_THROW(enumerate_paths(v, t.l, t.id(2, {5, 6, 7, 8}), t.id(0, {0})), InvalidInput);
}

TEST(MorseComplex, TorusBoundariesVanish) {
  TorusSetup t;
  auto mc = morse_chain_complex(gradient_field_of(t.f, t.l), t.l);
  EXPECT_EQ(mc.chain.ranks(), (std::vector<std::size_t>{1, 2, 1}));
  for (std::size_t i = 1; i <= mc.chain.boundary_count(); ++i) EXPECT_TRUE(mc.chain.boundary(static_cast<int>(i)).is_zero());
  EXPECT_EQ(format_homology(homology_groups(mc.chain)), "H_0 = Z\nH_1 = Z^2\nH_2 = Z\n");
}

TEST(MorseComplex, NoPairsReproducesSimplicialComplex) {
  auto k = generate_complex(std::vector<std::vector<Vertex>>{{0, 1, 2}});
  auto l = CellLattice::from_simplicial(k);
  auto mc = morse_chain_complex({}, l);
  auto c = chain_complex_from_simplicial(k);
  ASSERT_EQ(mc.chain.boundary_count(), c.boundary_count());
  for (int i = 1; i <= 2; ++i) EXPECT_EQ(mc.chain.boundary(i), c.boundary(i));
}

TEST(MorseComplex, DynamicProgramMatchesPathEnumeration) {
  for (const auto& name : {"torus", "klein", "rp2", "s3", "mobius"}) {
    auto e = *corpus_entry(name);
    auto l = std::visit(
        [](const auto& k) {
          if constexpr (std::is_same_v<std::decay_t<decltype(k)>, SimplicialComplex>) return CellLattice::from_simplicial(k);
          else return CellLattice::from_rcc(k);
        },
        e.complex);
    for (std::uint64_t seed : {1, 2, 3}) {
      auto v = greedy_matching(l, shuffled_priority(l, seed));
      auto mc = morse_chain_complex(v, l);
      for (int d = 1; d <= l.dim(); ++d) {
        const auto& m = mc.chain.boundary(d);
        const auto& rows = mc.critical[static_cast<std::size_t>(d - 1)];
        const auto& cols = mc.critical[static_cast<std::size_t>(d)];
        for (std::size_t r = 0; r < rows.size(); ++r)
          for (std::size_t c = 0; c < cols.size(); ++c)
            EXPECT_EQ(m(r, c), incidence_index(v, l, cols[c], rows[r])) << name << " seed " << seed;
      }
    }
  }
}

TEST(MorseComplex, KleinBottleTorsionFromField) {
  auto l = CellLattice::from_simplicial(klein_bottle_triangulation());
  auto v = greedy_matching(l);
  auto g = homology_groups(morse_chain_complex(v, l).chain);
  EXPECT_EQ(g[1].to_string(), "Z + Z/2");
  EXPECT_EQ(g[2].to_string(), "0");
}

TEST(Greedy, SingleEdgeCollapses) {
  auto l = edge_lattice();
  auto v = greedy_matching(l);
  EXPECT_EQ(counts(critical_cells(v, l), 1), (std::vector<std::size_t>{1, 0}));
}

TEST(Greedy, CircleLeavesOnePerDimension) {
  auto l = circle_lattice();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto v = greedy_matching(l, shuffled_priority(l, seed));
    EXPECT_TRUE(is_gradient(v, l));
    EXPECT_EQ(counts(critical_cells(v, l), 1), (std::vector<std::size_t>{1, 1}));
  }
}

TEST(Greedy, TorusAlternatingSumIsEuler) {
  TorusSetup t;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto v = greedy_matching(t.l, shuffled_priority(t.l, seed));
    ASSERT_TRUE(is_gradient(v, t.l));
    auto c = counts(critical_cells(v, t.l), 2);
    EXPECT_EQ(static_cast<long long>(c[0]) - static_cast<long long>(c[1]) + static_cast<long long>(c[2]), 0);
    EXPECT_GE(c[1], 2u);
  }
}

TEST(Greedy, ShuffledPriorityIsDeterministic) {
  TorusSetup t;
  EXPECT_EQ(shuffled_priority(t.l, 42), shuffled_priority(t.l, 42));
  EXPECT_NE(shuffled_priority(t.l, 42), shuffled_priority(t.l, 43));
}

TEST(MorseFunctionFromField, InducesTheSameField) {
  TorusSetup t;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto v = greedy_matching(t.l, shuffled_priority(t.l, seed));
    auto f = morse_function_from_field(v, t.l);
    ASSERT_TRUE(is_discrete_morse(f, t.l).ok);
    EXPECT_EQ(gradient_field_of(f, t.l), v);
  }
  auto back = morse_function_from_field(gradient_field_of(t.f, t.l), t.l);
  EXPECT_EQ(critical_cells(back, t.l), critical_cells(t.f, t.l));
}
