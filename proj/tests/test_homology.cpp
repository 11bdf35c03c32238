#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "topo/chain_complex.hpp"
#include "topo/corpus.hpp"
#include "topo/lattice.hpp"

using namespace topo;

namespace {

std::vector<oracle::Face> faces_of(const SimplicialComplex& k) {
  std::vector<oracle::Face> out;
  for (const Simplex& s : k.maximal_simplices()) out.push_back(s.vertices());
  return out;
}

std::vector<std::size_t> bettis(const std::vector<HomologyGroup>& g) {
  std::vector<std::size_t> b;
  for (const auto& h : g) b.push_back(h.betti);
  return b;
}

}  // namespace

TEST(ChainComplex, TriangleBoundaryColumn) {
  auto c = chain_complex_from_simplicial(generate_complex(std::vector<std::vector<Vertex>>{{0, 1, 2}}));
  const auto& d2 = c.boundary(2);
  ASSERT_EQ(d2.rows(), 3u);
  ASSERT_EQ(d2.cols(), 1u);
  // Rows {0,1}, {0,2}, {1,2}.
  EXPECT_EQ(d2(0, 0), 1);
  EXPECT_EQ(d2(1, 0), -1);
  EXPECT_EQ(d2(2, 0), 1);
  EXPECT_EQ(c.basis()[1], (std::vector<std::string>{"{0,1}", "{0,2}", "{1,2}"}));
}

TEST(ChainComplex, SingleVertex) {
  auto c = chain_complex_from_simplicial(generate_complex(std::vector<std::vector<Vertex>>{{4}}));
  EXPECT_EQ(c.boundary_count(), 0u);
  EXPECT_EQ(c.rank(0), 1u);
  EXPECT_TRUE(verify_chain_complex(c).ok);
}

TEST(ChainComplex, TorusComposesToZero) {
  auto c = chain_complex_from_simplicial(torus_triangulation());
  EXPECT_TRUE((c.boundary(1) * c.boundary(2)).is_zero());
  EXPECT_TRUE(verify_chain_complex(c).ok);
}

TEST(ChainComplex, MatchesOracleBoundaryMatrices) {
  auto k = klein_bottle_triangulation();
  auto c = chain_complex_from_simplicial(k);
  auto faces = oracle::closure(faces_of(k));
  for (int d = 1; d <= 2; ++d) {
    auto ref = oracle::boundary_matrix(faces, static_cast<std::size_t>(d));
    const auto& m = c.boundary(d);
    ASSERT_EQ(m.rows(), ref.size());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t j = 0; j < m.cols(); ++j) EXPECT_EQ(m(r, j), ref[r][j]);
  }
}

TEST(VerifyChain, DetectsNonZeroProduct) {
  auto c = ChainComplex::from_matrices({IntegerMatrix{{1, 1}}, IntegerMatrix{{1}, {1}}});
  auto check = verify_chain_complex(c);
  EXPECT_FALSE(check.ok);
  EXPECT_EQ(check.failing_dim, 1);
  EXPECT_EQ(check.product, (IntegerMatrix{{2}}));
  EXPECT_THROW(homology_groups(c), InvalidInput);
}

TEST(VerifyChain, EmptyIsFine) { EXPECT_TRUE(verify_chain_complex(ChainComplex::from_matrices({})).ok); }

TEST(VerifyChain, ShapeMismatch) {
  auto c = ChainComplex::from_matrices({IntegerMatrix(2, 3), IntegerMatrix(2, 1)});
  EXPECT_THROW(verify_chain_complex(c), StructuralError);
}

TEST(Homology, Torus) {
  auto g = homology_groups(chain_complex_from_simplicial(torus_triangulation()));
  EXPECT_EQ(format_homology(g), "H_0 = Z\nH_1 = Z^2\nH_2 = Z\n");
  EXPECT_EQ(euler_from_homology(g), 0);
}

TEST(Homology, TorusCellComplexViaTriangulation) {
  auto g = homology_groups(chain_complex_from_rcc(torus_rcc()));
  EXPECT_EQ(bettis(g), (std::vector<std::size_t>{1, 2, 1}));
  auto cellular = homology_groups(cellular_chain_complex(CellLattice::from_rcc(torus_rcc())));
  EXPECT_EQ(bettis(cellular), (std::vector<std::size_t>{1, 2, 1}));
}

TEST(Homology, S3) {
  auto g = homology_groups(chain_complex_from_rcc(s3_rcc()));
  EXPECT_EQ(bettis(g), (std::vector<std::size_t>{1, 0, 0, 1}));
  for (const auto& h : g) EXPECT_TRUE(h.torsion.empty());
  EXPECT_EQ(euler_from_homology(g), 0);
}

TEST(Homology, SingleCell) {
  RegularCWComplex x;
  x.add_cell(0, 0, {});
  auto g = homology_groups(chain_complex_from_rcc(x));
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0].to_string(), "Z");
  EXPECT_EQ(euler_from_homology(g), 1);
}

TEST(Homology, KleinBottleTorsion) {
  auto g = homology_groups(chain_complex_from_simplicial(klein_bottle_triangulation()));
  EXPECT_EQ(g[1].betti, 1u);
  EXPECT_EQ(g[1].torsion, (std::vector<BigInt>{2}));
  EXPECT_EQ(g[1].to_string(), "Z + Z/2");
  EXPECT_TRUE(g[2].is_trivial());
}

TEST(Homology, KleinBottleModPOracle) {
  auto faces = oracle::closure(faces_of(klein_bottle_triangulation()));
  // Z + Z/2 in degree 1 and 0 in degree 2: over Z/2 both jump by one.
  EXPECT_EQ(oracle::betti_mod(faces, 2), (std::vector<std::size_t>{1, 2, 1}));
  for (std::int64_t p : {3, 5, 7, 1000000007}) EXPECT_EQ(oracle::betti_mod(faces, p), (std::vector<std::size_t>{1, 1, 0}));
}

TEST(Homology, ProjectivePlane) {
  auto g = homology_groups(chain_complex_from_simplicial(projective_plane_triangulation()));
  EXPECT_EQ(format_homology(g), "H_0 = Z\nH_1 = Z/2\nH_2 = 0\n");
}

TEST(Homology, Contractible) {
  auto g = homology_groups(chain_complex_from_simplicial(generate_complex(std::vector<std::vector<Vertex>>{{0, 1, 2}})));
  EXPECT_EQ(bettis(g), (std::vector<std::size_t>{1, 0, 0}));
}

TEST(Homology, EulerFromHomologyMatchesCounts) {
  EXPECT_EQ(euler_from_homology(homology_groups(chain_complex_from_rcc(s3_rcc()))), 0);
  EXPECT_EQ(euler_from_homology({HomologyGroup{1, {}}}), 1);
}

TEST(Homology, RandomComplexesAgainstModPOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::vector<Vertex>> g;
    std::vector<oracle::Face> og;
    int n = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) {
      std::vector<Vertex> s;
      for (Vertex v = 0; v < 7; ++v)
        if (rng() % 3 == 0) s.push_back(v);
      if (s.empty()) s.push_back(static_cast<Vertex>(rng() % 7));
      g.push_back(s);
      og.push_back(s);
    }
    auto k = generate_complex(g);
    auto groups = homology_groups(chain_complex_from_simplicial(k));
    auto faces = oracle::closure(og);
    EXPECT_EQ(bettis(groups), oracle::betti_mod(faces, 1000000007));
    EXPECT_EQ(euler_from_homology(groups), euler_characteristic(k));
  }
}

TEST(HomologyGroup, Strings) {
  EXPECT_EQ((HomologyGroup{2, {2}}).to_string(), "Z^2 + Z/2");
  EXPECT_EQ((HomologyGroup{0, {}}).to_string(), "0");
  EXPECT_EQ((HomologyGroup{0, {2, 4}}).to_string(), "Z/2 + Z/4");
}
