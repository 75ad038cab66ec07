#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "etcons/errors.hpp"
#include "etcons/graph.hpp"
#include "fixtures.hpp"
#include "graph_catalog.hpp"
#include "oracle.hpp"

namespace etcons {
namespace {

// Frozen from oracle::polynomial_eigenvalues on the four-agent example
// (see tests/oracle/freeze_constants.cpp).
constexpr double kNetworkFiedler = 3.1028980542335658;
constexpr double kNetworkNorm = 13.466876669075713;

template <class Fn>
ErrorKind error_kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an etcons::Error";
  return ErrorKind::InvalidConfig;
}

DenseMatrix random_connected_weights(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> weight(0.1, 5.0);
  std::bernoulli_distribution keep(0.5);
  DenseMatrix w(n);
  // Spanning path keeps it connected; extra edges at random.
  for (std::size_t i = 0; i + 1 < n; ++i) w(i, i + 1) = w(i + 1, i) = weight(rng);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 2; j < n; ++j)
      if (keep(rng)) w(i, j) = w(j, i) = weight(rng);
  return w;
}

TEST(BuildGraph, AcceptsNetwork) {
  const auto g = build_graph(testing::network_adjacency());
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g.neighbors(1), (std::vector<std::size_t>{0, 2, 3}));
  EXPECT_DOUBLE_EQ(g.degree(1), 9.8);
}

TEST(BuildGraph, AcceptsSingleEdge) {
  EXPECT_EQ(build_graph(testing::pair_adjacency()).size(), 2u);
}

TEST(BuildGraph, RejectsIsolatedAgent) {
  try {
    build_graph({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DisconnectedGraph);
    EXPECT_EQ(e.col(), 2u);
  }
}

TEST(BuildGraph, RejectsAsymmetricNegativeAndSelfLoops) {
  try {
    build_graph({{0, 1, 0}, {1, 0, 2}, {0, 2.5, 0}});
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AsymmetricWeights);
    EXPECT_EQ(e.row(), 1u);
    EXPECT_EQ(e.col(), 2u);
  }
  EXPECT_EQ(error_kind_of([] { build_graph({{0, -1}, {-1, 0}}); }), ErrorKind::NegativeWeight);
  EXPECT_EQ(error_kind_of([] { build_graph({{1, 1}, {1, 0}}); }), ErrorKind::NonzeroDiagonal);
  EXPECT_EQ(error_kind_of([] { build_graph({{0, 1e-17}, {1e-17, 0}}); }),
            ErrorKind::NegativeWeight);
  EXPECT_EQ(error_kind_of([] { build_graph(std::vector<std::vector<double>>{{0.0}}); }), ErrorKind::InvalidDimensions);
  EXPECT_EQ(error_kind_of([] { build_graph({{0, 1}, {1}}); }), ErrorKind::InvalidDimensions);
}

TEST(IsConnected, Examples) {
  EXPECT_TRUE(is_connected(build_graph(testing::network_adjacency())));
  EXPECT_TRUE(is_connected(DenseMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})));
  EXPECT_FALSE(is_connected(
      DenseMatrix::from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}})));
}

TEST(Laplacian, NetworkDiagonalAndRowSums) {
  const auto l = laplacian(build_graph(testing::network_adjacency()));
  const double diag[] = {3.4, 9.8, 3.2, 5.4};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(l.diagonal(i), diag[i], 1e-12);
    double row = 0.0;
    for (std::size_t j = 0; j < 4; ++j) row += l(i, j);
    EXPECT_LT(std::abs(row), 1e-12);
  }
  EXPECT_DOUBLE_EQ(l(1, 3), -4.3);
  EXPECT_DOUBLE_EQ(l.min_diagonal(), 3.2);
}

TEST(Laplacian, SmallTextbookCases) {
  EXPECT_EQ(laplacian(build_graph(testing::pair_adjacency())).matrix(),
            DenseMatrix::from_rows({{1, -1}, {-1, 1}}));
  EXPECT_EQ(laplacian(build_graph(testing::path3_adjacency())).matrix(),
            DenseMatrix::from_rows({{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}}));
}

TEST(Spectrum, KnownSpectra) {
  const auto pair = laplacian(build_graph(testing::pair_adjacency()));
  EXPECT_NEAR(fiedler_value(pair), 2.0, 1e-12);
  EXPECT_NEAR(spectral_norm(pair), 2.0, 1e-12);
  const auto path = laplacian(build_graph(testing::path3_adjacency()));
  EXPECT_NEAR(fiedler_value(path), 1.0, 1e-12);
  EXPECT_NEAR(spectral_norm(path), 3.0, 1e-12);
}

TEST(Spectrum, NetworkMatchesFrozenOracle) {
  const auto l = laplacian(build_graph(testing::network_adjacency()));
  EXPECT_NEAR(fiedler_value(l), kNetworkFiedler, 1e-10 * kNetworkFiedler);
  EXPECT_NEAR(spectral_norm(l), kNetworkNorm, 1e-10 * kNetworkNorm);
}

TEST(Spectrum, JacobiFailsWithoutSweepBudget) {
  const auto l = laplacian(build_graph(testing::network_adjacency()));
  EXPECT_EQ(error_kind_of([&] { symmetric_eigenvalues(l.matrix(), 0); }),
            ErrorKind::NumericalFailure);
}

TEST(Spectrum, AgreesWithPolynomialOracleOnRandomSmallGraphs) {
  std::mt19937_64 rng(20240607);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto l = laplacian(build_graph(random_connected_weights(n, rng)));
      const auto jac = symmetric_eigenvalues(l.matrix());
      const auto poly = oracle::polynomial_eigenvalues(l);
      ASSERT_EQ(poly.size(), n);
      EXPECT_NEAR(fiedler_value(l), poly[1], 1e-8);
      EXPECT_NEAR(spectral_norm(l), poly.back(), 1e-8);
      for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(jac[k], poly[k], 1e-8);
    }
  }
}

TEST(Spectrum, AgreesWithPolynomialOracleOnEveryUnitWeightTopology) {
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& a : testing::connected_topologies(n)) {
      const auto l = laplacian(build_graph(a));
      const auto jac = symmetric_eigenvalues(l.matrix());
      const auto poly = oracle::polynomial_eigenvalues(l);
      ASSERT_EQ(poly.size(), n);
      for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(jac[k], poly[k], 1e-8);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 1u + 4u + 38u + 728u);
}

TEST(Spectrum, LaplacianIsPsdAndBoundedBelowByFiedlerTimesKn) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss(0.0, 3.0);
  std::vector<DenseMatrix> graphs = {DenseMatrix::from_rows(testing::network_adjacency())};
  for (std::size_t n : {2, 3, 5, 8, 12}) graphs.push_back(random_connected_weights(n, rng));

  for (const auto& w : graphs) {
    const auto l = laplacian(build_graph(w));
    const double rho2 = fiedler_value(l);
    std::vector<double> z(l.size());
    for (int trial = 0; trial < 1000; ++trial) {
      for (auto& v : z) v = gauss(rng);
      const double lz = quadratic_form(l, z);
      EXPECT_GE(lz, -1e-12);
      EXPECT_LE(rho2 * deviation_form(z), lz * (1.0 + 1e-9) + 1e-12);
    }
    std::vector<double> constant(l.size(), 2.75);
    EXPECT_NEAR(quadratic_form(l, constant), 0.0, 1e-12);
  }
}

}  // namespace
}  // namespace etcons
