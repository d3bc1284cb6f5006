#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "netocc/spectral.hpp"

using namespace netocc;
namespace nt = netocc::testing;

TEST_CASE("P3 adjacency eigenpair: lambda = sqrt(2), x ~ [1, sqrt(2), 1]") {
  PerronPair pair = perron_pair(nt::p3_adjacency());
  CHECK(pair.lambda == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  Eigen::VectorXd x = pair.right / pair.right(0);
  CHECK(x(1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(x(2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pair.residual <= kDefaultEigTol);
}

TEST_CASE("weighted toy matrix: lambda = 1, right ~ [1,3,1], left ~ [2,1,1]") {
  // Characteristic polynomial of A(P3) diag(2,1/3,1) is -t^3 + t, so the
  // dominant root is exactly 1; Mx = x and uM = u checked directly.
  Eigen::MatrixXd m = nt::p3_adjacency() * nt::toy_weights().asDiagonal();
  PerronPair pair = perron_pair(m);
  CHECK(pair.lambda == doctest::Approx(1.0).epsilon(1e-12));
  Eigen::VectorXd r = pair.right / pair.right(0);
  CHECK(r(1) == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(r(2) == doctest::Approx(1.0).epsilon(1e-10));
  Eigen::VectorXd l = pair.left / pair.left(2);
  CHECK(l(0) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(l(1) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(pair.left.dot(pair.right) - 1.0) <= 1e-12);
  CHECK((m * pair.right - pair.right).cwiseAbs().maxCoeff() <= 1e-11);
  CHECK((pair.left.transpose() * m - pair.left.transpose())
            .cwiseAbs()
            .maxCoeff() <= 1e-11);
}

TEST_CASE("symmetric 2x2 with entries 2") {
  Eigen::MatrixXd m(2, 2);
  m << 0, 2, 2, 0;
  PerronPair pair = perron_pair(m);
  CHECK(pair.lambda == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(pair.right(0) == doctest::Approx(pair.right(1)).epsilon(1e-12));
}

TEST_CASE("reducible input is rejected") {
  Eigen::MatrixXd m(2, 2);
  m << 0, 1, 0, 0;
  CHECK_THROWS_AS(perron_pair(m), ModelError);
}

TEST_CASE("spectral_radius fixtures") {
  CHECK(spectral_radius(nt::p3_adjacency()) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  Eigen::MatrixXd m =
      0.6 * nt::p3_adjacency() * nt::toy_weights().asDiagonal();
  CHECK(spectral_radius(m) == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("normalize_to_unit_radius") {
  auto a = build_adjacency(nt::p3());
  SUBCASE("unit weights divide by sqrt(2)") {
    auto m = normalize_to_unit_radius(a, Eigen::VectorXd::Ones(3));
    CHECK(m.perron_scale == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(m.m.isApprox(a.m / std::sqrt(2.0), 1e-10));
    CHECK(spectral_radius(m.m) == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("toy weights already have radius 1") {
    auto m = normalize_to_unit_radius(a, nt::toy_weights());
    CHECK(m.perron_scale == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(m.m.isApprox(a.m * nt::toy_weights().asDiagonal(), 1e-10));
  }
}

TEST_CASE("eigen_centrality fixtures") {
  SUBCASE("P3 adjacency scaled to 2 + sqrt(2)") {
    Eigen::VectorXd x = eigen_centrality(nt::p3(), MatrixKind::Adjacency,
                                         std::nullopt, 2.0 + std::sqrt(2.0));
    CHECK(x(0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(x(1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
    CHECK(x(2) == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("toy weights and N = 500") {
    Eigen::VectorXd x = eigen_centrality(nt::p3(), MatrixKind::Adjacency,
                                         nt::toy_weights(), 500.0);
    CHECK(x(0) == doctest::Approx(100.0).epsilon(1e-10));
    CHECK(x(1) == doctest::Approx(300.0).epsilon(1e-10));
    CHECK(x(2) == doctest::Approx(100.0).epsilon(1e-10));
  }
  SUBCASE("K2 splits evenly") {
    Eigen::VectorXd x = eigen_centrality(nt::k2(), MatrixKind::Harmonic);
    CHECK(x(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(x(1) == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("spectral properties on random instances") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + trial % 5;
    Eigen::MatrixXd m = nt::random_symmetric_irreducible(rng, n);
    PerronPair pair = perron_pair(m);

    // Positivity and residual contracts.
    CHECK((pair.right.array() > 0.0).all());
    CHECK((pair.left.array() > 0.0).all());
    CHECK(pair.residual <= kDefaultEigTol);

    // Uniqueness up to scale: a different start agrees after 1x = 1.
    Eigen::VectorXd alt_start = nt::random_positive(rng, n);
    PerronPair pair2 = perron_pair(m, kDefaultEigTol, kDefaultEigMaxIter,
                                   alt_start);
    CHECK((pair.right - pair2.right).cwiseAbs().maxCoeff() <=
          10 * kDefaultEigTol);

    // Symmetric matrix: left and right coincide up to scale.
    Eigen::VectorXd l = pair.left / pair.left.sum();
    CHECK((l - pair.right).cwiseAbs().maxCoeff() <= 1e-9);

    // Scaling law: c M has radius c rho(M), eigenvector unchanged.
    double c = 0.25 + trial % 3;
    PerronPair scaled = perron_pair(c * m);
    CHECK(scaled.lambda == doctest::Approx(c * pair.lambda).epsilon(1e-9));
    CHECK((scaled.right - pair.right).cwiseAbs().maxCoeff() <= 1e-9);
  }
}
