#pragma once

#include <Eigen/Dense>
#include <optional>

#include "netocc/network.hpp"

namespace netocc {

/// Dominant eigenpair of a nonnegative irreducible matrix.
/// right is scaled so its entries sum to 1; left so that left.dot(right) == 1
/// when biorthonormalized.
struct PerronPair {
  double lambda = 0.0;
  Eigen::VectorXd right;
  Eigen::VectorXd left;  // row vector stored as a column
  bool biorthonormalized = false;
  double residual = 0.0;  // max-norm of M x - lambda x
};

inline constexpr double kDefaultEigTol = 1e-12;
inline constexpr int kDefaultEigMaxIter = 100000;

PerronPair perron_pair(const Eigen::MatrixXd& m,
                       double tol = kDefaultEigTol,
                       int max_iter = kDefaultEigMaxIter,
                       std::optional<Eigen::VectorXd> start = std::nullopt);

double spectral_radius(const Eigen::MatrixXd& m,
                       double tol = kDefaultEigTol,
                       int max_iter = kDefaultEigMaxIter);

/// Returns (1/lambda) B diag(w) so the result has spectral radius 1;
/// lambda is recorded in the perron_scale field.
RelationshipMatrix normalize_to_unit_radius(const RelationshipMatrix& base,
                                            const Eigen::VectorXd& w);

/// Dominant eigenvector of the selected relationship matrix, scaled so the
/// entries sum to `total`. Hop-count distances feed the harmonic and gravity
/// kinds.
Eigen::VectorXd eigen_centrality(
    const UrbanNetwork& net, MatrixKind kind,
    std::optional<Eigen::VectorXd> weights = std::nullopt,
    double total = 1.0);

}  // namespace netocc
