#pragma once

#include <Eigen/Dense>

namespace netocc {

/// True iff the nonnegative square matrix has no p x q zero submatrix with
/// p + q = n. Exhaustive enumeration for n <= 12; bipartite matching plus
/// irreducibility of the matched pattern beyond.
bool is_fully_indecomposable(const Eigen::MatrixXd& m,
                             bool force_matching = false);

/// Unique positive x with lambda / x_i = (M x)_i for all i, for symmetric
/// nonnegative fully indecomposable M. Geometric-mean damped fixed point.
Eigen::VectorXd solve_inverse(const Eigen::MatrixXd& m, double lambda,
                              double tol = 1e-12, int max_iter = 100000,
                              const Eigen::VectorXd* start = nullptr);

struct ScalingLawCheck {
  double max_deviation;  // || solve(lambda) - sqrt(lambda) solve(1) ||_inf
  bool ok;
};

ScalingLawCheck scaling_law_check(const Eigen::MatrixXd& m, double lambda2,
                                  double tol = 1e-9);

}  // namespace netocc
