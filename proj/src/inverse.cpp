#include "netocc/inverse.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "netocc/errors.hpp"
#include "netocc/network.hpp"

namespace netocc {

namespace {

// Exhaustive definition check: some row subset R (proper, nonempty) whose
// common zero-column set has at least n - |R| members gives a forbidden
// p x q zero block with p + q = n.
bool fully_indecomposable_exhaustive(const Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    int rows = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) ++rows;
    int zero_cols = 0;
    for (int j = 0; j < n; ++j) {
      bool all_zero = true;
      for (int i = 0; i < n && all_zero; ++i)
        if ((mask & (1u << i)) && m(i, j) != 0.0) all_zero = false;
      if (all_zero) ++zero_cols;
    }
    if (zero_cols >= n - rows) return false;
  }
  return true;
}

bool kuhn_augment(const Eigen::MatrixXd& m, int row, std::vector<int>& match,
                  std::vector<char>& used) {
  const int n = static_cast<int>(m.cols());
  for (int j = 0; j < n; ++j) {
    if (m(row, j) != 0.0 && !used[j]) {
      used[j] = 1;
      if (match[j] < 0 || kuhn_augment(m, match[j], match, used)) {
        match[j] = row;
        return true;
      }
    }
  }
  return false;
}

// Full indecomposability == some column permutation puts a positive diagonal
// in place and the permuted pattern is irreducible.
bool fully_indecomposable_matching(const Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> match(n, -1);  // column -> row
  for (int i = 0; i < n; ++i) {
    std::vector<char> used(n, 0);
    if (!kuhn_augment(m, i, match, used)) return false;
  }
  Eigen::MatrixXd permuted(n, n);
  for (int j = 0; j < n; ++j) permuted.row(j) = m.row(match[j]);
  return is_irreducible(permuted);
}

}  // namespace

bool is_fully_indecomposable(const Eigen::MatrixXd& m, bool force_matching) {
  if (m.rows() != m.cols()) throw ModelError("matrix is not square");
  if ((m.array() < 0.0).any()) throw ModelError("matrix has negative entries");
  const int n = static_cast<int>(m.rows());
  if (n == 1) return m(0, 0) != 0.0;
  if (n <= 12 && !force_matching) return fully_indecomposable_exhaustive(m);
  return fully_indecomposable_matching(m);
}

Eigen::VectorXd solve_inverse(const Eigen::MatrixXd& m, double lambda,
                              double tol, int max_iter,
                              const Eigen::VectorXd* start) {
  if (!(lambda > 0.0)) throw ModelError("lambda must be positive");
  if (!m.isApprox(m.transpose(), 1e-12))
    throw ModelError("matrix must be symmetric");
  if (!is_fully_indecomposable(m))
    throw ModelError("matrix is not fully indecomposable; existence and "
                     "uniqueness of the reciprocal eigenvector fail");

  const int n = static_cast<int>(m.rows());
  Eigen::VectorXd x = start ? Eigen::VectorXd(start->cwiseAbs())
                            : Eigen::VectorXd::Constant(n, 1.0 / n).eval();
  if ((x.array() <= 0.0).any())
    throw ModelError("start vector must be strictly positive");

  double residual = 0.0;
  std::vector<double> history;
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXd mx = m * x;
    residual = (lambda * x.cwiseInverse() - mx).cwiseAbs().maxCoeff();
    if (residual <= tol) return x;
    if (history.size() < 8) history.push_back(residual);
    // Geometric-mean damping of x <- lambda / (M x); the raw map can
    // 2-cycle.
    x = (x.array() * (lambda / mx.array())).sqrt().matrix();
  }
  std::ostringstream oss;
  oss << "balancing iteration did not converge in " << max_iter
      << " iterations; residual " << residual << " (early residuals:";
  for (double r : history) oss << " " << r;
  oss << ")";
  throw ModelError(oss.str());
}

ScalingLawCheck scaling_law_check(const Eigen::MatrixXd& m, double lambda2,
                                  double tol) {
  Eigen::VectorXd base = solve_inverse(m, 1.0);
  Eigen::VectorXd scaled = solve_inverse(m, lambda2);
  double dev = (scaled - std::sqrt(lambda2) * base).cwiseAbs().maxCoeff();
  return {dev, dev <= tol};
}

}  // namespace netocc
