#include "netocc/spectral.hpp"

#include <cmath>
#include <sstream>

#include "netocc/errors.hpp"

namespace netocc {

namespace {

// Power iteration on M + I. The unit shift makes periodic (e.g. bipartite
// adjacency) patterns primitive without moving the eigenvectors.
Eigen::VectorXd dominant_vector(const Eigen::MatrixXd& m, double tol,
                                int max_iter, const Eigen::VectorXd& start,
                                double* lambda_out, double* residual_out) {
  const int n = static_cast<int>(m.rows());
  Eigen::VectorXd x = start.cwiseAbs();
  double s = x.sum();
  if (!(s > 0.0)) throw ModelError("start vector must be nontrivial");
  x /= s;

  double lambda = 0.0;
  double residual = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXd y = m * x + x;
    double total = y.sum();
    x = y / total;
    lambda = total - 1.0;
    residual = (m * x - lambda * x).cwiseAbs().maxCoeff();
    if (residual <= tol) {
      if (lambda_out) *lambda_out = lambda;
      if (residual_out) *residual_out = residual;
      return x;
    }
  }
  std::ostringstream oss;
  oss << "power iteration did not converge in " << max_iter
      << " iterations (last residual " << residual << ")";
  throw ModelError(oss.str());
}

}  // namespace

PerronPair perron_pair(const Eigen::MatrixXd& m, double tol, int max_iter,
                       std::optional<Eigen::VectorXd> start) {
  if (m.rows() != m.cols()) throw ModelError("matrix is not square");
  if ((m.array() < 0.0).any()) throw ModelError("matrix has negative entries");
  if (!is_irreducible(m))
    throw ModelError("matrix is reducible; the dominant eigenpair is not "
                     "guaranteed simple and positive");

  const int n = static_cast<int>(m.rows());
  Eigen::VectorXd x0 =
      start ? *start : Eigen::VectorXd::Constant(n, 1.0 / n);

  PerronPair pair;
  pair.right = dominant_vector(m, tol, max_iter, x0, &pair.lambda,
                               &pair.residual);
  double left_lambda = 0.0;
  pair.left = dominant_vector(m.transpose(), tol, max_iter, x0, &left_lambda,
                              nullptr);
  pair.left /= pair.left.dot(pair.right);
  pair.biorthonormalized = true;
  return pair;
}

double spectral_radius(const Eigen::MatrixXd& m, double tol, int max_iter) {
  if (m.rows() != m.cols()) throw ModelError("matrix is not square");
  const int n = static_cast<int>(m.rows());
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / n);
  double lambda = 0.0, residual = 0.0;
  if ((m.array() < 0.0).any()) throw ModelError("matrix has negative entries");
  if (!is_irreducible(m)) throw ModelError("matrix is reducible");
  dominant_vector(m, tol, max_iter, x, &lambda, &residual);
  return lambda;
}

RelationshipMatrix normalize_to_unit_radius(const RelationshipMatrix& base,
                                            const Eigen::VectorXd& w) {
  RelationshipMatrix weighted = apply_weights(base, w);
  double lambda = spectral_radius(weighted.m);
  RelationshipMatrix out;
  out.m = weighted.m / lambda;
  out.kind = MatrixKind::Scaled;
  out.symmetric = weighted.symmetric;
  out.perron_scale = lambda;
  return out;
}

Eigen::VectorXd eigen_centrality(const UrbanNetwork& net, MatrixKind kind,
                                 std::optional<Eigen::VectorXd> weights,
                                 double total) {
  if (!(total > 0.0)) throw ModelError("total occupancy must be positive");
  RelationshipMatrix b;
  switch (kind) {
    case MatrixKind::Adjacency:
      b = build_adjacency(net);
      break;
    case MatrixKind::Harmonic:
      b = build_harmonic(shortest_path_distances(net, false));
      break;
    case MatrixKind::Gravity:
      b = build_gravity(shortest_path_distances(net, false));
      break;
    default:
      throw ModelError("eigen_centrality expects adjacency, harmonic or "
                       "gravity kind");
  }
  Eigen::MatrixXd m =
      weights ? apply_weights(b, *weights).m : b.m;
  PerronPair pair = perron_pair(m);
  return pair.right * total;  // right already sums to 1
}

}  // namespace netocc
