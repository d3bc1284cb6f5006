#include "netocc/fitting.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

namespace netocc {

int SnapshotSet::dim() const {
  return snapshots.empty() ? 0 : static_cast<int>(snapshots.front().size());
}

void SnapshotSet::validate() const {
  if (snapshots.empty()) throw IngestError("snapshot set is empty");
  const int n = dim();
  for (int k = 0; k < count(); ++k) {
    if (snapshots[k].size() != n)
      throw IngestError("snapshot " + std::to_string(k + 1) +
                        " has inconsistent dimension");
    if ((snapshots[k].array() < 0.0).any())
      throw IngestError("snapshot " + std::to_string(k + 1) +
                        " has negative occupancy");
  }
  if (forced) {
    if (static_cast<int>(forced->size()) != count())
      throw IngestError("forced vector count does not match snapshot count");
    for (int k = 0; k < count(); ++k) {
      if ((*forced)[k].size() != n)
        throw IngestError("forced vector " + std::to_string(k + 1) +
                          " has inconsistent dimension");
      if (((*forced)[k].array() < 0.0).any())
        throw IngestError("forced vector " + std::to_string(k + 1) +
                          " has negative entries");
      // Forced occupants are a subpopulation; noise can break this, so warn.
      for (int i = 0; i < n; ++i) {
        if ((*forced)[k](i) > snapshots[k](i)) {
          std::cerr << "warning: forced occupancy exceeds total occupancy at "
                       "snapshot "
                    << k + 1 << ", node " << i + 1 << "\n";
        }
      }
    }
  }
}

std::pair<Eigen::MatrixXd, Eigen::VectorXd> stack_known_f(
    const Eigen::MatrixXd& b, const SnapshotSet& snaps) {
  snaps.validate();
  if (!snaps.forced)
    throw IngestError("known-f stacking requires forced-occupancy vectors");
  const int n = snaps.dim();
  if (b.rows() != n || b.cols() != n)
    throw IngestError("matrix dimension does not match snapshots");
  const int count = snaps.count();
  Eigen::MatrixXd design(count * n, n);
  Eigen::VectorXd rhs(count * n);
  for (int k = 0; k < count; ++k) {
    design.middleRows(k * n, n) = b * snaps.snapshots[k].asDiagonal();
    rhs.segment(k * n, n) = snaps.snapshots[k] - (*snaps.forced)[k];
  }
  return {design, rhs};
}

namespace {

void check_identifiable(const Eigen::MatrixXd& design, int n_weights) {
  double scale = design.norm();
  std::vector<int> dead;
  for (int j = 0; j < n_weights; ++j) {
    if (design.col(j).norm() < 1e-12 * scale) dead.push_back(j);
  }
  if (!dead.empty()) {
    std::ostringstream oss;
    oss << "unidentifiable weights (nodes never observed occupied by "
           "neighbors): ";
    for (size_t i = 0; i < dead.size(); ++i)
      oss << (i ? ", " : "") << "w" << dead[i] + 1;
    throw FitError(oss.str());
  }
}

double r_squared_of(const Eigen::VectorXd& rhs,
                    const Eigen::VectorXd& residual) {
  double mean = rhs.mean();
  double ss_tot = (rhs.array() - mean).square().sum();
  double ss_res = residual.squaredNorm();
  if (ss_tot == 0.0) return ss_res == 0.0 ? 1.0 : 0.0;
  return 1.0 - ss_res / ss_tot;
}

FitResult finish_fit(const Eigen::MatrixXd& design, const Eigen::VectorXd& rhs,
                     const Eigen::VectorXd& theta, int n_weights,
                     bool constrained) {
  FitResult out;
  out.w = theta.head(n_weights);
  if (theta.size() > n_weights) out.f = theta.tail(theta.size() - n_weights);
  out.per_row_residuals = design * theta - rhs;
  out.residual_norm = out.per_row_residuals.norm();
  out.r_squared = r_squared_of(rhs, out.per_row_residuals);
  out.constrained = constrained;
  return out;
}

}  // namespace

Eigen::VectorXd nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                     int max_iter) {
  const int n = static_cast<int>(a.cols());
  if (max_iter <= 0) max_iter = 3 * n + 30;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  std::vector<bool> passive(n, false);
  const double tol = 1e-10 * a.norm() * std::max(1.0, b.norm());

  for (int outer = 0; outer < max_iter; ++outer) {
    Eigen::VectorXd grad = a.transpose() * (b - a * x);
    int best = -1;
    double best_val = tol;
    for (int j = 0; j < n; ++j) {
      if (!passive[j] && grad(j) > best_val) {
        best_val = grad(j);
        best = j;
      }
    }
    if (best < 0) break;
    passive[best] = true;

    for (int inner = 0; inner < max_iter; ++inner) {
      std::vector<int> p;
      for (int j = 0; j < n; ++j)
        if (passive[j]) p.push_back(j);
      Eigen::MatrixXd ap(a.rows(), p.size());
      for (size_t c = 0; c < p.size(); ++c) ap.col(c) = a.col(p[c]);
      Eigen::VectorXd z = ap.colPivHouseholderQr().solve(b);

      bool all_positive = true;
      for (size_t c = 0; c < p.size(); ++c)
        if (z(c) <= 0.0) all_positive = false;
      if (all_positive) {
        x.setZero();
        for (size_t c = 0; c < p.size(); ++c) x(p[c]) = z(c);
        break;
      }
      double alpha = 1.0;
      for (size_t c = 0; c < p.size(); ++c) {
        if (z(c) <= 0.0) {
          double step = x(p[c]) / (x(p[c]) - z(c));
          alpha = std::min(alpha, step);
        }
      }
      for (size_t c = 0; c < p.size(); ++c) {
        double v = x(p[c]) + alpha * (z(c) - x(p[c]));
        x(p[c]) = v;
        if (v <= 1e-14) {
          x(p[c]) = 0.0;
          passive[p[c]] = false;
        }
      }
    }
  }
  return x;
}

FitResult fit_weights_known_f(const Eigen::MatrixXd& b,
                              const SnapshotSet& snaps, bool constrained) {
  auto [design, rhs] = stack_known_f(b, snaps);
  check_identifiable(design, static_cast<int>(design.cols()));
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < design.cols())
    throw FitError("stacked design is rank deficient; weights are not "
                   "jointly identifiable");
  Eigen::VectorXd theta =
      constrained ? nnls(design, rhs) : Eigen::VectorXd(qr.solve(rhs));
  return finish_fit(design, rhs, theta, static_cast<int>(design.cols()),
                    constrained);
}

FitResult fit_joint(const Eigen::MatrixXd& b, const SnapshotSet& snaps,
                    bool constrained) {
  snaps.validate();
  const int n = snaps.dim();
  if (b.rows() != n || b.cols() != n)
    throw IngestError("matrix dimension does not match snapshots");
  const int count = snaps.count();
  if (count < 2)
    std::cerr << "warning: a single snapshot makes the joint system "
                 "trivially interpolating\n";

  Eigen::MatrixXd design(count * n, 2 * n);
  Eigen::VectorXd rhs(count * n);
  for (int k = 0; k < count; ++k) {
    design.block(k * n, 0, n, n) = b * snaps.snapshots[k].asDiagonal();
    design.block(k * n, n, n, n) = Eigen::MatrixXd::Identity(n, n);
    rhs.segment(k * n, n) = snaps.snapshots[k];
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (count >= 2 && qr.rank() < design.cols())
    throw FitError("joint design is rank deficient (snapshots too similar "
                   "to separate weights from forced occupancy)");
  Eigen::VectorXd theta =
      constrained ? nnls(design, rhs) : Eigen::VectorXd(qr.solve(rhs));
  return finish_fit(design, rhs, theta, n, constrained);
}

FitDiagnostics goodness_of_fit(const FitResult& fit, const Eigen::MatrixXd& b,
                               const SnapshotSet& snaps) {
  const int n = snaps.dim();
  const int count = snaps.count();
  FitDiagnostics diag;
  diag.per_snapshot_residual.resize(count);
  diag.max_rel_error_per_node = Eigen::VectorXd::Zero(n);

  Eigen::VectorXd all_res(count * n);
  Eigen::VectorXd all_rhs(count * n);
  for (int k = 0; k < count; ++k) {
    Eigen::VectorXd pred = b * snaps.snapshots[k].asDiagonal() * fit.w;
    Eigen::VectorXd target = snaps.snapshots[k];
    if (fit.f)
      pred += *fit.f;
    else if (snaps.forced)
      target -= (*snaps.forced)[k];
    Eigen::VectorXd res = pred - target;
    diag.per_snapshot_residual(k) = res.norm();
    all_res.segment(k * n, n) = res;
    all_rhs.segment(k * n, n) = target;
    for (int i = 0; i < n; ++i) {
      double denom = std::max(std::abs(target(i)), 1e-12);
      diag.max_rel_error_per_node(i) =
          std::max(diag.max_rel_error_per_node(i), std::abs(res(i)) / denom);
    }
  }
  diag.rmse = std::sqrt(all_res.squaredNorm() / (count * n));
  double mean = all_rhs.mean();
  double ss_tot = (all_rhs.array() - mean).square().sum();
  diag.r_squared =
      ss_tot == 0.0 ? (all_res.isZero(0.0) ? 1.0 : 0.0)
                    : 1.0 - all_res.squaredNorm() / ss_tot;
  return diag;
}

}  // namespace netocc
