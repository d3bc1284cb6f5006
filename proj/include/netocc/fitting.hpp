#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>
#include <vector>

#include "netocc/network.hpp"

namespace netocc {

/// Observed occupancy vectors, optionally paired with forced-occupancy
/// vectors of the same shape.
struct SnapshotSet {
  std::vector<Eigen::VectorXd> snapshots;
  std::optional<std::vector<Eigen::VectorXd>> forced;

  int count() const { return static_cast<int>(snapshots.size()); }
  int dim() const;
  void validate() const;  // dimensions, nonnegativity, f <= x warnings
};

struct FitResult {
  Eigen::VectorXd w;
  std::optional<Eigen::VectorXd> f;  // joint mode only
  double residual_norm = 0.0;
  Eigen::VectorXd per_row_residuals;
  double r_squared = 0.0;
  bool constrained = false;
};

struct FitDiagnostics {
  double r_squared = 0.0;
  double rmse = 0.0;
  Eigen::VectorXd per_snapshot_residual;
  Eigen::VectorXd max_rel_error_per_node;
};

/// Stacks the per-snapshot blocks B diag(x_k) over x_k - f_k.
std::pair<Eigen::MatrixXd, Eigen::VectorXd> stack_known_f(
    const Eigen::MatrixXd& b, const SnapshotSet& snaps);

FitResult fit_weights_known_f(const Eigen::MatrixXd& b,
                              const SnapshotSet& snaps, bool constrained);

/// Joint estimation of weights and a constant forced-occupancy vector from
/// blocks [B diag(x_k) | I].
FitResult fit_joint(const Eigen::MatrixXd& b, const SnapshotSet& snaps,
                    bool constrained);

FitDiagnostics goodness_of_fit(const FitResult& fit, const Eigen::MatrixXd& b,
                               const SnapshotSet& snaps);

/// Lawson-Hanson active-set nonnegative least squares.
Eigen::VectorXd nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                     int max_iter = 0);

}  // namespace netocc
