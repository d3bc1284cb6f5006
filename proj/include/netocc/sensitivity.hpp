#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "netocc/shifted.hpp"
#include "netocc/spectral.hpp"

namespace netocc {

enum class ParamKind { Weight, Shift };

struct Parameter {
  ParamKind kind;
  int index;  // node index
};

std::string to_string(const Parameter& p);

/// Derivative of the dominant eigenvalue of B diag(w) with respect to w_i,
/// given the biorthonormalized eigenpair (u x = 1).
double lambda_prime(const Eigen::MatrixXd& b, const Eigen::VectorXd& w, int i,
                    const PerronPair& pair);

/// Derivative of the eigenvector-model occupancy x (sum held at `total`)
/// with respect to weight w_i. B must be symmetric.
Eigen::VectorXd derivative_unshifted(const Eigen::MatrixXd& b,
                                     const Eigen::VectorXd& w, int i,
                                     double total);

/// Derivative of the calibrated shifted-model occupancy with respect to the
/// given weight or forced-occupancy parameter.
Eigen::VectorXd derivative_shifted(const ShiftedModel& model,
                                   const Parameter& param);

/// Entrywise x'_i * t0 / x_i.
Eigen::VectorXd elasticity(const Eigen::VectorXd& x,
                           const Eigen::VectorXd& x_prime, double t0);

struct SensitivityReport {
  Eigen::VectorXd base_x;
  Eigen::MatrixXd derivatives;   // n x p, column per parameter
  Eigen::MatrixXd elasticities;  // n x p
  std::vector<double> rate;      // lambda' (unshifted) per parameter
  std::vector<Parameter> params;
  double total = 0.0;
};

SensitivityReport full_report_unshifted(const Eigen::MatrixXd& b,
                                        const Eigen::VectorXd& w, double total,
                                        const std::vector<Parameter>& params);

SensitivityReport full_report_shifted(const ShiftedModel& model,
                                      const std::vector<Parameter>& params);

/// Central finite differences with re-normalization (1x = total) at each
/// evaluation; the test oracle for both analytic routes.
Eigen::VectorXd finite_difference_unshifted(const Eigen::MatrixXd& b,
                                            const Eigen::VectorXd& w, int i,
                                            double total, double h);

Eigen::VectorXd finite_difference_shifted(const ShiftedModel& model,
                                          const Parameter& param, double h);

}  // namespace netocc
