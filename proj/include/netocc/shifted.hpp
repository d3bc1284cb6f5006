#pragma once

#include <Eigen/Dense>
#include <string>

#include "netocc/network.hpp"

namespace netocc {

enum class Feasibility {
  UniquePositive,   // rho < 1, f != 0
  EigenvectorCase,  // rho = 1, f = 0
  Infeasible,       // rho = 1, f != 0
  Supercritical,    // rho > 1
};

std::string to_string(Feasibility f);

struct Verdict {
  Feasibility feasibility;
  double rho;
};

// |rho - 1| below this band is treated as rho == 1.
inline constexpr double kRhoBand = 1e-9;

Verdict classify(const Eigen::MatrixXd& m, const Eigen::VectorXd& f);

/// Unique solution of x = M x + f for rho(M) < 1, f >= 0, f != 0.
Eigen::VectorXd solve_shifted(const Eigen::MatrixXd& m,
                              const Eigen::VectorXd& f,
                              double tol = 1e-10);

struct Calibration {
  double mu;
  Eigen::VectorXd x;
};

/// Finds mu in (0, 1/rho(B diag(w))) such that x = mu B diag(w) x + f has
/// total occupancy sum(x) == total.
Calibration calibrate_mu(const Eigen::MatrixXd& b, const Eigen::VectorXd& w,
                         const Eigen::VectorXd& f, double total,
                         double rel_tol = 1e-10);

/// Calibrated shifted occupancy model x = mu B diag(w) x + f with 1x = total.
struct ShiftedModel {
  Eigen::MatrixXd b;       // constant symmetric structural factor
  Eigen::VectorXd w;       // positive node weights (diagonal of W)
  Eigen::VectorXd f;       // forced occupancy, nonnegative nontrivial
  double total = 0.0;      // prescribed sum of x
  double mu = 0.0;         // calibrated scaling
  Eigen::VectorXd x;       // base solution at the calibrated mu
};

ShiftedModel make_shifted_model(const Eigen::MatrixXd& b,
                                const Eigen::VectorXd& w,
                                const Eigen::VectorXd& f, double total);

}  // namespace netocc
