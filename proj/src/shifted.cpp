#include "netocc/shifted.hpp"

#include <cmath>
#include <sstream>

#include "netocc/spectral.hpp"

namespace netocc {

std::string to_string(Feasibility f) {
  switch (f) {
    case Feasibility::UniquePositive:
      return "UNIQUE_POSITIVE";
    case Feasibility::EigenvectorCase:
      return "EIGENVECTOR_CASE";
    case Feasibility::Infeasible:
      return "INFEASIBLE";
    case Feasibility::Supercritical:
      return "SUPERCRITICAL";
  }
  return "?";
}

Verdict classify(const Eigen::MatrixXd& m, const Eigen::VectorXd& f) {
  if ((f.array() < 0.0).any())
    throw ModelError("forced occupancy must be nonnegative");
  double rho = spectral_radius(m);
  bool f_zero = f.isZero(0.0);
  if (std::abs(rho - 1.0) <= kRhoBand)
    return {f_zero ? Feasibility::EigenvectorCase : Feasibility::Infeasible,
            rho};
  if (rho > 1.0) return {Feasibility::Supercritical, rho};
  if (f_zero) return {Feasibility::EigenvectorCase, rho};
  return {Feasibility::UniquePositive, rho};
}

Eigen::VectorXd solve_shifted(const Eigen::MatrixXd& m,
                              const Eigen::VectorXd& f, double tol) {
  if (m.rows() != m.cols() || f.size() != m.rows())
    throw ModelError("dimension mismatch in shifted solve");
  if (f.isZero(0.0))
    throw ModelError(
        "f = 0 is the eigenvector case; use the spectral module instead");
  Verdict v = classify(m, f);
  if (v.feasibility != Feasibility::UniquePositive) {
    std::ostringstream oss;
    oss << "shifted system infeasible: verdict " << to_string(v.feasibility)
        << " at rho = " << v.rho
        << " (a unique positive solution needs rho < 1 and f != 0)";
    throw ModelError(oss.str());
  }
  const int n = static_cast<int>(m.rows());
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n) - m;
  Eigen::VectorXd x = a.partialPivLu().solve(f);
  double residual = (x - m * x - f).cwiseAbs().maxCoeff();
  if (residual > tol * std::max(1.0, f.cwiseAbs().maxCoeff()))
    throw ModelError("shifted solve residual above tolerance");
  return x;
}

Calibration calibrate_mu(const Eigen::MatrixXd& b, const Eigen::VectorXd& w,
                         const Eigen::VectorXd& f, double total,
                         double rel_tol) {
  if ((f.array() < 0.0).any() || f.isZero(0.0))
    throw ModelError("forced occupancy must be nonnegative and nontrivial");
  double forced_total = f.sum();
  if (!(total > forced_total))
    throw ModelError("total occupancy must exceed total forced occupancy "
                     "(free population would be nonpositive)");

  Eigen::MatrixXd g = b * w.asDiagonal();
  double rho = spectral_radius(g);
  const int n = static_cast<int>(b.rows());
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);

  auto occupancy = [&](double mu) -> Eigen::VectorXd {
    return (id - mu * g).partialPivLu().solve(f);
  };

  // t(mu) = 1x is continuous and strictly increasing on [0, 1/rho), with
  // t(0) = 1f < total and t -> inf at the pole, so the bracket is valid.
  double lo = 0.0;
  double hi = (1.0 - 1e-9) / rho;
  double mu = 0.0;
  Eigen::VectorXd x;
  for (int it = 0; it < 200; ++it) {
    mu = 0.5 * (lo + hi);
    x = occupancy(mu);
    double t = x.sum();
    if (std::abs(t - total) <= rel_tol * total) break;
    (t < total ? lo : hi) = mu;
    if (hi - lo <= 1e-17 * hi) break;
  }
  x = occupancy(mu);
  if (std::abs(x.sum() - total) > 1e-8 * total)
    throw ModelError("mu calibration failed to reach the prescribed total");
  return {mu, x};
}

ShiftedModel make_shifted_model(const Eigen::MatrixXd& b,
                                const Eigen::VectorXd& w,
                                const Eigen::VectorXd& f, double total) {
  ShiftedModel model;
  model.b = b;
  model.w = w;
  model.f = f;
  model.total = total;
  Calibration cal = calibrate_mu(b, w, f, total);
  model.mu = cal.mu;
  model.x = cal.x;
  return model;
}

}  // namespace netocc
