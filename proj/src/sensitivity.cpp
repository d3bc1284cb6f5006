#include "netocc/sensitivity.hpp"

#include <cmath>
#include <iostream>

#include "netocc/errors.hpp"

namespace netocc {

std::string to_string(const Parameter& p) {
  return (p.kind == ParamKind::Weight ? "w:" : "f:") +
         std::to_string(p.index + 1);
}

namespace {

void require_symmetric(const Eigen::MatrixXd& b) {
  if (!b.isApprox(b.transpose(), 1e-12))
    throw ModelError("structural matrix B must be symmetric");
}

// Shared pieces of the unshifted (eigenvector-model) sensitivity solve.
struct UnshiftedBase {
  Eigen::MatrixXd b;
  Eigen::VectorXd w;
  double total;
  double lambda;
  Eigen::VectorXd x;  // scaled so 1x = total
  Eigen::VectorXd u;  // left vector with u.x = 1
  Eigen::MatrixXd m;  // (1/lambda) B diag(w)
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr;  // of [(I - M); 1]

  UnshiftedBase(const Eigen::MatrixXd& b_in, const Eigen::VectorXd& w_in,
                double total_in)
      : b(b_in), w(w_in), total(total_in) {
    require_symmetric(b);
    if ((w.array() <= 0.0).any())
      throw ModelError("weights must be strictly positive");
    if (!(total > 0.0)) throw ModelError("total occupancy must be positive");

    Eigen::MatrixXd g = b * w.asDiagonal();
    PerronPair pair = perron_pair(g);
    lambda = pair.lambda;
    x = pair.right * total;
    u = pair.left / pair.left.dot(x);
    m = g / lambda;

    const int n = static_cast<int>(b.rows());
    Eigen::MatrixXd aug(n + 1, n);
    aug.topRows(n) = Eigen::MatrixXd::Identity(n, n) - m;
    aug.row(n).setOnes();
    qr.compute(aug);
    if (qr.rank() < n)
      throw ModelError("augmented sensitivity system is rank deficient");
  }

  double lambda_prime_at(int i) const { return x(i) * u.dot(b.col(i)); }

  Eigen::VectorXd derivative_at(int i) const {
    const int n = static_cast<int>(b.rows());
    double lp = lambda_prime_at(i);
    // M' = (1/lambda) B E_ii - (lambda'/lambda) M
    Eigen::MatrixXd mprime = Eigen::MatrixXd::Zero(n, n);
    mprime.col(i) = b.col(i) / lambda;
    mprime -= (lp / lambda) * m;
    Eigen::VectorXd rhs(n + 1);
    rhs.head(n) = mprime * x;
    rhs(n) = 0.0;
    return qr.solve(rhs);
  }
};

// Coefficient matrix C and base solution shared by all shifted-model
// parameters at a base point. BW is the effective mu0 B diag(w), with the
// relative scaling rebased to 1.
struct ShiftedBase {
  Eigen::MatrixXd bw;
  Eigen::VectorXd f;
  Eigen::VectorXd x;
  double total;
  Eigen::RowVectorXd one_bw;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu;

  explicit ShiftedBase(const ShiftedModel& model) {
    require_symmetric(model.b);
    bw = model.mu * model.b * model.w.asDiagonal();
    f = model.f;
    x = model.x;
    total = x.sum();
    if (std::abs(model.total - total) > 1e-8 * std::max(1.0, total))
      std::cerr << "warning: prescribed total differs from calibrated base "
                   "solution total\n";
    if (spectral_radius(bw) >= 1.0)
      throw ModelError("effective matrix must have spectral radius < 1");

    const int n = static_cast<int>(bw.rows());
    one_bw = Eigen::RowVectorXd::Ones(n) * bw;
    double s = one_bw * x;  // 1 B W x
    double free_total = total - f.sum();
    Eigen::MatrixXd c = (x - f) * one_bw + s * Eigen::MatrixXd::Identity(n, n) -
                        free_total * bw;
    lu.compute(c);
    // Invertibility of C at the base point: rank-one update determinant
    // stays positive, but a violated precondition still shows up here.
    Eigen::VectorXd probe = lu.solve(Eigen::VectorXd::Ones(n));
    if (!probe.allFinite() || (c * probe - Eigen::VectorXd::Ones(n))
                                      .cwiseAbs()
                                      .maxCoeff() > 1e-6)
      throw ModelError("coefficient matrix C is numerically singular");
  }

  Eigen::VectorXd derivative_at(const Parameter& param,
                                const ShiftedModel& model) const {
    const int n = static_cast<int>(bw.rows());
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    double free_total = total - f.sum();
    if (param.kind == ParamKind::Weight) {
      // BW' = mu0 B E_ii; f' = 0
      Eigen::MatrixXd bwp = Eigen::MatrixXd::Zero(n, n);
      bwp.col(param.index) = model.mu * model.b.col(param.index);
      Eigen::RowVectorXd one_bwp = Eigen::RowVectorXd::Ones(n) * bwp;
      d = free_total * bwp + f * one_bwp -
          (one_bwp * x) * Eigen::MatrixXd::Identity(n, n);
    } else {
      // f' = e_i; W' = 0
      Eigen::VectorXd fp = Eigen::VectorXd::Zero(n);
      fp(param.index) = 1.0;
      d = -fp.sum() * bw + fp * one_bw;
    }
    return lu.solve(d * x);
  }
};

}  // namespace

double lambda_prime(const Eigen::MatrixXd& b, const Eigen::VectorXd& w, int i,
                    const PerronPair& pair) {
  if (!pair.biorthonormalized ||
      std::abs(pair.left.dot(pair.right) - 1.0) > 1e-8)
    throw ModelError("eigenpair must be biorthonormalized (u x = 1)");
  if (i < 0 || i >= b.rows()) throw ModelError("parameter index out of range");
  (void)w;
  return pair.right(i) * pair.left.dot(b.col(i));
}

Eigen::VectorXd derivative_unshifted(const Eigen::MatrixXd& b,
                                     const Eigen::VectorXd& w, int i,
                                     double total) {
  UnshiftedBase base(b, w, total);
  return base.derivative_at(i);
}

Eigen::VectorXd derivative_shifted(const ShiftedModel& model,
                                   const Parameter& param) {
  ShiftedBase base(model);
  return base.derivative_at(param, model);
}

Eigen::VectorXd elasticity(const Eigen::VectorXd& x,
                           const Eigen::VectorXd& x_prime, double t0) {
  if (x.size() != x_prime.size())
    throw ModelError("dimension mismatch in elasticity");
  if ((x.array() == 0.0).any())
    throw ModelError("elasticity undefined at zero occupancy");
  if (t0 == 0.0) return Eigen::VectorXd::Zero(x.size());
  return (x_prime.array() * t0 / x.array()).matrix();
}

SensitivityReport full_report_unshifted(const Eigen::MatrixXd& b,
                                        const Eigen::VectorXd& w, double total,
                                        const std::vector<Parameter>& params) {
  UnshiftedBase base(b, w, total);
  SensitivityReport report;
  report.base_x = base.x;
  report.params = params;
  report.total = total;
  const int n = static_cast<int>(b.rows());
  const int p = static_cast<int>(params.size());
  report.derivatives.resize(n, p);
  report.elasticities.resize(n, p);
  for (int j = 0; j < p; ++j) {
    if (params[j].kind != ParamKind::Weight)
      throw ModelError("unshifted models have no forced-occupancy parameters");
    int i = params[j].index;
    Eigen::VectorXd xp = base.derivative_at(i);
    report.derivatives.col(j) = xp;
    report.elasticities.col(j) = elasticity(base.x, xp, w(i));
    report.rate.push_back(base.lambda_prime_at(i));
  }
  return report;
}

SensitivityReport full_report_shifted(const ShiftedModel& model,
                                      const std::vector<Parameter>& params) {
  ShiftedBase base(model);
  SensitivityReport report;
  report.base_x = base.x;
  report.params = params;
  report.total = base.total;
  const int n = static_cast<int>(model.b.rows());
  const int p = static_cast<int>(params.size());
  report.derivatives.resize(n, p);
  report.elasticities.resize(n, p);
  for (int j = 0; j < p; ++j) {
    const Parameter& param = params[j];
    Eigen::VectorXd xp = base.derivative_at(param, model);
    double t0 = param.kind == ParamKind::Weight ? model.w(param.index)
                                                : model.f(param.index);
    report.derivatives.col(j) = xp;
    report.elasticities.col(j) = elasticity(base.x, xp, t0);
  }
  return report;
}

Eigen::VectorXd finite_difference_unshifted(const Eigen::MatrixXd& b,
                                            const Eigen::VectorXd& w, int i,
                                            double total, double h) {
  auto evaluate = [&](double wi) -> Eigen::VectorXd {
    Eigen::VectorXd wv = w;
    wv(i) = wi;
    PerronPair pair = perron_pair(b * wv.asDiagonal());
    return pair.right * total;
  };
  if (w(i) - h <= 0.0) {
    std::cerr << "warning: falling back to a forward difference at the "
                 "domain boundary\n";
    return (evaluate(w(i) + h) - evaluate(w(i))) / h;
  }
  return (evaluate(w(i) + h) - evaluate(w(i) - h)) / (2.0 * h);
}

Eigen::VectorXd finite_difference_shifted(const ShiftedModel& model,
                                          const Parameter& param, double h) {
  auto evaluate = [&](double t) -> Eigen::VectorXd {
    Eigen::VectorXd wv = model.w;
    Eigen::VectorXd fv = model.f;
    if (param.kind == ParamKind::Weight)
      wv(param.index) = t;
    else
      fv(param.index) = t;
    return calibrate_mu(model.b, wv, fv, model.total, 1e-13).x;
  };
  double t0 = param.kind == ParamKind::Weight ? model.w(param.index)
                                              : model.f(param.index);
  bool out_of_domain = param.kind == ParamKind::Weight ? (t0 - h <= 0.0)
                                                       : (t0 - h < 0.0);
  if (out_of_domain) {
    std::cerr << "warning: falling back to a forward difference at the "
                 "domain boundary\n";
    return (evaluate(t0 + h) - evaluate(t0)) / h;
  }
  return (evaluate(t0 + h) - evaluate(t0 - h)) / (2.0 * h);
}

}  // namespace netocc
