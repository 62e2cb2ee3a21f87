#include "cviso/criteria.hpp"

#include <cmath>

#include "cviso/errors.hpp"

namespace cviso {

namespace {

// Classification cut for the matrix steering test; eigenvalues of the 4x4
// Hermitian matrix carry ~1e-14 rounding for r <= 2.
constexpr double kMatrixTolerance = 1e-12;
// The closed form and the matrix test must agree outside this band around
// the steering threshold.
constexpr double kSteeringAgreementBand = 1e-6;

}  // namespace

PptResult ppt(const GIParams& params) {
  const double r = params.r();
  const double p = params.p();
  PptResult result;
  result.margin = std::tanh(r) - p;
  result.nu_tilde = gi_nu_tilde(params);

  // nu_tilde - 1 = sinh(2r) * (tanh r - p).
  const double s = std::sinh(2.0 * r);
  const double via_margin = s * result.margin;
  const double via_nu = result.nu_tilde - 1.0;
  if (std::abs(via_margin - via_nu) > 1e-12 * std::max(1.0, std::cosh(2.0 * r))) {
    throw NumericalError("PPT closed forms disagree");
  }
  // r = 0 is the vacuum for every p.
  result.entangled = r > 0.0 && result.margin < -kBoundaryTolerance;
  return result;
}

double steering_matrix_min_eigenvalue(const CovarianceMatrix& gamma) {
  if (gamma.n_modes() != 2) {
    throw DimensionError("steering test requires a two-mode covariance matrix");
  }
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(4, 4);
  sigma.bottomRightCorner<2, 2>() = omega(1);
  return min_eigenvalue_hermitian(gamma.entries(), sigma);
}

SteeringResult steerable(const GIParams& params) {
  const double r = params.r();
  const double p = params.p();
  SteeringResult result;
  result.threshold = 1.0 / std::sqrt(1.0 + 1.0 / std::cosh(2.0 * r));
  result.matrix_min_eigenvalue = steering_matrix_min_eigenvalue(gamma_gi(params));

  const bool closed_form = r > 0.0 && p - result.threshold > kBoundaryTolerance;
  const bool matrix = result.matrix_min_eigenvalue < -kMatrixTolerance;
  const bool outside_band = r == 0.0 || std::abs(p - result.threshold) > kSteeringAgreementBand;
  if (outside_band && closed_form != matrix) {
    throw NumericalError("steering closed form disagrees with the matrix positivity test");
  }
  result.steerable = closed_form;
  return result;
}

double steering_threshold_by_bisection(double r, double p_tol) {
  auto steerable_at = [r](double p) {
    return steering_matrix_min_eigenvalue(gamma_gi(GIParams(r, p))) < 0.0;
  };
  if (!steerable_at(1.0)) return std::numeric_limits<double>::infinity();
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > p_tol) {
    const double mid = 0.5 * (lo + hi);
    (steerable_at(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

double realigned_trace_norm(const TwoModeStandardForm& form) {
  const double root_ab = std::sqrt(form.a * form.b);
  return 1.0 / (2.0 * std::sqrt((root_ab - std::abs(form.c1)) * (root_ab - std::abs(form.c2))));
}

CcnrResult ccnr(const GIParams& params) {
  const double r = params.r();
  CcnrResult result;
  result.norm = 1.0 / (2.0 * gi_nu_tilde(params));
  const double general = realigned_trace_norm(gi_standard_form(params));
  if (std::abs(general - result.norm) > 1e-12 * std::max(1.0, result.norm)) {
    throw NumericalError("realigned trace norm forms disagree");
  }
  result.threshold = r > 0.0 ? (std::cosh(2.0 * r) - 0.5) / std::sinh(2.0 * r)
                             : std::numeric_limits<double>::infinity();
  result.detects = result.norm - 1.0 > kBoundaryTolerance;
  return result;
}

CriteriaReport evaluate_criteria(const GIParams& params) {
  const PptResult p = ppt(params);
  const SteeringResult s = steerable(params);
  const CcnrResult c = ccnr(params);
  return {p.entangled, p.margin, s.steerable, s.threshold, c.detects, c.norm};
}

}  // namespace cviso
