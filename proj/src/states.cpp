#include "cviso/states.hpp"

#include <cmath>
#include <string>

#include "cviso/errors.hpp"

namespace cviso {

namespace {

constexpr double kEntropyGuard = 1e-12;

void check_squeezing(double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw DomainError("squeezing parameter r must be finite and >= 0, got " + std::to_string(r));
  }
}

}  // namespace

GIParams::GIParams(double r, double p) : r_(r), p_(p) {
  check_squeezing(r);
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("mixing probability p must lie in [0, 1], got " + std::to_string(p));
  }
}

CovarianceMatrix gamma_tms(double r) {
  check_squeezing(r);
  const double c = std::cosh(2.0 * r);
  const double s = std::sinh(2.0 * r);
  return TwoModeStandardForm{c, c, s, -s}.to_covariance();
}

CovarianceMatrix gamma_tmt(double r) {
  check_squeezing(r);
  const double c = std::cosh(2.0 * r);
  return TwoModeStandardForm{c, c, 0.0, 0.0}.to_covariance();
}

TwoModeStandardForm gi_standard_form(const GIParams& params) {
  const double c = std::cosh(2.0 * params.r());
  const double ps = params.p() * std::sinh(2.0 * params.r());
  return {c, c, ps, -ps};
}

CovarianceMatrix gamma_gi(const GIParams& params) {
  const double p = params.p();
  return CovarianceMatrix(p * gamma_tms(params.r()).entries() +
                          (1.0 - p) * gamma_tmt(params.r()).entries());
}

double mode_entropy(double nu) {
  const double plus = 0.5 * (nu + 1.0);
  const double minus = 0.5 * (nu - 1.0);
  if (nu - 1.0 < kEntropyGuard) return plus * std::log(plus);
  return plus * std::log(plus) - minus * std::log(minus);
}

double renyi_mode_trace(double nu, double alpha) {
  return std::pow(0.5 * (nu + 1.0), alpha) - std::pow(0.5 * (nu - 1.0), alpha);
}

double gi_nu(const GIParams& params) {
  const double s = std::sinh(2.0 * params.r());
  const double p = params.p();
  if (p == 0.0) return std::cosh(2.0 * params.r());
  // cosh^2 - p^2 sinh^2 written as 1 + (1 - p^2) sinh^2: exact 1 at p = 1.
  return std::sqrt(1.0 + (1.0 - p * p) * s * s);
}

double gi_nu_tilde(const GIParams& params) {
  return std::cosh(2.0 * params.r()) - params.p() * std::sinh(2.0 * params.r());
}

double StateProperties::renyi(double alpha) const {
  if (!(alpha > 0.0)) {
    throw DomainError("Renyi order alpha must be > 0, got " + std::to_string(alpha));
  }
  if (alpha == 1.0) return von_neumann;
  return 2.0 * std::log(renyi_mode_trace(nu, alpha)) / (alpha - 1.0);
}

StateProperties properties(const GIParams& params) {
  StateProperties props;
  props.nu = gi_nu(params);
  props.nu_tilde = gi_nu_tilde(params);
  props.purity = 1.0 / (props.nu * props.nu);
  props.von_neumann = 2.0 * mode_entropy(props.nu);
  props.local_entropy = mode_entropy(std::cosh(2.0 * params.r()));
  return props;
}

}  // namespace cviso
