#pragma once

#include "cviso/symplectic.hpp"

namespace cviso {

/// Coordinates (r, p) of the Gaussian isotropic family: squeezing r >= 0 and
/// mixing probability p in [0, 1]. Construction validates both.
class GIParams {
 public:
  GIParams(double r, double p);

  double r() const { return r_; }
  double p() const { return p_; }

 private:
  double r_;
  double p_;
};

/// Two-mode squeezed vacuum: a = b = cosh 2r, c1 = -c2 = sinh 2r.
CovarianceMatrix gamma_tms(double r);

/// Two identical thermal modes with mean occupation sinh^2 r: cosh(2r) * 1.
CovarianceMatrix gamma_tmt(double r);

/// p * gamma_tms(r) + (1 - p) * gamma_tmt(r).
CovarianceMatrix gamma_gi(const GIParams& params);

/// Closed-form standard form of gamma_gi.
TwoModeStandardForm gi_standard_form(const GIParams& params);

/// Entropy of one symplectic mode with eigenvalue nu (nats):
///   f(nu) = (nu+1)/2 ln((nu+1)/2) - (nu-1)/2 ln((nu-1)/2).
/// The second term is taken as 0 when nu - 1 < 1e-12.
double mode_entropy(double nu);

/// F_alpha(nu) = ((nu+1)/2)^alpha - ((nu-1)/2)^alpha.
double renyi_mode_trace(double nu, double alpha);

/// Closed-form symplectic eigenvalue of gamma_gi (both modes share it).
double gi_nu(const GIParams& params);

/// Smallest symplectic eigenvalue of the partially transposed gamma_gi.
double gi_nu_tilde(const GIParams& params);

struct StateProperties {
  double nu = 1.0;
  double nu_tilde = 1.0;
  double purity = 1.0;         // 1 / nu^2
  double von_neumann = 0.0;    // S = 2 f(nu)
  double local_entropy = 0.0;  // S_A = S_B = f(cosh 2r)

  /// Renyi entropy S_alpha = 2 ln F_alpha(nu) / (alpha - 1).
  /// alpha == 1 yields the von Neumann entropy; alpha <= 0 throws DomainError.
  double renyi(double alpha) const;
};

StateProperties properties(const GIParams& params);

}  // namespace cviso
