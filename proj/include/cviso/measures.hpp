#pragma once

#include "cviso/states.hpp"

namespace cviso {

// All measures are in nats.
struct MeasureReport {
  double eof = 0.0;
  double discord = 0.0;
  double mutual_information = 0.0;
  double x = 1.0;  // min(1, nu_tilde)
};

/// Entanglement of formation of a symmetric two-mode Gaussian state as a
/// function of x = min(1, nu_tilde). Exactly 0 for |1 - x| < 1e-12.
double eof_from_nu_tilde(double nu_tilde);

double eof(const GIParams& params);

/// EOF of an arbitrary symmetric two-mode covariance matrix in standard
/// form. Throws ShapeError if a != b, since the closed form only holds for
/// symmetric states.
double symmetric_eof(const CovarianceMatrix& gamma);

/// Gaussian discord (optimized over Gaussian measurements only):
///   f(cosh 2r) + f(p^2 - (p^2-1) cosh 2r) - 2 f(nu).
double gaussian_discord(const GIParams& params);

/// I_M = S_A + S_B - S = 2 f(cosh 2r) - 2 f(nu).
double mutual_information(const GIParams& params);

/// Strict comparison eof > I_M / 2; differences within 1e-12 count as equal.
bool eof_exceeds_half_mi(const GIParams& params);

MeasureReport evaluate_measures(const GIParams& params);

}  // namespace cviso
