#pragma once

#include <limits>

#include "cviso/states.hpp"

namespace cviso {

// Points whose margin lies within this band of a threshold are classified as
// not entangled / not steerable / not detected.
inline constexpr double kBoundaryTolerance = 1e-12;

struct PptResult {
  bool entangled = false;
  double margin = 0.0;    // tanh r - p; negative means entangled
  double nu_tilde = 1.0;  // cosh 2r - p sinh 2r
};

struct SteeringResult {
  bool steerable = false;
  double threshold = 0.0;             // 1 / sqrt(1 + 1/cosh 2r)
  double matrix_min_eigenvalue = 0.0; // of gamma + i(0_A (+) Omega_B)
};

struct CcnrResult {
  bool detects = false;
  double norm = 0.5;  // trace norm of the realigned density matrix
  double threshold = std::numeric_limits<double>::infinity();  // p above which norm > 1
};

struct CriteriaReport {
  bool ppt_entangled = false;
  double ppt_margin = 0.0;
  bool steerable = false;
  double steering_threshold = 0.0;
  bool ccnr_detects = false;
  double realigned_norm = 0.5;
};

/// Peres-Horodecki test. Entangled iff p > tanh r, equivalently nu_tilde < 1;
/// the two forms are cross-checked and a disagreement throws NumericalError.
PptResult ppt(const GIParams& params);

/// Gaussian A->B steering (B->A coincides since the state is symmetric).
///
/// The state is non-steerable iff gamma + i(0_A (+) Omega_B) >= 0. The closed
/// form p > 1/sqrt(1 + 1/cosh 2r) is evaluated alongside the matrix test and
/// the two must agree away from the boundary. At r = 0 the state is a product
/// of vacua and never steerable, even though the closed-form threshold tends
/// to 1/sqrt(2).
SteeringResult steerable(const GIParams& params);

/// Smallest eigenvalue of gamma + i(0_A (+) Omega_B) for a two-mode matrix.
double steering_matrix_min_eigenvalue(const CovarianceMatrix& gamma);

/// Steering threshold in p for fixed r located by bisection on the matrix
/// test alone. Returns +inf when no p in [0,1] is steerable.
double steering_threshold_by_bisection(double r, double p_tol = 1e-13);

/// Realignment (CCNR) criterion.
///
/// The threshold is derived from the trace-norm expression,
///   norm > 1  <=>  p > (cosh 2r - 1/2) / sinh 2r = (coth r + 3 tanh r) / 4,
/// and is reported as +inf at r = 0.
CcnrResult ccnr(const GIParams& params);

/// Realigned trace norm for any standard-form matrix:
///   1 / (2 sqrt((sqrt(ab) - |c1|)(sqrt(ab) - |c2|))).
double realigned_trace_norm(const TwoModeStandardForm& form);

CriteriaReport evaluate_criteria(const GIParams& params);

}  // namespace cviso
