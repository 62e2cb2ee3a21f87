#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cviso/states.hpp"

namespace cviso {

using complex = std::complex<double>;

inline constexpr std::size_t kDefaultCutoff = 40;
inline constexpr double kDefaultTailTolerance = 1e-8;
inline constexpr double kExtractionTolerance = 1e-6;
inline constexpr double kTraceTolerance = 1e-6;
/// PT eigenvalues above -kNegativityTolerance count as nonnegative.
inline constexpr double kNegativityTolerance = 1e-10;

/// Two-mode operator truncated to N levels per mode.
///
/// Rows and columns are indexed by |m, n> with flat index m * N + n, so the
/// entry at (m*N+n, k*N+l) is <m, n| rho |k, l>.
class FockOperator {
 public:
  static constexpr std::size_t n_modes = 2;

  /// Throws DimensionError unless `entries` is N^2 x N^2.
  FockOperator(std::size_t cutoff, Eigen::MatrixXcd entries);

  static FockOperator zero(std::size_t cutoff);

  std::size_t cutoff() const { return cutoff_; }
  Eigen::Index dim() const { return entries_.rows(); }
  Eigen::Index index(std::size_t m, std::size_t n) const {
    return static_cast<Eigen::Index>(m * cutoff_ + n);
  }

  const Eigen::MatrixXcd& entries() const { return entries_; }
  Eigen::MatrixXcd& entries() { return entries_; }

  complex operator()(std::size_t m, std::size_t n, std::size_t k, std::size_t l) const {
    return entries_(index(m, n), index(k, l));
  }

  complex trace() const { return entries_.trace(); }

  /// Tr[rho^2] for a Hermitian operator.
  double purity() const { return entries_.squaredNorm(); }

  /// max |rho - rho^dagger|.
  double hermiticity_error() const;

  /// Transposes mode B's indices: <m,n|rho^TB|k,l> = <m,l|rho|k,n>.
  FockOperator partial_transpose_b() const;

  /// Partial trace over mode B (N x N).
  Eigen::MatrixXcd reduced_a() const;

  /// All eigenvalues, ascending. The matrix is first split into the
  /// connected components of its nonzero pattern; each block is then solved
  /// with a dense Hermitian eigensolver.
  std::vector<double> eigenvalues() const;

  double min_eigenvalue() const;

  /// -sum lambda ln lambda over the (positive) spectrum, in nats.
  double von_neumann_entropy() const;

  FockOperator& operator+=(const FockOperator& other);
  FockOperator& operator*=(double scale);

 private:
  std::size_t cutoff_;
  Eigen::MatrixXcd entries_;
};

FockOperator operator+(FockOperator lhs, const FockOperator& rhs);
FockOperator operator*(double scale, FockOperator op);

/// Labels of the coherent-state matrix element <mu, nu| rho |kappa, tau>.
struct CoherentPoint {
  complex mu;
  complex nu;
  complex kappa;
  complex tau;
};

/// Closed-form <mu nu| rho_GI |kappa tau> for the Gaussian isotropic state.
/// At p = 0 and p = 1 the general expression is also checked against the
/// factorized thermal and two-mode-squeezed forms.
complex coherent_element(const GIParams& params, const CoherentPoint& pt);

/// p = 0 form: cosh^-4 r exp[-|.|^2/2 + (kappa mu* + tau nu*) tanh^2 r].
complex coherent_element_thermal(double r, const CoherentPoint& pt);

/// p = 1 form: cosh^-2 r exp[-|.|^2/2 + (mu* nu* + kappa tau) tanh r].
complex coherent_element_tms(double r, const CoherentPoint& pt);

/// Single-mode thermal tail bound lambda^N / (1 - lambda), lambda = tanh^2 r.
double thermal_tail_mass(double r, std::size_t cutoff);

/// Smallest cutoff >= min_cutoff meeting the tail bound.
std::size_t required_cutoff(double r, double tail_tolerance = kDefaultTailTolerance,
                            std::size_t min_cutoff = 4);

/// Throws TailError if thermal_tail_mass(r, cutoff) >= tail_tolerance.
void check_tail(double r, std::size_t cutoff, double tail_tolerance = kDefaultTailTolerance);

/// (1 - lambda)^2 lambda^(m+n) on the diagonal.
FockOperator fock_tmt(double r, std::size_t cutoff,
                      double tail_tolerance = kDefaultTailTolerance);

/// (1 - lambda) lambda^((m+n)/2) on |m,m><n,n|.
FockOperator fock_tms(double r, std::size_t cutoff,
                      double tail_tolerance = kDefaultTailTolerance);

/// Number-basis operator of the Gaussian isotropic state.
///
/// The entries are the Taylor coefficients of the entire generating function
///   G(mu*, nu*, kappa, tau) = exp(|mu|^2/2 + ... ) <mu nu| rho |kappa tau>,
/// scaled by sqrt(m! n! k! l!). G is a constant times exp of a quadratic
/// form, so the coefficients obey an exact three-term recurrence which is
/// stable for all cutoffs. The result is validated by re-synthesizing
/// coherent matrix elements at held-out points; a residual above 1e-6
/// throws ExtractionError.
FockOperator fock_gi(const GIParams& params, std::size_t cutoff,
                     double tail_tolerance = kDefaultTailTolerance);

/// Same operator obtained by Cauchy-coefficient (Fourier) extraction of G
/// sampled on product circles of radius `radius`, `samples` points per
/// circle (0 selects 2N). Cost and round-off amplification grow quickly
/// with N; intended for small cutoffs as an independent cross-check of
/// fock_gi.
FockOperator fock_gi_contour(const GIParams& params, std::size_t cutoff, double radius = 1.0,
                             std::size_t samples = 0,
                             double tail_tolerance = kDefaultTailTolerance);

/// <mu nu| rho |kappa tau> evaluated from the truncated number-basis entries.
complex synthesize_coherent_element(const FockOperator& op, const CoherentPoint& pt);

/// Largest |synthesized - closed form| over a fixed set of held-out labels.
double extraction_residual(const FockOperator& op, const GIParams& params);

/// Second moments of x = (a + a^dagger)/sqrt2, p = i(a^dagger - a)/sqrt2 on
/// each mode, built from ladder-operator expectation values of the truncated
/// operator. Throws StateError if |Tr rho - 1| > 1e-6.
CovarianceMatrix cm_from_fock(const FockOperator& op);

/// Smallest eigenvalue of the partial transpose (mode B) of fock_gi.
double negativity_oracle(const GIParams& params, std::size_t cutoff = kDefaultCutoff,
                         double tail_tolerance = kDefaultTailTolerance);

/// Binary fixture format: 16-byte header (uint64 cutoff, uint64 n_modes,
/// little endian) followed by N^4 complex entries as (re, im) float64 pairs
/// in row-major order.
void write_fock_binary(const FockOperator& op, std::ostream& out);
FockOperator read_fock_binary(std::istream& in);
void save_fock_binary(const FockOperator& op, const std::string& path);
FockOperator load_fock_binary(const std::string& path);

}  // namespace cviso
