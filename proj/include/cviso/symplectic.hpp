#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace cviso {

/// Real symmetric 2N x 2N second-moment matrix of an N-mode state.
///
/// Quadratures are ordered (x1, p1, ..., xN, pN) and the vacuum has the
/// identity as its covariance matrix. Displacements are carried explicitly
/// but are always zero for the states handled by this library.
class CovarianceMatrix {
 public:
  /// Throws DimensionError for non-square or odd-sized input and ShapeError
  /// when the matrix is not symmetric to 1e-12 relative tolerance.
  explicit CovarianceMatrix(Eigen::MatrixXd entries);

  static CovarianceMatrix identity(std::size_t n_modes);

  std::size_t n_modes() const { return n_modes_; }
  std::size_t dim() const { return 2 * n_modes_; }
  const Eigen::MatrixXd& entries() const { return entries_; }
  const Eigen::VectorXd& displacement() const { return displacement_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

  /// 2x2 block of mode pair (i, j).
  Eigen::Matrix2d block(std::size_t i, std::size_t j) const;

 private:
  std::size_t n_modes_;
  Eigen::MatrixXd entries_;
  Eigen::VectorXd displacement_;
};

struct SymplecticSpectrum {
  std::vector<double> values;  // ascending, one per mode

  double min() const { return values.front(); }
  double max() const { return values.back(); }
};

/// (a, b, c1, c2) of the two-mode standard form
///   [[a,0,c1,0],[0,a,0,c2],[c1,0,b,0],[0,c2,0,b]].
struct TwoModeStandardForm {
  double a = 1.0;
  double b = 1.0;
  double c1 = 0.0;
  double c2 = 0.0;

  CovarianceMatrix to_covariance() const;
  bool symmetric() const { return a == b; }

  friend bool operator==(const TwoModeStandardForm&, const TwoModeStandardForm&) = default;
};

struct PhysicalityCheck {
  bool physical = false;
  double margin = 0.0;  // smallest eigenvalue of gamma + i*Omega
};

inline constexpr double kPhysicalityTolerance = 1e-9;

/// Block-diagonal symplectic form with n blocks [[0,1],[-1,0]].
Eigen::MatrixXd omega(std::size_t n_modes);

/// Moduli of the eigenvalues of i*Omega*gamma, one per mode.
///
/// Works on the real matrix Omega*gamma whose spectrum is +-i*nu_k; each
/// pair is collapsed to a single value.
SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix& gamma);

/// Same as above for a raw matrix; checks shape only (no symmetry check).
SymplecticSpectrum symplectic_eigenvalues(const Eigen::MatrixXd& gamma);

/// Uncertainty-relation test gamma + i*Omega >= -tol.
PhysicalityCheck is_physical(const CovarianceMatrix& gamma,
                             double tol = kPhysicalityTolerance);

/// Smallest eigenvalue of the Hermitian matrix gamma + i*sigma, where sigma
/// is real antisymmetric. Shared by the physicality and steering tests.
double min_eigenvalue_hermitian(const Eigen::MatrixXd& gamma, const Eigen::MatrixXd& sigma);

/// Momentum sign flip p_k -> -p_k of one mode (0-based index).
CovarianceMatrix partial_transpose(const CovarianceMatrix& gamma, std::size_t mode);

/// Reads (a, b, c1, c2) off a two-mode matrix already in standard form.
/// Throws ShapeError if any structurally-zero entry exceeds 1e-12.
TwoModeStandardForm standard_form(const CovarianceMatrix& gamma);

/// Covariance matrix of mode `mode` alone.
CovarianceMatrix reduced(const CovarianceMatrix& gamma, std::size_t mode);

}  // namespace cviso
