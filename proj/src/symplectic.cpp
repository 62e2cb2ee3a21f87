#include "cviso/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cviso/errors.hpp"

namespace cviso {

namespace {

constexpr double kSymmetryTolerance = 1e-12;
constexpr double kPatternTolerance = 1e-12;

void check_even_square(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("covariance matrix must be square, got " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()));
  }
  if (m.rows() == 0 || m.rows() % 2 != 0) {
    throw DimensionError("covariance matrix dimension must be positive and even, got " +
                         std::to_string(m.rows()));
  }
}

}  // namespace

CovarianceMatrix::CovarianceMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  check_even_square(entries_);
  const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
  if ((entries_ - entries_.transpose()).cwiseAbs().maxCoeff() > kSymmetryTolerance * scale) {
    throw ShapeError("covariance matrix is not symmetric");
  }
  // Remove the rounding-level asymmetry so downstream solvers see an exact
  // symmetric matrix.
  entries_ = 0.5 * (entries_ + entries_.transpose()).eval();
  n_modes_ = static_cast<std::size_t>(entries_.rows() / 2);
  displacement_ = Eigen::VectorXd::Zero(entries_.rows());
}

CovarianceMatrix CovarianceMatrix::identity(std::size_t n_modes) {
  if (n_modes == 0) throw DimensionError("n_modes must be at least 1");
  const auto d = static_cast<Eigen::Index>(2 * n_modes);
  return CovarianceMatrix(Eigen::MatrixXd::Identity(d, d));
}

Eigen::Matrix2d CovarianceMatrix::block(std::size_t i, std::size_t j) const {
  if (i >= n_modes_ || j >= n_modes_) throw DimensionError("mode index out of range");
  return entries_.block<2, 2>(static_cast<Eigen::Index>(2 * i), static_cast<Eigen::Index>(2 * j));
}

CovarianceMatrix TwoModeStandardForm::to_covariance() const {
  Eigen::Matrix4d m;
  m << a, 0, c1, 0,
       0, a, 0, c2,
       c1, 0, b, 0,
       0, c2, 0, b;
  return CovarianceMatrix(m);
}

Eigen::MatrixXd omega(std::size_t n_modes) {
  if (n_modes == 0) throw DimensionError("n_modes must be at least 1");
  const auto d = static_cast<Eigen::Index>(2 * n_modes);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index k = 0; k < d; k += 2) {
    w(k, k + 1) = 1.0;
    w(k + 1, k) = -1.0;
  }
  return w;
}

SymplecticSpectrum symplectic_eigenvalues(const Eigen::MatrixXd& gamma) {
  check_even_square(gamma);
  const auto n = static_cast<std::size_t>(gamma.rows() / 2);
  const Eigen::MatrixXd w_gamma = omega(n) * gamma;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(w_gamma, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigenvalue solver failed on Omega*gamma");
  }
  std::vector<double> moduli;
  moduli.reserve(static_cast<std::size_t>(gamma.rows()));
  for (const auto& ev : solver.eigenvalues()) moduli.push_back(std::abs(ev));
  std::sort(moduli.begin(), moduli.end());

  // Eigenvalues come in +-i*nu pairs; after sorting, take the mean of each
  // adjacent pair.
  SymplecticSpectrum spectrum;
  spectrum.values.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    spectrum.values.push_back(0.5 * (moduli[2 * k] + moduli[2 * k + 1]));
  }
  return spectrum;
}

SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix& gamma) {
  return symplectic_eigenvalues(gamma.entries());
}

double min_eigenvalue_hermitian(const Eigen::MatrixXd& gamma, const Eigen::MatrixXd& sigma) {
  const Eigen::MatrixXcd h = gamma.cast<std::complex<double>>() +
                             std::complex<double>(0.0, 1.0) * sigma.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigenvalue solver failed");
  }
  return solver.eigenvalues().minCoeff();
}

PhysicalityCheck is_physical(const CovarianceMatrix& gamma, double tol) {
  const double margin = min_eigenvalue_hermitian(gamma.entries(), omega(gamma.n_modes()));
  return {margin >= -tol, margin};
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& gamma, std::size_t mode) {
  if (mode >= gamma.n_modes()) {
    throw DimensionError("partial_transpose: mode " + std::to_string(mode) +
                         " out of range for " + std::to_string(gamma.n_modes()) + " modes");
  }
  Eigen::MatrixXd m = gamma.entries();
  const auto k = static_cast<Eigen::Index>(2 * mode + 1);
  m.row(k) *= -1.0;
  m.col(k) *= -1.0;
  return CovarianceMatrix(std::move(m));
}

TwoModeStandardForm standard_form(const CovarianceMatrix& gamma) {
  if (gamma.n_modes() != 2) {
    throw DimensionError("standard_form requires a two-mode covariance matrix");
  }
  const Eigen::MatrixXd& m = gamma.entries();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  // Structural zeros: (0,1),(0,3),(1,2),(2,3); the diagonal pairs must agree.
  const double violations[] = {
      m(0, 1), m(0, 3), m(1, 2), m(2, 3),
      m(0, 0) - m(1, 1), m(2, 2) - m(3, 3),
  };
  for (double v : violations) {
    if (std::abs(v) > kPatternTolerance * scale) {
      throw ShapeError("covariance matrix is not in two-mode standard form");
    }
  }
  return {m(0, 0), m(2, 2), m(0, 2), m(1, 3)};
}

CovarianceMatrix reduced(const CovarianceMatrix& gamma, std::size_t mode) {
  return CovarianceMatrix(Eigen::MatrixXd(gamma.block(mode, mode)));
}

}  // namespace cviso
