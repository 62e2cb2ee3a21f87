#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "cviso/fock.hpp"
#include "cviso/symplectic.hpp"

namespace cviso::testing {

struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;  // for weight function exp(-x^2)
};

/// Golub-Welsch construction of the n-point rule.
GaussHermiteRule gauss_hermite(std::size_t n);

/// <mu nu| rho |kappa tau> for the zero-mean two-mode Gaussian state with
/// covariance `gamma`, computed by 4D tensor Gauss-Hermite quadrature of the
/// characteristic-function expansion rho = pi^-2 \int chi(alpha, beta)
/// D(-alpha) (x) D(-beta).
std::complex<double> quadrature_coherent_element(const CovarianceMatrix& gamma,
                                                 const CoherentPoint& pt,
                                                 std::size_t nodes = 30);

}  // namespace cviso::testing
