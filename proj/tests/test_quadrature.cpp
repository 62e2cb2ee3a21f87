#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cviso/fock.hpp"
#include "cviso/states.hpp"
#include "quadrature.hpp"

using namespace cviso;
using cviso::testing::gauss_hermite;
using cviso::testing::quadrature_coherent_element;

TEST(GaussHermite, IntegratesMomentsExactly) {
  const auto rule = gauss_hermite(20);
  double m0 = 0, m2 = 0, m4 = 0, m3 = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i], w = rule.weights[i];
    m0 += w;
    m2 += w * x * x;
    m3 += w * x * x * x;
    m4 += w * x * x * x * x;
  }
  const double sp = std::sqrt(std::numbers::pi);
  EXPECT_NEAR(m0, sp, 1e-13);
  EXPECT_NEAR(m2, sp / 2, 1e-13);
  EXPECT_NEAR(m3, 0.0, 1e-13);
  EXPECT_NEAR(m4, 3 * sp / 4, 1e-13);
}

TEST(Quadrature, VacuumElementFrozen) {
  const auto q = quadrature_coherent_element(gamma_gi(GIParams(1.0, 0.5)), {}, 24);
  EXPECT_NEAR(q.real(), 0.206292129701645, 1e-9);
  EXPECT_NEAR(q.imag(), 0.0, 1e-12);
}

TEST(Quadrature, AgreesWithClosedFormElement) {
  const CoherentPoint pt{{0.3, 0.2}, {-0.1, 0.4}, {0.2, -0.3}, {0.0, 0.5}};
  for (const auto& [r, p] : {std::pair{1.0, 0.5}, std::pair{0.4, 0.9}, std::pair{0.8, 0.0}}) {
    const GIParams params(r, p);
    const auto q = quadrature_coherent_element(gamma_gi(params), pt, 24);
    EXPECT_NEAR(std::abs(q - coherent_element(params, pt)), 0.0, 1e-8) << r << "," << p;
  }
}
