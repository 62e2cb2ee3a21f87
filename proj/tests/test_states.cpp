#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "cviso/errors.hpp"
#include "cviso/states.hpp"

using namespace cviso;

TEST(GIParams, ValidatesDomain) {
  EXPECT_NO_THROW(GIParams(0.0, 0.0));
  EXPECT_NO_THROW(GIParams(2.0, 1.0));
  EXPECT_THROW(GIParams(-0.1, 0.5), DomainError);
  EXPECT_THROW(GIParams(1.0, 1.5), DomainError);
  EXPECT_THROW(GIParams(1.0, -1e-9), DomainError);
  EXPECT_THROW(GIParams(std::numeric_limits<double>::infinity(), 0.5), DomainError);
  EXPECT_THROW(GIParams(std::nan(""), 0.5), DomainError);
  EXPECT_THROW(GIParams(1.0, std::nan("")), DomainError);
}

TEST(GammaGI, Layout) {
  const auto g = gamma_gi(GIParams(1.0, 0.5));
  const double c = std::cosh(2.0), s = std::sinh(2.0);
  EXPECT_DOUBLE_EQ(g(0, 0), c);
  EXPECT_DOUBLE_EQ(g(3, 3), c);
  EXPECT_DOUBLE_EQ(g(0, 2), 0.5 * s);
  EXPECT_DOUBLE_EQ(g(1, 3), -0.5 * s);
  EXPECT_EQ(g(0, 1), 0.0);
  EXPECT_EQ(g(0, 3), 0.0);
}

TEST(GammaGI, EndpointsAreThermalAndSqueezed) {
  EXPECT_TRUE(gamma_gi(GIParams(0.8, 0.0)).entries().isApprox(gamma_tmt(0.8).entries()));
  EXPECT_TRUE(gamma_gi(GIParams(0.8, 1.0)).entries().isApprox(gamma_tms(0.8).entries()));
  EXPECT_TRUE(gamma_gi(GIParams(0.0, 0.3)).entries().isIdentity());
}

TEST(StandardFormGI, Values) {
  const auto f = gi_standard_form(GIParams(0.5, 0.25));
  EXPECT_DOUBLE_EQ(f.a, std::cosh(1.0));
  EXPECT_DOUBLE_EQ(f.c1, 0.25 * std::sinh(1.0));
  EXPECT_DOUBLE_EQ(f.c2, -0.25 * std::sinh(1.0));
  EXPECT_TRUE(f.symmetric());
}

// mpmath (50 digits)
TEST(Properties, ReferencePoint) {
  const auto props = properties(GIParams(1.0, 0.5));
  EXPECT_NEAR(props.nu, 3.29629903277997, 1e-12);
  EXPECT_NEAR(props.nu_tilde, 1.94876548716012, 1e-12);
  EXPECT_NEAR(props.purity, 0.0920336813047350, 1e-13);
  EXPECT_NEAR(props.von_neumann, 2.96774215062132, 1e-12);
  EXPECT_NEAR(props.local_entropy, 1.61982209289770, 1e-12);
  EXPECT_NEAR(props.renyi(2.0), 2.38560066779334, 1e-12);
  EXPECT_NEAR(props.renyi(3.0), 2.12813533038740, 1e-12);
  EXPECT_DOUBLE_EQ(props.renyi(1.0), props.von_neumann);
}

TEST(Properties, SecondPoint) {
  const auto props = properties(GIParams(0.7, 0.3));
  EXPECT_NEAR(props.von_neumann, 1.98869577665905, 1e-12);
  EXPECT_NEAR(props.renyi(0.5), 2.71693652379503, 1e-12);
}

TEST(Properties, RenyiRejectsNonPositiveOrder) {
  const auto props = properties(GIParams(1.0, 0.5));
  EXPECT_THROW(props.renyi(0.0), DomainError);
  EXPECT_THROW(props.renyi(-1.0), DomainError);
}

TEST(Properties, PureEndpoint) {
  const auto props = properties(GIParams(1.3, 1.0));
  EXPECT_EQ(props.nu, 1.0);
  EXPECT_EQ(props.purity, 1.0);
  EXPECT_EQ(props.von_neumann, 0.0);
  EXPECT_NEAR(props.renyi(2.0), 0.0, 1e-15);
}

TEST(ModeEntropy, Guards) {
  EXPECT_EQ(mode_entropy(1.0), 0.0);
  // only the (nu - 1) ln(nu - 1) term is dropped near nu = 1
  EXPECT_NEAR(mode_entropy(1.0 + 1e-14), 0.5e-14, 1e-15);
  EXPECT_NEAR(mode_entropy(3.0), 2.0 * std::log(2.0), 1e-14);
}
