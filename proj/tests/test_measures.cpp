#include <gtest/gtest.h>

#include <cmath>

#include "cviso/errors.hpp"
#include "cviso/measures.hpp"
#include "cviso/states.hpp"
#include "cviso/symplectic.hpp"

using namespace cviso;

namespace {

double pure_entanglement(double r) {
  const double ch = std::cosh(r), sh = std::sinh(r);
  return 2.0 * ch * ch * std::log(ch) - 2.0 * sh * sh * std::log(sh);
}

}  // namespace

// mpmath (30-50 digits)
TEST(Eof, ReferenceValues) {
  EXPECT_NEAR(eof(GIParams(1.0, 0.9)), 0.395706199036481, 1e-12);
  EXPECT_NEAR(eof(GIParams(0.5, 0.9)), 0.417015051666385, 1e-12);
  EXPECT_NEAR(eof(GIParams(1.0, 1.0)), 1.61982209289770, 1e-12);
  EXPECT_EQ(eof(GIParams(1.0, 0.5)), 0.0);
}

TEST(Eof, FromNuTilde) {
  EXPECT_EQ(eof_from_nu_tilde(1.0), 0.0);
  EXPECT_EQ(eof_from_nu_tilde(2.5), 0.0);
  EXPECT_EQ(eof_from_nu_tilde(1.0 - 1e-13), 0.0);
  EXPECT_THROW(eof_from_nu_tilde(0.0), DomainError);
}

TEST(Eof, SymmetricCovarianceEntryPoint) {
  const GIParams params(0.9, 0.8);
  EXPECT_NEAR(symmetric_eof(gamma_gi(params)), eof(params), 1e-10);
  EXPECT_THROW(symmetric_eof(TwoModeStandardForm{2.0, 1.5, 0.5, -0.5}.to_covariance()),
               ShapeError);
}

TEST(Discord, ReferenceValues) {
  EXPECT_NEAR(gaussian_discord(GIParams(1.0, 0.5)), 0.0628899816071290, 1e-12);
  EXPECT_NEAR(gaussian_discord(GIParams(0.5, 0.5)), 0.0779716628881682, 1e-12);
  EXPECT_NEAR(gaussian_discord(GIParams(1.0, 0.9)), 0.503555296226704, 1e-12);
  EXPECT_EQ(gaussian_discord(GIParams(1.0, 0.0)), 0.0);
}

TEST(MutualInformation, ReferenceValues) {
  EXPECT_NEAR(mutual_information(GIParams(1.0, 0.5)), 0.271902035174084, 1e-12);
  EXPECT_NEAR(mutual_information(GIParams(0.5, 0.5)), 0.190229502942191, 1e-12);
  EXPECT_NEAR(mutual_information(GIParams(1.0, 0.9)), 1.47814509114165, 1e-12);
  EXPECT_EQ(mutual_information(GIParams(1.0, 0.0)), 0.0);
}

TEST(Measures, PureStateIdentities) {
  for (double r : {0.25, 0.5, 1.0, 1.5}) {
    const auto m = evaluate_measures(GIParams(r, 1.0));
    const double e = pure_entanglement(r);
    EXPECT_NEAR(m.eof, e, 1e-10);
    EXPECT_NEAR(m.discord, e, 1e-10);
    EXPECT_NEAR(0.5 * m.mutual_information, e, 1e-10);
    EXPECT_FALSE(eof_exceeds_half_mi(GIParams(r, 1.0)));
  }
}

TEST(Measures, EofExceedsHalfMutualInformationSomewhere) {
  EXPECT_TRUE(eof_exceeds_half_mi(GIParams(0.3, 0.95)));
  EXPECT_FALSE(eof_exceeds_half_mi(GIParams(1.0, 0.5)));
}
