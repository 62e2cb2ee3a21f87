#include <gtest/gtest.h>

#include <cmath>

#include "cviso/channel.hpp"
#include "cviso/errors.hpp"
#include "cviso/states.hpp"

using namespace cviso;

TEST(Channel, CoherentInputReference) {
  const auto out = apply(gi_channel(GIParams(1.0, 0.5)), CovarianceMatrix::identity(1));
  EXPECT_NEAR(out(0, 0), 3.07164676831272, 1e-12);
  EXPECT_NEAR(out(1, 1), 3.07164676831272, 1e-12);
  EXPECT_NEAR(out(0, 1), 0.0, 1e-14);
  EXPECT_TRUE(out.entries().isApprox(coherent_output(GIParams(1.0, 0.5)).entries(), 1e-13));
}

TEST(Channel, ThermalInputLessNoisy) {
  const auto out = apply(gi_channel(GIParams(0.1, 1.0)), thermal_mode(2.0));
  EXPECT_NEAR(out(0, 0), 1.01333324, 1e-6);
  EXPECT_LT(out(0, 0), 5.0);
}

// mpmath contraction of the partially transposed Choi blocks
TEST(Channel, ThermalAndSqueezedReference) {
  const auto ch = gi_channel(GIParams(0.6, 0.4));
  const auto th = apply(ch, thermal_mode(1.0));
  EXPECT_NEAR(th(0, 0), 1.73487467462579, 1e-12);
  EXPECT_NEAR(th(1, 1), 1.73487467462579, 1e-12);
  const auto sq = apply(ch, squeezed_thermal_mode(1.0, -0.25));
  EXPECT_NEAR(sq(0, 0), 1.75670181291925, 1e-12);
  EXPECT_NEAR(sq(1, 1), 1.71023382784479, 1e-12);
}

TEST(Channel, VacuumChoiStateGivesVacuumOutput) {
  const auto out = apply(gi_channel(GIParams(0.0, 0.3)), thermal_mode(4.0));
  EXPECT_TRUE(out.entries().isIdentity(1e-14));
}

TEST(Channel, PartialTransposeBlocks) {
  const auto ch = gi_channel(GIParams(1.0, 0.5));
  const Eigen::Matrix4d pt = ch.partial_transpose_matrix();
  EXPECT_DOUBLE_EQ(pt(1, 3), 0.5 * std::sinh(2.0));
  EXPECT_DOUBLE_EQ(pt(0, 2), 0.5 * std::sinh(2.0));
  EXPECT_EQ(ch.pt12()(0, 0), pt(0, 2));
}

TEST(Channel, RejectsBadInputs) {
  const auto ch = gi_channel(GIParams(1.0, 0.5));
  EXPECT_THROW(apply(ch, CovarianceMatrix::identity(2)), DimensionError);
  const CovarianceMatrix sub{Eigen::MatrixXd(0.2 * Eigen::MatrixXd::Identity(2, 2))};
  EXPECT_THROW(apply(ch, sub), DomainError);
  EXPECT_THROW(ChoiChannel(CovarianceMatrix::identity(1)), DimensionError);
  const CovarianceMatrix bad{Eigen::MatrixXd(0.5 * Eigen::MatrixXd::Identity(4, 4))};
  EXPECT_THROW(ChoiChannel{bad}, NumericalError);
  EXPECT_THROW(thermal_mode(-1.0), DomainError);
}

TEST(Channel, OutputIsPhysicalOverGrid) {
  for (double r = 0.0; r <= 2.0; r += 0.25) {
    for (double p = 0.0; p <= 1.0; p += 0.125) {
      const auto out = apply(gi_channel(GIParams(r, p)), squeezed_thermal_mode(0.5, 0.3));
      EXPECT_GE(out.entries().determinant(), 1.0 - 1e-9);
    }
  }
}
