#include "cviso/channel.hpp"

#include <cmath>
#include <string>

#include "cviso/errors.hpp"

namespace cviso {

namespace {

constexpr double kSingularDeterminant = 1e-14;

}  // namespace

ChoiChannel::ChoiChannel(const CovarianceMatrix& choi_state) : gamma_big_(choi_state) {
  if (choi_state.n_modes() != 2) {
    throw DimensionError("Choi state must be a two-mode covariance matrix");
  }
  if (!is_physical(choi_state).physical) {
    throw NumericalError("Choi state covariance matrix is not physical");
  }
  const CovarianceMatrix pt = partial_transpose(choi_state, 1);
  pt11_ = pt.block(0, 0);
  pt12_ = pt.block(0, 1);
  pt22_ = pt.block(1, 1);
}

Eigen::Matrix4d ChoiChannel::partial_transpose_matrix() const {
  Eigen::Matrix4d m;
  m << pt11_, pt12_, pt12_.transpose(), pt22_;
  return m;
}

ChoiChannel gi_channel(const GIParams& params) { return ChoiChannel(gamma_gi(params)); }

CovarianceMatrix apply(const ChoiChannel& channel, const CovarianceMatrix& gamma_in) {
  if (gamma_in.n_modes() != 1) {
    throw DimensionError("channel input must be a single-mode covariance matrix");
  }
  if (!is_physical(gamma_in).physical) {
    throw DomainError("channel input covariance matrix is not physical");
  }
  const Eigen::Matrix2d m = channel.pt22() + gamma_in.block(0, 0);
  const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (std::abs(det) < kSingularDeterminant) {
    throw NumericalError("singular (Gamma~22 + gamma) in channel contraction, det = " +
                         std::to_string(det));
  }
  Eigen::Matrix2d inverse;
  inverse << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  inverse /= det;

  const Eigen::Matrix2d out =
      channel.pt11() - channel.pt12() * inverse * channel.pt12().transpose();
  CovarianceMatrix result{Eigen::MatrixXd(out)};
  if (!is_physical(result).physical) {
    throw NumericalError("channel output is not physical");
  }
  return result;
}

CovarianceMatrix coherent_output(const GIParams& params) {
  const double p2 = params.p() * params.p();
  const double v = p2 + (1.0 - p2) * std::cosh(2.0 * params.r());
  return CovarianceMatrix(Eigen::MatrixXd(v * Eigen::Matrix2d::Identity()));
}

CovarianceMatrix thermal_mode(double nbar) {
  if (!(nbar >= 0.0)) throw DomainError("mean occupation nbar must be >= 0");
  return CovarianceMatrix(Eigen::MatrixXd((2.0 * nbar + 1.0) * Eigen::Matrix2d::Identity()));
}

CovarianceMatrix squeezed_thermal_mode(double nbar, double squeezing) {
  if (!(nbar >= 0.0)) throw DomainError("mean occupation nbar must be >= 0");
  const double v = 2.0 * nbar + 1.0;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
  m(0, 0) = v * std::exp(-2.0 * squeezing);
  m(1, 1) = v * std::exp(2.0 * squeezing);
  return CovarianceMatrix(std::move(m));
}

}  // namespace cviso
