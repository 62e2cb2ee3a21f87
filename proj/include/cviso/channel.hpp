#pragma once

#include "cviso/states.hpp"

namespace cviso {

/// Single-mode Gaussian channel built from a two-mode Choi state.
///
/// Holds the Choi covariance matrix Gamma and the 2x2 blocks of its partial
/// transpose (on the second mode). Only zero-displacement inputs are
/// considered, so the action on first moments is not modelled.
class ChoiChannel {
 public:
  /// Throws DimensionError unless Gamma is 4x4 and NumericalError if it is
  /// not physical.
  explicit ChoiChannel(const CovarianceMatrix& choi_state);

  const CovarianceMatrix& gamma_big() const { return gamma_big_; }
  const Eigen::Matrix2d& pt11() const { return pt11_; }
  const Eigen::Matrix2d& pt12() const { return pt12_; }
  const Eigen::Matrix2d& pt22() const { return pt22_; }

  /// Reassembles the partially transposed Choi matrix from its blocks.
  Eigen::Matrix4d partial_transpose_matrix() const;

 private:
  CovarianceMatrix gamma_big_;
  Eigen::Matrix2d pt11_;
  Eigen::Matrix2d pt12_;
  Eigen::Matrix2d pt22_;
};

ChoiChannel gi_channel(const GIParams& params);

/// gamma' = G11 - G12 (G22 + gamma)^-1 G12^T on the partially transposed
/// Choi blocks. The 2x2 inverse uses the adjugate; |det| < 1e-14 throws
/// NumericalError, as does an unphysical output.
CovarianceMatrix apply(const ChoiChannel& channel, const CovarianceMatrix& gamma_in);

/// Closed-form output for a coherent-state input:
///   (p^2 + (1 - p^2) cosh 2r) * 1.
CovarianceMatrix coherent_output(const GIParams& params);

/// Single-mode thermal state with mean occupation nbar: (2 nbar + 1) * 1.
CovarianceMatrix thermal_mode(double nbar);

/// Single-mode squeezed thermal state diag((2 nbar + 1) e^{-2s}, (2 nbar + 1) e^{2s}).
CovarianceMatrix squeezed_thermal_mode(double nbar, double squeezing);

}  // namespace cviso
