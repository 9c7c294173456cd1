#pragma once

#include "decolab/types.hpp"

namespace decolab {

/// Max-row-sum norm.
template <typename Derived>
double inf_norm(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().rowwise().sum().maxCoeff();
}

/// Matrix exponential by scaling and squaring around a truncated Taylor core.
///
/// The argument is scaled by 2^-s until its infinity norm is at most 0.5, the
/// series is summed until a term drops below 1e-18 in norm, and the result is
/// squared s times. No overflow guard; callers that need one add it.
MatrixX expm(const MatrixX& a);
Matrix4 expm(const Matrix4& a);

}  // namespace decolab
