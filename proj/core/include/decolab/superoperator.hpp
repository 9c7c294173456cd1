#pragma once

#include "decolab/types.hpp"

namespace decolab {

/// 4x4 generator acting on the (a, b, conj(b), d) column.
using Superoperator4 = Matrix4;

namespace pauli {

Matrix2 identity();
Matrix2 sigma1();
Matrix2 sigma2();
Matrix2 sigma3();
/// (sigma1 + i sigma2) / 2 = |0><1|
Matrix2 sigma_plus();
/// (sigma1 - i sigma2) / 2 = |1><0|
Matrix2 sigma_minus();

}  // namespace pauli

Matrix4 kron(const Matrix2& a, const Matrix2& b);

/// Coherent part -i (H (x) 1 - 1 (x) H^T), assembled from Kronecker products.
Superoperator4 build_h_hat(const TwoLevelHamiltonian& ham);

/// Same generator written out entry by entry. Kept as an independent route
/// for cross-checking the Kronecker assembly.
Superoperator4 build_h_hat_explicit(const TwoLevelHamiltonian& ham);

/// Dissipative part for the sigma_minus (rate mu) / sigma_plus (rate nu) pair.
Superoperator4 build_d_hat(const LindbladRates& rates);

/// D(rho) evaluated directly in the 2x2 operator algebra.
Matrix2 dissipator_apply(const DensityMatrix2& rho, const LindbladRates& rates);

/// W = H_hat + D_hat.
Superoperator4 build_w(const TwoLevelHamiltonian& ham, const LindbladRates& rates);
Superoperator4 build_w(const TwoLevelModel& model);

}  // namespace decolab
