#include "decolab/superoperator.hpp"

namespace decolab {

namespace pauli {

Matrix2 identity() { return Matrix2::Identity(); }

Matrix2 sigma1() {
  Matrix2 m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Matrix2 sigma2() {
  const Complex i(0.0, 1.0);
  Matrix2 m;
  m << 0.0, -i, i, 0.0;
  return m;
}

Matrix2 sigma3() {
  Matrix2 m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

Matrix2 sigma_plus() {
  Matrix2 m;
  m << 0.0, 1.0, 0.0, 0.0;
  return m;
}

Matrix2 sigma_minus() {
  Matrix2 m;
  m << 0.0, 0.0, 1.0, 0.0;
  return m;
}

}  // namespace pauli

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

Superoperator4 build_h_hat(const TwoLevelHamiltonian& ham) {
  const Matrix2 h = ham.matrix();
  const Matrix2 one = Matrix2::Identity();
  return Complex(0.0, -1.0) * (kron(h, one) - kron(one, h.transpose()));
}

Superoperator4 build_h_hat_explicit(const TwoLevelHamiltonian& ham) {
  const Complex k = ham.k;
  const Complex kc = std::conj(k);
  const double split = ham.l - ham.h;
  Matrix4 m;
  // clang-format off
  m << 0.0,  -kc,    k,      0.0,
       -k,   -split, 0.0,    k,
       kc,   0.0,    split,  -kc,
       0.0,  kc,     -k,     0.0;
  // clang-format on
  return Complex(0.0, -1.0) * m;
}

Superoperator4 build_d_hat(const LindbladRates& rates) {
  const double mu = rates.mu();
  const double nu = rates.nu();
  const double half = 0.5 * (mu + nu);
  Matrix4 m;
  // clang-format off
  m << -mu, 0.0,   0.0,   nu,
       0.0, -half, 0.0,   0.0,
       0.0, 0.0,   -half, 0.0,
       mu,  0.0,   0.0,   -nu;
  // clang-format on
  return m;
}

Matrix2 dissipator_apply(const DensityMatrix2& rho, const LindbladRates& rates) {
  const Matrix2 r = rho.matrix();
  const Matrix2 sp = pauli::sigma_plus();
  const Matrix2 sm = pauli::sigma_minus();
  const Matrix2 pm = sp * sm;
  const Matrix2 mp = sm * sp;
  const Matrix2 decay = sm * r * sp - 0.5 * (pm * r + r * pm);
  const Matrix2 pump = sp * r * sm - 0.5 * (mp * r + r * mp);
  return rates.mu() * decay + rates.nu() * pump;
}

Superoperator4 build_w(const TwoLevelHamiltonian& ham, const LindbladRates& rates) {
  return build_h_hat(ham) + build_d_hat(rates);
}

Superoperator4 build_w(const TwoLevelModel& model) {
  return build_w(model.hamiltonian(), model.rates);
}

}  // namespace decolab
