#pragma once

#include <array>

#include "decolab/linalg.hpp"
#include "decolab/superoperator.hpp"

namespace decolab {

/// f(L) = L^3 + a2 L^2 + a1 L + a0 in the shifted variable L = lambda + (mu + nu)/2.
struct CubicCoefficients {
  double a2;  // (mu + nu) / 2
  double a1;  // (E1 - E0)^2
  double a0;  // (E1 - E0)^2 (|alpha|^2 - |beta|^2)^2 (mu + nu) / 2

  double operator()(double x) const { return ((x + a2) * x + a1) * x + a0; }
  Complex operator()(Complex z) const { return ((z + a2) * z + a1) * z + a0; }
  double derivative(double x) const { return (3.0 * x + 2.0 * a2) * x + a1; }
  Complex derivative(Complex z) const { return (3.0 * z + 2.0 * a2) * z + a1; }

  /// max(1, |a2|, |a1|, |a0|), the yardstick for residual tolerances.
  double scale() const;
};

/// Coefficients from (alpha, beta, E0, E1, mu, nu). a0 is set to exactly zero
/// when ||alpha|^2 - |beta|^2| <= 1e-12.
CubicCoefficients characteristic_cubic(const TwoLevelModel& model);

/// The same cubic from the Hamiltonian entries: a1 = (l - h)^2 + 4|k|^2 and
/// a0 = (l - h)^2 (mu + nu) / 2.
CubicCoefficients characteristic_cubic(const TwoLevelHamiltonian& ham,
                                       const LindbladRates& rates);

enum class CubicCase {
  kA,  // |alpha| = |beta|, a0 = 0
  kB,  // |alpha| != |beta|
};

struct CubicRoots {
  double real_root;  // the root isolated in [-a2, 0]
  Complex plus;
  Complex minus;
  CubicCase root_case;

  std::array<Complex, 3> all() const { return {Complex(real_root), plus, minus}; }
};

/// Dispatches on a0: closed form for Case A, bracketed isolation otherwise.
CubicRoots solve_cubic(const CubicCoefficients& cubic);

/// Closed form for a0 = 0: roots 0 and (-a2 +- sqrt(a2^2 - 4 a1)) / 2.
CubicRoots solve_cubic_case_a(const CubicCoefficients& cubic);

/// General path: isolate a real root on [-a2, 0] by bisection to width 1e-6,
/// polish with safeguarded Newton, deflate to the quadratic
/// L^2 + (L0 + a2) L + (L0^2 + a2 L0 + a1). Works for a0 = 0 as well.
/// Throws kBracketFailure when f(0) < 0 or f(-a2) > 0 beyond roundoff.
CubicRoots solve_cubic_bracketed(const CubicCoefficients& cubic);

/// Eigen-decomposition of W. Following the transpose convention
/// W^T = O D O^{-1}, the columns of `o_matrix` are eigenvectors of W^T, with
/// the zero mode scaled so its first component is 1. Eigenvectors of W itself
/// are the columns of (O^{-1})^T.
struct WSpectrum {
  CubicCoefficients cubic;
  CubicRoots roots;
  std::array<Complex, 4> eigenvalues;  // eigenvalues[0] is exactly 0
  Matrix4 o_matrix;
  Matrix4 o_inverse;
  Complex o_det;
  std::array<Complex, 4> cofactors_row1;  // o_det * first row of o_inverse

  Matrix4 right_eigenvectors() const { return o_inverse.transpose(); }
  double min_decay_rate() const;  // min |Re lambda_i| over i = 2..4
  bool sign_conditions_hold() const;
};

/// Minimum pairwise eigenvalue gap below which the decomposition is refused.
inline constexpr double kDegeneracyGap = 1e-8;

/// Throws kDegenerateSpectrum if two eigenvalues are closer than kDegeneracyGap
/// or an eigenvalue has a null space of dimension > 1.
WSpectrum w_spectrum(const TwoLevelModel& model);

/// Null vector of a rank-3 matrix by three steps of full-pivot elimination.
/// Throws kDegenerateSpectrum when the third pivot falls below `pivot_tol`.
Vector4 null_vector(const Matrix4& a, double pivot_tol);

}  // namespace decolab
