#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "decolab/decolab.hpp"

namespace decolab::testing {

/// Deterministic draws for property tests, built on raw 64-bit engine output.
class Draws {
 public:
  explicit Draws(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  double normal() {
    // Box-Muller on two uniforms in (0, 1].
    const double u1 = 1.0 - uniform(0.0, 1.0);
    const double u2 = uniform(0.0, 1.0);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  Complex complex_normal() { return {normal(), normal()}; }

  SuperpositionAmplitudes amplitudes() {
    return make_amplitudes(complex_normal(), complex_normal(), Normalization::kRescale);
  }

  /// Amplitudes with min(|alpha|, |beta|) >= floor.
  SuperpositionAmplitudes amplitudes_with_floor(double floor) {
    for (;;) {
      auto amps = amplitudes();
      if (std::min(std::abs(amps.alpha()), std::abs(amps.beta())) >= floor) return amps;
    }
  }

  /// Amplitudes clearly inside Case B: ||alpha|^2 - |beta|^2| >= 0.05.
  SuperpositionAmplitudes case_b_amplitudes() {
    for (;;) {
      auto amps = amplitudes();
      if (std::abs(amps.weight0() - amps.weight1()) >= 0.05) return amps;
    }
  }

  /// |alpha| = |beta| with random phases.
  SuperpositionAmplitudes balanced_amplitudes() {
    const double s = std::sqrt(0.5);
    return make_amplitudes(std::polar(s, uniform(0.0, 6.283185307179586)),
                           std::polar(s, uniform(0.0, 6.283185307179586)),
                           Normalization::kRescale);
  }

  EnergyPair energies() {
    const double e0 = uniform(-2.0, 2.0);
    return {e0, e0 + uniform(0.1, 3.0)};
  }

  LindbladRates rates() { return {uniform(0.1, 3.0), uniform(0.1, 3.0)}; }

  TwoLevelModel model() { return {amplitudes(), energies(), rates()}; }
  TwoLevelModel case_b_model() { return {case_b_amplitudes(), energies(), rates()}; }

  DensityMatrix2 state() {
    // Mixture of a random pure state with the maximally mixed state.
    const auto amps = amplitudes();
    const double w = uniform(0.0, 1.0);
    const DensityMatrix2 pure = DensityMatrix2::pure(amps);
    return {w * pure.a() + (1.0 - w) * 0.5, w * pure.b(), w * pure.d() + (1.0 - w) * 0.5};
  }

  Matrix2 matrix2() {
    Matrix2 m;
    for (int i = 0; i < 4; ++i) m(i / 2, i % 2) = complex_normal();
    return m;
  }

 private:
  std::mt19937_64 engine_;
};

inline double max_abs(const MatrixX& m) { return m.cwiseAbs().maxCoeff(); }

/// Reference exponential from Eigen's Pade-based MatrixFunctions module.
inline Matrix4 reference_expm(const Matrix4& a) { return a.exp(); }
inline MatrixX reference_expm(const MatrixX& a) { return a.exp(); }

inline std::vector<Complex> reference_eigenvalues(const Matrix4& a) {
  Eigen::ComplexEigenSolver<Matrix4> solver(a, false);
  const auto& ev = solver.eigenvalues();
  return {ev(0), ev(1), ev(2), ev(3)};
}

/// Largest distance from each value in `got` to its nearest unused partner in
/// `want` (greedy matching; fine for well separated sets).
inline double multiset_distance(std::vector<Complex> got, std::vector<Complex> want) {
  double worst = 0.0;
  for (const Complex g : got) {
    auto best = std::min_element(want.begin(), want.end(), [g](Complex x, Complex y) {
      return std::abs(x - g) < std::abs(y - g);
    });
    worst = std::max(worst, std::abs(*best - g));
    want.erase(best);
  }
  return worst;
}

/// det(lambda I - W) by cofactor expansion, independent of the cubic.
inline Complex characteristic_polynomial(const Matrix4& w, Complex lambda) {
  const Matrix4 m = lambda * Matrix4::Identity() - w;
  return m.determinant();
}

}  // namespace decolab::testing
