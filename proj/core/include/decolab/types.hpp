#pragma once

#include <complex>
#include <optional>

#include <Eigen/Dense>

#include "decolab/error.hpp"

namespace decolab {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Vector4 = Eigen::Vector4cd;
using MatrixX = Eigen::MatrixXcd;

/// Acceptance tolerance for |alpha|^2 + |beta|^2 = 1.
inline constexpr double kAmplitudeNormTol = 1e-12;
/// Trace and positivity tolerance applied when a density matrix is built.
inline constexpr double kStateTol = 1e-10;
/// Conjugacy/trace tolerance for turning a 4-vector back into a state.
inline constexpr double kDevectorizeTol = 1e-8;

class VectorizedState;

enum class Normalization { kRequire, kRescale };

/// Amplitudes (alpha, beta) of the prepared state alpha|0> + beta|1>.
class SuperpositionAmplitudes {
 public:
  Complex alpha() const noexcept { return alpha_; }
  Complex beta() const noexcept { return beta_; }
  double weight0() const noexcept { return std::norm(alpha_); }
  double weight1() const noexcept { return std::norm(beta_); }

  friend SuperpositionAmplitudes make_amplitudes(Complex alpha, Complex beta,
                                                 Normalization mode);

 private:
  SuperpositionAmplitudes(Complex alpha, Complex beta) : alpha_(alpha), beta_(beta) {}

  Complex alpha_;
  Complex beta_;
};

/// Throws kZeroVector for (0, 0) and, under kRequire, kNotNormalized when the
/// squared norm is off by more than kAmplitudeNormTol.
SuperpositionAmplitudes make_amplitudes(Complex alpha, Complex beta,
                                        Normalization mode = Normalization::kRequire);

/// Bare energies E0 < E1 of the undriven atom (hbar = 1).
class EnergyPair {
 public:
  EnergyPair(double e0, double e1);

  double e0() const noexcept { return e0_; }
  double e1() const noexcept { return e1_; }
  double gap() const noexcept { return e1_ - e0_; }

 private:
  double e0_;
  double e1_;
};

/// Dissipator rates: mu drives |0> -> |1>, nu drives |1> -> |0>.
class LindbladRates {
 public:
  LindbladRates(double mu, double nu);

  double mu() const noexcept { return mu_; }
  double nu() const noexcept { return nu_; }
  double total() const noexcept { return mu_ + nu_; }

 private:
  double mu_;
  double nu_;
};

class DensityMatrix2 {
 public:
  /// Validates unit trace and positive semidefiniteness within kStateTol.
  DensityMatrix2(double a, Complex b, double d);

  static DensityMatrix2 ket0() { return {1.0, 0.0, 0.0}; }
  static DensityMatrix2 ket1() { return {0.0, 0.0, 1.0}; }
  static DensityMatrix2 plus() { return {0.5, 0.5, 0.5}; }
  static DensityMatrix2 maximally_mixed() { return {0.5, 0.0, 0.5}; }
  static DensityMatrix2 pure(const SuperpositionAmplitudes& amps);

  double a() const noexcept { return a_; }
  Complex b() const noexcept { return b_; }
  double d() const noexcept { return d_; }

  double trace() const noexcept { return a_ + d_; }
  double coherence() const noexcept { return std::abs(b_); }
  double min_eigenvalue() const noexcept;
  Matrix2 matrix() const;

  friend bool operator==(const DensityMatrix2&, const DensityMatrix2&) = default;

 private:
  struct Unchecked {};
  DensityMatrix2(Unchecked, double a, Complex b, double d) : a_(a), b_(b), d_(d) {}
  friend DensityMatrix2 devectorize(const VectorizedState& psi);

  double a_;
  Complex b_;
  double d_;
};

/// Hermitian [[h, k], [conj(k), l]].
struct TwoLevelHamiltonian {
  double h;
  Complex k;
  double l;

  Matrix2 matrix() const;
};

/// The column (a, b, conj(b), d) the master equation acts on.
class VectorizedState {
 public:
  VectorizedState() : components_(Vector4::Zero()) {}
  explicit VectorizedState(const Vector4& components) : components_(components) {}

  const Vector4& components() const noexcept { return components_; }
  Complex operator[](Eigen::Index i) const { return components_(i); }

  /// Max of the conjugacy defect |c2 - conj(c1)| and the trace defect |c0 + c3 - 1|.
  double physicality_defect() const;

 private:
  Vector4 components_;
};

VectorizedState vectorize(const DensityMatrix2& rho);

/// Throws kNonPhysical when conjugacy or trace is off by more than
/// kDevectorizeTol. Positivity is left to the caller.
DensityMatrix2 devectorize(const VectorizedState& psi);

/// U = [[alpha, -conj(beta)], [beta, conj(alpha)]], special unitary.
Matrix2 dressing_unitary(const SuperpositionAmplitudes& amps);

/// U diag(E0, E1) U^dagger in closed form; alpha|0> + beta|1> is its ground state.
TwoLevelHamiltonian dressed_hamiltonian(const SuperpositionAmplitudes& amps,
                                        const EnergyPair& energies);

/// Everything that fixes the generator W.
struct TwoLevelModel {
  SuperpositionAmplitudes amps;
  EnergyPair energies;
  LindbladRates rates;

  TwoLevelHamiltonian hamiltonian() const { return dressed_hamiltonian(amps, energies); }
};

struct ScenarioConfig {
  TwoLevelModel model;
  double t_measure;
  std::optional<double> t_decoherence;  // annotation only
  double t_max;
  int steps;
  DensityMatrix2 initial_state;

  /// Throws kInvalidArgument unless t_measure > 0, t_max > 0 and steps >= 1.
  void validate() const;
};

}  // namespace decolab
