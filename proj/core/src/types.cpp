#include "decolab/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace decolab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kInvalidEnergies: return "InvalidEnergies";
    case ErrorCode::kInvalidRates: return "InvalidRates";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNonPhysical: return "NonPhysical";
    case ErrorCode::kOverflowGuard: return "OverflowGuard";
    case ErrorCode::kBracketFailure: return "BracketFailure";
    case ErrorCode::kDegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::kDegenerateAmplitude: return "DegenerateAmplitude";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kDegenerateCase: return "DegenerateCase";
    case ErrorCode::kConfig: return "ConfigError";
  }
  return "Unknown";
}

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

SuperpositionAmplitudes make_amplitudes(Complex alpha, Complex beta, Normalization mode) {
  if (!finite(alpha) || !finite(beta)) {
    throw Error(ErrorCode::kInvalidArgument, "amplitudes must be finite");
  }
  const double norm2 = std::norm(alpha) + std::norm(beta);
  if (norm2 == 0.0) {
    throw Error(ErrorCode::kZeroVector, "alpha and beta are both zero");
  }
  if (mode == Normalization::kRescale) {
    const double scale = 1.0 / std::sqrt(norm2);
    return {alpha * scale, beta * scale};
  }
  if (std::abs(norm2 - 1.0) > kAmplitudeNormTol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "|alpha|^2 + |beta|^2 = " << norm2;
    throw Error(ErrorCode::kNotNormalized, msg.str());
  }
  return {alpha, beta};
}

EnergyPair::EnergyPair(double e0, double e1) : e0_(e0), e1_(e1) {
  if (!std::isfinite(e0) || !std::isfinite(e1) || !(e0 < e1)) {
    throw Error(ErrorCode::kInvalidEnergies, "need finite energies with e0 < e1");
  }
}

LindbladRates::LindbladRates(double mu, double nu) : mu_(mu), nu_(nu) {
  if (!std::isfinite(mu) || !std::isfinite(nu) || !(mu > 0.0) || !(nu > 0.0)) {
    throw Error(ErrorCode::kInvalidRates, "need finite rates mu > 0 and nu > 0");
  }
}

DensityMatrix2::DensityMatrix2(double a, Complex b, double d) : a_(a), b_(b), d_(d) {
  if (!std::isfinite(a) || !std::isfinite(d) || !finite(b)) {
    throw Error(ErrorCode::kNonPhysical, "density matrix entries must be finite");
  }
  if (std::abs(a + d - 1.0) > kStateTol) {
    throw Error(ErrorCode::kNonPhysical, "trace differs from 1");
  }
  if (a < -kStateTol || d < -kStateTol || a * d - std::norm(b) < -kStateTol) {
    throw Error(ErrorCode::kNonPhysical, "density matrix is not positive semidefinite");
  }
}

DensityMatrix2 DensityMatrix2::pure(const SuperpositionAmplitudes& amps) {
  return {amps.weight0(), amps.alpha() * std::conj(amps.beta()), amps.weight1()};
}

double DensityMatrix2::min_eigenvalue() const noexcept {
  const double mean = 0.5 * (a_ + d_);
  const double half_split = 0.5 * (a_ - d_);
  return mean - std::sqrt(half_split * half_split + std::norm(b_));
}

Matrix2 DensityMatrix2::matrix() const {
  Matrix2 m;
  m << a_, b_, std::conj(b_), d_;
  return m;
}

Matrix2 TwoLevelHamiltonian::matrix() const {
  Matrix2 m;
  m << h, k, std::conj(k), l;
  return m;
}

double VectorizedState::physicality_defect() const {
  const auto& c = components_;
  return std::max({std::abs(c(2) - std::conj(c(1))), std::abs(c(0) + c(3) - 1.0),
                   std::abs(c(0).imag()), std::abs(c(3).imag())});
}

VectorizedState vectorize(const DensityMatrix2& rho) {
  return VectorizedState(Vector4(rho.a(), rho.b(), std::conj(rho.b()), rho.d()));
}

DensityMatrix2 devectorize(const VectorizedState& psi) {
  const auto& c = psi.components();
  if (!c.allFinite()) {
    throw Error(ErrorCode::kNonPhysical, "state vector has non-finite components");
  }
  if (psi.physicality_defect() > kDevectorizeTol) {
    throw Error(ErrorCode::kNonPhysical, "state vector violates conjugacy or unit trace");
  }
  const Complex b = 0.5 * (c(1) + std::conj(c(2)));
  return DensityMatrix2(DensityMatrix2::Unchecked{}, c(0).real(), b, c(3).real());
}

Matrix2 dressing_unitary(const SuperpositionAmplitudes& amps) {
  const Complex alpha = amps.alpha();
  const Complex beta = amps.beta();
  Matrix2 u;
  u << alpha, -std::conj(beta), beta, std::conj(alpha);
  return u;
}

TwoLevelHamiltonian dressed_hamiltonian(const SuperpositionAmplitudes& amps,
                                        const EnergyPair& energies) {
  const double p0 = amps.weight0();
  const double p1 = amps.weight1();
  const double e0 = energies.e0();
  const double e1 = energies.e1();
  return {p0 * e0 + p1 * e1, amps.alpha() * std::conj(amps.beta()) * (e0 - e1),
          p1 * e0 + p0 * e1};
}

void ScenarioConfig::validate() const {
  if (!(t_measure > 0.0) || !std::isfinite(t_measure)) {
    throw Error(ErrorCode::kInvalidArgument, "t_measure must be positive");
  }
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw Error(ErrorCode::kInvalidArgument, "t_max must be positive");
  }
  if (steps < 1) {
    throw Error(ErrorCode::kInvalidArgument, "steps must be at least 1");
  }
}

}  // namespace decolab
