#include "decolab/asymptotics.hpp"

#include <cmath>

namespace decolab {

namespace {
constexpr double kAmplitudeFloor = 1e-12;
}

DensityMatrix2 stationary_approx(const LindbladRates& rates, const DensityMatrix2& rho0) {
  const double trace = rho0.a() + rho0.d();
  return {rates.nu() * trace / rates.total(), 0.0, rates.mu() * trace / rates.total()};
}

LindbladRates born_rates(const SuperpositionAmplitudes& amps, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::kInvalidArgument, "Born scale must be positive");
  }
  if (std::abs(amps.alpha()) < kAmplitudeFloor || std::abs(amps.beta()) < kAmplitudeFloor) {
    throw Error(ErrorCode::kDegenerateAmplitude,
                "|alpha| and |beta| must both be nonzero for strictly positive rates");
  }
  return {scale * amps.weight1(), scale * amps.weight0()};
}

Vector4 zero_mode_limit(const WSpectrum& spectrum, const Vector4& psi0) {
  const Vector4 right = spectrum.right_eigenvectors().col(0);
  const Vector4 left = spectrum.o_matrix.col(0);
  return right * (left.transpose() * psi0)(0) / (left.transpose() * right)(0);
}

Vector4 cofactor_limit(const WSpectrum& spectrum, const Vector4& psi0) {
  Vector4 col;
  for (int j = 0; j < 4; ++j) col(j) = spectrum.cofactors_row1[j] / spectrum.o_det;
  return col * (psi0(0) + psi0(3));
}

AsymptoticReport stationary_exact(const TwoLevelModel& model, const DensityMatrix2& rho0) {
  const WSpectrum spectrum = w_spectrum(model);
  const Vector4 psi0 = vectorize(rho0).components();
  const Vector4 limit = zero_mode_limit(spectrum, psi0);
  const DensityMatrix2 rho_limit = devectorize(VectorizedState(limit));
  if (rho_limit.min_eigenvalue() < -1e-9) {
    throw Error(ErrorCode::kNonPhysical, "zero-mode limit is not positive semidefinite");
  }

  const Vector4 from0 = zero_mode_limit(spectrum, vectorize(DensityMatrix2::ket0()).components());
  const Vector4 from1 = zero_mode_limit(spectrum, vectorize(DensityMatrix2::ket1()).components());

  const double probe = kProbeDecades / spectrum.min_decay_rate();
  const Matrix4 w = build_w(model);
  int squarings = 0;
  while (std::ldexp(probe, -squarings) * inf_norm(w) > kOracleNormLimit) ++squarings;
  Matrix4 far = exact_propagator_oracle(std::ldexp(probe, -squarings), w);
  for (int i = 0; i < squarings; ++i) far = far * far;
  const double residual = (far * psi0 - limit).cwiseAbs().maxCoeff();

  return {rho_limit, PropagatorMethod::kExactSpectral, residual, probe,
          (from0 - from1).cwiseAbs().maxCoeff(), std::nullopt};
}

}  // namespace decolab
