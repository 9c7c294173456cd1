#pragma once

#include <optional>
#include <utility>

#include "decolab/propagators.hpp"

namespace decolab {

struct AsymptoticReport {
  DensityMatrix2 rho_limit;
  PropagatorMethod method;
  double residual;      // ||e^{TW} Psi0 - Psi_limit||_inf at the probe time
  double probe_time;    // T = 60 / min |Re lambda_i|, i = 2..4
  double basis_spread;  // ||limit from |0><0| - limit from |1><1|||_inf
  std::optional<std::pair<double, double>> born_weights;
};

/// Long-time limit of the approximate product: diag(nu, mu) (a0 + d0) / (mu + nu).
DensityMatrix2 stationary_approx(const LindbladRates& rates, const DensityMatrix2& rho0);

/// Rates with nu / (mu + nu) = |alpha|^2 and mu / (mu + nu) = |beta|^2:
/// nu = scale |alpha|^2, mu = scale |beta|^2. Throws kDegenerateAmplitude
/// when |alpha| or |beta| is below 1e-12 and kInvalidArgument for scale <= 0.
LindbladRates born_rates(const SuperpositionAmplitudes& amps, double scale);

/// Probe time factor: the slowest transient has decayed by e^{-60} at T.
inline constexpr double kProbeDecades = 60.0;

/// Exact t -> infinity limit via the spectral projector onto the zero mode
/// of W, cross-checked by oracle propagation to the probe time.
/// Propagates kDegenerateSpectrum.
AsymptoticReport stationary_exact(const TwoLevelModel& model, const DensityMatrix2& rho0);

/// Projects Psi0 onto the zero mode: r (l . Psi0) / (l . r), with r and l the
/// right and left null vectors of W.
Vector4 zero_mode_limit(const WSpectrum& spectrum, const Vector4& psi0);

/// The cofactor expression (1/|O|) (O_11, O_12, O_13, O_14)^T (Psi0_1 + Psi0_4).
/// Diagnostic reproduction of the closed-form limit.
Vector4 cofactor_limit(const WSpectrum& spectrum, const Vector4& psi0);

}  // namespace decolab
