#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "decolab/spectral.hpp"
#include "decolab/superoperator.hpp"

namespace decolab {

enum class PropagatorMethod {
  kApproxProduct,   // e^{tD_hat} e^{tH_hat}
  kExactOracle,     // scaling and squaring of tW
  kExactSpectral,   // diagonalization of W
};

std::string_view to_string(PropagatorMethod method);
/// Accepts "approx_product", "exact_oracle", "exact_spectral".
std::optional<PropagatorMethod> parse_method(std::string_view name);
bool is_exact(PropagatorMethod method);

/// Rows 1 and 4 of e^{tH_hat}, with J = e^{it(E1 - E0)}.
struct CijCoefficients {
  Complex c11, c12, c13, c14;
  Complex c41, c42, c43, c44;
  Complex j;
};

CijCoefficients cij(double t, const SuperpositionAmplitudes& amps, const EnergyPair& energies);

/// Closed form of e^{tD_hat} from the 2x2 population block
/// K = [[-mu, nu], [mu, -nu]] = O diag(0, -(mu + nu)) O^{-1}.
Superoperator4 exp_d_hat(double t, const LindbladRates& rates);

/// e^{tH_hat} = (U (x) conj(U)) diag(1, J, 1/J, 1) (U (x) conj(U))^dagger.
Superoperator4 exp_h_hat(double t, const SuperpositionAmplitudes& amps,
                         const EnergyPair& energies);

/// e^{tD_hat} e^{tH_hat}, dissipative factor applied last.
Superoperator4 approx_propagator(double t, const TwoLevelModel& model);

/// Largest ||tW||_inf the oracle accepts.
inline constexpr double kOracleNormLimit = 1e4;

/// e^{tW} by scaling and squaring. Throws kOverflowGuard past kOracleNormLimit.
Superoperator4 exact_propagator_oracle(double t, const Superoperator4& w);

/// e^{tW} = (O^{-1})^T e^{tD_W} O^T from a precomputed decomposition.
Superoperator4 exact_propagator_spectral(double t, const WSpectrum& spectrum);

/// Time -> propagator for one method and model. The spectral variant
/// decomposes W once up front (and throws kDegenerateSpectrum there).
using PropagatorFn = std::function<Superoperator4(double)>;
PropagatorFn make_propagator(PropagatorMethod method, const TwoLevelModel& model);

/// Trace tolerance and positivity floor enforced on exact-method output.
inline constexpr double kEvolveTraceTol = 1e-9;
inline constexpr double kEvolvePositivityFloor = -1e-8;

/// devectorize(P(t) vectorize(rho0)). Exact methods throw kNonPhysical if the
/// result leaves the trace/positivity tolerances; the approximate product only
/// has its conjugacy and trace checked.
DensityMatrix2 evolve(const DensityMatrix2& rho0, double t, PropagatorMethod method,
                      const TwoLevelModel& model);

/// Applies a propagator and enforces the tolerances appropriate to `method`.
DensityMatrix2 apply_propagator(const Superoperator4& p, const DensityMatrix2& rho0,
                                PropagatorMethod method);

/// t_i = i * t_max / steps for i = 0..steps.
std::vector<double> time_grid(double t_max, int steps);

}  // namespace decolab
