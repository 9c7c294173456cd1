#include "decolab/propagators.hpp"

#include <cmath>
#include <sstream>

#include "decolab/linalg.hpp"

namespace decolab {

std::string_view to_string(PropagatorMethod method) {
  switch (method) {
    case PropagatorMethod::kApproxProduct: return "approx_product";
    case PropagatorMethod::kExactOracle: return "exact_oracle";
    case PropagatorMethod::kExactSpectral: return "exact_spectral";
  }
  return "unknown";
}

std::optional<PropagatorMethod> parse_method(std::string_view name) {
  if (name == "approx_product") return PropagatorMethod::kApproxProduct;
  if (name == "exact_oracle") return PropagatorMethod::kExactOracle;
  if (name == "exact_spectral") return PropagatorMethod::kExactSpectral;
  return std::nullopt;
}

bool is_exact(PropagatorMethod method) { return method != PropagatorMethod::kApproxProduct; }

namespace {

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw Error(ErrorCode::kInvalidArgument, "time must be finite and non-negative");
  }
}

}  // namespace

CijCoefficients cij(double t, const SuperpositionAmplitudes& amps, const EnergyPair& energies) {
  require_time(t);
  const double p = amps.weight0();
  const double q = amps.weight1();
  const Complex ab = std::conj(amps.alpha()) * amps.beta();  // conj(alpha) beta
  const Complex ba = amps.alpha() * std::conj(amps.beta());  // alpha conj(beta)
  const Complex j = std::polar(1.0, t * energies.gap());
  const Complex jinv = std::conj(j);
  const Complex cross = (j + jinv) * p * q;
  const Complex flip = (2.0 - j - jinv) * p * q;

  CijCoefficients c;
  c.j = j;
  c.c11 = p * p + cross + q * q;
  c.c12 = (p - p * j + q * jinv - q) * ab;
  c.c13 = (p + q * j - p * jinv - q) * ba;
  c.c14 = flip;
  c.c41 = flip;
  c.c42 = (q + p * j - q * jinv - p) * ab;
  c.c43 = (q - q * j + p * jinv - p) * ba;
  c.c44 = q * q + cross + p * p;
  return c;
}

Superoperator4 exp_d_hat(double t, const LindbladRates& rates) {
  require_time(t);
  const double mu = rates.mu();
  const double nu = rates.nu();
  const double total = rates.total();
  const double decay = std::exp(-t * total);
  const double coherence = std::exp(-0.5 * t * total);

  Matrix4 m = Matrix4::Zero();
  m(0, 0) = (nu + mu * decay) / total;
  m(0, 3) = nu * (1.0 - decay) / total;
  m(3, 0) = mu * (1.0 - decay) / total;
  m(3, 3) = (mu + nu * decay) / total;
  m(1, 1) = coherence;
  m(2, 2) = coherence;
  return m;
}

Superoperator4 exp_h_hat(double t, const SuperpositionAmplitudes& amps,
                         const EnergyPair& energies) {
  require_time(t);
  const Matrix2 u = dressing_unitary(amps);
  const Matrix4 frame = kron(u, u.conjugate());
  const Complex j = std::polar(1.0, t * energies.gap());
  const Vector4 phases(1.0, j, std::conj(j), 1.0);
  return frame * phases.asDiagonal() * frame.adjoint();
}

Superoperator4 approx_propagator(double t, const TwoLevelModel& model) {
  return exp_d_hat(t, model.rates) * exp_h_hat(t, model.amps, model.energies);
}

Superoperator4 exact_propagator_oracle(double t, const Superoperator4& w) {
  require_time(t);
  const Matrix4 tw = t * w;
  const double norm = inf_norm(tw);
  if (!(norm <= kOracleNormLimit)) {
    std::ostringstream msg;
    msg << "||tW|| = " << norm << " exceeds " << kOracleNormLimit;
    throw Error(ErrorCode::kOverflowGuard, msg.str());
  }
  return expm(tw);
}

Superoperator4 exact_propagator_spectral(double t, const WSpectrum& spectrum) {
  require_time(t);
  Vector4 growth;
  growth(0) = 1.0;
  for (int i = 1; i < 4; ++i) growth(i) = std::exp(t * spectrum.eigenvalues[i]);
  return spectrum.right_eigenvectors() * growth.asDiagonal() * spectrum.o_matrix.transpose();
}

PropagatorFn make_propagator(PropagatorMethod method, const TwoLevelModel& model) {
  switch (method) {
    case PropagatorMethod::kApproxProduct:
      return [model](double t) { return approx_propagator(t, model); };
    case PropagatorMethod::kExactOracle:
      return [w = build_w(model)](double t) { return exact_propagator_oracle(t, w); };
    case PropagatorMethod::kExactSpectral:
      return [s = w_spectrum(model)](double t) { return exact_propagator_spectral(t, s); };
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown propagator method");
}

DensityMatrix2 apply_propagator(const Superoperator4& p, const DensityMatrix2& rho0,
                                PropagatorMethod method) {
  const VectorizedState out(p * vectorize(rho0).components());
  const DensityMatrix2 rho = devectorize(out);
  if (is_exact(method)) {
    if (std::abs(rho.trace() - 1.0) > kEvolveTraceTol) {
      throw Error(ErrorCode::kNonPhysical, "exact evolution lost unit trace");
    }
    if (rho.min_eigenvalue() < kEvolvePositivityFloor) {
      throw Error(ErrorCode::kNonPhysical, "exact evolution lost positivity");
    }
  }
  return rho;
}

DensityMatrix2 evolve(const DensityMatrix2& rho0, double t, PropagatorMethod method,
                      const TwoLevelModel& model) {
  require_time(t);
  if (t == 0.0) return rho0;
  return apply_propagator(make_propagator(method, model)(t), rho0, method);
}

std::vector<double> time_grid(double t_max, int steps) {
  if (steps < 1 || !(t_max > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "time grid needs steps >= 1 and t_max > 0");
  }
  std::vector<double> grid(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) {
    grid[static_cast<std::size_t>(i)] = t_max * static_cast<double>(i) / steps;
  }
  return grid;
}

}  // namespace decolab
