#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "decolab/decolab.hpp"

namespace decolab::cli {

/// Either explicit (mu, nu) or a Born scale, never both.
struct RateSpec {
  std::optional<LindbladRates> explicit_rates;
  std::optional<double> born_scale;
};

/// A parsed scenario file. Born-mode rates are resolved on demand.
struct Scenario {
  SuperpositionAmplitudes amps;
  EnergyPair energies;
  RateSpec rates;
  double t_measure;
  std::optional<double> t_decoherence;
  double t_max;
  int steps;
  DensityMatrix2 initial;
  std::string initial_label;
  std::optional<PropagatorMethod> method;

  LindbladRates resolve_rates() const;
  TwoLevelModel model() const { return {amps, energies, resolve_rates()}; }
  ScenarioConfig config() const;
};

/// Parses the flat JSON scenario object. Every failure is an Error with
/// ErrorCode::kConfig whose message carries a line number where one exists.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace decolab::cli
