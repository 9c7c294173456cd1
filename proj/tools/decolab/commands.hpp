#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "decolab/scenario.hpp"

namespace decolab::cli {

enum class OutputFormat { kCsv, kJson };

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDomain = 3;

inline constexpr double kDefaultReportTol = 1e-9;
inline constexpr double kBornCheckTol = 1e-12;
inline constexpr double kZassenhausWindow = 0.3;
inline constexpr int kZassenhausHalvings = 5;

/// Report tolerance from DECOLAB_TOL, falling back to kDefaultReportTol.
/// Throws kConfig when the variable is set but not a positive number.
double report_tolerance();

/// Fixed-precision (12 significant digits) rendering shared by CSV and JSON.
std::string format_number(double value);

void cmd_evolve(const Scenario& scenario, PropagatorMethod method, OutputFormat format,
                std::ostream& out, double report_tol);
void cmd_compare(const Scenario& scenario, std::ostream& out, double report_tol);
void cmd_spectrum(const Scenario& scenario, std::ostream& out);
/// Returns false when the Born weights miss kBornCheckTol.
bool cmd_born_check(const Scenario& scenario, std::optional<double> scale, std::ostream& out);
void cmd_zassenhaus_check(int order, std::uint64_t seed, std::ostream& out);

/// Full command-line entry point. Returns 0, 2 or 3.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace decolab::cli
