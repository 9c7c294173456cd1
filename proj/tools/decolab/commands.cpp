#include "decolab/commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <random>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace decolab::cli {
namespace {

using Json = nlohmann::ordered_json;

// Rounds through the 12-digit printed form.
double tidy(double value) {
  if (!std::isfinite(value)) return value;
  return std::strtod(format_number(value).c_str(), nullptr);
}

Json complex_json(Complex z) { return Json::array({tidy(z.real()), tidy(z.imag())}); }

Json rho_json(const DensityMatrix2& rho) {
  return Json{{"a", tidy(rho.a())},
              {"b_re", tidy(rho.b().real())},
              {"b_im", tidy(rho.b().imag())},
              {"d", tidy(rho.d())}};
}

Json scenario_json(const Scenario& s) {
  Json p;
  p["alpha"] = complex_json(s.amps.alpha());
  p["beta"] = complex_json(s.amps.beta());
  p["e0"] = tidy(s.energies.e0());
  p["e1"] = tidy(s.energies.e1());
  if (s.rates.explicit_rates) {
    p["mu"] = tidy(s.rates.explicit_rates->mu());
    p["nu"] = tidy(s.rates.explicit_rates->nu());
  } else {
    p["born_scale"] = tidy(*s.rates.born_scale);
  }
  p["t_measure"] = tidy(s.t_measure);
  p["t_decoherence"] = s.t_decoherence ? Json(tidy(*s.t_decoherence)) : Json(nullptr);
  p["t_max"] = tidy(s.t_max);
  p["steps"] = s.steps;
  p["initial"] = s.initial_label;
  if (s.initial_label == "custom") p["initial_state"] = rho_json(s.initial);
  return p;
}

double rho_distance(const DensityMatrix2& x, const DensityMatrix2& y) {
  return inf_norm(Matrix2(x.matrix() - y.matrix()));
}

struct Row {
  double t;
  DensityMatrix2 rho;
};

void write_csv_row(std::ostream& out, const Row& row) {
  const auto& r = row.rho;
  out << format_number(row.t) << ',' << format_number(r.a()) << ','
      << format_number(r.b().real()) << ',' << format_number(r.b().imag()) << ','
      << format_number(r.d()) << ',' << format_number(std::abs(r.trace() - 1.0)) << ','
      << format_number(r.min_eigenvalue()) << ',' << format_number(r.coherence()) << '\n';
}

Json row_json(const Row& row) {
  const auto& r = row.rho;
  return Json{{"t", tidy(row.t)},
              {"a", tidy(r.a())},
              {"b_re", tidy(r.b().real())},
              {"b_im", tidy(r.b().imag())},
              {"d", tidy(r.d())},
              {"trace_err", tidy(std::abs(r.trace() - 1.0))},
              {"min_eig", tidy(r.min_eigenvalue())},
              {"coherence", tidy(r.coherence())}};
}

// Uniform on [0, 1) from the top 53 bits of each draw.
class SeededDraws {
 public:
  explicit SeededDraws(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  TwoLevelModel model() {
    const double theta = uniform(0.1, std::numbers::pi / 2 - 0.1);
    const double phi0 = uniform(0.0, 2 * std::numbers::pi);
    const double phi1 = uniform(0.0, 2 * std::numbers::pi);
    const auto amps = make_amplitudes(std::polar(std::cos(theta), phi0),
                                      std::polar(std::sin(theta), phi1), Normalization::kRescale);
    const double e0 = uniform(-2.0, 2.0);
    const double gap = uniform(0.1, 3.0);
    const double mu = uniform(0.1, 3.0);
    const double nu = uniform(0.1, 3.0);
    return {amps, EnergyPair(e0, e0 + gap), LindbladRates(mu, nu)};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  std::string text(buffer);
  if (text == "-0") return "0";
  return text;
}

double report_tolerance() {
  const char* raw = std::getenv("DECOLAB_TOL");
  if (raw == nullptr || *raw == '\0') return kDefaultReportTol;
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorCode::kConfig, std::string("DECOLAB_TOL must be a positive number, got '") +
                                        raw + "'");
  }
  return value;
}

void cmd_evolve(const Scenario& scenario, PropagatorMethod method, OutputFormat format,
                std::ostream& out, double report_tol) {
  const ScenarioConfig config = scenario.config();
  const PropagatorFn propagator = make_propagator(method, config.model);

  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(config.steps) + 1);
  Json warnings = Json::array();
  for (const double t : time_grid(config.t_max, config.steps)) {
    Row row{t, apply_propagator(propagator(t), config.initial_state, method)};
    const double min_eig = row.rho.min_eigenvalue();
    if (min_eig < -report_tol) {
      warnings.push_back(Json{{"t", tidy(t)}, {"min_eig", tidy(min_eig)}});
    }
    rows.push_back(row);
  }

  Json meta;
  meta["command"] = "evolve";
  meta["method"] = std::string(to_string(method));
  meta["parameters"] = scenario_json(scenario);
  const LindbladRates rates = config.model.rates;
  meta["rates"] = Json{{"mu", tidy(rates.mu())}, {"nu", tidy(rates.nu())}};
  meta["report_tol"] = tidy(report_tol);
  meta["positivity_warnings"] = warnings;

  if (format == OutputFormat::kJson) {
    Json doc;
    doc["metadata"] = meta;
    Json json_rows = Json::array();
    for (const auto& row : rows) json_rows.push_back(row_json(row));
    doc["rows"] = json_rows;
    out << doc.dump(2) << '\n';
    return;
  }
  out << "# " << meta.dump() << '\n';
  out << "t,a,b_re,b_im,d,trace_err,min_eig,coherence\n";
  for (const auto& row : rows) write_csv_row(out, row);
}

void cmd_compare(const Scenario& scenario, std::ostream& out, double report_tol) {
  const ScenarioConfig config = scenario.config();
  const TwoLevelModel& model = config.model;
  const Superoperator4 w = build_w(model);
  const DensityMatrix2& rho0 = config.initial_state;

  const auto approx_at = [&](double t) {
    return apply_propagator(approx_propagator(t, model), rho0, PropagatorMethod::kApproxProduct);
  };
  const auto exact_at = [&](double t) {
    return apply_propagator(exact_propagator_oracle(t, w), rho0, PropagatorMethod::kExactOracle);
  };

  struct CompareRow {
    double t;
    DensityMatrix2 approx;
    DensityMatrix2 exact;
    double deviation;
  };
  std::vector<CompareRow> rows;
  double max_before_measure = 0.0;
  for (const double t : time_grid(config.t_max, config.steps)) {
    const auto approx = approx_at(t);
    const auto exact = exact_at(t);
    const double deviation = rho_distance(approx, exact);
    if (t <= config.t_measure) max_before_measure = std::max(max_before_measure, deviation);
    rows.push_back({t, approx, exact, deviation});
  }
  const double at_measure = rho_distance(approx_at(config.t_measure), exact_at(config.t_measure));
  max_before_measure = std::max(max_before_measure, at_measure);

  const DensityMatrix2 approx_limit = stationary_approx(model.rates, rho0);
  Json summary;
  summary["max_deviation_to_t_measure"] = tidy(max_before_measure);
  summary["deviation_at_t_measure"] = tidy(at_measure);
  summary["deviation_at_t_max"] = tidy(rows.back().deviation);
  summary["approx_asymptote"] = rho_json(approx_limit);
  try {
    const AsymptoticReport exact_limit = stationary_exact(model, rho0);
    summary["exact_asymptote"] = rho_json(exact_limit.rho_limit);
    summary["asymptote_gap"] = tidy(rho_distance(approx_limit, exact_limit.rho_limit));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDegenerateSpectrum) throw;
    summary["exact_asymptote"] = nullptr;
    summary["asymptote_gap"] = nullptr;
  }

  Json meta;
  meta["command"] = "compare";
  meta["methods"] = Json::array({std::string(to_string(PropagatorMethod::kApproxProduct)),
                                 std::string(to_string(PropagatorMethod::kExactOracle))});
  meta["parameters"] = scenario_json(scenario);
  meta["rates"] = Json{{"mu", tidy(model.rates.mu())}, {"nu", tidy(model.rates.nu())}};
  meta["report_tol"] = tidy(report_tol);
  meta["summary"] = summary;

  out << "# " << meta.dump() << '\n';
  out << "t,deviation,approx_a,approx_b_re,approx_b_im,approx_d,"
         "exact_a,exact_b_re,exact_b_im,exact_d\n";
  for (const auto& row : rows) {
    out << format_number(row.t) << ',' << format_number(row.deviation);
    for (const auto* rho : {&row.approx, &row.exact}) {
      out << ',' << format_number(rho->a()) << ',' << format_number(rho->b().real()) << ','
          << format_number(rho->b().imag()) << ',' << format_number(rho->d());
    }
    out << '\n';
  }
}

void cmd_spectrum(const Scenario& scenario, std::ostream& out) {
  const TwoLevelModel model = scenario.model();
  const CubicCoefficients cubic = characteristic_cubic(model);
  const CubicRoots roots = solve_cubic(cubic);
  const double shift = model.rates.total() / 2.0;

  Json roots_json = Json::array();
  Json eigen_json = Json::array();
  eigen_json.push_back(complex_json(0.0));
  bool signs_hold = true;
  for (const Complex root : roots.all()) {
    roots_json.push_back(Json{{"value", complex_json(root)}, {"residual", tidy(std::abs(cubic(root)))}});
    const Complex lambda = root - shift;
    eigen_json.push_back(complex_json(lambda));
    signs_hold = signs_hold && lambda.real() < 0.0;
  }

  Json doc;
  doc["command"] = "spectrum";
  doc["parameters"] = scenario_json(scenario);
  doc["cubic"] = Json{{"a2", tidy(cubic.a2)}, {"a1", tidy(cubic.a1)}, {"a0", tidy(cubic.a0)}};
  doc["case"] = roots.root_case == CubicCase::kA ? "A" : "B";
  doc["degenerate"] = roots.root_case == CubicCase::kA;
  doc["roots"] = roots_json;
  doc["eigenvalues"] = eigen_json;
  doc["sign_conditions_hold"] = signs_hold;
  try {
    const WSpectrum spectrum = w_spectrum(model);
    doc["decomposition"] = "ok";
    doc["min_decay_rate"] = tidy(spectrum.min_decay_rate());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDegenerateSpectrum) throw;
    doc["decomposition"] = "degenerate_spectrum";
    doc["min_decay_rate"] = nullptr;
  }
  out << doc.dump(2) << '\n';
}

bool cmd_born_check(const Scenario& scenario, std::optional<double> scale, std::ostream& out) {
  const double chosen = scale.value_or(scenario.rates.born_scale.value_or(1.0));
  const LindbladRates rates = born_rates(scenario.amps, chosen);
  const DensityMatrix2 limit = stationary_approx(rates, DensityMatrix2::ket0());
  const double w0 = scenario.amps.weight0();
  const double w1 = scenario.amps.weight1();
  const double deviation = std::max(std::abs(limit.a() - w0), std::abs(limit.d() - w1));
  const bool pass = deviation <= kBornCheckTol;

  Json doc;
  doc["command"] = "born-check";
  doc["alpha"] = complex_json(scenario.amps.alpha());
  doc["beta"] = complex_json(scenario.amps.beta());
  doc["scale"] = tidy(chosen);
  doc["rates"] = Json{{"mu", tidy(rates.mu())}, {"nu", tidy(rates.nu())}};
  doc["p0"] = tidy(limit.a());
  doc["p1"] = tidy(limit.d());
  doc["expected"] = Json::array({tidy(w0), tidy(w1)});
  doc["max_deviation"] = tidy(deviation);
  doc["tolerance"] = kBornCheckTol;
  doc["pass"] = pass;
  out << doc.dump(2) << '\n';
  return pass;
}

void cmd_zassenhaus_check(int order, std::uint64_t seed, std::ostream& out) {
  SeededDraws draws(seed);
  const TwoLevelModel model = draws.model();
  const MatrixX a = build_h_hat(model.hamiltonian());
  const MatrixX b = build_d_hat(model.rates);
  const double t0 = 0.1 / inf_norm(MatrixX(a + b));

  Json doc;
  doc["command"] = "zassenhaus-check";
  doc["order"] = order;
  doc["seed"] = seed;
  doc["model"] = Json{{"alpha", complex_json(model.amps.alpha())},
                      {"beta", complex_json(model.amps.beta())},
                      {"e0", tidy(model.energies.e0())},
                      {"e1", tidy(model.energies.e1())},
                      {"mu", tidy(model.rates.mu())},
                      {"nu", tidy(model.rates.nu())}};
  doc["t0"] = tidy(t0);
  doc["halvings"] = kZassenhausHalvings;
  doc["expected_slope"] = order + 1;
  doc["window"] = kZassenhausWindow;
  try {
    const OrderCheckResult result = order_check(a, b, order, t0, kZassenhausHalvings);
    Json points = Json::array();
    for (std::size_t i = 0; i < result.t_values.size(); ++i) {
      points.push_back(Json{{"t", tidy(result.t_values[i])}, {"error", tidy(result.errors[i])}});
    }
    doc["points"] = points;
    doc["slope"] = tidy(result.fitted_slope);
    doc["pass"] = result.slope_within(kZassenhausWindow);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDegenerateCase) throw;
    doc["points"] = Json::array();
    doc["slope"] = nullptr;
    doc["commuting"] = true;
    doc["pass"] = true;
  }
  out << doc.dump(2) << '\n';
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decoherence of a driven two-level system under a Lindblad master equation",
               "decolab"};
  app.require_subcommand(1);

  std::string config_path;
  std::string method_name;
  std::string format_name = "csv";
  std::string out_path;
  std::optional<double> born_scale;
  int order = 0;
  std::uint64_t seed = 0;

  auto* evolve = app.add_subcommand("evolve", "Propagate the initial state over the time grid");
  evolve->add_option("config", config_path, "Scenario JSON file")->required();
  evolve->add_option("--method", method_name, "approx_product, exact_oracle or exact_spectral")
      ->check(CLI::IsMember({"approx_product", "exact_oracle", "exact_spectral"}));
  evolve->add_option("--format", format_name, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  evolve->add_option("--out", out_path, "Write output to this file");

  auto* compare = app.add_subcommand("compare", "Approximate product against the exact propagator");
  compare->add_option("config", config_path, "Scenario JSON file")->required();

  auto* spectrum = app.add_subcommand("spectrum", "Characteristic cubic and eigenvalues of W");
  spectrum->add_option("config", config_path, "Scenario JSON file")->required();

  auto* born = app.add_subcommand("born-check", "Born-rule endpoint of the approximate asymptote");
  born->add_option("config", config_path, "Scenario JSON file")->required();
  born->add_option("--scale", born_scale, "Born-rate scale (default 1)")
      ->check(CLI::PositiveNumber);

  auto* zassenhaus = app.add_subcommand("zassenhaus-check", "Error-order fit of the Zassenhaus splitting");
  zassenhaus->add_option("--order", order, "2 or 3")->required()->check(CLI::Range(2, 3));
  zassenhaus->add_option("--seed", seed, "Random seed (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help(e.get_name() == "--help" ? "" : e.get_name());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "decolab: " << e.what() << '\n';
    err << "Run with --help for usage.\n";
    return e.get_exit_code() == 0 ? kExitOk : kExitConfig;
  }

  try {
    const double report_tol = report_tolerance();
    if (*zassenhaus) {
      cmd_zassenhaus_check(order, seed, out);
      return kExitOk;
    }
    const Scenario scenario = load_scenario(config_path);
    if (*evolve) {
      PropagatorMethod method = scenario.method.value_or(PropagatorMethod::kExactOracle);
      if (!method_name.empty()) method = *parse_method(method_name);
      const OutputFormat format = format_name == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
      if (out_path.empty()) {
        cmd_evolve(scenario, method, format, out, report_tol);
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw Error(ErrorCode::kConfig, "cannot open output file " + out_path);
        cmd_evolve(scenario, method, format, file, report_tol);
      }
    } else if (*compare) {
      cmd_compare(scenario, out, report_tol);
    } else if (*spectrum) {
      cmd_spectrum(scenario, out);
    } else if (*born) {
      if (!cmd_born_check(scenario, born_scale, out)) return kExitDomain;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "decolab: " << e.what() << '\n';
    return e.code() == ErrorCode::kConfig ? kExitConfig : kExitDomain;
  } catch (const std::exception& e) {
    err << "decolab: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace decolab::cli
