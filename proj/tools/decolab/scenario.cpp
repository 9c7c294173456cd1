#include "decolab/scenario.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace decolab::cli {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 14> kKnownKeys = {
    "alpha", "beta",    "e0",       "e1",    "mu",     "nu",        "born_scale",
    "t_measure", "t_decoherence", "t_max", "steps", "initial", "method", "normalize"};

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// Line of the first occurrence of "key" in the source, 0 if not found.
std::size_t line_of_key(std::string_view text, std::string_view key) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  const auto pos = text.find(quoted);
  return pos == std::string_view::npos ? 0 : line_of_offset(text, pos);
}

class Reader {
 public:
  Reader(std::string_view text, const json& doc) : text_(text), doc_(doc) {}

  [[noreturn]] void fail(std::string_view key, const std::string& message) const {
    std::ostringstream msg;
    const std::size_t line = line_of_key(text_, key);
    if (line > 0) msg << "line " << line << ": ";
    msg << "key '" << key << "': " << message;
    throw Error(ErrorCode::kConfig, msg.str());
  }

  bool has(std::string_view key) const { return doc_.contains(std::string(key)); }

  double number(std::string_view key) const {
    if (!has(key)) fail(key, "missing required key");
    const json& v = doc_.at(std::string(key));
    if (!v.is_number()) fail(key, "expected a number");
    return v.get<double>();
  }

  std::optional<double> optional_number(std::string_view key) const {
    if (!has(key)) return std::nullopt;
    return number(key);
  }

  Complex complex_pair(std::string_view key) const {
    if (!has(key)) fail(key, "missing required key");
    const json& v = doc_.at(std::string(key));
    if (v.is_number()) return v.get<double>();
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      fail(key, "expected [re, im]");
    }
    return {v[0].get<double>(), v[1].get<double>()};
  }

  const json& raw(std::string_view key) const { return doc_.at(std::string(key)); }

 private:
  std::string_view text_;
  const json& doc_;
};

template <typename Fn>
auto rethrow_as_config(const Reader& reader, std::string_view key, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    reader.fail(key, e.what());
  }
}

std::pair<DensityMatrix2, std::string> parse_initial(const Reader& reader) {
  if (!reader.has("initial")) return {DensityMatrix2::ket0(), "ket0"};
  const json& v = reader.raw("initial");
  if (v.is_string()) {
    const auto name = v.get<std::string>();
    if (name == "ket0") return {DensityMatrix2::ket0(), name};
    if (name == "ket1") return {DensityMatrix2::ket1(), name};
    if (name == "plus") return {DensityMatrix2::plus(), name};
    reader.fail("initial", "expected \"ket0\", \"ket1\", \"plus\" or [a, b_re, b_im, d]");
  }
  if (v.is_array() && v.size() == 4 &&
      std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_number(); })) {
    return rethrow_as_config(reader, "initial", [&] {
      return std::pair{DensityMatrix2(v[0].get<double>(), Complex(v[1].get<double>(), v[2].get<double>()),
                                      v[3].get<double>()),
                       std::string("custom")};
    });
  }
  reader.fail("initial", "expected \"ket0\", \"ket1\", \"plus\" or [a, b_re, b_im, d]");
}

}  // namespace

LindbladRates Scenario::resolve_rates() const {
  if (rates.explicit_rates) return *rates.explicit_rates;
  return born_rates(amps, *rates.born_scale);
}

ScenarioConfig Scenario::config() const {
  ScenarioConfig cfg{model(), t_measure, t_decoherence, t_max, steps, initial};
  cfg.validate();
  return cfg;
}

Scenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::ostringstream msg;
    msg << "line " << line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0) << ": malformed JSON ("
        << e.what() << ")";
    throw Error(ErrorCode::kConfig, msg.str());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::kConfig, "line 1: scenario must be a JSON object");
  }
  const Reader reader(text, doc);
  for (const auto& item : doc.items()) {
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), item.key()) == kKnownKeys.end()) {
      reader.fail(item.key(), "unknown key");
    }
  }

  bool normalize = false;
  if (reader.has("normalize")) {
    if (!reader.raw("normalize").is_boolean()) reader.fail("normalize", "expected true or false");
    normalize = reader.raw("normalize").get<bool>();
  }
  const Complex alpha = reader.complex_pair("alpha");
  const Complex beta = reader.complex_pair("beta");
  const auto amps = rethrow_as_config(reader, "alpha", [&] {
    return make_amplitudes(alpha, beta, normalize ? Normalization::kRescale : Normalization::kRequire);
  });

  const double e0 = reader.number("e0");
  const double e1 = reader.number("e1");
  const auto energies = rethrow_as_config(reader, "e1", [&] { return EnergyPair(e0, e1); });

  RateSpec rate_spec;
  const bool has_rates = reader.has("mu") || reader.has("nu");
  if (has_rates && reader.has("born_scale")) {
    reader.fail("born_scale", "mu/nu and born_scale are mutually exclusive");
  }
  if (reader.has("born_scale")) {
    const double scale = reader.number("born_scale");
    if (!(scale > 0.0)) reader.fail("born_scale", "must be positive");
    rate_spec.born_scale = scale;
  } else if (has_rates) {
    const double mu = reader.number("mu");
    const double nu = reader.number("nu");
    rate_spec.explicit_rates = rethrow_as_config(reader, "mu", [&] { return LindbladRates(mu, nu); });
  } else {
    reader.fail("mu", "missing: give mu and nu, or born_scale");
  }

  const double t_measure = reader.number("t_measure");
  if (!(t_measure > 0.0)) reader.fail("t_measure", "must be positive");
  const auto t_decoherence = reader.optional_number("t_decoherence");
  const double t_max = reader.number("t_max");
  if (!(t_max > 0.0)) reader.fail("t_max", "must be positive");

  if (!reader.has("steps")) reader.fail("steps", "missing required key");
  const json& steps_value = reader.raw("steps");
  if (!steps_value.is_number_integer()) reader.fail("steps", "expected an integer");
  const auto steps = steps_value.get<long long>();
  if (steps < 1) reader.fail("steps", "must be at least 1");
  if (steps > 10'000'000) reader.fail("steps", "must be at most 10000000");

  auto [initial, label] = parse_initial(reader);

  std::optional<PropagatorMethod> method;
  if (reader.has("method")) {
    const json& m = reader.raw("method");
    if (!m.is_string() || !(method = parse_method(m.get<std::string>()))) {
      reader.fail("method", "expected approx_product, exact_oracle or exact_spectral");
    }
  }

  return Scenario{amps,  energies,        rate_spec, t_measure, t_decoherence, t_max,
                  static_cast<int>(steps), initial, label,     method};
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kConfig, "cannot open scenario file " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

}  // namespace decolab::cli
