#include <cmath>
#include <fstream>
#include <sstream>

#include "doublejc/cli.hpp"
#include "doublejc/sampling.hpp"
#include "json.hpp"

namespace doublejc::cli {

namespace {

using nlohmann::json;

double number_field(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number()) throw UsageError(std::string("config field '") + key + "' must be a number");
  return v.get<double>();
}

SubsystemParams parse_subsystem(const json& obj, const SubsystemParams& fallback) {
  if (!obj.is_object()) throw UsageError("subsystem parameters must be an object");
  const double nu = number_field(obj, "nu", fallback.nu());
  const double g = number_field(obj, "g", fallback.g());
  if (obj.contains("omega") && obj.contains("delta")) {
    throw UsageError("give either 'omega' or 'delta' for a subsystem, not both");
  }
  double omega = nu + fallback.delta();
  if (obj.contains("omega")) omega = number_field(obj, "omega", 0.0);
  if (obj.contains("delta")) omega = nu + number_field(obj, "delta", 0.0);
  try {
    return SubsystemParams(nu, omega, g);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

cplx parse_complex(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw UsageError("complex values must be [re, im] pairs");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

InitialStateSpec parse_initial_state(const json& obj) {
  if (!obj.is_object() || !obj.contains("kind") || !obj.at("kind").is_string()) {
    throw UsageError("initial_state needs a string 'kind'");
  }
  InitialStateSpec spec;
  const auto kind = obj.at("kind").get<std::string>();
  if (kind == "phi" || kind == "psi") {
    spec.kind = kind == "phi" ? InitialStateSpec::Kind::Phi : InitialStateSpec::Kind::Psi;
    spec.alpha = number_field(obj, "alpha", spec.alpha);
    spec.beta = number_field(obj, "beta", spec.beta);
  } else if (kind == "generic") {
    spec.kind = InitialStateSpec::Kind::Generic;
    if (!obj.contains("coefficients") || !obj.at("coefficients").is_array() || obj.at("coefficients").size() != 9) {
      throw UsageError("generic initial_state needs 9 'coefficients' ordered c1..c5, d1..d4");
    }
    for (std::size_t k = 0; k < 9; ++k) spec.amplitudes[k] = parse_complex(obj.at("coefficients")[k]);
  } else if (kind == "random") {
    spec.kind = InitialStateSpec::Kind::Random;
  } else {
    throw UsageError("unknown initial_state kind '" + kind + "' (phi, psi, generic, random)");
  }
  return spec;
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw UsageError("config must be a JSON object");

  RunConfig config;
  if (doc.contains("initial_state")) config.initial_state = parse_initial_state(doc.at("initial_state"));
  if (doc.contains("params")) {
    const auto& p = doc.at("params");
    if (!p.is_object()) throw UsageError("'params' must be an object with 'A' and 'B'");
    if (p.contains("A")) config.params.sub_a = parse_subsystem(p.at("A"), config.params.sub_a);
    if (p.contains("B")) config.params.sub_b = parse_subsystem(p.at("B"), config.params.sub_b);
  }
  config.t_max = number_field(doc, "t_max", config.t_max);
  if (doc.contains("n_samples")) {
    if (!doc.at("n_samples").is_number_integer()) throw UsageError("'n_samples' must be an integer");
    config.n_samples = doc.at("n_samples").get<int>();
  }
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned()) throw UsageError("'seed' must be a non-negative integer");
    config.seed = doc.at("seed").get<std::uint64_t>();
  }
  if (doc.contains("outputs")) {
    if (!doc.at("outputs").is_array()) throw UsageError("'outputs' must be an array of column names");
    for (const auto& name : doc.at("outputs")) {
      if (!name.is_string()) throw UsageError("'outputs' entries must be strings");
      config.outputs.push_back(name.get<std::string>());
    }
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

void validate(const RunConfig& config) {
  if (config.n_samples < 2) throw UsageError("n_samples must be at least 2");
  if (!(config.t_max > 0.0) || !std::isfinite(config.t_max)) throw UsageError("t_max must be positive and finite");
}

GenericCoefficients resolve_initial_state(const RunConfig& config, std::vector<std::string>& warnings) {
  const auto& spec = config.initial_state;
  try {
    switch (spec.kind) {
      case InitialStateSpec::Kind::Phi: return make_bell_phi(spec.alpha, spec.beta);
      case InitialStateSpec::Kind::Psi: return make_bell_psi(spec.alpha, spec.beta);
      case InitialStateSpec::Kind::Random: {
        Rng rng(config.seed);
        return random_generic_state(rng);
      }
      case InitialStateSpec::Kind::Generic: break;
    }
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  double norm2 = 0.0;
  for (const auto& a : spec.amplitudes) norm2 += std::norm(a);
  const double defect = std::abs(norm2 - 1.0);
  if (defect <= kNormTolerance) return GenericCoefficients::unchecked(spec.amplitudes);
  if (defect < 1e-6) {
    warnings.push_back("generic coefficients renormalized (norm^2 was " + std::to_string(norm2) + ")");
    return GenericCoefficients::normalized(spec.amplitudes);
  }
  throw UsageError("generic coefficients are not normalized (norm^2 = " + std::to_string(norm2) + ")");
}

std::vector<double> time_grid(double t_max, int n_samples) {
  std::vector<double> times(static_cast<std::size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    times[static_cast<std::size_t>(i)] = t_max * static_cast<double>(i) / static_cast<double>(n_samples - 1);
  }
  return times;
}

}  // namespace doublejc::cli
