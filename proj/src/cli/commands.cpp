#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "doublejc/cli.hpp"
#include "doublejc/dissipation.hpp"
#include "doublejc/entanglement.hpp"
#include "doublejc/invariants.hpp"
#include "doublejc/parallel.hpp"
#include "doublejc/sampling.hpp"
#include "json.hpp"

namespace doublejc::cli {

namespace {

using nlohmann::json;

constexpr double kCheckTolerance = 1e-10;

std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += fields[i];
  }
  return line + '\n';
}

std::string optional_number(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string state_label(const RunConfig& config) {
  const auto& s = config.initial_state;
  switch (s.kind) {
    case InitialStateSpec::Kind::Phi: return "phi";
    case InitialStateSpec::Kind::Psi: return "psi";
    case InitialStateSpec::Kind::Generic: return "generic";
    case InitialStateSpec::Kind::Random: return "random";
  }
  return "unknown";
}

bool is_resonant_identical(const ModelParams& p) {
  return p.sub_a.delta() == 0.0 && p.sub_b.delta() == 0.0 && p.sub_a.g() == p.sub_b.g();
}

}  // namespace

std::string format_number(double value) { return fmt::format("{:.17g}", value); }

const std::vector<std::string>& evolve_columns() {
  static const std::vector<std::string> columns = {
      "t",      "OmegaA_t", "E_A_Bab", "E_B_Aab", "E_a_ABb", "E_b_ABa", "E_Aa_Bb", "E_Ab_Ba",
      "E_AB_ab", "C_AB",    "C_Aa",    "C_Bb",    "C_ab",    "C_Ab",    "C_Ba",    "4E_AaBb",
  };
  return columns;
}

CommandResult cmd_evolve(const RunConfig& config, Format format) {
  validate(config);
  CommandResult result;
  const auto initial = resolve_initial_state(config, result.warnings);

  const auto& all = evolve_columns();
  std::vector<std::size_t> selected;
  if (config.outputs.empty()) {
    for (std::size_t k = 0; k < all.size(); ++k) selected.push_back(k);
  } else {
    for (const auto& name : config.outputs) {
      if (std::find(all.begin(), all.end(), name) == all.end()) throw UsageError("unknown output column: " + name);
    }
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (k == 0 || std::find(config.outputs.begin(), config.outputs.end(), all[k]) != config.outputs.end()) {
        selected.push_back(k);
      }
    }
  }

  const auto times = time_grid(config.t_max, config.n_samples);
  const double rabi_a = config.params.sub_a.rabi();
  const auto rows = parallel_map(times.size(), [&](std::size_t i) {
    const double t = times[i];
    const auto state = embed(evolve_closed_form(initial, config.params, t));
    std::vector<double> row;
    row.reserve(all.size());
    row.push_back(t);
    row.push_back(rabi_a * t);
    for (const auto& part : Bipartition::canonical()) row.push_back(wedge_entanglement(state, part));
    const auto cs = pairwise_concurrences(state);
    for (double c : {cs.c_AB, cs.c_Aa, cs.c_Bb, cs.c_ab, cs.c_Ab, cs.c_Ba}) row.push_back(c);
    row.push_back(4.0 * row[6]);
    return row;
  });

  if (format == Format::Csv) {
    std::string out = "# doublejc evolve v1\n";
    std::vector<std::string> header;
    for (auto k : selected) header.push_back(all[k]);
    out += csv_line(header);
    for (const auto& row : rows) {
      std::vector<std::string> fields;
      for (auto k : selected) fields.push_back(format_number(row[k]));
      out += csv_line(fields);
    }
    result.output = std::move(out);
  } else {
    json doc;
    doc["schema"] = "doublejc-evolve/1";
    doc["initial_state"] = state_label(config);
    json columns = json::array();
    for (auto k : selected) columns.push_back(all[k]);
    doc["columns"] = columns;
    json data = json::array();
    for (const auto& row : rows) {
      json r = json::array();
      for (auto k : selected) r.push_back(row[k]);
      data.push_back(std::move(r));
    }
    doc["rows"] = std::move(data);
    result.output = doc.dump(2) + "\n";
  }
  return result;
}

GenericCoefficients corrupted_propagator(const GenericCoefficients& coeffs, const ModelParams& params, double t) {
  auto amps = evolve_closed_form(coeffs, params, t).amplitudes();
  const double theta = 0.5 * params.sub_a.g() * t;
  const cplx c1 = amps[0];
  const cplx c5 = amps[4];
  amps[0] = std::cos(theta) * c1 - std::sin(theta) * c5;
  amps[4] = std::sin(theta) * c1 + std::cos(theta) * c5;
  return GenericCoefficients::unchecked(amps);
}

CommandResult cmd_invariant_check(const RunConfig& config, Format format, bool corrupt_propagator) {
  validate(config);
  CommandResult result;
  const auto initial = resolve_initial_state(config, result.warnings);
  const auto times = time_grid(config.t_max, config.n_samples);
  const Propagator propagate = corrupt_propagator ? Propagator(corrupted_propagator) : Propagator();

  std::optional<double> alpha;
  if (config.initial_state.kind == InitialStateSpec::Kind::Phi) alpha = config.initial_state.alpha;
  const double inferred_alpha = alpha.value_or(std::atan2(std::abs(initial.c(5)), std::abs(initial.c(1))));

  std::vector<InvariantReport> reports;
  for (auto q : {Quantity::InvariantE, Quantity::Geninv, Quantity::EberlyPsi, Quantity::EberlyPhi}) {
    if (q == Quantity::EberlyPhi && std::abs(std::cos(inferred_alpha)) < 1e-12) {
      result.warnings.push_back("eberly_phi skipped: tan(alpha) diverges");
      continue;
    }
    reports.push_back(drift_check(initial, config.params, times, q, inferred_alpha, propagate));
  }
  const bool pass = reports.front().max_abs_drift < kCheckTolerance;
  result.exit_code = pass ? 0 : 1;

  if (format == Format::Json) {
    json doc;
    doc["schema"] = "doublejc-invariant-check/1";
    doc["initial_state"] = state_label(config);
    doc["n_samples"] = config.n_samples;
    doc["t_max"] = config.t_max;
    doc["tolerance"] = kCheckTolerance;
    doc["corrupted_propagator"] = corrupt_propagator;
    json items = json::array();
    for (const auto& r : reports) {
      items.push_back({{"quantity", to_string(r.quantity)},
                       {"initial_value", r.initial_value},
                       {"max_abs_drift", r.max_abs_drift},
                       {"asserted", r.quantity == Quantity::InvariantE}});
    }
    doc["invariants"] = std::move(items);
    doc["pass"] = pass;
    result.output = doc.dump(2) + "\n";
  } else {
    std::string out = "# doublejc invariant-check v1\n";
    out += csv_line({"quantity", "initial_value", "max_abs_drift"});
    for (const auto& r : reports) {
      out += csv_line({to_string(r.quantity), format_number(r.initial_value), format_number(r.max_abs_drift)});
    }
    result.output = std::move(out);
  }
  return result;
}

CommandResult cmd_oracle_check(const OracleCheckOptions& options, Format format) {
  if (options.n_cases < 1) throw UsageError("n_cases must be at least 1");
  if (options.fixed_time && !(*options.fixed_time >= 0.0)) throw UsageError("time must be non-negative");

  struct Case {
    GenericCoefficients coeffs;
    ModelParams params;
    double t;
  };
  Rng rng(options.seed);
  std::vector<Case> cases;
  cases.reserve(static_cast<std::size_t>(options.n_cases));
  for (int k = 0; k < options.n_cases; ++k) {
    Case c{random_generic_state(rng), random_model_params(rng), 0.0};
    const double t = rng.uniform(0.0, 10.0 / c.params.sub_a.g());
    c.t = options.fixed_time.value_or(t);
    cases.push_back(c);
  }

  struct Deviation {
    double amplitude = 0.0;
    double fidelity = 0.0;
  };
  const auto deviations = parallel_map(cases.size(), [&](std::size_t i) {
    const auto& c = cases[i];
    const auto closed = evolve_closed_form(c.coeffs, c.params, c.t);
    const auto oracle = oracle_evolve(c.coeffs, c.params, c.t);
    Deviation d;
    cplx overlap = 0.0;
    double n_closed = 0.0;
    double n_oracle = 0.0;
    for (std::size_t k = 0; k < 9; ++k) {
      d.amplitude = std::max(d.amplitude, std::abs(closed[k] - oracle[k]));
      overlap += std::conj(closed[k]) * oracle[k];
      n_closed += std::norm(closed[k]);
      n_oracle += std::norm(oracle[k]);
    }
    // sqrt(n1 n2) - |<closed|oracle>|: zero iff the two vectors are parallel.
    d.fidelity = std::abs(std::sqrt(n_closed * n_oracle) - std::abs(overlap));
    return d;
  });

  Deviation worst;
  for (const auto& d : deviations) {
    worst.amplitude = std::max(worst.amplitude, d.amplitude);
    worst.fidelity = std::max(worst.fidelity, d.fidelity);
  }
  const bool pass = worst.amplitude < kCheckTolerance && worst.fidelity < kCheckTolerance;

  CommandResult result;
  result.exit_code = pass ? 0 : 1;
  if (format == Format::Json) {
    json doc;
    doc["schema"] = "doublejc-oracle-check/1";
    doc["seed"] = options.seed;
    doc["n_cases"] = options.n_cases;
    doc["fixed_time"] = optional_json(options.fixed_time);
    doc["max_amplitude_deviation"] = worst.amplitude;
    doc["max_fidelity_deviation"] = worst.fidelity;
    doc["tolerance"] = kCheckTolerance;
    doc["pass"] = pass;
    result.output = doc.dump(2) + "\n";
  } else {
    std::string out = "# doublejc oracle-check v1\n";
    out += csv_line({"seed", "n_cases", "max_amplitude_deviation", "max_fidelity_deviation", "pass"});
    out += csv_line({std::to_string(options.seed), std::to_string(options.n_cases), format_number(worst.amplitude),
                     format_number(worst.fidelity), pass ? "true" : "false"});
    result.output = std::move(out);
  }
  return result;
}

CommandResult cmd_sudden_death(const SuddenDeathOptions& options, Format format) {
  const double half_pi = std::numbers::pi / 2;
  if (options.n_alpha < 1) throw UsageError("n_alpha must be at least 1");
  if (!(options.alpha_min >= 0.0 && options.alpha_max <= half_pi && options.alpha_min <= options.alpha_max)) {
    throw UsageError("alpha range must satisfy 0 <= alpha_min <= alpha_max <= pi/2");
  }
  if (!(options.gamma > 0.0)) throw UsageError("gamma must be positive");
  if (options.scan_samples < 100) throw UsageError("scan samples must be at least 100");
  const double rabi = options.params.sub_a.rabi();
  if (!(rabi > 0.0)) throw UsageError("subsystem A needs a positive Rabi frequency");

  CommandResult result;
  if (!is_resonant_identical(options.params)) {
    result.warnings.push_back("sudden-death closed form assumes resonant identical subsystems; scan columns are numeric");
  }

  struct Row {
    double alpha;
    std::optional<double> tau;
    std::optional<double> tau_scan;
    std::optional<double> revival_scan;
    std::optional<double> tau_dissipative;
  };
  const auto n = static_cast<std::size_t>(options.n_alpha);
  std::vector<double> alphas(n);
  for (std::size_t i = 0; i < n; ++i) {
    alphas[i] = n == 1 ? options.alpha_min
                       : options.alpha_min + (options.alpha_max - options.alpha_min) * static_cast<double>(i) /
                                                 static_cast<double>(n - 1);
  }
  alphas.back() = std::min(alphas.back(), half_pi);

  const double t_max = std::numbers::pi / rabi;
  const auto rows = parallel_map(n, [&](std::size_t i) {
    Row row{alphas[i], sudden_death_onset(alphas[i], rabi), {}, {}, {}};
    const auto scan = death_revival_scan(make_bell_phi(alphas[i], 0.0), options.params, t_max,
                                         options.scan_samples, options.gamma);
    if (!scan.death_times.empty()) row.tau_scan = scan.death_times.front();
    if (!scan.revival_times.empty()) row.revival_scan = scan.revival_times.front();
    if (row.tau) row.tau_dissipative = jc_to_dissipative_time(*row.tau, rabi, options.gamma);
    return row;
  });

  if (format == Format::Csv) {
    std::string out = "# doublejc sudden-death v1\n";
    out += csv_line({"alpha", "tan_alpha", "tau_jc", "tau_jc_scan", "revival_jc_scan", "tau_dissipative"});
    for (const auto& r : rows) {
      out += csv_line({format_number(r.alpha), format_number(std::tan(r.alpha)), optional_number(r.tau),
                       optional_number(r.tau_scan), optional_number(r.revival_scan), optional_number(r.tau_dissipative)});
    }
    result.output = std::move(out);
  } else {
    json doc;
    doc["schema"] = "doublejc-sudden-death/1";
    doc["gamma"] = options.gamma;
    json items = json::array();
    for (const auto& r : rows) {
      items.push_back({{"alpha", r.alpha},
                       {"tan_alpha", std::tan(r.alpha)},
                       {"tau_jc", optional_json(r.tau)},
                       {"tau_jc_scan", optional_json(r.tau_scan)},
                       {"revival_jc_scan", optional_json(r.revival_scan)},
                       {"tau_dissipative", optional_json(r.tau_dissipative)}});
    }
    doc["rows"] = std::move(items);
    result.output = doc.dump(2) + "\n";
  }
  return result;
}

namespace {

struct Overrides {
  std::string config_path;
  std::optional<std::string> state;
  std::optional<double> alpha, beta;
  std::optional<double> g_a, g_b, nu_a, nu_b, delta_a, delta_b;
  std::optional<double> t_max;
  std::optional<int> n_samples;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> outputs;

  void add_params_options(CLI::App* app) {
    app->add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
    app->add_option("--g-a", g_a, "coupling g of subsystem Aa");
    app->add_option("--g-b", g_b, "coupling g of subsystem Bb");
    app->add_option("--nu-a", nu_a, "field frequency of subsystem Aa");
    app->add_option("--nu-b", nu_b, "field frequency of subsystem Bb");
    app->add_option("--delta-a", delta_a, "detuning omega - nu of subsystem Aa");
    app->add_option("--delta-b", delta_b, "detuning omega - nu of subsystem Bb");
  }

  void add_run_options(CLI::App* app) {
    add_params_options(app);
    app->add_option("--state", state, "initial state kind")->check(CLI::IsMember({"phi", "psi", "random"}));
    app->add_option("--alpha", alpha, "Bell-like mixing angle alpha (radians)");
    app->add_option("--beta", beta, "Bell-like relative phase beta (radians)");
    app->add_option("--t-max", t_max, "end of the uniform time grid");
    app->add_option("--n-samples", n_samples, "number of time samples (>= 2)");
    app->add_option("--seed", seed, "seed for random initial states");
  }

  static SubsystemParams with(const SubsystemParams& p, const std::optional<double>& g, const std::optional<double>& nu,
                              const std::optional<double>& delta) {
    const double new_nu = nu.value_or(p.nu());
    const double new_delta = delta.value_or(p.delta());
    try {
      return SubsystemParams(new_nu, new_nu + new_delta, g.value_or(p.g()));
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }

  RunConfig resolve() const {
    RunConfig config = config_path.empty() ? RunConfig{} : load_config(config_path);
    if (state) {
      config.initial_state.kind = *state == "phi"   ? InitialStateSpec::Kind::Phi
                                  : *state == "psi" ? InitialStateSpec::Kind::Psi
                                                    : InitialStateSpec::Kind::Random;
    }
    if (alpha) config.initial_state.alpha = *alpha;
    if (beta) config.initial_state.beta = *beta;
    config.params.sub_a = with(config.params.sub_a, g_a, nu_a, delta_a);
    config.params.sub_b = with(config.params.sub_b, g_b, nu_b, delta_b);
    if (t_max) config.t_max = *t_max;
    if (n_samples) config.n_samples = *n_samples;
    if (seed) config.seed = *seed;
    if (!outputs.empty()) config.outputs = outputs;
    return config;
  }
};

Format parse_format(const std::string& name) { return name == "json" ? Format::Json : Format::Csv; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Double Jaynes-Cummings entanglement simulator"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format_name;

  Overrides evolve_args;
  auto* evolve = app.add_subcommand("evolve", "emit entanglement and concurrence time series");
  evolve_args.add_run_options(evolve);
  evolve->add_option("--outputs", evolve_args.outputs, "subset of columns to emit")->delimiter(',');

  Overrides invariant_args;
  bool corrupt = false;
  auto* invariant = app.add_subcommand("invariant-check", "sample invariants along a trajectory and report drift");
  invariant_args.add_run_options(invariant);
  invariant->add_flag("--corrupt-propagator", corrupt, "negative control: evolve with a non-local perturbation")
      ->group("");

  OracleCheckOptions oracle_opts;
  std::optional<double> oracle_time;
  auto* oracle = app.add_subcommand("oracle-check", "compare closed-form and Hamiltonian-diagonalization propagation");
  oracle->add_option("--seed", oracle_opts.seed, "random seed");
  oracle->add_option("--n-cases", oracle_opts.n_cases, "number of random cases");
  oracle->add_option("--time", oracle_time, "evaluate every case at this time");

  Overrides death_args;
  SuddenDeathOptions death_opts;
  auto* death = app.add_subcommand("sudden-death", "sweep alpha and locate entanglement sudden death");
  death_args.add_params_options(death);
  death->add_option("--alpha-min", death_opts.alpha_min, "first alpha of the sweep");
  death->add_option("--alpha-max", death_opts.alpha_max, "last alpha of the sweep");
  death->add_option("--n-alpha", death_opts.n_alpha, "number of alpha values");
  death->add_option("--gamma", death_opts.gamma, "decay rate of the dissipative picture");
  death->add_option("--scan-samples", death_opts.scan_samples, "trajectory samples per alpha");

  for (auto* sub : {evolve, invariant, oracle, death}) {
    sub->add_option("--out", out_path, "write output to this file instead of stdout");
    sub->add_option("--format", format_name, "output format (csv or json)")->check(CLI::IsMember({"csv", "json"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  CommandResult result;
  try {
    if (evolve->parsed()) {
      result = cmd_evolve(evolve_args.resolve(), parse_format(format_name.empty() ? "csv" : format_name));
    } else if (invariant->parsed()) {
      result = cmd_invariant_check(invariant_args.resolve(), parse_format(format_name.empty() ? "json" : format_name),
                                   corrupt);
    } else if (oracle->parsed()) {
      oracle_opts.fixed_time = oracle_time;
      result = cmd_oracle_check(oracle_opts, parse_format(format_name.empty() ? "json" : format_name));
    } else {
      death_opts.params = death_args.resolve().params;
      result = cmd_sudden_death(death_opts, parse_format(format_name.empty() ? "csv" : format_name));
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  for (const auto& w : result.warnings) err << "warning: " << w << "\n";
  if (out_path.empty()) {
    out << result.output;
  } else {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot write " << out_path << "\n";
      return 2;
    }
    file << result.output;
  }
  return result.exit_code;
}

}  // namespace doublejc::cli
