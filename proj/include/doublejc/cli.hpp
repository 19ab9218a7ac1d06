#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "doublejc/model.hpp"
#include "doublejc/propagator.hpp"

namespace doublejc::cli {

/// Raised for malformed configs and arguments; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

struct InitialStateSpec {
  enum class Kind { Phi, Psi, Generic, Random };
  Kind kind = Kind::Psi;
  double alpha = 0.7853981633974483;  // pi/4
  double beta = 0.0;
  /// Raw amplitudes for Kind::Generic, before normalization checks.
  GenericCoefficients::Storage amplitudes{};
};

struct RunConfig {
  InitialStateSpec initial_state;
  ModelParams params = ModelParams::resonant(1.0, 1.0);
  double t_max = 3.141592653589793;
  int n_samples = 201;
  std::uint64_t seed = 42;
  /// Column names to emit from `evolve`; empty means all.
  std::vector<std::string> outputs;
};

/// Parses a JSON document. Missing fields keep their defaults.
///
/// {
///   "initial_state": {"kind": "phi" | "psi", "alpha": 0.52, "beta": 0.0}
///                  | {"kind": "generic", "coefficients": [[re, im], ... 9 pairs, c1..c5 then d1..d4]}
///                  | {"kind": "random"},
///   "params": {"A": {"nu": 1, "omega": 1, "g": 1}, "B": {"nu": 1, "delta": 0, "g": 2}},
///   "t_max": 3.14, "n_samples": 201, "seed": 42, "outputs": ["t", "C_AB"]
/// }
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

/// Checks n_samples >= 2 and t_max > 0.
void validate(const RunConfig& config);

/// Builds the initial coefficients. Generic input off unit norm by less than 1e-6
/// is rescaled and a warning appended; larger defects throw UsageError.
GenericCoefficients resolve_initial_state(const RunConfig& config, std::vector<std::string>& warnings);

/// Uniform grid t_i = t_max * i / (n - 1).
std::vector<double> time_grid(double t_max, int n_samples);

struct CommandResult {
  int exit_code = 0;
  std::string output;
  std::vector<std::string> warnings;
};

/// Fixed column order of `evolve`.
const std::vector<std::string>& evolve_columns();

CommandResult cmd_evolve(const RunConfig& config, Format format);

/// Test hook: closed-form evolution followed by a non-local rotation mixing
/// |uu00> and |dd00>, which changes E_{Aa-Bb}.
GenericCoefficients corrupted_propagator(const GenericCoefficients& coeffs, const ModelParams& params, double t);

/// Exit code 0 iff the E_{Aa-Bb} drift stays below 1e-10.
CommandResult cmd_invariant_check(const RunConfig& config, Format format, bool corrupt_propagator = false);

struct OracleCheckOptions {
  std::uint64_t seed = 42;
  int n_cases = 1000;
  /// Forces every case to this time instead of a random one.
  std::optional<double> fixed_time;
};

/// Exit code 0 iff both deviations stay below 1e-10.
CommandResult cmd_oracle_check(const OracleCheckOptions& options, Format format);

struct SuddenDeathOptions {
  double alpha_min = 0.0;
  double alpha_max = 1.5707963267948966;
  int n_alpha = 31;
  double gamma = 1.0;
  int scan_samples = 2001;
  ModelParams params = ModelParams::resonant(1.0, 1.0);
};

CommandResult cmd_sudden_death(const SuddenDeathOptions& options, Format format);

/// Full command-line entry point. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// %.17g rendering used for every numeric CSV field.
std::string format_number(double value);

}  // namespace doublejc::cli
