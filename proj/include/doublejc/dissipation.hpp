#pragma once

#include <optional>
#include <vector>

#include "doublejc/model.hpp"

namespace doublejc {

/// Band around zero inside which the signed concurrence is considered
/// undecided; such samples keep the previous alive/dead classification.
inline constexpr double kConcurrenceZeroBand = 1e-12;

struct DeathReport {
  std::vector<double> death_times;
  std::vector<double> revival_times;
  /// Dissipative-clock images of the death times lying in the monotone window Omega_A t < pi/2.
  std::vector<double> death_times_dissipative;
};

/// Time t' of an exponential decay at rate gamma that matches the JC excitation
/// cos^2(Omega t): exp(-gamma t') = cos^2(Omega t). Requires 0 <= Omega t < pi/2.
double jc_to_dissipative_time(double t, double omega_rabi, double gamma);

/// First time at which C_AB of the resonant, identical-coupling phi(alpha) state vanishes:
/// arcsin(sqrt(tan alpha)) / Omega when tan alpha < 1, nothing otherwise.
std::optional<double> sudden_death_onset(double alpha, double omega_rabi);

/// Scans the signed C_AB along the closed-form trajectory on [0, t_max] and refines
/// each alive/dead transition by bisection to a bracket narrower than 1e-9 / g_A.
/// A trajectory that starts disentangled reports a death at t = 0.
DeathReport death_revival_scan(const GenericCoefficients& coeffs, const ModelParams& params, double t_max,
                               int n_samples, double gamma = 1.0);

}  // namespace doublejc
