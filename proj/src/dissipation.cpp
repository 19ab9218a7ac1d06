#include "doublejc/dissipation.hpp"

#include <cmath>
#include <numbers>

#include "doublejc/entanglement.hpp"
#include "doublejc/parallel.hpp"
#include "doublejc/propagator.hpp"

namespace doublejc {

namespace {

// tan(pi/4) rounds to 1 - 1ulp, which would otherwise report a zero-width death at Omega t = pi/2.
constexpr double kTanOneSlack = 1e-12;

double signed_atom_concurrence(const GenericCoefficients& coeffs, const ModelParams& params, double t) {
  const auto state = embed(evolve_closed_form(coeffs, params, t));
  return signed_concurrence(reduced_density(state, Bipartition::parse("AB")));
}

enum class Vitality { Alive, Dead, Undecided };

Vitality classify(double q) {
  if (q > kConcurrenceZeroBand) return Vitality::Alive;
  if (q < -kConcurrenceZeroBand) return Vitality::Dead;
  return Vitality::Undecided;
}

}  // namespace

double jc_to_dissipative_time(double t, double omega_rabi, double gamma) {
  if (!(gamma > 0.0)) throw DomainError("decay rate gamma must be positive");
  if (!(omega_rabi > 0.0)) throw DomainError("Rabi frequency must be positive");
  if (!(t >= 0.0)) throw DomainError("JC time must be non-negative");
  const double phase = omega_rabi * t;
  if (!(phase < std::numbers::pi / 2)) {
    throw DomainError("Omega t must stay below pi/2; the dissipative clock diverges there");
  }
  if (phase == 0.0) return 0.0;
  return -2.0 * std::log(std::cos(phase)) / gamma;
}

std::optional<double> sudden_death_onset(double alpha, double omega_rabi) {
  if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 2)) throw DomainError("alpha must lie in [0, pi/2]");
  if (!(omega_rabi > 0.0)) throw DomainError("Rabi frequency must be positive");
  const double tan_alpha = std::tan(alpha);
  if (!(tan_alpha < 1.0 - kTanOneSlack)) return std::nullopt;
  return std::asin(std::sqrt(tan_alpha)) / omega_rabi;
}

DeathReport death_revival_scan(const GenericCoefficients& coeffs, const ModelParams& params, double t_max,
                               int n_samples, double gamma) {
  if (n_samples < 100) throw DomainError("death_revival_scan needs at least 100 samples");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw DomainError("t_max must be positive and finite");

  const auto n = static_cast<std::size_t>(n_samples);
  auto time_at = [&](std::size_t i) { return t_max * static_cast<double>(i) / static_cast<double>(n - 1); };
  const auto q = parallel_map(n, [&](std::size_t i) { return signed_atom_concurrence(coeffs, params, time_at(i)); });

  const double g_scale = params.sub_a.g() > 0.0 ? params.sub_a.g() : 1.0;
  const double width = 1e-9 / g_scale;

  // lo carries the lo_alive state, hi the opposite one.
  auto refine = [&](double lo, double hi, bool lo_alive) {
    while (hi - lo >= width) {
      const double mid = 0.5 * (lo + hi);
      const bool mid_alive = signed_atom_concurrence(coeffs, params, mid) > 0.0;
      if (mid_alive == lo_alive) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };

  DeathReport report;
  bool alive = classify(q[0]) == Vitality::Alive;
  if (!alive) report.death_times.push_back(0.0);
  std::size_t last_decided = 0;
  for (std::size_t i = 1; i < n; ++i) {
    const auto v = classify(q[i]);
    if (v == Vitality::Undecided) continue;
    const bool now_alive = v == Vitality::Alive;
    if (now_alive != alive) {
      const double t = refine(time_at(last_decided), time_at(i), alive);
      (alive ? report.death_times : report.revival_times).push_back(t);
      alive = now_alive;
    }
    last_decided = i;
  }

  const double rabi = params.sub_a.rabi();
  if (rabi > 0.0) {
    for (double t : report.death_times) {
      if (rabi * t < std::numbers::pi / 2) report.death_times_dissipative.push_back(jc_to_dissipative_time(t, rabi, gamma));
    }
  }
  return report;
}

}  // namespace doublejc
