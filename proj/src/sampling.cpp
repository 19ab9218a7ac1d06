#include "doublejc/sampling.hpp"

#include <cmath>
#include <numbers>

namespace doublejc {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

cplx Rng::complex_gaussian() {
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
  return std::polar(r, 2.0 * std::numbers::pi * u2);
}

GenericCoefficients random_generic_state(Rng& rng) {
  GenericCoefficients::Storage amps;
  for (auto& a : amps) a = rng.complex_gaussian();
  return GenericCoefficients::normalized(amps);
}

ModelParams random_model_params(Rng& rng) {
  const double g_a = rng.uniform(0.5, 2.0);
  const double g_b = g_a * rng.uniform(0.2, 5.0);
  const double delta_a = g_a * rng.uniform(-2.0, 2.0);
  const double delta_b = g_b * rng.uniform(-2.0, 2.0);
  const double nu_a = rng.uniform(0.5, 3.0);
  const double nu_b = rng.uniform(0.5, 3.0);
  return {SubsystemParams::detuned(g_a, delta_a, nu_a), SubsystemParams::detuned(g_b, delta_b, nu_b)};
}

}  // namespace doublejc
