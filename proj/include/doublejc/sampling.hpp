#pragma once

#include <cstdint>
#include <random>

#include "doublejc/model.hpp"

namespace doublejc {

/// Portable random source for reproducible checks.
///
/// The engine is std::mt19937_64 (bit-exact across standard libraries). Uniform
/// doubles take the top 53 bits: (x >> 11) * 2^-53. Normals use the Box-Muller
/// pair r = sqrt(-2 ln(1 - u1)), theta = 2 pi u2, returned as r (cos theta, sin theta),
/// so one complex Gaussian consumes exactly two engine outputs. Standard library
/// distributions are avoided because their algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// [0, 1)
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Complex number with independent standard normal real and imaginary parts.
  cplx complex_gaussian();

 private:
  std::mt19937_64 engine_;
};

/// Uniform on the unit sphere of C^9: nine complex Gaussians, normalized.
GenericCoefficients random_generic_state(Rng& rng);

/// Random non-identical subsystems: g_A in [0.5, 2], g_B / g_A in [0.2, 5],
/// Delta_k / g_k in [-2, 2], nu_k in [0.5, 3].
ModelParams random_model_params(Rng& rng);

}  // namespace doublejc
