#include "doublejc/invariants.hpp"

#include <algorithm>
#include <cmath>

#include "doublejc/parallel.hpp"
#include "doublejc/propagator.hpp"

namespace doublejc {

double invariant_E(const FourQubitState& state) { return wedge_entanglement(state, Bipartition::parse("Aa")); }

double geninv_closed_form(const GenericCoefficients& k) {
  const cplx c1 = k.c(1), c2 = k.c(2), c3 = k.c(3), c4 = k.c(4), c5 = k.c(5);
  const cplx d1 = k.d(1), d2 = k.d(2), d3 = k.d(3), d4 = k.d(4);
  return std::norm(c1 * c4 - c2 * c3) + std::norm(c1 * d3 - c2 * d1) + std::norm(c3 * d3 - c4 * d1) +
         std::norm(c1 * d4 - c3 * d2) + std::norm(c2 * d4 - c4 * d2) + std::norm(c1 * c5 - d1 * d2) +
         std::norm(c2 * c5 - d2 * d3) + std::norm(c3 * c5 - d1 * d4) + std::norm(c4 * c5 - d3 * d4);
}

double eberly_sum_psi(const ConcurrenceSet& cs) { return cs.c_AB + cs.c_ab; }

double eberly_combo_phi(const ConcurrenceSet& cs, double alpha) {
  if (!std::isfinite(alpha) || std::abs(std::cos(alpha)) < 1e-12) {
    throw DomainError("eberly_combo_phi: tan(alpha) is not finite");
  }
  return cs.c_AB + cs.c_ab + (cs.c_Aa + cs.c_Bb) * std::abs(std::tan(alpha)) - (cs.c_Ab + cs.c_Ba);
}

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::InvariantE: return "invariant_E";
    case Quantity::Geninv: return "geninv";
    case Quantity::EberlyPsi: return "eberly_psi";
    case Quantity::EberlyPhi: return "eberly_phi";
  }
  return "unknown";
}

Quantity parse_quantity(const std::string& name) {
  for (auto q : {Quantity::InvariantE, Quantity::Geninv, Quantity::EberlyPsi, Quantity::EberlyPhi}) {
    if (to_string(q) == name) return q;
  }
  throw DomainError("unknown invariant quantity: " + name);
}

InvariantReport drift_check(const GenericCoefficients& coeffs, const ModelParams& params,
                            std::span<const double> times, Quantity quantity, std::optional<double> alpha,
                            const Propagator& propagate) {
  if (times.empty()) throw DomainError("drift_check needs at least one sample time");
  if (!std::is_sorted(times.begin(), times.end())) throw DomainError("drift_check sample times must ascend");

  const double phi_alpha = alpha.value_or(std::atan2(std::abs(coeffs.c(5)), std::abs(coeffs.c(1))));
  auto evaluate = [&](double t) {
    const auto evolved = propagate ? propagate(coeffs, params, t) : evolve_closed_form(coeffs, params, t);
    switch (quantity) {
      case Quantity::InvariantE: return invariant_E(embed(evolved));
      case Quantity::Geninv: return geninv_closed_form(evolved);
      case Quantity::EberlyPsi: return eberly_sum_psi(pairwise_concurrences(embed(evolved)));
      case Quantity::EberlyPhi: return eberly_combo_phi(pairwise_concurrences(embed(evolved)), phi_alpha);
    }
    return 0.0;
  };

  InvariantReport report;
  report.quantity = quantity;
  report.sample_times.assign(times.begin(), times.end());
  report.per_time_values = parallel_map(times.size(), [&](std::size_t i) { return evaluate(times[i]); });
  report.initial_value = report.per_time_values.front();
  for (double v : report.per_time_values) {
    report.max_abs_drift = std::max(report.max_abs_drift, std::abs(v - report.initial_value));
  }
  return report;
}

}  // namespace doublejc
