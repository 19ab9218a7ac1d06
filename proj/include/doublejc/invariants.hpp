#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "doublejc/entanglement.hpp"
#include "doublejc/model.hpp"
#include "doublejc/propagator.hpp"

namespace doublejc {

/// E_{Aa-Bb}: wedge entanglement between the two atom-cavity subsystems.
double invariant_E(const FourQubitState& state);

/// Nine-term closed form of E_{Aa-Bb} for the two-qutrit amplitudes.
double geninv_closed_form(const GenericCoefficients& coeffs);

/// C_AB + C_ab
double eberly_sum_psi(const ConcurrenceSet& cs);

/// C_AB + C_ab + (C_Aa + C_Bb)|tan alpha| - (C_Ab + C_Ba). Throws when tan alpha diverges.
double eberly_combo_phi(const ConcurrenceSet& cs, double alpha);

enum class Quantity { InvariantE, Geninv, EberlyPsi, EberlyPhi };

std::string to_string(Quantity q);
Quantity parse_quantity(const std::string& name);

struct InvariantReport {
  Quantity quantity = Quantity::InvariantE;
  double initial_value = 0.0;
  double max_abs_drift = 0.0;
  std::vector<double> sample_times;
  std::vector<double> per_time_values;
};

/// Samples `quantity` along the closed-form trajectory.
///
/// initial_value is the value at times.front(). EberlyPhi uses `alpha` when given,
/// otherwise atan2(|c5|, |c1|), which recovers alpha for make_bell_phi states.
/// An empty `propagate` means evolve_closed_form.
/// Throws DomainError on an empty or non-ascending time list.
InvariantReport drift_check(const GenericCoefficients& coeffs, const ModelParams& params,
                            std::span<const double> times, Quantity quantity,
                            std::optional<double> alpha = std::nullopt, const Propagator& propagate = {});

}  // namespace doublejc
