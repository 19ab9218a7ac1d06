#pragma once

#include <functional>

#include "doublejc/linalg.hpp"
#include "doublejc/model.hpp"

namespace doublejc {

/// Rabi-oscillation amplitude of |up,0> -> |up,0>:
/// e^{-i nu t} [cos(Omega t) - i (Delta / 2 Omega) sin(Omega t)].
cplx f_amp(const SubsystemParams& p, double t);

/// Transfer amplitude |up,0> -> |down,1>: -i (g / Omega) e^{-i nu t} sin(Omega t).
cplx g_amp(const SubsystemParams& p, double t);

/// Phase of the ground state |down,0>: e^{i Delta t / 2}.
cplx h_amp(const SubsystemParams& p, double t);

/// Amplitude |down,1> -> |down,1>; the opposite-detuning branch of f_amp.
cplx f_bar_amp(const SubsystemParams& p, double t);

/// exp(-i H_k t) restricted to the qutrit (|up,0>, |down,1>, |down,0>).
class SubsystemUnitary {
 public:
  explicit SubsystemUnitary(const CMatrix3& m) : m_(m) {}

  const CMatrix3& matrix() const { return m_; }
  cplx operator()(int row, int col) const { return m_(row, col); }

  /// max |(U^dagger U - I)_ij|
  double unitarity_defect() const;

 private:
  CMatrix3 m_;
};

SubsystemUnitary subsystem_unitary(const SubsystemParams& p, double t);

/// Applies U_A (x) U_B from the closed-form amplitudes.
GenericCoefficients evolve_closed_form(const GenericCoefficients& coeffs, const ModelParams& params, double t);

/// Applies a given pair of subsystem unitaries to the nine-amplitude vector.
GenericCoefficients apply_local(const GenericCoefficients& coeffs, const CMatrix3& u_a, const CMatrix3& u_b);

/// Single-subsystem Hamiltonian in the qutrit basis, including the nu/2 zero-point term.
CMatrix3 subsystem_hamiltonian(const SubsystemParams& p);

/// exp(-i H t) by Hermitian eigendecomposition of subsystem_hamiltonian.
CMatrix3 oracle_unitary(const SubsystemParams& p, double t);

/// Reference propagation that never touches the closed-form amplitudes.
GenericCoefficients oracle_evolve(const GenericCoefficients& coeffs, const ModelParams& params, double t);

/// Any map (coefficients, params, t) -> coefficients; evolve_closed_form by default.
using Propagator = std::function<GenericCoefficients(const GenericCoefficients&, const ModelParams&, double)>;

/// Excitation number of subsystem k (atom up plus photons), as a qutrit operator.
CMatrix3 excitation_number();

}  // namespace doublejc
