#include "doublejc/propagator.hpp"

#include <cmath>

namespace doublejc {

namespace {

constexpr cplx kI{0.0, 1.0};

void check_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("evolution time must be finite and non-negative");
}

// sin(Omega t) / Omega, with the Omega -> 0 limit t.
double sinc_t(double rabi, double t) {
  if (rabi == 0.0) return t;
  return std::sin(rabi * t) / rabi;
}

}  // namespace

cplx f_amp(const SubsystemParams& p, double t) {
  check_time(t);
  const double rabi = p.rabi();
  const cplx phase = std::polar(1.0, -p.nu() * t);
  // Omega == 0 only when g == 0 and Delta == 0: pure phase.
  if (rabi == 0.0) return phase;
  return phase * cplx(std::cos(rabi * t), -(p.delta() / 2.0) * sinc_t(rabi, t));
}

cplx f_bar_amp(const SubsystemParams& p, double t) {
  check_time(t);
  const double rabi = p.rabi();
  const cplx phase = std::polar(1.0, -p.nu() * t);
  if (rabi == 0.0) return phase;
  return phase * cplx(std::cos(rabi * t), (p.delta() / 2.0) * sinc_t(rabi, t));
}

cplx g_amp(const SubsystemParams& p, double t) {
  check_time(t);
  if (p.g() == 0.0) return 0.0;
  return -kI * p.g() * std::polar(1.0, -p.nu() * t) * sinc_t(p.rabi(), t);
}

cplx h_amp(const SubsystemParams& p, double t) {
  check_time(t);
  return std::polar(1.0, p.delta() * t / 2.0);
}

double SubsystemUnitary::unitarity_defect() const {
  const CMatrix3 defect = m_.adjoint() * m_ - CMatrix3::Identity();
  return defect.cwiseAbs().maxCoeff();
}

SubsystemUnitary subsystem_unitary(const SubsystemParams& p, double t) {
  const cplx f = f_amp(p, t);
  const cplx g = g_amp(p, t);
  CMatrix3 m;
  m << f, g, 0.0,
       g, f_bar_amp(p, t), 0.0,
       0.0, 0.0, h_amp(p, t);
  return SubsystemUnitary(m);
}

GenericCoefficients apply_local(const GenericCoefficients& coeffs, const CMatrix3& u_a, const CMatrix3& u_b) {
  // psi(la, lb) -> sum U_A(la, ka) U_B(lb, kb) psi(ka, kb), i.e. U_A psi U_B^T.
  CMatrix3 psi;
  for (std::size_t k = 0; k < 9; ++k) {
    const auto [la, lb] = GenericCoefficients::levels_of(k);
    psi(static_cast<int>(la), static_cast<int>(lb)) = coeffs[k];
  }
  const CMatrix3 out = u_a * psi * u_b.transpose();
  GenericCoefficients::Storage amps;
  for (std::size_t k = 0; k < 9; ++k) {
    const auto [la, lb] = GenericCoefficients::levels_of(k);
    amps[k] = out(static_cast<int>(la), static_cast<int>(lb));
  }
  return GenericCoefficients::unchecked(amps);
}

GenericCoefficients evolve_closed_form(const GenericCoefficients& coeffs, const ModelParams& params, double t) {
  return apply_local(coeffs, subsystem_unitary(params.sub_a, t).matrix(), subsystem_unitary(params.sub_b, t).matrix());
}

CMatrix3 subsystem_hamiltonian(const SubsystemParams& p) {
  // nu (n + 1/2) + (omega / 2) sigma_z + g (a^dag sigma_- + a sigma_+)
  const double nu = p.nu();
  const double omega = p.omega();
  CMatrix3 h = CMatrix3::Zero();
  h(0, 0) = nu / 2.0 + omega / 2.0;
  h(1, 1) = 1.5 * nu - omega / 2.0;
  h(2, 2) = nu / 2.0 - omega / 2.0;
  h(0, 1) = p.g();
  h(1, 0) = p.g();
  return h;
}

CMatrix3 oracle_unitary(const SubsystemParams& p, double t) {
  check_time(t);
  if (t == 0.0) return CMatrix3::Identity();
  const auto eig = jacobi_eigen(subsystem_hamiltonian(p));
  return hermitian_function(eig, [t](double e) { return std::polar(1.0, -e * t); });
}

GenericCoefficients oracle_evolve(const GenericCoefficients& coeffs, const ModelParams& params, double t) {
  if (t == 0.0) {
    check_time(t);
    return coeffs;
  }
  const CMatrix3 u_a = oracle_unitary(params.sub_a, t);
  const CMatrix3 u_b = oracle_unitary(params.sub_b, t);
  // Full 9x9 Kronecker product on the vector indexed 3 * level_a + level_b.
  Eigen::Matrix<cplx, 9, 9> u;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) u.block<3, 3>(3 * i, 3 * j) = u_a(i, j) * u_b;
  Eigen::Matrix<cplx, 9, 1> vec;
  for (std::size_t k = 0; k < 9; ++k) {
    const auto [la, lb] = GenericCoefficients::levels_of(k);
    vec(3 * static_cast<int>(la) + static_cast<int>(lb)) = coeffs[k];
  }
  const Eigen::Matrix<cplx, 9, 1> out = u * vec;
  GenericCoefficients::Storage amps;
  for (std::size_t k = 0; k < 9; ++k) {
    const auto [la, lb] = GenericCoefficients::levels_of(k);
    amps[k] = out(3 * static_cast<int>(la) + static_cast<int>(lb));
  }
  return GenericCoefficients::unchecked(amps);
}

CMatrix3 excitation_number() {
  CMatrix3 n = CMatrix3::Zero();
  n(0, 0) = 1.0;
  n(1, 1) = 1.0;
  return n;
}

}  // namespace doublejc
