#pragma once

// Reference computations used only by the tests. Nothing here calls into the
// propagator or entanglement code paths it is used to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "doublejc/model.hpp"

namespace oracle {

using doublejc::cplx;
using doublejc::SubsystemParams;

inline constexpr cplx I{0.0, 1.0};

/// f_k, g_k, h_k written out term by term from the textbook JC solution.
inline cplx f(const SubsystemParams& p, double t) {
  const double W = std::sqrt(p.g() * p.g() + p.delta() * p.delta() / 4.0);
  return std::exp(-I * p.nu() * t) * (std::cos(W * t) - I * (p.delta() / (2.0 * W)) * std::sin(W * t));
}
inline cplx g(const SubsystemParams& p, double t) {
  const double W = std::sqrt(p.g() * p.g() + p.delta() * p.delta() / 4.0);
  return -I * (p.g() / W) * std::exp(-I * p.nu() * t) * std::sin(W * t);
}
inline cplx h(const SubsystemParams& p, double t) { return std::exp(I * p.delta() * t / 2.0); }

/// x1..x5 of the evolved phi state.
inline std::array<cplx, 5> phi_coefficients(double alpha, double beta, const doublejc::ModelParams& m, double t) {
  const auto& A = m.sub_a;
  const auto& B = m.sub_b;
  const double ca = std::cos(alpha);
  return {f(A, t) * f(B, t) * ca, f(A, t) * g(B, t) * ca, g(A, t) * f(B, t) * ca, g(A, t) * g(B, t) * ca,
          h(A, t) * h(B, t) * std::exp(I * beta) * std::sin(alpha)};
}

/// y1..y4 of the evolved psi state.
inline std::array<cplx, 4> psi_coefficients(double alpha, double beta, const doublejc::ModelParams& m, double t) {
  const auto& A = m.sub_a;
  const auto& B = m.sub_b;
  const double ca = std::cos(alpha);
  const cplx sb = std::exp(I * beta) * std::sin(alpha);
  return {f(A, t) * h(B, t) * ca, h(A, t) * f(B, t) * sb, g(A, t) * h(B, t) * ca, h(A, t) * g(B, t) * sb};
}

/// Four-qubit Hamiltonian of both JC systems on the full 16-dim space, built from
/// Pauli and truncated ladder operators with Kronecker products. Order (A, B, a, b).
inline Eigen::MatrixXcd full_hamiltonian(const doublejc::ModelParams& m) {
  using M = Eigen::MatrixXcd;
  M id2 = M::Identity(2, 2);
  M sz(2, 2), sm(2, 2), ann(2, 2);
  sz << 1, 0, 0, -1;    // basis (up/1, down/0) -> index 0 is bit 1
  sm << 0, 0, 1, 0;     // sigma_- |up> = |down>
  ann << 0, 0, 1, 0;    // a |1> = |0>, same ordering (|1>, |0>)
  auto kron4 = [](const M& a, const M& b, const M& c, const M& d) {
    return Eigen::kroneckerProduct(Eigen::kroneckerProduct(a, b).eval(), Eigen::kroneckerProduct(c, d).eval()).eval();
  };
  M n = ann.adjoint() * ann;
  M h = M::Zero(16, 16);
  const auto& A = m.sub_a;
  const auto& B = m.sub_b;
  h += A.nu() * (kron4(id2, id2, n, id2) + 0.5 * M::Identity(16, 16));
  h += 0.5 * A.omega() * kron4(sz, id2, id2, id2);
  h += A.g() * (kron4(sm, id2, ann.adjoint(), id2) + kron4(sm.adjoint(), id2, ann, id2));
  h += B.nu() * (kron4(id2, id2, id2, n) + 0.5 * M::Identity(16, 16));
  h += 0.5 * B.omega() * kron4(id2, sz, id2, id2);
  h += B.g() * (kron4(id2, sm, id2, ann.adjoint()) + kron4(id2, sm.adjoint(), id2, ann));
  return h;
}

/// Maps the Kronecker ordering above (index 0 = all excited) onto the library's
/// index convention (index 15 = all excited).
inline std::size_t kron_to_lib(std::size_t k) { return 15 - k; }

/// exp(-i H t) psi on the 16-dim space via Eigen's Pade matrix exponential.
inline std::array<cplx, 16> brute_force_evolve(const std::array<cplx, 16>& psi, const doublejc::ModelParams& m,
                                               double t) {
  const Eigen::MatrixXcd u = (cplx(0.0, -t) * full_hamiltonian(m)).exp();
  Eigen::VectorXcd v(16);
  for (std::size_t k = 0; k < 16; ++k) v(static_cast<Eigen::Index>(k)) = psi[kron_to_lib(k)];
  const Eigen::VectorXcd out = u * v;
  std::array<cplx, 16> result{};
  for (std::size_t k = 0; k < 16; ++k) result[kron_to_lib(k)] = out(static_cast<Eigen::Index>(k));
  return result;
}

/// Partial trace by explicit outer product |psi><psi| over the full 16x16 space.
inline Eigen::MatrixXcd partial_trace(const std::array<cplx, 16>& psi, unsigned keep_mask) {
  Eigen::MatrixXcd full(16, 16);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) full(i, j) = psi[static_cast<std::size_t>(i)] * std::conj(psi[static_cast<std::size_t>(j)]);
  std::vector<int> kept_bits;
  for (int b = 3; b >= 0; --b)
    if (keep_mask & (1u << b)) kept_bits.push_back(b);
  const int dim = 1 << kept_bits.size();
  auto reduced_index = [&](int full_index) {
    int r = 0;
    for (int b : kept_bits) r = (r << 1) | ((full_index >> b) & 1);
    return r;
  };
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  const unsigned traced = 0xFu ^ keep_mask;
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j)
      if ((static_cast<unsigned>(i) & traced) == (static_cast<unsigned>(j) & traced))
        rho(reduced_index(i), reduced_index(j)) += full(i, j);
  return rho;
}

/// Pure two-qubit concurrence 2|ad - bc| of amplitudes (a, b, c, d) = (|00>, |01>, |10>, |11>).
inline double pure_pair_concurrence(cplx a00, cplx a01, cplx a10, cplx a11) { return 2.0 * std::abs(a00 * a11 - a01 * a10); }

/// Wootters concurrence via Eigen's general complex eigensolver on rho * rho~.
inline double wootters_general(const Eigen::Matrix4cd& rho) {
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Eigen::Matrix4cd r = rho * yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(r);
  std::array<double, 4> l{};
  for (int k = 0; k < 4; ++k) l[static_cast<std::size_t>(k)] = std::sqrt(std::max(0.0, es.eigenvalues()(k).real()));
  std::sort(l.begin(), l.end(), std::greater<>());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

}  // namespace oracle
