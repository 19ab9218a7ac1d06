#include "doublejc/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace doublejc {

namespace {

constexpr double kDensityTolerance = 1e-12;

// Packs the bits of `index` selected by `mask` into a dense index, highest bit first.
std::size_t compress(std::size_t index, std::uint8_t mask) {
  std::size_t out = 0;
  for (int bit = 3; bit >= 0; --bit) {
    const std::size_t b = std::size_t{1} << bit;
    if (mask & b) out = (out << 1) | ((index & b) ? 1 : 0);
  }
  return out;
}

double clip_eigenvalue(double v) {
  if (v < -kEigenClip) throw DomainError("matrix has a negative eigenvalue below -1e-10");
  return std::max(v, 0.0);
}

CMatrix spin_flip(const CMatrix& rho) {
  // sigma_y (x) sigma_y is the real anti-diagonal (-1, 1, 1, -1) in the computational basis.
  CMatrix yy = CMatrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  return yy * rho.conjugate() * yy;
}

void require_two_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw DomainError("concurrence needs a 4x4 two-qubit density matrix");
}

double x_form_argument(const DensityMatrix& rho) {
  const double r11 = rho(0, 0).real();
  const double r22 = rho(1, 1).real();
  const double r33 = rho(2, 2).real();
  const double r44 = rho(3, 3).real();
  const double outer = std::abs(rho(0, 3)) - std::sqrt(std::max(r22 * r33, 0.0));
  const double inner = std::abs(rho(1, 2)) - std::sqrt(std::max(r11 * r44, 0.0));
  return 2.0 * std::max(outer, inner);
}

double wootters_argument(const DensityMatrix& rho) {
  const auto rho_eig = jacobi_eigen(rho.matrix());
  const CMatrix sqrt_rho = hermitian_function(rho_eig, [](double v) { return cplx(std::sqrt(clip_eigenvalue(v))); });
  const CMatrix r = sqrt_rho * spin_flip(rho.matrix()) * sqrt_rho;
  const auto r_eig = jacobi_eigen(r);
  std::array<double, 4> lambda{};
  for (int k = 0; k < 4; ++k) lambda[static_cast<std::size_t>(k)] = std::sqrt(clip_eigenvalue(r_eig.values(k)));
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return lambda[0] - lambda[1] - lambda[2] - lambda[3];
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(const CMatrix& m) {
  DensityMatrix rho(m);
  rho.validate();
  return rho;
}

void DensityMatrix::validate() const {
  const auto n = m_.rows();
  if (m_.cols() != n || (n != 2 && n != 4 && n != 8)) throw DomainError("density matrix must be 2x2, 4x4 or 8x8");
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kDensityTolerance) throw DomainError("density matrix is not Hermitian");
  if (std::abs(m_.trace() - 1.0) > kDensityTolerance) throw DomainError("density matrix trace differs from 1");
  const auto eig = jacobi_eigen(m_);
  if (eig.values.minCoeff() < -kEigenClip) throw DomainError("density matrix is not positive semidefinite");
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

bool DensityMatrix::is_x_form(double tol) const {
  if (dim() != 4) return false;
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) {
      if (i == j || i + j == 3) continue;
      if (std::abs(m_(i, j)) >= tol) return false;
    }
  }
  return true;
}

const std::array<QubitPair, 6>& qubit_pairs() {
  static const std::array<QubitPair, 6> pairs = {{
      {"AB", Bipartition::parse("AB")},
      {"Aa", Bipartition::parse("Aa")},
      {"Bb", Bipartition::parse("Bb")},
      {"ab", Bipartition::parse("ab")},
      {"Ab", Bipartition::parse("Ab")},
      {"Ba", Bipartition::parse("Ba")},
  }};
  return pairs;
}

DensityMatrix reduced_density(const FourQubitState& state, const Bipartition& keep) {
  const std::uint8_t kept = keep.mask();
  const std::uint8_t traced = 0xF ^ kept;
  const Eigen::Index dim = Eigen::Index{1} << keep.size();
  CMatrix rho = CMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < 16; ++i) {
    if (state[i] == 0.0) continue;
    for (std::size_t j = 0; j < 16; ++j) {
      if ((i & traced) != (j & traced)) continue;
      rho(static_cast<Eigen::Index>(compress(i, kept)), static_cast<Eigen::Index>(compress(j, kept))) +=
          state[i] * std::conj(state[j]);
    }
  }
  return DensityMatrix::unchecked(std::move(rho));
}

double wedge_entanglement(const FourQubitState& state, const Bipartition& part) {
  const std::uint8_t p1 = part.mask();
  const std::uint8_t p2 = 0xF ^ p1;
  const std::size_t m_dim = std::size_t{1} << part.size();
  const std::size_t n_dim = 16 / m_dim;

  // projections[m][n] = <m, n | psi>
  std::vector<std::vector<cplx>> projections(m_dim, std::vector<cplx>(n_dim));
  for (std::size_t i = 0; i < 16; ++i) projections[compress(i, p1)][compress(i, p2)] = state[i];

  auto inner = [&](std::size_t m, std::size_t l) {
    cplx s = 0.0;
    for (std::size_t n = 0; n < n_dim; ++n) s += std::conj(projections[m][n]) * projections[l][n];
    return s;
  };

  std::vector<double> norms(m_dim);
  for (std::size_t m = 0; m < m_dim; ++m) norms[m] = inner(m, m).real();

  // Sum over m < l and double it, then halve: the m == l terms vanish.
  double total = 0.0;
  for (std::size_t m = 0; m < m_dim; ++m) {
    for (std::size_t l = m + 1; l < m_dim; ++l) {
      total += norms[m] * norms[l] - std::norm(inner(m, l));
    }
  }
  return std::max(total, 0.0);
}

double concurrence_x(const DensityMatrix& rho) {
  require_two_qubit(rho);
  if (!rho.is_x_form()) throw DomainError("density matrix is not X-shaped; use concurrence_wootters");
  return std::max(0.0, x_form_argument(rho));
}

double concurrence_wootters(const DensityMatrix& rho) {
  require_two_qubit(rho);
  return std::clamp(wootters_argument(rho), 0.0, 1.0);
}

double signed_concurrence(const DensityMatrix& rho) {
  require_two_qubit(rho);
  return rho.is_x_form() ? x_form_argument(rho) : wootters_argument(rho);
}

double concurrence(const DensityMatrix& rho) {
  require_two_qubit(rho);
  return rho.is_x_form() ? concurrence_x(rho) : concurrence_wootters(rho);
}

ConcurrenceSet pairwise_concurrences(const FourQubitState& state) {
  const auto& pairs = qubit_pairs();
  std::array<double, 6> values{};
  for (std::size_t k = 0; k < pairs.size(); ++k) values[k] = concurrence(reduced_density(state, pairs[k].keep));
  return {values[0], values[1], values[2], values[3], values[4], values[5]};
}

}  // namespace doublejc
