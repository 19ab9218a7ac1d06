#pragma once

#include <array>
#include <string_view>

#include "doublejc/linalg.hpp"
#include "doublejc/model.hpp"

namespace doublejc {

/// Tolerance for deciding a 4x4 matrix is X-shaped.
inline constexpr double kXFormTolerance = 1e-10;
/// Eigenvalues in (-kEigenClip, 0) are treated as zero.
inline constexpr double kEigenClip = 1e-10;

/// Reduced state of 1, 2 or 3 qubits. Kept qubits are ordered A, B, a, b,
/// most significant first, matching the four-qubit index convention.
class DensityMatrix {
 public:
  /// Validates Hermiticity, unit trace and positivity.
  static DensityMatrix from_matrix(const CMatrix& m);
  static DensityMatrix unchecked(CMatrix m) { return DensityMatrix(std::move(m)); }

  Eigen::Index dim() const { return m_.rows(); }
  const CMatrix& matrix() const { return m_; }
  cplx operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  /// Throws DomainError if an invariant is violated.
  void validate() const;
  double purity() const;
  /// Only meaningful for dim() == 4.
  bool is_x_form(double tol = kXFormTolerance) const;

 private:
  explicit DensityMatrix(CMatrix m) : m_(std::move(m)) {}
  CMatrix m_;
};

struct ConcurrenceSet {
  double c_AB = 0.0;
  double c_Aa = 0.0;
  double c_Bb = 0.0;
  double c_ab = 0.0;
  double c_Ab = 0.0;
  double c_Ba = 0.0;
};

/// The six qubit pairs in ConcurrenceSet field order, with their labels.
struct QubitPair {
  std::string_view name;
  Bipartition keep;
};
const std::array<QubitPair, 6>& qubit_pairs();

/// Partial trace over the complement of `keep`.
DensityMatrix reduced_density(const FourQubitState& state, const Bipartition& keep);

/// Half the summed squared Gram areas of the projections <m|psi> over the P1 basis.
/// Zero exactly for product states; equals (1 - Tr rho_1^2) / 2.
double wedge_entanglement(const FourQubitState& state, const Bipartition& part);

/// Closed-form concurrence of an X-shaped two-qubit density matrix.
double concurrence_x(const DensityMatrix& rho);

/// Wootters concurrence from the spectrum of sqrt(rho) rho~ sqrt(rho).
double concurrence_wootters(const DensityMatrix& rho);

/// Concurrence before clamping at zero: 2 max(|rho14| - sqrt(rho22 rho33), |rho23| - sqrt(rho11 rho44))
/// for X-shaped input, lambda1 - lambda2 - lambda3 - lambda4 otherwise.
/// Positive exactly where the pair is entangled.
double signed_concurrence(const DensityMatrix& rho);

/// X fast path when applicable, Wootters otherwise.
double concurrence(const DensityMatrix& rho);

ConcurrenceSet pairwise_concurrences(const FourQubitState& state);

}  // namespace doublejc
