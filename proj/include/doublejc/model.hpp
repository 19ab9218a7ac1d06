#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace doublejc {

using cplx = std::complex<double>;

/// Tolerance on the squared norm of every state container.
inline constexpr double kNormTolerance = 1e-12;

/// Raised when an argument lies outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// One atom-cavity pair. Units are angular frequencies with hbar = 1.
class SubsystemParams {
 public:
  SubsystemParams() = default;
  SubsystemParams(double nu, double omega, double g);

  /// Resonant pair (omega == nu) with the given coupling.
  static SubsystemParams resonant(double g, double nu = 1.0) { return {nu, nu, g}; }
  /// Pair with a prescribed detuning omega - nu.
  static SubsystemParams detuned(double g, double delta, double nu = 1.0) { return {nu, nu + delta, g}; }

  double nu() const { return nu_; }
  double omega() const { return omega_; }
  double g() const { return g_; }
  double delta() const { return delta_; }
  /// sqrt(g^2 + delta^2 / 4)
  double rabi() const { return rabi_; }

 private:
  double nu_ = 1.0;
  double omega_ = 1.0;
  double g_ = 1.0;
  double delta_ = 0.0;
  double rabi_ = 1.0;
};

struct ModelParams {
  SubsystemParams sub_a;
  SubsystemParams sub_b;

  static ModelParams resonant(double g_a, double g_b, double nu = 1.0) {
    return {SubsystemParams::resonant(g_a, nu), SubsystemParams::resonant(g_b, nu)};
  }
};

/// Per-subsystem qutrit levels spanning the one-excitation manifold plus ground.
enum class Level : int { UpVacuum = 0, DownPhoton = 1, DownVacuum = 2 };

/// The nine amplitudes of the two-qutrit subspace.
///
/// Storage order is c1..c5, d1..d4, i.e. the kets
/// |uu00>, |du10>, |ud01>, |dd11>, |dd00>, |ud00>, |du00>, |dd10>, |dd01>
/// with atoms (A, B) first and fields (a, b) last.
class GenericCoefficients {
 public:
  using Storage = std::array<cplx, 9>;

  /// Zero vector; only useful as a placeholder before assignment.
  GenericCoefficients() = default;

  /// Validates normalization to kNormTolerance.
  static GenericCoefficients from_amplitudes(const Storage& amps);
  /// Rescales to unit norm; throws on a zero vector.
  static GenericCoefficients normalized(const Storage& amps);
  /// No normalization check. For propagator output and deliberately broken states in tests.
  static GenericCoefficients unchecked(const Storage& amps) {
    GenericCoefficients out;
    out.amps_ = amps;
    return out;
  }

  /// c_i for i in 1..5
  cplx c(int i) const;
  /// d_j for j in 1..4
  cplx d(int j) const;

  const Storage& amplitudes() const { return amps_; }
  cplx operator[](std::size_t k) const { return amps_[k]; }

  /// Amplitude of |level_a> (x) |level_b> in subsystems Aa and Bb.
  cplx at(Level level_a, Level level_b) const;

  double norm_squared() const;

  /// Qutrit pair (Aa level, Bb level) for storage slot k.
  static std::pair<Level, Level> levels_of(std::size_t k);
  /// Storage slot for a qutrit pair.
  static std::size_t slot_of(Level level_a, Level level_b);

 private:
  Storage amps_{};
};

/// |phi(0)> = cos(alpha)|uu> + sin(alpha) e^{i beta}|dd>, fields empty.
GenericCoefficients make_bell_phi(double alpha, double beta);
/// |psi(0)> = cos(alpha)|ud> + sin(alpha) e^{i beta}|du>, fields empty.
GenericCoefficients make_bell_psi(double alpha, double beta);

/// Bit positions of the four subsystems inside a 16-dim basis index.
/// index = 8*A + 4*B + 2*a + b; atoms up -> 1, fields one photon -> 1.
enum class Subsystem : std::uint8_t { AtomA = 8, AtomB = 4, FieldA = 2, FieldB = 1 };

class FourQubitState {
 public:
  using Storage = std::array<cplx, 16>;

  FourQubitState() = default;
  static FourQubitState from_amplitudes(const Storage& amps);
  static FourQubitState unchecked(const Storage& amps) {
    FourQubitState out;
    out.amp_ = amps;
    return out;
  }

  cplx operator[](std::size_t index) const { return amp_[index]; }
  const Storage& amplitudes() const { return amp_; }
  std::span<const cplx, 16> view() const { return amp_; }
  double norm_squared() const;

 private:
  Storage amp_{};
};

/// Basis index of the qutrit pair inside the four-qubit space.
std::size_t four_qubit_index(Level level_a, Level level_b);

FourQubitState embed(const GenericCoefficients& coeffs);

/// Inverse of embed. Throws if any amplitude outside the nine-state subspace exceeds `tol`.
GenericCoefficients extract(const FourQubitState& state, double tol = 1e-12);

/// A split of {A, B, a, b} into P1 and its complement.
class Bipartition {
 public:
  /// mask is an OR of Subsystem bits; must be neither empty nor full.
  explicit Bipartition(std::uint8_t mask);

  /// Parses "A", "Aa", "AB", or the full "Aa-Bb" form. Order inside a side is free.
  static Bipartition parse(const std::string& label);

  std::uint8_t mask() const { return mask_; }
  Bipartition complement() const { return Bipartition(static_cast<std::uint8_t>(0xF ^ mask_)); }
  int size() const;
  bool contains(Subsystem s) const { return (mask_ & static_cast<std::uint8_t>(s)) != 0; }

  /// "Aa-Bb" style label, each side listed in A, B, a, b order.
  std::string label() const;

  /// The seven classes {A}, {B}, {a}, {b}, {A,a}, {A,b}, {A,B}.
  static const std::array<Bipartition, 7>& canonical();

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  std::uint8_t mask_;
};

}  // namespace doublejc
