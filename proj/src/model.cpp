#include "doublejc/model.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace doublejc {

namespace {

constexpr std::array<std::pair<Level, Level>, 9> kSlotLevels = {{
    {Level::UpVacuum, Level::UpVacuum},      // c1 |uu00>
    {Level::DownPhoton, Level::UpVacuum},    // c2 |du10>
    {Level::UpVacuum, Level::DownPhoton},    // c3 |ud01>
    {Level::DownPhoton, Level::DownPhoton},  // c4 |dd11>
    {Level::DownVacuum, Level::DownVacuum},  // c5 |dd00>
    {Level::UpVacuum, Level::DownVacuum},    // d1 |ud00>
    {Level::DownVacuum, Level::UpVacuum},    // d2 |du00>
    {Level::DownPhoton, Level::DownVacuum},  // d3 |dd10>
    {Level::DownVacuum, Level::DownPhoton},  // d4 |dd01>
}};

void check_bell_angles(double alpha, double beta) {
  if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 2)) {
    throw DomainError("alpha must lie in [0, pi/2]");
  }
  if (!(beta >= 0.0 && beta <= std::numbers::pi)) {
    throw DomainError("beta must lie in [0, pi]");
  }
}

template <std::size_t N>
double sum_norm(const std::array<cplx, N>& amps) {
  double total = 0.0;
  for (const auto& a : amps) total += std::norm(a);
  return total;
}

}  // namespace

SubsystemParams::SubsystemParams(double nu, double omega, double g)
    : nu_(nu), omega_(omega), g_(g), delta_(omega - nu) {
  if (!std::isfinite(nu) || !std::isfinite(omega) || !std::isfinite(g)) {
    throw DomainError("subsystem parameters must be finite");
  }
  if (g < 0.0) throw DomainError("coupling g must be non-negative");
  rabi_ = std::sqrt(g_ * g_ + delta_ * delta_ / 4.0);
}

GenericCoefficients GenericCoefficients::from_amplitudes(const Storage& amps) {
  const double n = sum_norm(amps);
  if (std::abs(n - 1.0) > kNormTolerance) {
    throw DomainError("generic coefficients are not normalized (norm^2 = " + std::to_string(n) + ")");
  }
  return unchecked(amps);
}

GenericCoefficients GenericCoefficients::normalized(const Storage& amps) {
  const double n = std::sqrt(sum_norm(amps));
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("cannot normalize a zero or non-finite vector");
  Storage out;
  for (std::size_t k = 0; k < amps.size(); ++k) out[k] = amps[k] / n;
  return unchecked(out);
}

cplx GenericCoefficients::c(int i) const {
  if (i < 1 || i > 5) throw std::out_of_range("c index must be 1..5");
  return amps_[static_cast<std::size_t>(i - 1)];
}

cplx GenericCoefficients::d(int j) const {
  if (j < 1 || j > 4) throw std::out_of_range("d index must be 1..4");
  return amps_[static_cast<std::size_t>(4 + j)];
}

cplx GenericCoefficients::at(Level level_a, Level level_b) const { return amps_[slot_of(level_a, level_b)]; }

double GenericCoefficients::norm_squared() const { return sum_norm(amps_); }

std::pair<Level, Level> GenericCoefficients::levels_of(std::size_t k) { return kSlotLevels.at(k); }

std::size_t GenericCoefficients::slot_of(Level level_a, Level level_b) {
  for (std::size_t k = 0; k < kSlotLevels.size(); ++k) {
    if (kSlotLevels[k].first == level_a && kSlotLevels[k].second == level_b) return k;
  }
  throw std::logic_error("unreachable: every qutrit pair has a slot");
}

GenericCoefficients make_bell_phi(double alpha, double beta) {
  check_bell_angles(alpha, beta);
  GenericCoefficients::Storage amps{};
  amps[0] = std::cos(alpha);
  amps[4] = std::sin(alpha) * std::polar(1.0, beta);
  return GenericCoefficients::unchecked(amps);
}

GenericCoefficients make_bell_psi(double alpha, double beta) {
  check_bell_angles(alpha, beta);
  GenericCoefficients::Storage amps{};
  amps[5] = std::cos(alpha);
  amps[6] = std::sin(alpha) * std::polar(1.0, beta);
  return GenericCoefficients::unchecked(amps);
}

FourQubitState FourQubitState::from_amplitudes(const Storage& amps) {
  const double n = sum_norm(amps);
  if (std::abs(n - 1.0) > kNormTolerance) throw DomainError("four-qubit state is not normalized");
  return unchecked(amps);
}

double FourQubitState::norm_squared() const { return sum_norm(amp_); }

std::size_t four_qubit_index(Level level_a, Level level_b) {
  auto bits = [](Level level, std::size_t atom_bit, std::size_t field_bit) -> std::size_t {
    switch (level) {
      case Level::UpVacuum: return atom_bit;
      case Level::DownPhoton: return field_bit;
      case Level::DownVacuum: return 0;
    }
    return 0;
  };
  return bits(level_a, 8, 2) | bits(level_b, 4, 1);
}

FourQubitState embed(const GenericCoefficients& coeffs) {
  FourQubitState::Storage amps{};
  for (std::size_t k = 0; k < 9; ++k) {
    const auto [la, lb] = GenericCoefficients::levels_of(k);
    amps[four_qubit_index(la, lb)] = coeffs[k];
  }
  return FourQubitState::unchecked(amps);
}

GenericCoefficients extract(const FourQubitState& state, double tol) {
  GenericCoefficients::Storage amps{};
  std::array<bool, 16> used{};
  for (std::size_t k = 0; k < 9; ++k) {
    const auto [la, lb] = GenericCoefficients::levels_of(k);
    const auto idx = four_qubit_index(la, lb);
    amps[k] = state[idx];
    used[idx] = true;
  }
  for (std::size_t i = 0; i < 16; ++i) {
    if (!used[i] && std::abs(state[i]) > tol) {
      throw DomainError("state has weight outside the one-excitation-per-subsystem subspace");
    }
  }
  return GenericCoefficients::unchecked(amps);
}

Bipartition::Bipartition(std::uint8_t mask) : mask_(mask) {
  if (mask == 0 || mask >= 0xF) throw DomainError("bipartition side must be a nonempty proper subset of {A,B,a,b}");
}

int Bipartition::size() const { return std::popcount(static_cast<unsigned>(mask_)); }

namespace {

constexpr std::array<std::pair<char, std::uint8_t>, 4> kNames = {{
    {'A', static_cast<std::uint8_t>(Subsystem::AtomA)},
    {'B', static_cast<std::uint8_t>(Subsystem::AtomB)},
    {'a', static_cast<std::uint8_t>(Subsystem::FieldA)},
    {'b', static_cast<std::uint8_t>(Subsystem::FieldB)},
}};

std::string side_label(std::uint8_t mask) {
  std::string out;
  for (const auto& [name, bit] : kNames) {
    if (mask & bit) out.push_back(name);
  }
  return out;
}

std::uint8_t parse_side(const std::string& side) {
  std::uint8_t mask = 0;
  for (char ch : side) {
    bool found = false;
    for (const auto& [name, bit] : kNames) {
      if (ch == name) {
        if (mask & bit) throw DomainError("subsystem repeated in bipartition label: " + side);
        mask |= bit;
        found = true;
      }
    }
    if (!found) throw DomainError(std::string("unknown subsystem '") + ch + "' in bipartition label");
  }
  return mask;
}

}  // namespace

Bipartition Bipartition::parse(const std::string& label) {
  const auto dash = label.find('-');
  if (dash == std::string::npos) return Bipartition(parse_side(label));
  const auto p1 = parse_side(label.substr(0, dash));
  const auto p2 = parse_side(label.substr(dash + 1));
  if ((p1 | p2) != 0xF || (p1 & p2) != 0) throw DomainError("bipartition sides must be complementary: " + label);
  return Bipartition(p1);
}

std::string Bipartition::label() const { return side_label(mask_) + "-" + side_label(0xF ^ mask_); }

const std::array<Bipartition, 7>& Bipartition::canonical() {
  static const std::array<Bipartition, 7> parts = {
      Bipartition(8), Bipartition(4), Bipartition(2), Bipartition(1),
      Bipartition(8 | 2), Bipartition(8 | 1), Bipartition(8 | 4),
  };
  return parts;
}

}  // namespace doublejc
