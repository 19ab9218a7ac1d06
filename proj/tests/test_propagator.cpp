#include <cmath>
#include <numbers>

#include "doctest.h"
#include "doublejc/propagator.hpp"
#include "doublejc/sampling.hpp"
#include "oracles.hpp"

using namespace doublejc;
using std::numbers::pi;

namespace {

double max_deviation(const GenericCoefficients& a, const GenericCoefficients& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < 9; ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

double excitation_a(const GenericCoefficients& s) {
  double n = 0.0;
  for (std::size_t k = 0; k < 9; ++k) {
    if (GenericCoefficients::levels_of(k).first != Level::DownVacuum) n += std::norm(s[k]);
  }
  return n;
}

double excitation_b(const GenericCoefficients& s) {
  double n = 0.0;
  for (std::size_t k = 0; k < 9; ++k) {
    if (GenericCoefficients::levels_of(k).second != Level::DownVacuum) n += std::norm(s[k]);
  }
  return n;
}

}  // namespace

TEST_CASE("f_amp") {
  const auto p = SubsystemParams(1.3, 1.3, 0.8);
  CHECK(std::abs(f_amp(p, 0.0) - 1.0) == 0.0);
  CHECK(std::abs(f_amp(p, pi / (2 * 0.8))) < 1e-15);

  // Delta = 2g, Omega = sqrt(2) g, Omega t = pi/2: |f|^2 = (Delta / 2 Omega)^2 = 1/2.
  const double g = 0.9;
  const auto detuned = SubsystemParams::detuned(g, 2 * g, 1.7);
  const double t = pi / (2 * std::sqrt(2.0) * g);
  CHECK(std::norm(f_amp(detuned, t)) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::norm(oracle_unitary(detuned, t)(0, 0)) == doctest::Approx(0.5).epsilon(1e-12));

  // g = 0 and Delta = 0: pure phase.
  const auto free = SubsystemParams(2.0, 2.0, 0.0);
  CHECK(std::abs(f_amp(free, 0.4) - std::polar(1.0, -0.8)) < 1e-15);
  CHECK_THROWS_AS(f_amp(p, -1e-3), DomainError);
}

TEST_CASE("g_amp") {
  const auto p = SubsystemParams::resonant(0.6, 2.0);
  CHECK(g_amp(p, 0.0) == 0.0);
  CHECK(std::abs(g_amp(p, pi / (2 * 0.6))) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g_amp(SubsystemParams::detuned(0.0, 0.5), 1.0) == 0.0);

  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto r = SubsystemParams::resonant(rng.uniform(0.1, 3.0), rng.uniform(0.0, 4.0));
    const double t = rng.uniform(0.0, 20.0);
    CHECK(std::norm(f_amp(r, t)) + std::norm(g_amp(r, t)) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("h_amp") {
  CHECK(h_amp(SubsystemParams::detuned(1.0, 0.7), 0.0) == 1.0);
  CHECK(h_amp(SubsystemParams::resonant(1.0), 12.3) == 1.0);
  CHECK(std::abs(h_amp(SubsystemParams::detuned(1.0, pi), 1.0) - cplx(0.0, 1.0)) < 1e-15);
}

TEST_CASE("closed-form amplitudes match the textbook JC solution") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto p = SubsystemParams::detuned(rng.uniform(0.1, 2.0), rng.uniform(-3.0, 3.0), rng.uniform(0.0, 3.0));
    const double t = rng.uniform(0.0, 15.0);
    CHECK(std::abs(f_amp(p, t) - oracle::f(p, t)) < 1e-13);
    CHECK(std::abs(g_amp(p, t) - oracle::g(p, t)) < 1e-13);
    CHECK(std::abs(h_amp(p, t) - oracle::h(p, t)) < 1e-13);
  }
}

TEST_CASE("the one-excitation block is unitary with the conjugate-detuning element") {
  Rng rng(19);
  for (int i = 0; i < 300; ++i) {
    const auto p = SubsystemParams::detuned(rng.uniform(0.0, 2.0), rng.uniform(-4.0, 4.0), rng.uniform(0.0, 3.0));
    const double t = rng.uniform(0.0, 25.0);
    const cplx f = f_amp(p, t);
    const cplx g = g_amp(p, t);
    const cplx fb = f_bar_amp(p, t);
    CHECK(std::norm(f) + std::norm(g) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(f * std::conj(g) + g * std::conj(fb)) < 1e-14);
    CHECK(subsystem_unitary(p, t).unitarity_defect() < 1e-12);
  }
}

TEST_CASE("subsystem_unitary") {
  SUBCASE("identity at t = 0") {
    const auto u = subsystem_unitary(SubsystemParams::detuned(0.8, 0.3, 1.1), 0.0);
    CHECK((u.matrix() - CMatrix3::Identity()).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("half Rabi period on resonance") {
    const double g = 0.7;
    const double nu = 1.9;
    const auto u = subsystem_unitary(SubsystemParams::resonant(g, nu), pi / g);
    const cplx phase = -std::polar(1.0, -nu * pi / g);
    CMatrix3 expected = CMatrix3::Zero();
    expected(0, 0) = phase;
    expected(1, 1) = phase;
    expected(2, 2) = 1.0;
    CHECK((u.matrix() - expected).cwiseAbs().maxCoeff() < 1e-14);
  }
  SUBCASE("ground state never couples to the one-excitation manifold") {
    const auto u = subsystem_unitary(SubsystemParams::detuned(1.2, -0.4, 0.5), 3.7);
    for (int k = 0; k < 2; ++k) {
      CHECK(u(2, k) == 0.0);
      CHECK(u(k, 2) == 0.0);
    }
  }
  SUBCASE("matches exp(-i H t) from diagonalization and from Pade") {
    Rng rng(23);
    for (int i = 0; i < 300; ++i) {
      const auto p = SubsystemParams::detuned(rng.uniform(0.0, 2.0), rng.uniform(-4.0, 4.0), rng.uniform(0.0, 3.0));
      const double t = rng.uniform(0.0, 20.0);
      const CMatrix3 closed = subsystem_unitary(p, t).matrix();
      CHECK((closed - oracle_unitary(p, t)).cwiseAbs().maxCoeff() < 1e-10);
      const Eigen::Matrix3cd pade = (cplx(0.0, -t) * subsystem_hamiltonian(p)).exp();
      CHECK((closed - pade).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("excitation number is conserved by the oracle Hamiltonian") {
  Rng rng(29);
  for (int i = 0; i < 50; ++i) {
    const auto p = SubsystemParams::detuned(rng.uniform(0.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(0.0, 3.0));
    const CMatrix3 h = subsystem_hamiltonian(p);
    const CMatrix3 n = excitation_number();
    CHECK((h * n - n * h).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("closed-form evolution reproduces the phi and psi coefficient lists") {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const double alpha = rng.uniform(0.0, pi / 2);
    const double beta = rng.uniform(0.0, pi);
    const auto params = random_model_params(rng);
    const double t = rng.uniform(0.0, 10.0 / params.sub_a.g());

    const auto phi = evolve_closed_form(make_bell_phi(alpha, beta), params, t);
    const auto x = oracle::phi_coefficients(alpha, beta, params, t);
    CHECK(std::abs(phi.c(1) - x[0]) < 1e-13);
    CHECK(std::abs(phi.c(3) - x[1]) < 1e-13);  // |ud01>
    CHECK(std::abs(phi.c(2) - x[2]) < 1e-13);  // |du10>
    CHECK(std::abs(phi.c(4) - x[3]) < 1e-13);
    CHECK(std::abs(phi.c(5) - x[4]) < 1e-13);
    for (int j = 1; j <= 4; ++j) CHECK(phi.d(j) == 0.0);

    const auto psi = evolve_closed_form(make_bell_psi(alpha, beta), params, t);
    const auto y = oracle::psi_coefficients(alpha, beta, params, t);
    CHECK(std::abs(psi.d(1) - y[0]) < 1e-13);
    CHECK(std::abs(psi.d(2) - y[1]) < 1e-13);
    CHECK(std::abs(psi.d(3) - y[2]) < 1e-13);
    CHECK(std::abs(psi.d(4) - y[3]) < 1e-13);
    for (int j = 1; j <= 5; ++j) CHECK(psi.c(j) == 0.0);
  }
}

TEST_CASE("closed-form evolution examples") {
  SUBCASE("phi(pi/4) after full transfer") {
    const double g = 1.3;
    const ModelParams params{SubsystemParams::resonant(g, 0.9), SubsystemParams::resonant(g, 1.6)};
    const double t = pi / (2 * g);
    const auto s = evolve_closed_form(make_bell_phi(pi / 4, 0.0), params, t);
    const cplx c4 = -std::polar(1.0, -(0.9 + 1.6) * t) / std::sqrt(2.0);
    CHECK(std::abs(s.c(4) - c4) < 1e-14);
    CHECK(std::abs(s.c(5) - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(s.c(1)) < 1e-15);
    CHECK(std::abs(s.c(2)) < 1e-15);
    CHECK(std::abs(s.c(3)) < 1e-15);
  }
  SUBCASE("t = 0 leaves any state unchanged") {
    Rng rng(37);
    const auto s = random_generic_state(rng);
    CHECK(evolve_closed_form(s, random_model_params(rng), 0.0).amplitudes() == s.amplitudes());
  }
  SUBCASE("psi amplitudes follow cos(g t) on resonance") {
    const double g = 0.8;
    const auto params = ModelParams::resonant(g, g, 1.4);
    for (double alpha : {0.2, pi / 4, 1.1}) {
      for (double t : {0.1, std::sqrt(2.0), pi / 3, 2.7, 6.0}) {
        const auto s = evolve_closed_form(make_bell_psi(alpha, 0.4), params, t);
        CHECK(std::abs(s.d(1)) == doctest::Approx(std::cos(alpha) * std::abs(std::cos(g * t))).epsilon(1e-13));
        CHECK(std::abs(s.d(2)) == doctest::Approx(std::sin(alpha) * std::abs(std::cos(g * t))).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("oracle propagation") {
  SUBCASE("identity at t = 0") {
    Rng rng(41);
    const auto s = random_generic_state(rng);
    CHECK(oracle_evolve(s, random_model_params(rng), 0.0).amplitudes() == s.amplitudes());
  }
  SUBCASE("agrees with the closed form on 1000 random cases") {
    Rng rng(43);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const auto s = random_generic_state(rng);
      const auto params = random_model_params(rng);
      const double t = rng.uniform(0.0, 10.0 / params.sub_a.g());
      worst = std::max(worst, max_deviation(evolve_closed_form(s, params, t), oracle_evolve(s, params, t)));
    }
    CHECK(worst < 1e-10);
  }
  SUBCASE("zero coupling is a pure phase evolution") {
    Rng rng(47);
    const auto s = random_generic_state(rng);
    const ModelParams params{SubsystemParams(1.0, 1.5, 0.0), SubsystemParams(0.7, 0.2, 0.0)};
    const auto out = oracle_evolve(s, params, 4.2);
    for (std::size_t k = 0; k < 9; ++k) CHECK(std::abs(out[k]) == doctest::Approx(std::abs(s[k])).epsilon(1e-13));
  }
}

TEST_CASE("closed form agrees with the full 16-dimensional Hamiltonian") {
  Rng rng(53);
  for (int i = 0; i < 100; ++i) {
    const auto s = random_generic_state(rng);
    const auto params = random_model_params(rng);
    const double t = rng.uniform(0.0, 10.0 / params.sub_a.g());
    const auto brute = oracle::brute_force_evolve(embed(s).amplitudes(), params, t);
    const auto closed = embed(evolve_closed_form(s, params, t));
    for (std::size_t k = 0; k < 16; ++k) CHECK(std::abs(brute[k] - closed[k]) < 1e-10);
  }
}

TEST_CASE("closed-form trajectory properties") {
  Rng rng(59);
  for (int i = 0; i < 100; ++i) {
    const auto s = random_generic_state(rng);
    const auto params = random_model_params(rng);
    const double t_max = 20.0 / std::min(params.sub_a.g(), params.sub_b.g());
    const double t1 = rng.uniform(0.0, t_max / 2);
    const double t2 = rng.uniform(0.0, t_max / 2);

    const auto evolved = evolve_closed_form(s, params, t1 + t2);
    CHECK(std::abs(evolved.norm_squared() - 1.0) < 1e-12);

    const auto composed = evolve_closed_form(evolve_closed_form(s, params, t1), params, t2);
    CHECK(max_deviation(composed, evolved) < 1e-10);

    CHECK(excitation_a(evolved) == doctest::Approx(excitation_a(s)).epsilon(1e-12));
    CHECK(excitation_b(evolved) == doctest::Approx(excitation_b(s)).epsilon(1e-12));
  }
}
