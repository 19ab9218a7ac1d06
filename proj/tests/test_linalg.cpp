#include "doctest.h"
#include "doublejc/linalg.hpp"
#include "doublejc/sampling.hpp"

using namespace doublejc;

namespace {

CMatrix random_hermitian(Rng& rng, Eigen::Index n, double scale) {
  CMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = scale * rng.complex_gaussian();
  return 0.5 * (a + a.adjoint());
}

}  // namespace

TEST_CASE("Jacobi eigenvalues agree with Eigen's Hermitian solver") {
  Rng rng(2024);
  for (Eigen::Index n : {2, 3, 4, 8}) {
    for (int trial = 0; trial < 100; ++trial) {
      const CMatrix h = random_hermitian(rng, n, trial % 2 ? 1.0 : 30.0);
      const auto eig = jacobi_eigen(h);
      Eigen::SelfAdjointEigenSolver<CMatrix> ref(h);
      CHECK((eig.values - ref.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12 * std::max(1.0, h.norm()));

      const CMatrix v = eig.vectors;
      CHECK((v.adjoint() * v - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-13);
      const CMatrix rebuilt = v * eig.values.cast<cplx>().asDiagonal() * v.adjoint();
      CHECK((rebuilt - h).cwiseAbs().maxCoeff() < 1e-12 * std::max(1.0, h.norm()));
      for (Eigen::Index k = 1; k < n; ++k) CHECK(eig.values(k - 1) <= eig.values(k));
    }
  }
}

TEST_CASE("Jacobi handles degenerate and trivial spectra") {
  const auto id = jacobi_eigen(CMatrix::Identity(4, 4));
  CHECK((id.values.array() - 1.0).abs().maxCoeff() == 0.0);

  const auto zero = jacobi_eigen(CMatrix::Zero(3, 3));
  CHECK(zero.values.cwiseAbs().maxCoeff() == 0.0);

  // Rank-one projector onto (1, i, 0, 1)/sqrt(3): eigenvalues {0, 0, 0, 1}.
  Eigen::VectorXcd u(4);
  u << 1.0, cplx(0.0, 1.0), 0.0, 1.0;
  u /= std::sqrt(3.0);
  const auto proj = jacobi_eigen(u * u.adjoint());
  CHECK(std::abs(proj.values(3) - 1.0) < 1e-15);
  CHECK(proj.values.head(3).cwiseAbs().maxCoeff() < 1e-15);

  CHECK_THROWS_AS(jacobi_eigen(CMatrix::Zero(2, 3)), DomainError);
}

TEST_CASE("hermitian_function builds matrix square roots") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const CMatrix a = random_hermitian(rng, 4, 1.0);
    const CMatrix psd = a * a.adjoint();
    const CMatrix root = hermitian_function(jacobi_eigen(psd), [](double v) { return cplx(std::sqrt(std::max(v, 0.0))); });
    CHECK((root * root - psd).cwiseAbs().maxCoeff() < 1e-12 * std::max(1.0, psd.norm()));
  }
}
