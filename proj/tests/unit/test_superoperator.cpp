#include <catch2/catch_amalgamated.hpp>

#include <unsupported/Eigen/KroneckerProduct>

#include "test_support.hpp"

using namespace decolab;
using decolab::testing::Draws;
using decolab::testing::max_abs;

TEST_CASE("pauli constants", "[superoperator]") {
  using namespace pauli;
  const Complex i(0.0, 1.0);
  CHECK(sigma_plus() == Matrix2(0.5 * (sigma1() + i * sigma2())));
  CHECK(sigma_minus() == Matrix2(0.5 * (sigma1() - i * sigma2())));
  Matrix2 p0 = Matrix2::Zero();
  p0(0, 0) = 1.0;
  Matrix2 p1 = Matrix2::Zero();
  p1(1, 1) = 1.0;
  CHECK(sigma_plus() * sigma_minus() == p0);
  CHECK(sigma_minus() * sigma_plus() == p1);
  CHECK(max_abs(sigma1() * sigma2() - sigma2() * sigma1() - 2.0 * i * sigma3()) == 0.0);
}

TEST_CASE("kron", "[superoperator]") {
  SECTION("identity") {
    CHECK(kron(Matrix2::Identity(), Matrix2::Identity()) == Matrix4::Identity());
  }
  SECTION("block structure") {
    Matrix2 d = Matrix2::Zero();
    d(0, 0) = 2.0;
    d(1, 1) = Complex(0.0, 3.0);
    CHECK(kron(d, Matrix2::Identity()) ==
          Matrix4(Vector4(2.0, 2.0, Complex(0.0, 3.0), Complex(0.0, 3.0)).asDiagonal()));
  }
  SECTION("sigma1 x sigma1 is the anti-diagonal") {
    Matrix4 anti = Matrix4::Zero();
    for (int r = 0; r < 4; ++r) anti(r, 3 - r) = 1.0;
    CHECK(kron(pauli::sigma1(), pauli::sigma1()) == anti);
  }
  SECTION("tensor product identities on random inputs") {
    Draws draws(31);
    for (int n = 0; n < 500; ++n) {
      const Matrix2 a1 = draws.matrix2(), b1 = draws.matrix2();
      const Matrix2 a2 = draws.matrix2(), b2 = draws.matrix2();
      const Matrix4 ref = Eigen::kroneckerProduct(a1, b1);
      REQUIRE(max_abs(kron(a1, b1) - ref) == 0.0);
      REQUIRE(max_abs(kron(a1, b1) * kron(a2, b2) - kron(a1 * a2, b1 * b2)) <= 1e-13);
      REQUIRE(max_abs(Matrix4(kron(a1, b1).adjoint()) - kron(a1.adjoint(), b1.adjoint())) <= 1e-14);
      REQUIRE(max_abs(Matrix4(kron(a1, b1).transpose()) - kron(a1.transpose(), b1.transpose())) <= 1e-14);
    }
  }
}

TEST_CASE("build_h_hat", "[superoperator]") {
  SECTION("diagonal hamiltonian") {
    const double delta = 0.7;
    const TwoLevelHamiltonian ham{0.3, 0.0, 0.3 + delta};
    const Matrix4 expected = Complex(0.0, -1.0) * Matrix4(Vector4(0.0, -delta, delta, 0.0).asDiagonal());
    CHECK(max_abs(build_h_hat(ham) - expected) <= 1e-15);
  }
  SECTION("h = l, real k = 1/2") {
    const TwoLevelHamiltonian ham{0.5, 0.5, 0.5};
    const Complex i(0.0, 1.0);
    Matrix4 expected;
    // clang-format off
    expected << 0.0,       0.5 * i,  -0.5 * i, 0.0,
                0.5 * i,   0.0,      0.0,      -0.5 * i,
                -0.5 * i,  0.0,      0.0,      0.5 * i,
                0.0,       -0.5 * i, 0.5 * i,  0.0;
    // clang-format on
    CHECK(max_abs(build_h_hat(ham) - expected) <= 1e-15);
  }
  SECTION("kron route equals the explicit entries") {
    Draws draws(32);
    for (int n = 0; n < 1000; ++n) {
      const auto ham = dressed_hamiltonian(draws.amplitudes(), draws.energies());
      REQUIRE(max_abs(build_h_hat(ham) - build_h_hat_explicit(ham)) <= 1e-14);
    }
  }
  SECTION("matches the commutator action -i[H, rho]") {
    Draws draws(33);
    for (int n = 0; n < 200; ++n) {
      const auto ham = dressed_hamiltonian(draws.amplitudes(), draws.energies());
      const DensityMatrix2 rho = draws.state();
      const Matrix2 h = ham.matrix();
      const Matrix2 r = rho.matrix();
      const Matrix2 lhs = Complex(0.0, -1.0) * (h * r - r * h);
      const Vector4 psi = build_h_hat(ham) * vectorize(rho).components();
      REQUIRE(std::abs(psi(0) - lhs(0, 0)) <= 1e-13);
      REQUIRE(std::abs(psi(1) - lhs(0, 1)) <= 1e-13);
      REQUIRE(std::abs(psi(2) - lhs(1, 0)) <= 1e-13);
      REQUIRE(std::abs(psi(3) - lhs(1, 1)) <= 1e-13);
    }
  }
}

TEST_CASE("build_d_hat", "[superoperator]") {
  SECTION("mu = nu = 1") {
    Matrix4 expected;
    // clang-format off
    expected << -1.0, 0.0,  0.0,  1.0,
                0.0,  -1.0, 0.0,  0.0,
                0.0,  0.0,  -1.0, 0.0,
                1.0,  0.0,  0.0,  -1.0;
    // clang-format on
    CHECK(build_d_hat(LindbladRates(1.0, 1.0)) == expected);
  }
  SECTION("maximally mixed state is stationary for mu = nu") {
    const Vector4 out = build_d_hat(LindbladRates(2.5, 2.5)) * Vector4(0.5, 0.0, 0.0, 0.5);
    CHECK(out.cwiseAbs().maxCoeff() == 0.0);
  }
  SECTION("mu = 1, nu = 3 preserves trace") {
    const Matrix4 d = build_d_hat(LindbladRates(1.0, 3.0));
    CHECK((d.row(0) + d.row(3)).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("dissipator_apply", "[superoperator]") {
  SECTION("decay of |0><0|") {
    // The nu term annihilates |0><0|, so any nu gives mu * diag(-1, 1).
    const Matrix2 out = dissipator_apply(DensityMatrix2::ket0(), LindbladRates(1.0, 2.0));
    Matrix2 expected = Matrix2::Zero();
    expected(0, 0) = -1.0;
    expected(1, 1) = 1.0;
    CHECK(max_abs(out - expected) == 0.0);
  }
  SECTION("maximally mixed is stationary for mu = nu") {
    CHECK(max_abs(dissipator_apply(DensityMatrix2::maximally_mixed(), LindbladRates(0.7, 0.7))) == 0.0);
  }
  SECTION("agrees with build_d_hat on random states") {
    Draws draws(34);
    const LindbladRates rates(2.0, 5.0);
    for (int n = 0; n < 1000; ++n) {
      const DensityMatrix2 rho = draws.state();
      const Matrix2 direct = dissipator_apply(rho, rates);
      const Vector4 routed = build_d_hat(rates) * vectorize(rho).components();
      const Vector4 flat(direct(0, 0), direct(0, 1), direct(1, 0), direct(1, 1));
      REQUIRE((flat - routed).cwiseAbs().maxCoeff() <= 1e-13);
    }
  }
}

TEST_CASE("build_w", "[superoperator]") {
  SECTION("k = 0 decouples populations from coherences") {
    const auto model = TwoLevelModel{make_amplitudes(1.0, 0.0), EnergyPair(0.0, 1.0), LindbladRates(1.0, 2.0)};
    const Matrix4 w = build_w(model);
    for (int r : {0, 3}) {
      for (int c : {1, 2}) {
        CHECK(w(r, c) == Complex(0.0));
        CHECK(w(c, r) == Complex(0.0));
      }
    }
  }
  SECTION("matches the displayed generator") {
    Draws draws(35);
    const Complex i(0.0, 1.0);
    for (int n = 0; n < 200; ++n) {
      const auto model = draws.model();
      const auto ham = model.hamiltonian();
      const double mu = model.rates.mu(), nu = model.rates.nu(), half = 0.5 * (mu + nu);
      const Complex k = ham.k, kc = std::conj(ham.k);
      const double split = ham.l - ham.h;
      Matrix4 expected;
      // clang-format off
      expected << -mu,     i * kc,             -i * k,             nu,
                  i * k,   i * split - half,   0.0,                -i * k,
                  -i * kc, 0.0,                -i * split - half,  i * kc,
                  mu,      -i * kc,            i * k,              -nu;
      // clang-format on
      REQUIRE(max_abs(build_w(model) - expected) <= 1e-14);
    }
  }
  SECTION("trace preservation and hermiticity compatibility") {
    Draws draws(36);
    for (int n = 0; n < 1000; ++n) {
      const auto model = draws.model();
      const Matrix4 w = build_w(model);
      REQUIRE((w.row(0) + w.row(3)).cwiseAbs().maxCoeff() <= 1e-14);
      const Vector4 out = w * vectorize(draws.state()).components();
      REQUIRE(std::abs(out(2) - std::conj(out(1))) <= 1e-13);
    }
  }
}
