#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace decolab;
using decolab::testing::Draws;
using Catch::Approx;

namespace {

bool throws_code(ErrorCode code, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("make_amplitudes", "[types]") {
  SECTION("basis state") {
    const auto amps = make_amplitudes(1.0, 0.0);
    CHECK(amps.alpha() == Complex(1.0));
    CHECK(amps.beta() == Complex(0.0));
  }
  SECTION("rescaling") {
    const auto amps = make_amplitudes(1.0, 1.0, Normalization::kRescale);
    CHECK(amps.alpha().real() == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(amps.beta().real() == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  }
  SECTION("already normalized input is accepted") {
    const auto amps = make_amplitudes(0.6, Complex(0.0, 0.8));
    CHECK(amps.weight0() == Approx(0.36).margin(1e-15));
    CHECK(amps.weight1() == Approx(0.64).margin(1e-15));
  }
  SECTION("errors") {
    CHECK(throws_code(ErrorCode::kZeroVector, [] { make_amplitudes(0.0, 0.0); }));
    CHECK(throws_code(ErrorCode::kZeroVector,
                      [] { make_amplitudes(0.0, 0.0, Normalization::kRescale); }));
    CHECK(throws_code(ErrorCode::kNotNormalized, [] { make_amplitudes(1.0, 1.0); }));
    CHECK(throws_code(ErrorCode::kNotNormalized, [] { make_amplitudes(1.0 + 1e-11, 0.0); }));
  }
}

TEST_CASE("energies and rates reject invalid values", "[types]") {
  CHECK(throws_code(ErrorCode::kInvalidEnergies, [] { EnergyPair(1.0, 1.0); }));
  CHECK(throws_code(ErrorCode::kInvalidEnergies, [] { EnergyPair(2.0, 1.0); }));
  CHECK_NOTHROW(EnergyPair(-1.0, 1.0));
  CHECK(throws_code(ErrorCode::kInvalidRates, [] { LindbladRates(0.0, 1.0); }));
  CHECK(throws_code(ErrorCode::kInvalidRates, [] { LindbladRates(1.0, -1.0); }));
  CHECK(throws_code(ErrorCode::kInvalidRates, [] { LindbladRates(1.0, std::nan("")); }));
}

TEST_CASE("density matrix validation", "[types]") {
  CHECK_NOTHROW(DensityMatrix2(0.36, Complex(0.0, 0.48), 0.64));
  CHECK(throws_code(ErrorCode::kNonPhysical, [] { DensityMatrix2(0.5, 0.0, 0.6); }));
  CHECK(throws_code(ErrorCode::kNonPhysical, [] { DensityMatrix2(1.1, 0.0, -0.1); }));
  CHECK(throws_code(ErrorCode::kNonPhysical, [] { DensityMatrix2(0.5, 0.6, 0.5); }));
  CHECK(DensityMatrix2::ket0().min_eigenvalue() == Approx(0.0).margin(1e-15));
  CHECK(DensityMatrix2::maximally_mixed().min_eigenvalue() == Approx(0.5));
}

TEST_CASE("dressing unitary", "[types]") {
  SECTION("identity for |0>") {
    CHECK(dressing_unitary(make_amplitudes(1.0, 0.0)).isApprox(Matrix2::Identity(), 0.0));
  }
  SECTION("equal superposition") {
    const double s = 1.0 / std::sqrt(2.0);
    Matrix2 expected;
    expected << s, -s, s, s;
    const auto u = dressing_unitary(make_amplitudes(1.0, 1.0, Normalization::kRescale));
    CHECK(testing::max_abs(u - expected) < 1e-15);
  }
  SECTION("special unitary on random draws") {
    Draws draws(11);
    for (int i = 0; i < 1000; ++i) {
      const auto u = dressing_unitary(draws.amplitudes());
      REQUIRE(testing::max_abs(u.adjoint() * u - Matrix2::Identity()) <= 1e-12);
      REQUIRE(std::abs(u.determinant() - 1.0) <= 1e-12);
    }
  }
  SECTION("(0.6, 0.8i)") {
    const auto u = dressing_unitary(make_amplitudes(0.6, Complex(0.0, 0.8)));
    CHECK(testing::max_abs(u.adjoint() * u - Matrix2::Identity()) <= 1e-12);
  }
}

TEST_CASE("dressed hamiltonian", "[types]") {
  SECTION("undriven atom") {
    const auto ham = dressed_hamiltonian(make_amplitudes(1.0, 0.0), EnergyPair(0.0, 1.0));
    CHECK(ham.h == 0.0);
    CHECK(ham.k == Complex(0.0));
    CHECK(ham.l == 1.0);
  }
  SECTION("equal superposition") {
    const auto ham = dressed_hamiltonian(make_amplitudes(1.0, 1.0, Normalization::kRescale),
                                         EnergyPair(0.0, 1.0));
    CHECK(ham.h == Approx(0.5).epsilon(1e-15));
    CHECK(ham.k.real() == Approx(-0.5).epsilon(1e-15));
    CHECK(ham.k.imag() == Approx(0.0).margin(1e-15));
    CHECK(ham.l == Approx(0.5).epsilon(1e-15));
  }
  SECTION("(0.6, 0.8i) with energies (1, 3)") {
    const auto ham = dressed_hamiltonian(make_amplitudes(0.6, Complex(0.0, 0.8)), EnergyPair(1.0, 3.0));
    // 2x2 hermitian eigenvalues: mean +- sqrt(half_split^2 + |k|^2)
    const double mean = 0.5 * (ham.h + ham.l);
    const double radius = std::sqrt(0.25 * (ham.h - ham.l) * (ham.h - ham.l) + std::norm(ham.k));
    CHECK(mean - radius == Approx(1.0).margin(1e-12));
    CHECK(mean + radius == Approx(3.0).margin(1e-12));
  }
  SECTION("random draws: spectrum, trace, ground state") {
    Draws draws(12);
    for (int i = 0; i < 1000; ++i) {
      const auto amps = draws.amplitudes();
      const auto energies = draws.energies();
      const auto ham = dressed_hamiltonian(amps, energies);
      REQUIRE(std::abs(ham.h + ham.l - energies.e0() - energies.e1()) <= 1e-12);
      Eigen::SelfAdjointEigenSolver<Matrix2> solver(ham.matrix());
      REQUIRE(std::abs(solver.eigenvalues()(0) - energies.e0()) <= 1e-10);
      REQUIRE(std::abs(solver.eigenvalues()(1) - energies.e1()) <= 1e-10);
      const Eigen::Vector2cd ground(amps.alpha(), amps.beta());
      REQUIRE((ham.matrix() * ground - energies.e0() * ground).cwiseAbs().maxCoeff() <= 1e-10);
      // Closed form agrees with conjugating the diagonal Hamiltonian.
      const Matrix2 u = dressing_unitary(amps);
      const Matrix2 conj = u * Eigen::Vector2cd(energies.e0(), energies.e1()).asDiagonal() * u.adjoint();
      REQUIRE(testing::max_abs(conj - ham.matrix()) <= 1e-12);
    }
  }
}

TEST_CASE("vectorize and devectorize", "[types]") {
  SECTION("examples") {
    CHECK(vectorize(DensityMatrix2::ket0()).components() == Vector4(1.0, 0.0, 0.0, 0.0));
    CHECK(vectorize(DensityMatrix2::maximally_mixed()).components() == Vector4(0.5, 0.0, 0.0, 0.5));
    const DensityMatrix2 rho(0.36, Complex(0.0, 0.48), 0.64);
    const Vector4 expected(0.36, Complex(0.0, 0.48), Complex(0.0, -0.48), 0.64);
    CHECK(vectorize(rho).components() == expected);
  }
  SECTION("round trip is exact") {
    Draws draws(13);
    for (int i = 0; i < 1000; ++i) {
      const DensityMatrix2 rho = draws.state();
      REQUIRE(devectorize(vectorize(rho)) == rho);
    }
  }
  SECTION("non-physical vectors are rejected") {
    CHECK(throws_code(ErrorCode::kNonPhysical, [] {
      devectorize(VectorizedState(Vector4(0.5, 0.1, 0.2, 0.5)));
    }));
    CHECK(throws_code(ErrorCode::kNonPhysical, [] {
      devectorize(VectorizedState(Vector4(0.5, 0.0, 0.0, 0.6)));
    }));
    CHECK_NOTHROW(devectorize(VectorizedState(Vector4(0.5 + 1e-9, 0.0, 0.0, 0.5))));
  }
}

TEST_CASE("scenario validation", "[types]") {
  ScenarioConfig config{{make_amplitudes(1.0, 0.0), EnergyPair(0.0, 1.0), LindbladRates(1.0, 1.0)},
                        0.1, 1.0, 10.0, 100, DensityMatrix2::ket0()};
  CHECK_NOTHROW(config.validate());
  config.steps = 0;
  CHECK(throws_code(ErrorCode::kInvalidArgument, [&] { config.validate(); }));
  config.steps = 1;
  config.t_measure = 0.0;
  CHECK(throws_code(ErrorCode::kInvalidArgument, [&] { config.validate(); }));
}
