#include <doctest.h>

#include <cmath>
#include <random>

#include "sptunnel/errors.hpp"
#include "sptunnel/regimes.hpp"

using namespace sptunnel;

TEST_CASE("classification examples") {
  CHECK(classify(0.25) == Regime::MildlySingular);
  CHECK(classify(1.0) == Regime::Coulomb);
  CHECK(classify(1.5) == Regime::Intermediate);
  CHECK(classify(2.0) == Regime::InverseSquare);
  CHECK(classify(3.0) == Regime::ExtraSingular);
}

TEST_CASE("integer boundaries snap") {
  CHECK(classify(1.0 + 9e-13) == Regime::Coulomb);
  CHECK(classify(1.0 - 9e-13) == Regime::Coulomb);
  CHECK(classify(1.0 - 1e-9) == Regime::MildlySingular);
  CHECK(classify(1.0 + 1e-9) == Regime::Intermediate);
  CHECK(classify(2.0 - 5e-13) == Regime::InverseSquare);
  CHECK(classify(2.0 + 1e-9) == Regime::ExtraSingular);
  CHECK(classify(0.1 * 3 / 0.3) == Regime::Coulomb);
}

TEST_CASE("classification rejects non-positive alpha") {
  CHECK_THROWS_AS(classify(0.0), DomainError);
  CHECK_THROWS_AS(classify(-1.0), DomainError);
  CHECK_THROWS_AS(classify(NAN), DomainError);
}

TEST_CASE("classification is constant on open intervals") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(1e-6, 1.0 - 1e-6);
  for (int i = 0; i < 200; ++i) {
    const double f = u(rng);
    CHECK(classify(f) == Regime::MildlySingular);
    CHECK(classify(1.0 + f) == Regime::Intermediate);
    CHECK(classify(2.0 + 10.0 * f) == Regime::ExtraSingular);
  }
}

TEST_CASE("forced and undetermined results") {
  const ScatteringResult inter = transmission_any({1.0, 1.5}, 2.0);
  CHECK(inter.status == Status::ForcedZero);
  CHECK(*inter.T == 0.0);
  CHECK(*inter.R == 1.0);
  CHECK(transmission_any({-1.0, 1.5}, 2.0).status == Status::ForcedZero);
  CHECK(transmission_any({0.5, 2.0}, 1.0).status == Status::ForcedZero);
  CHECK(transmission_any({1.0, 3.0}, 1.0).status == Status::ForcedZero);
  const ScatteringResult well = transmission_any({-1.0, 2.0}, 1.0);
  CHECK(well.status == Status::Undetermined);
  CHECK_FALSE(well.T.has_value());
  CHECK_FALSE(well.R.has_value());
  CHECK(transmission_any({-0.1, 2.0}, 1.0).status == Status::Undetermined);
  CHECK(transmission_any({-1.0, 3.0}, 1.0).status == Status::Undetermined);
}

TEST_CASE("free propagation short-circuit") {
  for (double alpha : {0.5, 1.0, 1.5, 2.0, 3.0}) {
    const ScatteringResult r = transmission_any({0.0, alpha}, 1.0);
    CHECK(r.status == Status::Computed);
    CHECK(*r.T == 1.0);
    CHECK(*r.R == 0.0);
  }
}

TEST_CASE("dispatch errors") {
  CHECK_THROWS_AS(transmission_any({1.0, 0.5}, 0.0), DomainError);
  CHECK_THROWS_AS(transmission_any({1.0, 0.5}, -1.0), DomainError);
  CHECK_THROWS_AS(transmission_any({1.0, 1.0 - 5e-7}, 1.0), DomainError);
}

TEST_CASE("computed regimes are unitary and finite") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double e = std::pow(10.0, -3.0 + 6.0 * u(rng));
    double u0 = 0.0;
    while (u0 == 0.0) u0 = -5.0 + 10.0 * u(rng);
    const double alpha = i % 2 == 0 ? 0.05 + 0.9 * u(rng) : 1.0;
    const ScatteringResult r = transmission_any({u0, alpha}, e);
    REQUIRE(r.status == Status::Computed);
    CHECK(std::isfinite(*r.T));
    CHECK(*r.T >= 0.0);
    CHECK(*r.T <= 1.0);
    CHECK(std::abs(*r.T + *r.R - 1.0) <= 1e-10);
  }
}

TEST_CASE("status names") {
  CHECK(to_string(Status::ForcedZero) == "ForcedZero");
  CHECK(to_string(Status::Undetermined) == "Undetermined");
  CHECK(to_string(Regime::InverseSquare) == "InverseSquare");
}
