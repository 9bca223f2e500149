#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sptunnel/errors.hpp"
#include "sptunnel/highorder.hpp"
#include "sptunnel/specfun.hpp"

using namespace sptunnel;
using namespace sptunnel::highorder;

namespace {

void check_forced_zero(const ScatteringResult& r) {
  CHECK(r.status == Status::ForcedZero);
  CHECK(*r.T == 0.0);
  CHECK(*r.R == 1.0);
}

}  // namespace

TEST_CASE("intermediate regime is impenetrable") {
  check_forced_zero(intermediate_transmission(1.0, 1.5, 2.0));
  check_forced_zero(intermediate_transmission(-1.0, 1.5, 2.0));
  check_forced_zero(intermediate_transmission(1.0, 1.5, 1e6));
  CHECK_THROWS_AS(intermediate_transmission(1.0, 2.5, 1.0), DomainError);
  CHECK_THROWS_AS(intermediate_transmission(1.0, 1.5, 0.0), DomainError);
}

TEST_CASE("inverse square regime") {
  check_forced_zero(inverse_square_transmission(0.5, 1.0));
  CHECK(inverse_square_transmission(-0.1, 1.0).status == Status::Undetermined);
  CHECK_THROWS_AS(inverse_square_transmission(-0.3, 1.0), DomainError);
  CHECK_THROWS_AS(inverse_square_transmission(-0.25, 1.0), DomainError);
  CHECK(InverseSquareBasis::from_u0(0.0).nu == 0.5);
  CHECK(InverseSquareBasis::from_u0(0.75).nu == doctest::Approx(1.0));
}

TEST_CASE("extra singular regime") {
  check_forced_zero(extra_singular_transmission(1.0, 3.0, 1.0));
  check_forced_zero(extra_singular_transmission(1.0, 2.001, 1.0));
  CHECK(extra_singular_transmission(-1.0, 3.0, 1.0).status == Status::Undetermined);
  CHECK_THROWS_AS(extra_singular_transmission(1.0, 1.5, 1.0), DomainError);
}

TEST_CASE("barriers above alpha one transmit nothing") {
  for (double alpha : {1.01, 1.5, 1.99, 2.5, 4.0, 10.0}) {
    for (double e : {1e-3, 1.0, 1e3}) {
      for (double u0 : {0.1, 1.0, 7.0}) {
        const ScatteringResult r = alpha < 2.0 ? intermediate_transmission(u0, alpha, e)
                                               : extra_singular_transmission(u0, alpha, e);
        CHECK(*r.T == 0.0);
      }
    }
  }
}

TEST_CASE("forced solution satisfies both constraints") {
  for (Complex lp : {Complex(1.0, 0.0), Complex(0.0, 1.0), Complex(-0.3, 2.0)}) {
    const IntermediateAmplitudes amp{lp, -lp, 0.0, 0.0};
    CHECK(continuity_residual(amp) == 0.0);
    CHECK(current_residual(amp) == 0.0);
  }
}

TEST_CASE("free propagation also satisfies both constraints") {
  // a_l_minus = 0 and a_l_plus = a_r_plus is a solution with a_r_plus != 0.
  const IntermediateAmplitudes amp{Complex(0.6, 0.8), 0.0, Complex(0.6, 0.8), 0.0};
  CHECK(continuity_residual(amp) == 0.0);
  CHECK(current_residual(amp) < 1e-15);
}

TEST_CASE("compatibility check solves the constraints") {
  const CompatibilityReport report = intermediate_compatibility_check(1000);
  CHECK(report.samples == 1000);
  CHECK(report.solved == 1000);
  CHECK(report.max_residual <= kCompatibilityTolerance);
  CHECK(continuity_residual(report.largest) <= kCompatibilityTolerance);
  CHECK(current_residual(report.largest) <= kCompatibilityTolerance);
  // The constraints leave a one-parameter family, so a_r_plus is not forced to zero.
  CHECK(report.max_a_r_plus > 1.0);
  CHECK(intermediate_compatibility_check(50, 9).max_a_r_plus == intermediate_compatibility_check(50, 9).max_a_r_plus);
  CHECK_THROWS_AS(intermediate_compatibility_check(0), DomainError);
}

TEST_CASE("near-origin h") {
  CHECK(near_origin_h(1e-6, 1.0, 1.5).real() == doctest::Approx(-4e-3).epsilon(1e-12));
  CHECK(near_origin_h(-1e-6, 1.0, 1.5) == near_origin_h(1e-6, 1.0, 1.5));
  const double h2 = std::abs(near_origin_h(1e-2, 1.0, 1.5));
  const double h4 = std::abs(near_origin_h(1e-4, 1.0, 1.5));
  const double h6 = std::abs(near_origin_h(1e-6, 1.0, 1.5));
  CHECK(h6 < h4);
  CHECK(h4 < h2);
  CHECK(h6 < 1e-2);
  CHECK(std::isfinite(near_origin_h(1e-3, 1.0, 1.99).real()));
  CHECK(std::abs(near_origin_h(1e-3, 1.0, 1.99)) > std::abs(near_origin_h(1e-3, 1.0, 1.9)));
  CHECK_THROWS_AS(near_origin_h(0.2, 1.0, 1.5), DomainError);
  CHECK_THROWS_AS(near_origin_h(0.0, 1.0, 1.5), DomainError);
}

TEST_CASE("half-integer order outgoing wave") {
  // nu = 1/2: J + iY = -i sqrt(2 / (pi x)) e^{ix}.
  const double x = 37.0;
  const specfun::BesselValues b = specfun::bessel_jy(0.5, x);
  const Complex h(b.j, b.y);
  const Complex want = Complex(0.0, -1.0) * std::sqrt(2.0 / (std::numbers::pi * x)) * std::exp(Complex(0.0, x));
  CHECK(std::abs(h - want) < 1e-14);
}

TEST_CASE("outgoing combination has no incoming part") {
  for (double u0 : {0.25, 0.5, 0.74}) {
    for (double e : {0.5, 1.0, 4.0}) {
      CAPTURE(u0);
      CAPTURE(e);
      const double z = 100.0 / std::sqrt(e);
      CHECK(outgoing_combination_check(u0, e, z) <= 1e-6);
      CHECK(outgoing_combination_check(u0, e, z, Combination::Incoming) == doctest::Approx(1.0).epsilon(1e-6));
    }
  }
  CHECK(outgoing_combination_check(0.5, 1.0, 100.0) <= 1e-6);
  CHECK_THROWS_AS(outgoing_combination_check(0.5, 1.0, 10.0), DomainError);
  CHECK_THROWS_AS(outgoing_combination_check(-0.1, 1.0, 100.0), DomainError);
}
