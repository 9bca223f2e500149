#include "sptunnel/mild.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "sptunnel/errors.hpp"
#include "sptunnel/specfun.hpp"

namespace sptunnel::mild {

namespace {

using specfun::complex_gamma;
using specfun::principal_power;
using specfun::upper_incomplete_gamma;

constexpr int kMaxBisections = 200;

void check_parameters(double epsilon, double alpha) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw DomainError("mild: epsilon must be positive");
  if (!(alpha > 0.0)) throw DomainError("mild: alpha must be positive");
  if (!(alpha < 1.0 - kPoleGuard)) {
    throw DomainError("mild: alpha " + std::to_string(alpha) + " is inside the guard band below 1");
  }
}

Complex core_a(double epsilon, double u0, double alpha) {
  const Complex pref = principal_power(Complex(0.0, 2.0), alpha) * std::pow(epsilon, alpha / 2.0);
  return 2.0 * epsilon - pref * std::tgamma(1.0 - alpha) * u0;
}

double real_core(double epsilon, double u0, double alpha) { return core_a(epsilon, u0, alpha).real(); }

// Exponent rate k in e^{kz}: Plus pairs with k = -2i sqrt(eps).
Complex rate(WaveBranch branch, double epsilon) {
  const double s = 2.0 * std::sqrt(epsilon);
  return branch == WaveBranch::Plus ? Complex(0.0, -s) : Complex(0.0, s);
}

void check_side(double z, Side side) {
  if (z == 0.0 || !std::isfinite(z)) throw DomainError("mild: z must be finite and nonzero");
  if ((side == Side::Right) != (z > 0.0)) throw DomainError("mild: z lies on the other side of the origin");
}

}  // namespace

Complex core_ratio(double epsilon, double u0, double alpha) {
  check_parameters(epsilon, alpha);
  const Complex a = core_a(epsilon, u0, alpha);
  return a / (2.0 * std::conj(a));
}

MildAmplitudes amplitudes(double epsilon, double u0, double alpha) {
  const Complex x = core_ratio(epsilon, u0, alpha);
  return {x + 0.5, x - 0.5};
}

ScatteringResult transmission(double epsilon, double u0, double alpha) {
  const MildAmplitudes amp = amplitudes(epsilon, u0, alpha);
  return ScatteringResult::computed(std::norm(amp.t), std::norm(amp.r));
}

double total_reflection_energy(double u0, double alpha) {
  check_parameters(1.0, alpha);
  if (!(u0 > 0.0)) throw DomainError("total_reflection_energy: u0 must be positive");
  // Re A < 0 at small energy and > 0 at large energy when u0 > 0.
  double lo = 1e-6;
  double hi = 1e-6;
  while (real_core(lo, u0, alpha) >= 0.0) {
    lo /= 2.0;
    if (lo < 1e-300) throw NoRootError("total_reflection_energy: no sign change below the root");
  }
  while (real_core(hi, u0, alpha) <= 0.0) {
    hi *= 2.0;
    if (hi > 1e300) throw NoRootError("total_reflection_energy: no sign change above the root");
  }
  for (int i = 0; i < kMaxBisections && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (real_core(mid, u0, alpha) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Complex h_prime(double z, Side side, WaveBranch branch, double epsilon, double u0, double alpha) {
  check_parameters(epsilon, alpha);
  check_side(z, side);
  if (u0 == 0.0) return 0.0;
  const Complex k = rate(branch, epsilon);
  const Complex kz = k * z;
  const Complex tail = std::exp(kz) * upper_incomplete_gamma(1.0 - alpha, kz);
  if (side == Side::Right) return -u0 * principal_power(k, alpha - 1.0) * tail;
  return u0 * principal_power(-k, alpha - 1.0) * tail;
}

Complex h_value(double z, Side side, WaveBranch branch, double epsilon, double u0, double alpha) {
  check_parameters(epsilon, alpha);
  check_side(z, side);
  if (u0 == 0.0) return 0.0;
  const Complex k = rate(branch, epsilon);
  const Complex kz = k * z;
  // Constant chosen so that h(0) = 0.
  const Complex bracket =
      std::tgamma(1.0 - alpha) - std::exp(kz) * upper_incomplete_gamma(2.0 - alpha, kz) / (1.0 - alpha);
  const Complex scale = side == Side::Right ? principal_power(k, alpha - 2.0) : principal_power(-k, alpha - 2.0);
  return u0 * scale * bracket;
}

}  // namespace sptunnel::mild
