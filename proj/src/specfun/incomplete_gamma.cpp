#include <cmath>
#include <numbers>

#include "sptunnel/errors.hpp"
#include "sptunnel/specfun.hpp"

namespace sptunnel::specfun {

namespace {

constexpr double kFractionTolerance = 1e-15;
constexpr double kTiny = 1e-300;

// z^s e^{-z}
Complex prefactor(double s, Complex z) { return std::exp(s * principal_log(z) - z); }

void check_order(double s) {
  if (!(s > 0.0 && s < 2.0)) throw DomainError("upper_incomplete_gamma: s must lie in (0, 2)");
}

}  // namespace

Complex incomplete_gamma_series(double s, Complex z) {
  check_order(s);
  if (z == 0.0) return complex_gamma(s);
  // Extended precision: the prefactor exp(s ln z - z) alone loses |z| ulps.
  using Wide = std::complex<long double>;
  const long double sw = s;
  const Wide zw(z.real(), z.imag());
  long double arg = std::arg(zw);
  if (arg == -std::numbers::pi_v<long double>) arg = std::numbers::pi_v<long double>;
  const Wide log_z(std::log(std::abs(zw)), arg);
  Wide lower;
  int n = 1;
  if (z.real() >= 0.0) {
    // gamma(s, z) = z^s e^{-z} sum z^n / (s)_{n+1}
    Wide term = 1.0L / sw;
    Wide sum = term;
    for (; n < kMaxTerms; ++n) {
      term *= zw / (sw + n);
      sum += term;
      if (std::abs(term) <= 1e-20L * std::abs(sum)) break;
    }
    lower = std::exp(sw * log_z - zw) * sum;
  } else {
    // gamma(s, z) = z^s sum (-z)^n / (n! (s + n)); terms are positive on the negative axis
    Wide power = 1.0L;
    Wide sum = 1.0L / sw;
    for (; n < kMaxTerms; ++n) {
      power *= -zw / static_cast<long double>(n);
      const Wide term = power / (sw + n);
      sum += term;
      if (std::abs(term) <= 1e-20L * std::abs(sum)) break;
    }
    lower = std::exp(sw * log_z) * sum;
  }
  if (n == kMaxTerms) throw ConvergenceError("incomplete gamma series: term cap reached");
  const Wide result = std::tgamma(sw) - lower;
  return {static_cast<double>(result.real()), static_cast<double>(result.imag())};
}

Complex incomplete_gamma_continued_fraction(double s, Complex z) {
  check_order(s);
  if (z == 0.0) throw DomainError("incomplete gamma continued fraction: z = 0");
  // Legendre fraction, modified Lentz.
  Complex b = z + 1.0 - s;
  Complex c = 1.0 / kTiny;
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 1; i <= kMaxTerms; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const Complex delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kFractionTolerance) return prefactor(s, z) * h;
  }
  throw ConvergenceError("incomplete gamma continued fraction: iteration cap reached");
}

Complex upper_incomplete_gamma(double s, Complex z) {
  check_order(s);
  if (z.imag() == 0.0 && z.real() < 0.0)
    throw DomainError("upper_incomplete_gamma: z on the branch cut");
  if (std::abs(z) <= kIncompleteGammaSwitchRadius) return incomplete_gamma_series(s, z);
  try {
    return incomplete_gamma_continued_fraction(s, z);
  } catch (const ConvergenceError&) {
    if (z.real() >= 0.0) throw;
    return incomplete_gamma_series(s, z);
  }
}

}  // namespace sptunnel::specfun
