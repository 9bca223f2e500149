#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "sptunnel/errors.hpp"
#include "sptunnel/specfun.hpp"

namespace sptunnel::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool near_nonpositive_integer(Complex z) {
  if (std::abs(z.imag()) > kPoleTolerance) return false;
  const double n = std::round(z.real());
  return n <= 0.0 && std::abs(z.real() - n) <= kPoleTolerance;
}

std::string describe(Complex z) {
  return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

Complex lanczos_log_gamma(Complex z) {
  z -= 1.0;
  Complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// ln sin(pi z) without overflow for large |Im z|.
Complex log_sin_pi(Complex z) {
  const Complex w = kPi * z;
  if (std::abs(w.imag()) < 20.0) return std::log(std::sin(w));
  if (w.imag() > 0.0) return -kI * w + std::log((std::exp(2.0 * kI * w) - 1.0) / (2.0 * kI));
  return kI * w + std::log((1.0 - std::exp(-2.0 * kI * w)) / (2.0 * kI));
}

Complex cot_pi(Complex z) {
  const Complex w = kPi * z;
  if (std::abs(w.imag()) < 20.0) return std::cos(w) / std::sin(w);
  if (w.imag() > 0.0) {
    const Complex e = std::exp(2.0 * kI * w);
    return kI * (e + 1.0) / (e - 1.0);
  }
  const Complex e = std::exp(-2.0 * kI * w);
  return kI * (1.0 + e) / (1.0 - e);
}

}  // namespace

Complex principal_log(Complex w) {
  double arg = std::arg(w);
  if (arg == -kPi) arg = kPi;
  return {std::log(std::abs(w)), arg};
}

Complex principal_power(Complex w, double alpha) { return principal_power(w, Complex(alpha, 0.0)); }

Complex principal_power(Complex w, Complex p) {
  if (w == 0.0) {
    if (p.real() > 0.0) return 0.0;
    throw DomainError("principal_power: zero base with non-positive exponent");
  }
  if (p == 0.0) return 1.0;
  return std::exp(p * principal_log(w));
}

Complex log_gamma(Complex z) {
  if (near_nonpositive_integer(z)) throw PoleError("gamma: pole at " + describe(z));
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  return std::log(kPi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
}

Complex complex_gamma(Complex z) {
  if (z.imag() == 0.0) {
    if (near_nonpositive_integer(z)) throw PoleError("gamma: pole at " + describe(z));
    return std::tgamma(z.real());
  }
  return std::exp(log_gamma(z));
}

Complex reciprocal_gamma(Complex z) {
  if (near_nonpositive_integer(z)) return 0.0;
  return std::exp(-log_gamma(z));
}

Complex digamma(Complex z) {
  if (near_nonpositive_integer(z)) throw PoleError("digamma: pole at " + describe(z));
  if (z.real() < 0.5) return digamma(1.0 - z) - kPi * cot_pi(z);
  Complex shift = 0.0;
  while (std::abs(z) < 10.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  // sum of B_2k / (2k z^2k), k = 1..8
  const Complex tail =
      inv2 * (1.0 / 12 +
              inv2 * (-1.0 / 120 +
                      inv2 * (1.0 / 252 +
                              inv2 * (-1.0 / 240 +
                                      inv2 * (1.0 / 132 +
                                              inv2 * (-691.0 / 32760 +
                                                      inv2 * (1.0 / 12 + inv2 * (-3617.0 / 8160))))))));
  return shift + std::log(z) - 0.5 * inv - tail;
}

}  // namespace sptunnel::specfun
