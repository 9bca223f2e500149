#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "sptunnel/errors.hpp"
#include "sptunnel/specfun.hpp"

namespace sptunnel::specfun {

namespace {

using detail::ValueSlope;

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = std::numbers::egamma;
const Complex kI(0.0, 1.0);

constexpr double kTermTolerance = 1e-17;
constexpr double kAsymptoticTolerance = 1e-15;
// Largest |term| / |sum| accepted from a direct power series.
constexpr double kAcceptCancellation = 1e3;
// Stricter bound for the starting value of an ODE continuation.
constexpr double kStartCancellation = 10.0;
constexpr double kStepCancellation = 1e2;
constexpr double kDirectSeriesLimit = 40.0;
constexpr double kStartRadius = 2.0;
constexpr double kMaxStep = 1.0;
constexpr int kTaylorTerms = 300;
constexpr int kMaxSteps = 1000000;
constexpr double kMaxAsymptoticRadius = 1e6;

bool is_nonpositive_integer(Complex z) {
  if (std::abs(z.imag()) > kPoleTolerance) return false;
  const double n = std::round(z.real());
  return n <= 0.0 && std::abs(z.real() - n) <= kPoleTolerance;
}

double ratio(double largest, Complex total) {
  const double size = std::abs(total);
  if (size == 0.0) return largest == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return largest / size;
}

struct SeriesEval {
  ValueSlope result;
  double cancellation = std::numeric_limits<double>::infinity();
  bool converged = false;
};

SeriesEval kummer_series(Complex a, Complex b, Complex w) {
  Complex t = 1.0;
  Complex u = a / b;  // (a)_{n+1} / (b)_{n+1} w^n / n!
  Complex value = t;
  Complex slope = u;
  double largest_value = 1.0;
  double largest_slope = std::abs(u);
  int quiet = 0;
  for (int n = 0; n < kMaxTerms; ++n) {
    t *= (a + static_cast<double>(n)) * w / ((b + static_cast<double>(n)) * (n + 1.0));
    u *= (a + (n + 1.0)) * w / ((b + (n + 1.0)) * (n + 1.0));
    value += t;
    slope += u;
    largest_value = std::max(largest_value, std::abs(t));
    largest_slope = std::max(largest_slope, std::abs(u));
    if (!std::isfinite(largest_value) || !std::isfinite(largest_slope)) return {};
    const bool negligible = std::abs(t) <= kTermTolerance * std::abs(value) &&
                            std::abs(u) <= kTermTolerance * std::abs(slope);
    quiet = negligible ? quiet + 1 : 0;
    if (quiet >= 2) {
      return {{value, slope},
              std::max(ratio(largest_value, value), ratio(largest_slope, slope)),
              true};
    }
  }
  return {};
}

// sum_n (p)_n (q)_n / n! y^{-n} with y = sign * w, and its w-derivative.
struct AsymptoticSum {
  Complex sum;
  Complex slope;
  double smallest;
  bool converged;
};

AsymptoticSum asymptotic_sum(Complex p, Complex q, Complex w, double sign) {
  const Complex y = sign * w;
  Complex t = 1.0;
  Complex sum = 1.0;
  Complex weighted = 0.0;
  double smallest = 1.0;
  for (int n = 0; n < kMaxTerms; ++n) {
    t *= (p + static_cast<double>(n)) * (q + static_cast<double>(n)) / ((n + 1.0) * y);
    const double size = std::abs(t);
    if (t == 0.0) return {sum, -weighted / w, 0.0, true};
    // Past the smallest term the expansion only gets worse.
    if (!std::isfinite(size) || size >= smallest) break;
    sum += t;
    weighted += (n + 1.0) * t;
    smallest = size;
    if (size <= kTermTolerance * std::abs(sum)) return {sum, -weighted / w, 0.0, true};
  }
  return {sum, -weighted / w, smallest, false};
}

std::optional<ValueSlope> kummer_asymptotic(Complex a, Complex b, Complex w) {
  const Complex log_w = principal_log(w);
  Complex value = 0.0;
  Complex slope = 0.0;
  double error = 0.0;
  if (!is_nonpositive_integer(a)) {
    const Complex pref = std::exp(w + (a - b) * log_w - log_gamma(a));
    const AsymptoticSum s = asymptotic_sum(b - a, 1.0 - a, w, 1.0);
    value += pref * s.sum;
    slope += pref * ((1.0 + (a - b) / w) * s.sum + s.slope);
    error += std::abs(pref) * s.smallest;
  }
  if (!is_nonpositive_integer(b - a)) {
    Complex phase;
    if (w.imag() > 0.0 || (w.imag() == 0.0 && w.real() < 0.0)) {
      phase = std::exp(kI * kPi * a);
    } else if (w.imag() < 0.0) {
      phase = std::exp(-kI * kPi * a);
    } else {
      phase = std::cos(kPi * a);
    }
    const Complex pref = phase * std::exp(-a * log_w - log_gamma(b - a));
    const AsymptoticSum s = asymptotic_sum(a, a - b + 1.0, w, -1.0);
    value += pref * s.sum;
    slope += pref * (-a / w * s.sum + s.slope);
    error += std::abs(pref) * s.smallest;
  }
  if (!std::isfinite(std::abs(value)) || error > kAsymptoticTolerance * std::abs(value))
    return std::nullopt;
  const Complex gamma_b = complex_gamma(b);
  return ValueSlope{gamma_b * value, gamma_b * slope};
}

std::optional<ValueSlope> tricomi_asymptotic(Complex a, int b, Complex w) {
  const AsymptoticSum s = asymptotic_sum(a, a - static_cast<double>(b) + 1.0, w, -1.0);
  if (!s.converged && s.smallest > kAsymptoticTolerance * std::abs(s.sum)) return std::nullopt;
  const Complex pref = std::exp(-a * principal_log(w));
  return ValueSlope{pref * s.sum, pref * (-a / w * s.sum + s.slope)};
}

// Logarithmic series for integer b = n + 1.
SeriesEval tricomi_series(Complex a, int b, Complex w) {
  const int n = b - 1;
  const Complex log_w = principal_log(w);
  const double factorial = n == 1 ? 1.0 : 2.0;
  const double sign = (n + 1) % 2 == 0 ? 1.0 : -1.0;
  const Complex pref = sign / factorial * reciprocal_gamma(a - static_cast<double>(n));

  Complex value = 0.0;
  Complex slope = 0.0;
  double largest_value = 0.0;
  double largest_slope = 0.0;
  if (pref != 0.0) {
    Complex t = 1.0;
    Complex psi = digamma(a);
    double harmonic_k = 0.0;
    double harmonic_nk = 0.0;
    for (int j = 1; j <= n; ++j) harmonic_nk += 1.0 / j;
    Complex series_value = 0.0;
    Complex series_slope = 0.0;
    int quiet = 0;
    int k = 0;
    for (; k < kMaxTerms; ++k) {
      const Complex bracket = log_w + psi - harmonic_k - harmonic_nk + 2.0 * kEulerGamma;
      const Complex term_value = t * bracket;
      const Complex term_slope = t * (static_cast<double>(k) * bracket + 1.0) / w;
      series_value += term_value;
      series_slope += term_slope;
      largest_value = std::max(largest_value, std::abs(pref * term_value));
      largest_slope = std::max(largest_slope, std::abs(pref * term_slope));
      if (!std::isfinite(largest_value) || !std::isfinite(largest_slope)) return {};
      const bool negligible = std::abs(term_value) <= kTermTolerance * std::abs(series_value) &&
                              std::abs(term_slope) <= kTermTolerance * std::abs(series_slope);
      quiet = negligible ? quiet + 1 : 0;
      if (quiet >= 2) break;
      t *= (a + static_cast<double>(k)) * w / ((n + 1.0 + k) * (k + 1.0));
      psi += 1.0 / (a + static_cast<double>(k));
      harmonic_k += 1.0 / (k + 1.0);
      harmonic_nk += 1.0 / (n + k + 1.0);
    }
    if (k == kMaxTerms) return {};
    value = pref * series_value;
    slope = pref * series_slope;
  }

  const Complex inv = 1.0 / w;
  const Complex rgamma_a = reciprocal_gamma(a);
  Complex finite_value;
  Complex finite_slope;
  if (n == 1) {
    finite_value = rgamma_a * inv;
    finite_slope = -rgamma_a * inv * inv;
  } else {
    finite_value = rgamma_a * ((2.0 - a) * inv + inv * inv);
    finite_slope = rgamma_a * (-(2.0 - a) * inv * inv - 2.0 * inv * inv * inv);
  }
  largest_value = std::max(largest_value, std::abs(finite_value));
  largest_slope = std::max(largest_slope, std::abs(finite_slope));
  value += finite_value;
  slope += finite_slope;
  return {{value, slope}, std::max(ratio(largest_value, value), ratio(largest_slope, slope)), true};
}

// One Taylor step of w y'' + (b - w) y' - a y = 0 from w0 to w0 + h,
// with scaled coefficients d_n = c_n h^n.
std::optional<ValueSlope> taylor_step(Complex a, Complex b, Complex w0, const ValueSlope& y, Complex h) {
  Complex d0 = y.value;
  Complex d1 = y.slope * h;
  Complex value = d0 + d1;
  Complex weighted = d1;
  double largest = std::max(std::abs(d0), std::abs(d1));
  int quiet = 0;
  for (int n = 0; n < kTaylorTerms; ++n) {
    const Complex d2 = ((static_cast<double>(n) + a) * d0 * h * h -
                        (n + 1.0) * (static_cast<double>(n) + b - w0) * d1 * h) /
                       (w0 * ((n + 1.0) * (n + 2.0)));
    value += d2;
    weighted += (n + 2.0) * d2;
    const double size = std::abs(d2);
    largest = std::max(largest, size);
    if (!std::isfinite(largest)) return std::nullopt;
    const double scale = std::max(std::abs(value), std::abs(weighted));
    quiet = (n + 2.0) * size <= kTermTolerance * scale ? quiet + 1 : 0;
    d0 = d1;
    d1 = d2;
    if (quiet >= 2) {
      if (largest > kStepCancellation * scale) return std::nullopt;
      return ValueSlope{value, weighted / h};
    }
  }
  return std::nullopt;
}

ValueSlope continue_ode(Complex a, Complex b, Complex from, ValueSlope y, Complex to) {
  Complex w = from;
  for (int steps = 0; w != to; ++steps) {
    if (steps > kMaxSteps) throw ConvergenceError("Kummer ODE continuation: step cap reached");
    const Complex remaining = to - w;
    const double limit = std::min(kMaxStep, 0.5 * std::abs(w));
    Complex h = remaining;
    if (std::abs(h) > limit) h *= limit / std::abs(h);
    for (;;) {
      if (auto next = taylor_step(a, b, w, y, h)) {
        y = *next;
        break;
      }
      h *= 0.5;
      if (std::abs(h) < 1e-10 * std::abs(w))
        throw ConvergenceError("Kummer ODE continuation: step size underflow");
    }
    w = h == remaining ? to : w + h;
  }
  return y;
}

template <typename Series>
ValueSlope continue_from_origin(Complex a, Complex b, Complex w, Series series) {
  const double r = std::abs(w);
  double r0 = std::min(r, kStartRadius);
  for (;;) {
    const Complex w0 = w * (r0 / r);
    const SeriesEval start = series(w0);
    if (start.converged && start.cancellation <= kStartCancellation)
      return continue_ode(a, b, w0, start.result, w);
    r0 *= 0.5;
    if (r0 < 1e-8) throw ConvergenceError("confluent series: no usable starting radius");
  }
}

}  // namespace

namespace detail {

ValueSlope kummer_1f1_with_slope(Complex a, Complex b, Complex z) {
  if (is_nonpositive_integer(b)) throw DomainError("kummer_1f1: b is a non-positive integer");
  if (z == 0.0) return {1.0, a / b};
  const double r = std::abs(z);
  if (r >= kKummerAsymptoticRadius) {
    if (auto asym = kummer_asymptotic(a, b, z)) return *asym;
  }
  if (r <= kDirectSeriesLimit) {
    const SeriesEval direct = kummer_series(a, b, z);
    if (direct.converged && direct.cancellation <= kAcceptCancellation) return direct.result;
  }
  return continue_from_origin(a, b, z, [&](Complex w0) { return kummer_series(a, b, w0); });
}

ValueSlope tricomi_u_with_slope(Complex a, int b, Complex z) {
  if (b != 2 && b != 3) throw DomainError("tricomi_u: only b = 2 and b = 3 are supported");
  if (!(a.real() > 0.0)) throw DomainError("tricomi_u: requires Re a > 0");
  if (z == 0.0) throw DomainError("tricomi_u: z = 0");
  const double r = std::abs(z);
  if (r >= kKummerAsymptoticRadius) {
    if (auto asym = tricomi_asymptotic(a, b, z)) return *asym;
  }
  if (r <= kDirectSeriesLimit) {
    const SeriesEval direct = tricomi_series(a, b, z);
    if (direct.converged && direct.cancellation <= kAcceptCancellation) return direct.result;
  }
  const Complex bc = static_cast<double>(b);
  if (z.real() >= 0.0) {
    // U is recessive going outward on the right half-plane: integrate inward.
    double big = r >= kKummerAsymptoticRadius ? 2.0 * r : kKummerAsymptoticRadius;
    for (; big <= kMaxAsymptoticRadius; big *= 2.0) {
      const Complex far = z * (big / r);
      if (auto asym = tricomi_asymptotic(a, b, far)) return continue_ode(a, bc, far, *asym, z);
    }
    throw ConvergenceError("tricomi_u: asymptotic expansion never converged");
  }
  // Left half-plane: start on the imaginary axis at the same modulus and follow
  // the arc, along which the e^z solution decays relative to U.
  const double side = z.imag() < 0.0 ? -1.0 : 1.0;
  const Complex axis(0.0, side * r);
  ValueSlope y = tricomi_u_with_slope(a, b, axis);
  const double start = side * std::numbers::pi / 2.0;
  const double stop = std::arg(z) == -std::numbers::pi && side > 0.0 ? std::numbers::pi : std::arg(z);
  const int chords = static_cast<int>(std::ceil(std::abs(stop - start) * r / kMaxStep)) + 1;
  Complex w = axis;
  for (int i = 1; i <= chords; ++i) {
    const Complex next = i == chords ? z : std::polar(r, start + (stop - start) * i / chords);
    y = continue_ode(a, bc, w, y, next);
    w = next;
  }
  return y;
}

}  // namespace detail

Complex kummer_1f1(Complex a, Complex b, Complex z) { return detail::kummer_1f1_with_slope(a, b, z).value; }

Complex tricomi_u(Complex a, int b, Complex z) { return detail::tricomi_u_with_slope(a, b, z).value; }

}  // namespace sptunnel::specfun
