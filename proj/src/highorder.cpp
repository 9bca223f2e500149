#include "sptunnel/highorder.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "sptunnel/errors.hpp"
#include "sptunnel/specfun.hpp"

namespace sptunnel::highorder {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kNewtonSteps = 100;

void check_energy(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw DomainError("highorder: epsilon must be positive");
}

// g(x) for x = (Re a_l_plus, Im a_l_plus, Re a_l_minus, Im a_l_minus) once
// continuity has eliminated a_r_plus; g = -2 Re(conj(a_l_minus) a_r_plus).
double constraint(const std::array<double, 4>& x) {
  return -2.0 * (x[2] * (x[0] + x[2]) + x[3] * (x[1] + x[3]));
}

std::array<double, 4> constraint_gradient(const std::array<double, 4>& x) {
  return {-2.0 * x[2], -2.0 * x[3], -2.0 * (x[0] + 2.0 * x[2]), -2.0 * (x[1] + 2.0 * x[3])};
}

IntermediateAmplitudes from_vector(const std::array<double, 4>& x) {
  const Complex lp(x[0], x[1]);
  const Complex lm(x[2], x[3]);
  return {lp, lm, lp + lm, 0.0};
}

// Hankel asymptotic H^(1) (outgoing) or H^(2) without the exact J, Y.
Complex hankel_asymptotic(double nu, double x, bool outgoing) {
  const specfun::detail::HankelExpansion e = specfun::detail::hankel_pq(nu, x);
  if (!e.converged) throw ConvergenceError("outgoing check: Hankel expansion did not converge");
  const double chi = x - (nu / 2.0 + 0.25) * kPi;
  const double scale = std::sqrt(2.0 / (kPi * x));
  if (outgoing) return scale * Complex(e.p, e.q) * std::polar(1.0, chi);
  return scale * Complex(e.p, -e.q) * std::polar(1.0, -chi);
}

}  // namespace

ScatteringResult intermediate_transmission(double u0, double alpha, double epsilon) {
  check_energy(epsilon);
  if (!(alpha > 1.0 && alpha < 2.0)) throw DomainError("intermediate: alpha must lie in (1, 2)");
  if (u0 == 0.0 || !std::isfinite(u0)) throw DomainError("intermediate: u0 must be finite and nonzero");
  return ScatteringResult::forced_zero();
}

ScatteringResult inverse_square_transmission(double u0, double epsilon) {
  check_energy(epsilon);
  if (u0 == 0.0) throw DomainError("inverse square: u0 must be nonzero");
  InverseSquareBasis::from_u0(u0);
  return u0 > 0.0 ? ScatteringResult::forced_zero() : ScatteringResult::undetermined();
}

ScatteringResult extra_singular_transmission(double u0, double alpha, double epsilon) {
  check_energy(epsilon);
  if (!(alpha > 2.0) || !std::isfinite(alpha)) throw DomainError("extra singular: alpha must exceed 2");
  if (u0 == 0.0 || !std::isfinite(u0)) throw DomainError("extra singular: u0 must be finite and nonzero");
  return u0 > 0.0 ? ScatteringResult::forced_zero() : ScatteringResult::undetermined();
}

double continuity_residual(const IntermediateAmplitudes& amp) {
  return std::abs(amp.a_l_plus + amp.a_l_minus - amp.a_r_plus);
}

double current_residual(const IntermediateAmplitudes& amp) {
  return std::abs(std::norm(amp.a_l_plus) - std::norm(amp.a_l_minus) - std::norm(amp.a_r_plus));
}

CompatibilityReport intermediate_compatibility_check(int samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("compatibility check: samples must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  CompatibilityReport report;
  report.samples = samples;
  for (int s = 0; s < samples; ++s) {
    std::array<double, 4> x{normal(rng), normal(rng), normal(rng), normal(rng)};
    // Newton projection onto g = 0 along the gradient.
    for (int it = 0; it < kNewtonSteps; ++it) {
      const double g = constraint(x);
      if (std::abs(g) <= 0.1 * kCompatibilityTolerance) break;
      const std::array<double, 4> grad = constraint_gradient(x);
      double norm2 = 0.0;
      for (double v : grad) norm2 += v * v;
      if (norm2 == 0.0) break;
      for (int i = 0; i < 4; ++i) x[i] -= g * grad[i] / norm2;
    }
    const IntermediateAmplitudes amp = from_vector(x);
    const double residual = std::max(continuity_residual(amp), current_residual(amp));
    if (residual > kCompatibilityTolerance) continue;
    ++report.solved;
    report.max_residual = std::max(report.max_residual, residual);
    if (std::abs(amp.a_r_plus) >= report.max_a_r_plus) {
      report.max_a_r_plus = std::abs(amp.a_r_plus);
      report.largest = amp;
    }
  }
  return report;
}

Complex near_origin_h(double z, double u0, double alpha) {
  if (!(z != 0.0 && std::abs(z) <= 0.1)) throw DomainError("near_origin_h: requires 0 < |z| <= 0.1");
  if (!(alpha > 1.0 && alpha < 2.0)) throw DomainError("near_origin_h: alpha must lie in (1, 2)");
  return u0 * std::pow(std::abs(z), 2.0 - alpha) / ((1.0 - alpha) * (2.0 - alpha));
}

InverseSquareBasis InverseSquareBasis::from_u0(double u0) {
  if (!(u0 > -0.25) || !std::isfinite(u0)) throw DomainError("inverse square: u0 must exceed -1/4");
  return {std::sqrt(0.25 + u0)};
}

double outgoing_combination_check(double u0, double epsilon, double z_far, Combination combination) {
  check_energy(epsilon);
  if (!(u0 > 0.0)) throw DomainError("outgoing check: u0 must be positive");
  const double k = std::sqrt(epsilon);
  if (!(z_far >= 50.0 / k)) throw DomainError("outgoing check: z_far must be at least 50/sqrt(eps)");
  const double nu = InverseSquareBasis::from_u0(u0).nu;
  const double sign = combination == Combination::Outgoing ? 1.0 : -1.0;
  // Two samples a quarter wavelength apart; sqrt(z) cancels on both sides.
  const std::array<double, 2> xs{k * z_far, k * z_far + kPi / 2.0};
  std::array<Complex, 2> f;
  std::array<Complex, 2> h1;
  std::array<Complex, 2> h2;
  for (int i = 0; i < 2; ++i) {
    const specfun::BesselValues b = specfun::bessel_jy(nu, xs[i]);
    f[i] = Complex(b.j, sign * b.y);
    h1[i] = hankel_asymptotic(nu, xs[i], true);
    h2[i] = hankel_asymptotic(nu, xs[i], false);
  }
  const Complex det = h1[0] * h2[1] - h1[1] * h2[0];
  const Complex out = (f[0] * h2[1] - f[1] * h2[0]) / det;
  const Complex in = (h1[0] * f[1] - h1[1] * f[0]) / det;
  return std::abs(in) / std::hypot(std::abs(out), std::abs(in));
}

}  // namespace sptunnel::highorder
