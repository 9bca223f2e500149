#include "sptunnel/coulomb.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sptunnel/errors.hpp"
#include "sptunnel/specfun.hpp"

namespace sptunnel::coulomb {

namespace {

using specfun::complex_gamma;
using specfun::detail::ValueSlope;

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

bool is_right(Basis which) { return which == Basis::R1 || which == Basis::R2; }

// Right-side solution at x > 0 together with its x-derivative.
ValueSlope right_solution(double x, bool regular, const CoulombParams& params) {
  const Complex c = params.c();
  const Complex w = c * x;
  const ValueSlope f = regular ? specfun::detail::kummer_1f1_with_slope(params.a(), 2.0, w)
                               : specfun::detail::tricomi_u_with_slope(params.a(), 2, w);
  const Complex phase = std::exp(Complex(0.0, -params.k() * x));
  const Complex value = phase * x * f.value;
  const Complex slope = phase * ((1.0 - kI * params.k() * x) * f.value + x * c * f.slope);
  return {value, slope};
}

ValueSlope evaluate(double z, Basis which, const CoulombParams& params) {
  if (z == 0.0 || !std::isfinite(z)) throw DomainError("coulomb basis: z must be finite and nonzero");
  if (is_right(which) != (z > 0.0)) throw DomainError("coulomb basis: z lies on the wrong side");
  const bool regular = which == Basis::R1 || which == Basis::L1;
  if (is_right(which)) return right_solution(z, regular, params);
  const ValueSlope mirrored = right_solution(-z, regular, params);
  return {mirrored.value, -mirrored.slope};
}

Basis basis_for(int m, Side side) {
  if (side == Side::Right) return m == 1 ? Basis::R1 : Basis::R2;
  return m == 1 ? Basis::L1 : Basis::L2;
}

}  // namespace

CoulombParams CoulombParams::make(double epsilon, double u0) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw DomainError("coulomb: epsilon must be positive");
  if (u0 == 0.0 || !std::isfinite(u0)) throw DomainError("coulomb: u0 must be finite and nonzero");
  CoulombParams params{epsilon, u0};
  if (std::abs(params.eta()) > kMaxEta) {
    throw DomainError("coulomb: |eta| = " + std::to_string(std::abs(params.eta())) + " exceeds the supported range");
  }
  return params;
}

double CoulombParams::k() const { return std::sqrt(epsilon); }

double CoulombParams::eta() const { return u0 / (2.0 * std::sqrt(epsilon)); }

Complex CoulombParams::a() const { return {1.0, -eta()}; }

Complex CoulombParams::c() const { return {0.0, 2.0 * std::sqrt(epsilon)}; }

Complex basis(double z, Basis which, const CoulombParams& params) { return evaluate(z, which, params).value; }

Complex basis_derivative(double z, Basis which, const CoulombParams& params) {
  return evaluate(z, which, params).slope;
}

Complex current_component(int m, int n, Side side, const CoulombParams& params, double z_eval) {
  if ((m != 1 && m != 2) || (n != 1 && n != 2)) throw DomainError("current_component: indices must be 1 or 2");
  const double z = side == Side::Right ? std::abs(z_eval) : -std::abs(z_eval);
  const ValueSlope pm = evaluate(z, basis_for(m, side), params);
  const ValueSlope pn = evaluate(z, basis_for(n, side), params);
  return kI * (pm.value * std::conj(pn.slope) - pm.slope * std::conj(pn.value));
}

CurrentComponents wronskian_currents(const CoulombParams& params) {
  const double k = params.k();
  const double eta = params.eta();
  const Complex j_r12 = 1.0 / (2.0 * k * complex_gamma(Complex(1.0, eta)));
  const double j_r22 = -std::exp(-kPi * eta) / (2.0 * k);
  return {j_r12, j_r22, -j_r12, -j_r22};
}

CoulombAmplitudes solve_amplitudes(const CoulombParams& params) {
  const double eta = params.eta();
  const CurrentComponents j = wronskian_currents(params);
  // No wave may arrive from the right.
  const Complex a_r1 = std::exp(-kPi * eta) * complex_gamma(Complex(1.0, eta));
  const Complex a_r2 = 1.0;
  // Continuity at the origin fixes a_l2 = a_r2; current continuity with the
  // closure a_l1 + a_r1 real fixes a_l1.
  const double denominator = 2.0 * j.j_l12.real();
  if (std::abs(j.j_l12.real()) < kDegenerateTolerance * std::abs(j.j_l12)) {
    throw DegenerateError("coulomb: Re j_l12 vanishes at epsilon=" + std::to_string(params.epsilon) +
                          " u0=" + std::to_string(params.u0));
  }
  const double numerator =
      2.0 * (a_r1 * j.j_r12).real() + j.j_r22 - j.j_l22 + 2.0 * (a_r1 * j.j_l12).real();
  const double x = numerator / denominator;
  return {x - a_r1, a_r2, a_r1, a_r2};
}

AsymptoticWaves asymptotic_waves(const CoulombAmplitudes& amp, const CoulombParams& params) {
  const double eta = params.eta();
  const Complex two_ik(0.0, 2.0 * params.k());
  const double up = std::exp(kPi * eta / 2.0);
  const double down = std::exp(-kPi * eta / 2.0);
  const Complex g_plus = complex_gamma(Complex(1.0, eta));
  const Complex g_minus = complex_gamma(Complex(1.0, -eta));
  AsymptoticWaves waves;
  waves.transmitted = amp.a_r1 * up / (two_ik * g_minus);
  waves.right_incoming = -amp.a_r1 * up / (two_ik * g_plus) + amp.a_r2 * down / two_ik;
  waves.incident = -amp.a_l1 * up / (two_ik * g_plus) + amp.a_l2 * down / two_ik;
  waves.reflected = amp.a_l1 * up / (two_ik * g_minus);
  return waves;
}

ScatteringResult transmission(const CoulombParams& params) {
  const AsymptoticWaves waves = asymptotic_waves(solve_amplitudes(params), params);
  const double t = std::norm(waves.transmitted / waves.incident);
  return ScatteringResult::computed(t, 1.0 - t);
}

}  // namespace sptunnel::coulomb
