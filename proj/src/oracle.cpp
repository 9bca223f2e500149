#include "sptunnel/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sptunnel/errors.hpp"

namespace sptunnel::oracle {

namespace {

const Complex kI(0.0, 1.0);

void check_grid(const GridConfig& grid, double epsilon, std::span<const double> v) {
  if (grid.n < 2 || !(grid.L > 0.0)) throw ResolutionError("numerov: grid needs L > 0 and n >= 2");
  if (v.size() != static_cast<std::size_t>(grid.n) + 1) {
    throw ResolutionError("numerov: potential has " + std::to_string(v.size()) + " samples, grid needs " +
                          std::to_string(grid.n + 1));
  }
  double max_v = 0.0;
  for (double x : v) {
    if (!std::isfinite(x)) throw ResolutionError("numerov: potential is not bounded on the grid");
    max_v = std::max(max_v, std::abs(x));
  }
  const double k = std::sqrt(epsilon);
  if (grid.step() * std::sqrt(epsilon + max_v) > kResolution * (1.0 + 1e-12)) {
    throw ResolutionError("numerov: step " + std::to_string(grid.step()) + " too coarse for the potential");
  }
  if (grid.L * k < kMinWavelengths * (1.0 - 1e-12)) {
    throw ResolutionError("numerov: half-width L " + std::to_string(grid.L) + " shorter than 20/sqrt(eps)");
  }
}

}  // namespace

double CutoffPotential::operator()(double z) const {
  const double r = std::abs(z);
  if (r < delta) return cap == CapMode::Plateau ? u0 / std::pow(delta, alpha) : 0.0;
  return u0 / std::pow(r, alpha);
}

double CutoffPotential::max_abs() const { return std::abs(u0) / std::pow(delta, alpha); }

GridConfig GridConfig::defaults(double epsilon, double max_abs_v, double delta) {
  if (!(epsilon > 0.0)) throw DomainError("grid: epsilon must be positive");
  const double L = std::max(kMinWavelengths / std::sqrt(epsilon), 10.0);
  double step = std::min(kResolution / std::sqrt(epsilon + max_abs_v), kMaxDefaultStep);
  if (delta > 0.0) step = std::min(step, delta / kCapSteps);
  const int n = static_cast<int>(std::ceil(2.0 * L / step));
  return {L, n};
}

std::vector<double> sample(const CutoffPotential& potential, const GridConfig& grid) {
  std::vector<double> v(static_cast<std::size_t>(grid.n) + 1);
  for (int i = 0; i <= grid.n; ++i) v[i] = potential(grid.z(i));
  return v;
}

ScatteringResult numerov_scatter(std::span<const double> v, double epsilon, const GridConfig& grid,
                                 Incidence incidence) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw DomainError("numerov: epsilon must be positive");
  check_grid(grid, epsilon, v);
  if (incidence == Incidence::FromRight) {
    // Mirror the potential; the grid is symmetric about the origin.
    std::vector<double> mirrored(v.rbegin(), v.rend());
    return numerov_scatter(mirrored, epsilon, grid, Incidence::FromLeft);
  }
  const int n = grid.n;
  const double h = grid.step();
  const double k = std::sqrt(epsilon);
  const double h12 = h * h / 12.0;
  auto weight = [&](int i) { return 1.0 - h12 * (v[i] - epsilon); };
  // Pure transmitted wave beyond the right edge, integrated leftwards.
  Complex next = std::exp(kI * k * grid.z(n));
  Complex cur = std::exp(kI * k * grid.z(n - 1));
  for (int i = n - 1; i >= 1; --i) {
    const Complex prev = (2.0 * cur * (1.0 + 5.0 * h12 * (v[i] - epsilon)) - next * weight(i + 1)) / weight(i - 1);
    next = cur;
    cur = prev;
  }
  // cur = psi(z_0), next = psi(z_1); split into A e^{ikz} + B e^{-ikz}.
  const double z0 = grid.z(0);
  const double z1 = grid.z(1);
  const Complex e0 = std::exp(kI * k * z0);
  const Complex e1 = std::exp(kI * k * z1);
  const Complex det = e0 / e1 - e1 / e0;
  const Complex A = (cur / e1 - next / e0) / det;
  const Complex B = (e0 * next - e1 * cur) / det;
  const double t = 1.0 / std::norm(A);
  const double r = std::norm(B / A);
  return ScatteringResult::computed(t, r);
}

std::vector<CutoffPoint> cutoff_sweep(double u0, double alpha, double epsilon, std::span<const double> deltas,
                                      CapMode cap) {
  if (deltas.empty()) throw DomainError("cutoff_sweep: no cutoff widths given");
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!(deltas[i] > 0.0)) throw DomainError("cutoff_sweep: cutoff widths must be positive");
    if (i > 0 && !(deltas[i] < deltas[i - 1])) throw DomainError("cutoff_sweep: cutoff widths must decrease strictly");
  }
  if (!(alpha > 0.0)) throw DomainError("cutoff_sweep: alpha must be positive");
  std::vector<CutoffPoint> out;
  out.reserve(deltas.size());
  for (double delta : deltas) {
    const CutoffPotential potential{u0, alpha, delta, cap};
    const GridConfig grid = GridConfig::defaults(epsilon, potential.max_abs(), delta);
    const std::vector<double> v = sample(potential, grid);
    out.push_back({delta, *numerov_scatter(v, epsilon, grid).T});
  }
  return out;
}

}  // namespace sptunnel::oracle
