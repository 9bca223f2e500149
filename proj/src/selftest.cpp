#include "sptunnel/selftest.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "sptunnel/coulomb.hpp"
#include "sptunnel/errors.hpp"
#include "sptunnel/highorder.hpp"
#include "sptunnel/mild.hpp"
#include "sptunnel/oracle.hpp"
#include "sptunnel/regimes.hpp"
#include "sptunnel/specfun.hpp"

namespace sptunnel {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kSamples = 200;

struct Suite {
  std::string name;
  std::function<bool()> check;
};

bool specfun_identities() {
  using namespace specfun;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < kSamples; ++i) {
    const double y = 10.0 * u(rng);
    if (y != 0.0) {
      const double want = kPi * y / std::sinh(kPi * y);
      if (std::abs(std::norm(complex_gamma(Complex(1.0, y))) - want) > 1e-12 * want) return false;
    }
    const Complex a(1.5 + u(rng), 3.0 * u(rng));
    const Complex b(2.0 + u(rng), 0.0);
    const Complex z(10.0 * u(rng), 10.0 * u(rng));
    const Complex lhs = kummer_1f1(a, b, z);
    const Complex rhs = std::exp(z) * kummer_1f1(b - a, b, -z);
    if (std::abs(lhs - rhs) > 1e-10 * std::max(1.0, std::abs(lhs))) return false;
    const double s = 0.5 + 0.4 * u(rng);
    const Complex w(5.0 * u(rng) + 6.0, 8.0 * u(rng));
    const Complex step = s * upper_incomplete_gamma(s, w) + principal_power(w, s) * std::exp(-w);
    if (std::abs(upper_incomplete_gamma(s + 1.0, w) - step) > 1e-10 * std::abs(step)) return false;
    const double nu = 2.0 + 2.0 * u(rng);
    const double x = 26.0 + 25.0 * u(rng);
    const BesselValues jy = bessel_jy(nu, x);
    if (std::abs((jy.j * jy.y_prime - jy.j_prime * jy.y) * kPi * x / 2.0 - 1.0) > 1e-10) return false;
  }
  return true;
}

bool regime_dispatch() {
  if (classify(1.0 + 1e-13) != Regime::Coulomb || classify(2.0 - 1e-13) != Regime::InverseSquare) return false;
  if (classify(0.5) != Regime::MildlySingular || classify(1.5) != Regime::Intermediate) return false;
  for (double e : {0.1, 1.0, 100.0}) {
    for (PotentialSpec spec : {PotentialSpec{1.0, 1.5}, {-1.0, 1.5}, {0.5, 2.0}, {1.0, 3.0}}) {
      const ScatteringResult r = transmission_any(spec, e);
      if (r.status != Status::ForcedZero || *r.T != 0.0) return false;
    }
    if (transmission_any({-0.1, 2.0}, e).status != Status::Undetermined) return false;
    if (transmission_any({-1.0, 3.0}, e).status != Status::Undetermined) return false;
  }
  return *transmission_any({0.0, 0.5}, 1.0).T == 1.0;
}

bool mild_invariants() {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < kSamples; ++i) {
    const double e = std::pow(10.0, -6.0 + 12.0 * u(rng));
    const double u0 = u(rng) < 0.5 ? -5.0 * u(rng) - 1e-3 : 5.0 * u(rng) + 1e-3;
    const double alpha = 0.05 + 0.9 * u(rng);
    const ScatteringResult r = mild::transmission(e, u0, alpha);
    if (std::abs(*r.T + *r.R - 1.0) > 1e-10) return false;
    const Complex plus = mild::h_prime(1.3, mild::Side::Right, mild::WaveBranch::Plus, e, u0, alpha);
    const Complex minus = mild::h_prime(1.3, mild::Side::Right, mild::WaveBranch::Minus, e, u0, alpha);
    if (std::abs(plus - std::conj(minus)) > 1e-12 * std::max(1.0, std::abs(plus))) return false;
  }
  const double t0 = *mild::transmission(1e-10, 1.0, 0.25).T;
  const double limit = std::pow(std::cos(kPi * 0.25 / 2.0), 2);
  if (std::abs(t0 - limit) > 1e-4) return false;
  const double root = mild::total_reflection_energy(1.0, 0.25);
  return *mild::transmission(root, 1.0, 0.25).R >= 1.0 - 1e-8;
}

bool coulomb_invariants() {
  for (double e : {1e-3, 0.1, 1.0, 10.0, 300.0}) {
    for (double u0 : {-2.0, -1.0, 1.0, 2.0}) {
      const coulomb::CoulombParams p = coulomb::CoulombParams::make(e, u0);
      const coulomb::AsymptoticWaves w = coulomb::asymptotic_waves(coulomb::solve_amplitudes(p), p);
      const double in = std::norm(w.incident);
      if (std::abs(in - std::norm(w.transmitted) - std::norm(w.reflected)) > 1e-8 * in) return false;
      if (std::abs(w.right_incoming) > 1e-12 * std::abs(w.incident)) return false;
      const double t = *coulomb::transmission(p).T;
      if (!(t >= 0.0 && t <= 1.0)) return false;
    }
  }
  const coulomb::CoulombParams p = coulomb::CoulombParams::make(1.0, 1.0);
  const coulomb::CurrentComponents j = coulomb::wronskian_currents(p);
  const Complex j12 = coulomb::current_component(1, 2, coulomb::Side::Right, p);
  return std::abs(j12 - j.j_r12) <= 1e-8 * std::abs(j.j_r12) &&
         std::abs(coulomb::current_component(1, 1, coulomb::Side::Left, p)) <= 1e-10;
}

bool highorder_invariants() {
  for (double u0 : {0.25, 0.5, 0.74}) {
    for (double e : {0.5, 1.0, 4.0}) {
      if (highorder::outgoing_combination_check(u0, e, 100.0 / std::sqrt(e)) > 1e-6) return false;
    }
  }
  const double h2 = std::abs(highorder::near_origin_h(1e-2, 1.0, 1.5));
  const double h4 = std::abs(highorder::near_origin_h(1e-4, 1.0, 1.5));
  const double h6 = std::abs(highorder::near_origin_h(1e-6, 1.0, 1.5));
  return h6 < h4 && h4 < h2;
}

bool oracle_invariants() {
  const oracle::GridConfig grid{20.0, 40000};
  const std::vector<double> zero(grid.n + 1, 0.0);
  if (std::abs(*oracle::numerov_scatter(zero, 1.0, grid).T - 1.0) > 1e-8) return false;
  const oracle::CutoffPotential cut{1.0, 1.0, 0.1, oracle::CapMode::Plateau};
  const oracle::GridConfig g = oracle::GridConfig::defaults(1.0, cut.max_abs(), cut.delta);
  const std::vector<double> v = oracle::sample(cut, g);
  const ScatteringResult left = oracle::numerov_scatter(v, 1.0, g, oracle::Incidence::FromLeft);
  const ScatteringResult right = oracle::numerov_scatter(v, 1.0, g, oracle::Incidence::FromRight);
  return std::abs(*left.T + *left.R - 1.0) <= 1e-6 && std::abs(*left.T - *right.T) <= 1e-8;
}

}  // namespace

bool run_selftest(std::ostream& out) {
  const std::vector<Suite> suites{{"specfun identities", specfun_identities},
                                  {"regime dispatch", regime_dispatch},
                                  {"mild regime", mild_invariants},
                                  {"coulomb regime", coulomb_invariants},
                                  {"higher singularities", highorder_invariants},
                                  {"numerov oracle", oracle_invariants}};
  bool all = true;
  for (const Suite& suite : suites) {
    bool ok = false;
    std::string note;
    try {
      ok = suite.check();
    } catch (const Error& e) {
      note = std::string(" (") + e.what() + ")";
    }
    all = all && ok;
    out << (ok ? "PASS " : "FAIL ") << suite.name << note << '\n';
  }
  return all;
}

}  // namespace sptunnel
