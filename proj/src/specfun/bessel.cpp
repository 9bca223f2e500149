#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "sptunnel/errors.hpp"
#include "sptunnel/specfun.hpp"

namespace sptunnel::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kFpMin = std::numeric_limits<double>::min() / kEps;
constexpr int kMaxIterations = 100000;
constexpr double kSeriesSwitch = 2.0;

// Even Taylor coefficients c_2, c_4, ... of 1/Gamma(z) = sum c_k z^k.
constexpr std::array<double, 13> kReciprocalGammaEven = {
    0.5772156649015329,   -0.0420026350340952,  -0.0421977345555443, 0.0072189432466630,
    -0.0002152416741149,  -0.0000201348547807,  0.0000011330272320,  0.0000000061160950,
    -0.0000000011812746,  0.0000000000077823,   0.0000000000005100,  -0.0000000000000054,
    0.0000000000000001};

// Temme's gamma combinations for |mu| <= 1/2.
struct TemmeGammas {
  double gam1;
  double gam2;
  double gampl;
  double gammi;
};

TemmeGammas temme_gammas(double mu) {
  TemmeGammas g{};
  g.gampl = 1.0 / std::tgamma(1.0 + mu);
  g.gammi = 1.0 / std::tgamma(1.0 - mu);
  g.gam2 = 0.5 * (g.gammi + g.gampl);
  if (std::abs(mu) > 0.1) {
    g.gam1 = (g.gammi - g.gampl) / (2.0 * mu);
  } else {
    const double mu2 = mu * mu;
    double sum = 0.0;
    for (auto it = kReciprocalGammaEven.rbegin(); it != kReciprocalGammaEven.rend(); ++it) sum = sum * mu2 + *it;
    g.gam1 = -sum;
  }
  return g;
}

void check_arguments(double nu, double x) {
  if (!(x > 0.0)) throw DomainError("bessel: x must be positive");
  if (!(nu >= 0.0)) throw DomainError("bessel: order must be non-negative");
}

}  // namespace

namespace detail {

HankelExpansion hankel_pq(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double p = 1.0;
  double q = 0.0;
  double previous = 1.0;
  for (int k = 1; k < 400; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (8.0 * k * x);
    const double size = std::abs(term);
    if (size > previous) return {p, q, false};
    if (k % 2 == 1) {
      q += ((k - 1) / 2) % 2 == 0 ? term : -term;
    } else {
      p += (k / 2) % 2 == 1 ? -term : term;
    }
    if (size < 1e-17) return {p, q, true};
    previous = size;
  }
  return {p, q, false};
}

BesselValues bessel_jy_recurrence(double nu, double x) {
  check_arguments(nu, x);
  const int nl = x < kSeriesSwitch ? static_cast<int>(nu + 0.5)
                                   : std::max(0, static_cast<int>(nu - x + 1.5));
  const double xmu = nu - nl;
  const double xmu2 = xmu * xmu;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;
  const double w = xi2 / kPi;

  // CF1: J'_nu / J_nu
  int isign = 1;
  double h = nu * xi;
  if (h < kFpMin) h = kFpMin;
  double b = xi2 * nu;
  double d = 0.0;
  double c = h;
  int i = 0;
  for (; i < kMaxIterations; ++i) {
    b += xi2;
    d = b - d;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = b - 1.0 / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = c * d;
    h *= del;
    if (d < 0.0) isign = -isign;
    if (std::abs(del - 1.0) <= kEps) break;
  }
  if (i >= kMaxIterations) throw ConvergenceError("bessel: CF1 did not converge");

  double rjl = isign * kFpMin;
  double rjpl = h * rjl;
  const double rjl1 = rjl;
  const double rjp1 = rjpl;
  double fact = nu * xi;
  for (int l = nl - 1; l >= 0; --l) {
    const double rjtemp = fact * rjl + rjpl;
    fact -= xi;
    rjpl = fact * rjtemp - rjl;
    rjl = rjtemp;
  }
  if (rjl == 0.0) rjl = kEps;
  const double f = rjpl / rjl;

  double rjmu;
  double rymu;
  double rymup;
  double ry1;
  if (x < kSeriesSwitch) {
    // Temme's series for Y_mu, Y_{mu+1}.
    const double x2 = 0.5 * x;
    const double pimu = kPi * xmu;
    const double fact1 = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    const double dlog = -std::log(x2);
    const double e = xmu * dlog;
    const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
    const TemmeGammas g = temme_gammas(xmu);
    double ff = 2.0 / kPi * fact1 * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * dlog);
    const double ee = std::exp(e);
    double p = ee / (g.gampl * kPi);
    double q = 1.0 / (ee * kPi * g.gammi);
    const double pimu2 = 0.5 * pimu;
    const double fact3 = std::abs(pimu2) < kEps ? 1.0 : std::sin(pimu2) / pimu2;
    const double r = kPi * pimu2 * fact3 * fact3;
    double cc = 1.0;
    const double dd = -x2 * x2;
    double sum = ff + r * q;
    double sum1 = p;
    int k = 1;
    for (; k <= kMaxIterations; ++k) {
      ff = (k * ff + p + q) / (k * k - xmu2);
      cc *= dd / k;
      p /= k - xmu;
      q /= k + xmu;
      const double del = cc * (ff + r * q);
      sum += del;
      const double del1 = cc * p - k * del;
      sum1 += del1;
      if (std::abs(del) < (1.0 + std::abs(sum)) * kEps) break;
    }
    if (k > kMaxIterations) throw ConvergenceError("bessel: Temme series did not converge");
    rymu = -sum;
    ry1 = -sum1 * xi2;
    rymup = xmu * xi * rymu - ry1;
    rjmu = w / (rymup - f * rymu);
  } else {
    // Steed's CF2: p + iq = (J' + iY') / (J + iY).
    double a = 0.25 - xmu2;
    double p = -0.5 * xi;
    double q = 1.0;
    const double br = 2.0 * x;
    double bi = 2.0;
    double fct = a * xi / (p * p + q * q);
    double cr = br + q * fct;
    double ci = bi + p * fct;
    double den = br * br + bi * bi;
    double dr = br / den;
    double di = -bi / den;
    double dlr = cr * dr - ci * di;
    double dli = cr * di + ci * dr;
    double temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    int k = 1;
    for (; k < kMaxIterations; ++k) {
      a += 2 * k;
      bi += 2.0;
      dr = a * dr + br;
      di = a * di + bi;
      if (std::abs(dr) + std::abs(di) < kFpMin) dr = kFpMin;
      fct = a / (cr * cr + ci * ci);
      cr = br + cr * fct;
      ci = bi - ci * fct;
      if (std::abs(cr) + std::abs(ci) < kFpMin) cr = kFpMin;
      den = dr * dr + di * di;
      dr /= den;
      di /= -den;
      dlr = cr * dr - ci * di;
      dli = cr * di + ci * dr;
      temp = p * dlr - q * dli;
      q = p * dli + q * dlr;
      p = temp;
      if (std::abs(dlr - 1.0) + std::abs(dli) <= kEps) break;
    }
    if (k >= kMaxIterations) throw ConvergenceError("bessel: CF2 did not converge");
    const double gam = (p - f) / q;
    rjmu = std::copysign(std::sqrt(w / ((p - f) * gam + q)), rjl);
    rymu = rjmu * gam;
    rymup = rymu * (p + q / gam);
    ry1 = xmu * xi * rymu - rymup;
  }

  const double scale = rjmu / rjl;
  BesselValues out{};
  out.j = rjl1 * scale;
  out.j_prime = rjp1 * scale;
  for (int k = 1; k <= nl; ++k) {
    const double rytemp = (xmu + k) * xi2 * ry1 - rymu;
    rymu = ry1;
    ry1 = rytemp;
  }
  out.y = rymu;
  out.y_prime = nu * xi * rymu - ry1;
  return out;
}

}  // namespace detail

BesselValues bessel_jy(double nu, double x) {
  check_arguments(nu, x);
  if (x >= kBesselAsymptoticRadius) {
    const detail::HankelExpansion e0 = detail::hankel_pq(nu, x);
    const detail::HankelExpansion e1 = detail::hankel_pq(nu + 1.0, x);
    if (e0.converged && e1.converged) {
      const double amplitude = std::sqrt(2.0 / (kPi * x));
      const double chi0 = x - (0.5 * nu + 0.25) * kPi;
      const double chi1 = chi0 - 0.5 * kPi;
      const double j0 = amplitude * (e0.p * std::cos(chi0) - e0.q * std::sin(chi0));
      const double y0 = amplitude * (e0.p * std::sin(chi0) + e0.q * std::cos(chi0));
      const double j1 = amplitude * (e1.p * std::cos(chi1) - e1.q * std::sin(chi1));
      const double y1 = amplitude * (e1.p * std::sin(chi1) + e1.q * std::cos(chi1));
      return {j0, y0, nu / x * j0 - j1, nu / x * y0 - y1};
    }
  }
  return detail::bessel_jy_recurrence(nu, x);
}

double bessel_j(double nu, double x) { return bessel_jy(nu, x).j; }

double bessel_y(double nu, double x) { return bessel_jy(nu, x).y; }

}  // namespace sptunnel::specfun
