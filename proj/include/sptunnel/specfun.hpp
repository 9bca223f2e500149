#pragma once

#include <complex>

namespace sptunnel::specfun {

using Complex = std::complex<double>;

// Every complex power in the library is w^p = exp(p (ln|w| + i Arg w)) with
// Arg w in (-pi, pi]. A negative real w with a signed-zero imaginary part is
// treated as lying on the upper side of the cut.
struct PrincipalBranch {};

inline constexpr double kIncompleteGammaSwitchRadius = 10.0;
inline constexpr double kKummerAsymptoticRadius = 30.0;
inline constexpr double kBesselAsymptoticRadius = 20.0;
inline constexpr int kMaxTerms = 10000;
inline constexpr double kPoleTolerance = 1e-12;

Complex principal_log(Complex w);
Complex principal_power(Complex w, double alpha);
Complex principal_power(Complex w, Complex p);

Complex complex_gamma(Complex z);
Complex log_gamma(Complex z);
// 1/Gamma(z); zero at the poles of Gamma instead of throwing.
Complex reciprocal_gamma(Complex z);
Complex digamma(Complex z);

// Upper incomplete gamma Gamma(s, z) for s in (0, 2), |arg z| < pi.
Complex upper_incomplete_gamma(double s, Complex z);
// The two representations, exposed for the overlap check at the switch radius.
Complex incomplete_gamma_series(double s, Complex z);
Complex incomplete_gamma_continued_fraction(double s, Complex z);

Complex kummer_1f1(Complex a, Complex b, Complex z);
// Tricomi U(a, b, z) for b in {2, 3}, Re a > 0.
Complex tricomi_u(Complex a, int b, Complex z);

struct BesselValues {
  double j;
  double y;
  double j_prime;
  double y_prime;
};

double bessel_j(double nu, double x);
double bessel_y(double nu, double x);
BesselValues bessel_jy(double nu, double x);

namespace detail {

struct ValueSlope {
  Complex value;
  Complex slope;
};

// Value and z-derivative together; used by the Coulomb basis and the tests.
ValueSlope kummer_1f1_with_slope(Complex a, Complex b, Complex z);
ValueSlope tricomi_u_with_slope(Complex a, int b, Complex z);

// Hankel large-argument expansion; converged is false when the series
// stalls before reaching machine precision.
struct HankelExpansion {
  double p;
  double q;
  bool converged;
};
HankelExpansion hankel_pq(double nu, double x);

// Steed/Temme evaluation, valid for every x > 0.
BesselValues bessel_jy_recurrence(double nu, double x);

}  // namespace detail

}  // namespace sptunnel::specfun
