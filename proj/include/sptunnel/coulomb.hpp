#pragma once

#include "sptunnel/scattering.hpp"

namespace sptunnel::coulomb {

// |eta| above this overflows the a_r2 = 1 normalized amplitudes.
inline constexpr double kMaxEta = 100.0;
inline constexpr double kDegenerateTolerance = 1e-14;
inline constexpr double kDefaultCurrentPoint = 5.0;

struct CoulombParams {
  double epsilon = 1.0;
  double u0 = 1.0;

  // Validates epsilon > 0, u0 != 0 and |eta| <= kMaxEta.
  static CoulombParams make(double epsilon, double u0);

  double k() const;    // sqrt(eps)
  double eta() const;  // u0 / (2 sqrt(eps))
  Complex a() const;   // 1 - i eta
  Complex c() const;   // 2i sqrt(eps)
};

// R1, R2 live on z > 0; L1, L2 are their mirror images psi_Lm(z) = psi_Rm(-z).
enum class Basis { R1, R2, L1, L2 };
enum class Side { Left, Right };

Complex basis(double z, Basis which, const CoulombParams& params);
Complex basis_derivative(double z, Basis which, const CoulombParams& params);

// j_mn = i (psi_m conj(psi_n)' - psi_m' conj(psi_n)) with kappa = 1, evaluated
// at z_eval (|z_eval| taken on the requested side).
Complex current_component(int m, int n, Side side, const CoulombParams& params,
                          double z_eval = kDefaultCurrentPoint);

// Closed forms of the same components from the basis Wronskians.
struct CurrentComponents {
  Complex j_r12;
  double j_r22;
  Complex j_l12;
  double j_l22;
};
CurrentComponents wronskian_currents(const CoulombParams& params);

struct CoulombAmplitudes {
  Complex a_l1;
  Complex a_l2;
  Complex a_r1;
  Complex a_r2;
};

CoulombAmplitudes solve_amplitudes(const CoulombParams& params);

// Plane-wave coefficients at |z| -> infinity, Coulomb log phases dropped.
struct AsymptoticWaves {
  Complex incident;
  Complex transmitted;
  Complex reflected;
  // Wave arriving from the right; zero for a correct solve.
  Complex right_incoming;
};

AsymptoticWaves asymptotic_waves(const CoulombAmplitudes& amplitudes, const CoulombParams& params);

ScatteringResult transmission(const CoulombParams& params);

}  // namespace sptunnel::coulomb
