#pragma once

#include "sptunnel/scattering.hpp"

namespace sptunnel::mild {

// psi(z) = exp(h(z) +- i sqrt(eps) z)
enum class WaveBranch { Plus, Minus };
enum class Side { Left, Right };

struct MildAmplitudes {
  Complex t;
  Complex r;
};

// alpha must stay below 1 - kPoleGuard, away from the Gamma(1 - alpha) pole.
inline constexpr double kPoleGuard = 1e-6;

// X = A / (2 conj(A)), A = 2 eps - (2i)^alpha eps^(alpha/2) Gamma(1 - alpha) u0.
Complex core_ratio(double epsilon, double u0, double alpha);
// t = X + 1/2, r = X - 1/2.
MildAmplitudes amplitudes(double epsilon, double u0, double alpha);
ScatteringResult transmission(double epsilon, double u0, double alpha);

// Energy of total reflection, the root of Re A = 0. Requires u0 > 0.
double total_reflection_energy(double u0, double alpha);

Complex h_prime(double z, Side side, WaveBranch branch, double epsilon, double u0, double alpha);
Complex h_value(double z, Side side, WaveBranch branch, double epsilon, double u0, double alpha);

}  // namespace sptunnel::mild
