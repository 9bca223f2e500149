#pragma once

#include <cstdint>

#include "sptunnel/scattering.hpp"

namespace sptunnel::highorder {

ScatteringResult intermediate_transmission(double u0, double alpha, double epsilon);
ScatteringResult inverse_square_transmission(double u0, double epsilon);
ScatteringResult extra_singular_transmission(double u0, double alpha, double epsilon);

struct IntermediateAmplitudes {
  Complex a_l_plus;
  Complex a_l_minus;
  Complex a_r_plus;
  Complex a_r_minus;
};

// Continuity residual |a_l_plus + a_l_minus - a_r_plus| and current residual
// |a_l_plus|^2 - |a_l_minus|^2 - |a_r_plus|^2.
double continuity_residual(const IntermediateAmplitudes& amp);
double current_residual(const IntermediateAmplitudes& amp);

struct CompatibilityReport {
  int samples = 0;
  int solved = 0;  // trials that met both constraints to 1e-10
  double max_a_r_plus = 0.0;
  double max_residual = 0.0;
  IntermediateAmplitudes largest{};  // the trial with the largest |a_r_plus|
};

inline constexpr double kCompatibilityTolerance = 1e-10;
inline constexpr double kForcedZeroTolerance = 1e-8;

// Projects random (a_l_plus, a_l_minus) onto the continuity and current
// constraints and records how large a_r_plus can be.
CompatibilityReport intermediate_compatibility_check(int samples, std::uint64_t seed = 20240517);

// Near-origin h(z) = u0 |z|^(2 - alpha) / ((1 - alpha)(2 - alpha)), 0 < |z| <= 0.1.
Complex near_origin_h(double z, double u0, double alpha);

struct InverseSquareBasis {
  double nu = 0.5;  // sqrt(1/4 + u0)

  static InverseSquareBasis from_u0(double u0);
};

enum class Combination { Outgoing, Incoming };  // J + iY, J - iY

// Fraction |B| / sqrt(|A|^2 + |B|^2) of the incoming Hankel wave in
// sqrt(z) (J +- iY)(sqrt(eps) z) near z_far.
double outgoing_combination_check(double u0, double epsilon, double z_far,
                                  Combination combination = Combination::Outgoing);

}  // namespace sptunnel::highorder
