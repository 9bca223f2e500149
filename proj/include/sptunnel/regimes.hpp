#pragma once

#include <string_view>

#include "sptunnel/scattering.hpp"

namespace sptunnel {

// V(z) = u0 / |z|^alpha in recoil units.
struct PotentialSpec {
  double u0 = 0.0;
  double alpha = 1.0;
};

enum class Regime { MildlySingular, Coulomb, Intermediate, InverseSquare, ExtraSingular };

inline constexpr double kRegimeSnap = 1e-12;

Regime classify(double alpha);
std::string_view to_string(Regime regime);

// Single entry point over every regime. u0 = 0 is free propagation (T = 1).
ScatteringResult transmission_any(const PotentialSpec& spec, double epsilon);

}  // namespace sptunnel
