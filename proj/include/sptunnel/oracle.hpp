#pragma once

#include <span>
#include <vector>

#include "sptunnel/scattering.hpp"

namespace sptunnel::oracle {

// Plateau holds V at u0 / delta^alpha inside |z| < delta; Truncate sets it to 0.
enum class CapMode { Plateau, Truncate };

struct CutoffPotential {
  double u0 = 1.0;
  double alpha = 1.0;
  double delta = 0.1;
  CapMode cap = CapMode::Plateau;

  double operator()(double z) const;
  double max_abs() const;
};

inline constexpr double kResolution = 0.05;  // step * sqrt(eps + max|V|)
inline constexpr double kMinWavelengths = 20.0;  // L * sqrt(eps)
inline constexpr double kMaxDefaultStep = 1e-3;
inline constexpr int kCapSteps = 20;  // grid steps across the cap half-width

// Grid z_i = -L + i * step, i = 0..n.
struct GridConfig {
  double L = 10.0;
  int n = 10000;

  double step() const { return 2.0 * L / n; }
  double z(int i) const { return -L + i * step(); }

  // L = max(20/sqrt(eps), 10); step bounded by the resolution criterion,
  // delta / 20 and 1e-3.
  static GridConfig defaults(double epsilon, double max_abs_v, double delta);
};

enum class Incidence { FromLeft, FromRight };

std::vector<double> sample(const CutoffPotential& potential, const GridConfig& grid);

// Numerov integration of psi'' = (V - eps) psi with V = 0 outside [-L, L].
// v holds n + 1 samples on the grid.
ScatteringResult numerov_scatter(std::span<const double> v, double epsilon, const GridConfig& grid,
                                 Incidence incidence = Incidence::FromLeft);

struct CutoffPoint {
  double delta;
  double T;
};

inline constexpr double kDefaultDeltas[] = {0.2, 0.1, 0.05, 0.025, 0.0125};

// deltas must be strictly decreasing and positive.
std::vector<CutoffPoint> cutoff_sweep(double u0, double alpha, double epsilon, std::span<const double> deltas,
                                      CapMode cap = CapMode::Plateau);

}  // namespace sptunnel::oracle
