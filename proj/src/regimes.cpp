#include "sptunnel/regimes.hpp"

#include <cmath>

#include "sptunnel/coulomb.hpp"
#include "sptunnel/errors.hpp"
#include "sptunnel/highorder.hpp"
#include "sptunnel/mild.hpp"

namespace sptunnel {

Regime classify(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("classify: alpha must be positive and finite");
  if (std::abs(alpha - 1.0) <= kRegimeSnap) return Regime::Coulomb;
  if (std::abs(alpha - 2.0) <= kRegimeSnap) return Regime::InverseSquare;
  if (alpha < 1.0) return Regime::MildlySingular;
  if (alpha < 2.0) return Regime::Intermediate;
  return Regime::ExtraSingular;
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::MildlySingular:
      return "MildlySingular";
    case Regime::Coulomb:
      return "Coulomb";
    case Regime::Intermediate:
      return "Intermediate";
    case Regime::InverseSquare:
      return "InverseSquare";
    case Regime::ExtraSingular:
      return "ExtraSingular";
  }
  return "Unknown";
}

ScatteringResult transmission_any(const PotentialSpec& spec, double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw DomainError("transmission: epsilon must be positive");
  if (!std::isfinite(spec.u0)) throw DomainError("transmission: u0 must be finite");
  const Regime regime = classify(spec.alpha);
  if (spec.u0 == 0.0) return ScatteringResult::computed(1.0, 0.0);
  switch (regime) {
    case Regime::MildlySingular:
      return mild::transmission(epsilon, spec.u0, spec.alpha);
    case Regime::Coulomb:
      return coulomb::transmission(coulomb::CoulombParams::make(epsilon, spec.u0));
    case Regime::Intermediate:
      return highorder::intermediate_transmission(spec.u0, spec.alpha, epsilon);
    case Regime::InverseSquare:
      // Every well is undetermined, including u0 <= -1/4 where the Bessel order turns imaginary.
      if (spec.u0 < 0.0) return ScatteringResult::undetermined();
      return highorder::inverse_square_transmission(spec.u0, epsilon);
    case Regime::ExtraSingular:
      return highorder::extra_singular_transmission(spec.u0, spec.alpha, epsilon);
  }
  throw DomainError("transmission: unknown regime");
}

}  // namespace sptunnel
