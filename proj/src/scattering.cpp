#include "sptunnel/scattering.hpp"

namespace sptunnel {

ScatteringResult ScatteringResult::computed(double t, double r) { return {t, r, Status::Computed}; }

ScatteringResult ScatteringResult::forced_zero() { return {0.0, 1.0, Status::ForcedZero}; }

ScatteringResult ScatteringResult::undetermined() { return {std::nullopt, std::nullopt, Status::Undetermined}; }

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Computed:
      return "Computed";
    case Status::ForcedZero:
      return "ForcedZero";
    case Status::Undetermined:
      return "Undetermined";
  }
  return "Unknown";
}

}  // namespace sptunnel
