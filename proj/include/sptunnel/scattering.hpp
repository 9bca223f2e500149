#pragma once

#include <complex>
#include <optional>
#include <string_view>

namespace sptunnel {

using Complex = std::complex<double>;

enum class Status { Computed, ForcedZero, Undetermined };

// Undetermined results carry no coefficients.
struct ScatteringResult {
  std::optional<double> T;
  std::optional<double> R;
  Status status = Status::Undetermined;

  static ScatteringResult computed(double t, double r);
  // T = 0, R = 1 as an analytic conclusion; nothing was evaluated.
  static ScatteringResult forced_zero();
  static ScatteringResult undetermined();
};

std::string_view to_string(Status status);

}  // namespace sptunnel
