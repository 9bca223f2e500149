#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "sptunnel/regimes.hpp"

namespace sptunnel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUndetermined = 3;
inline constexpr int kExitError = 4;

enum class GridKind { Linear, Log };
enum class Format { Csv, Json };
enum class FigureId { Fig1, Fig2, Fig3, Fig4 };

struct SweepRequest {
  PotentialSpec spec;
  double e_min = 1e-6;
  double e_max = 1e2;
  int points = 500;
  GridKind grid = GridKind::Log;
};

// Throws DomainError unless 0 < e_min < e_max and points >= 2.
void validate(const SweepRequest& request);
std::vector<double> grid_points(double lo, double hi, int points, GridKind grid);

// One output row; T and R are empty for Undetermined and Error rows.
struct Row {
  std::string series;
  double x = 0.0;
  std::optional<double> T;
  std::optional<double> R;
  std::string status;
};

struct Table {
  std::string x_name = "epsilon";
  bool has_series = false;
  std::vector<Row> rows;
};

Row evaluate(const PotentialSpec& spec, double epsilon);
Table sweep(const SweepRequest& request);
Table figure(FigureId id);
std::optional<FigureId> parse_figure(std::string_view name);

// 17 significant digits, '.' decimal point regardless of locale.
std::string format_number(double value);
std::string render_csv(const Table& table);
std::string render_json(const Table& table);
std::string render(const Table& table, Format format);

// 4 if any row errored, else 3 if any row is Undetermined, else 0.
int exit_code(const Table& table);

// Full command line; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sptunnel::cli
