#include <cmath>

#include "sptunnel/cli.hpp"
#include "sptunnel/errors.hpp"

namespace sptunnel::cli {

namespace {

Table energy_sweep(const PotentialSpec& spec, double lo, double hi, int points, GridKind grid,
                   const std::string& series = {}) {
  Table table;
  for (double e : grid_points(lo, hi, points, grid)) {
    Row row = evaluate(spec, e);
    row.series = series;
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace

void validate(const SweepRequest& request) {
  if (!(request.e_min > 0.0)) throw DomainError("sweep: emin must be positive");
  if (!(request.e_min < request.e_max)) throw DomainError("sweep: emin must be below emax");
  if (request.points < 2) throw DomainError("sweep: at least 2 points are required");
}

std::vector<double> grid_points(double lo, double hi, int points, GridKind grid) {
  std::vector<double> xs(points);
  for (int i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / (points - 1);
    if (grid == GridKind::Linear) {
      xs[i] = lo + (hi - lo) * f;
    } else {
      xs[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * f);
    }
  }
  // Pin the endpoints exactly.
  xs.front() = lo;
  xs.back() = hi;
  return xs;
}

Row evaluate(const PotentialSpec& spec, double epsilon) {
  Row row;
  row.x = epsilon;
  try {
    const ScatteringResult result = transmission_any(spec, epsilon);
    row.T = result.T;
    row.R = result.R;
    row.status = std::string(to_string(result.status));
  } catch (const Error&) {
    row.status = "Error";
  }
  return row;
}

Table sweep(const SweepRequest& request) {
  validate(request);
  return energy_sweep(request.spec, request.e_min, request.e_max, request.points, request.grid);
}

Table figure(FigureId id) {
  switch (id) {
    case FigureId::Fig1:
      return energy_sweep({1.0, 0.25}, 1e-6, 1e2, 500, GridKind::Log);
    case FigureId::Fig2:
      return energy_sweep({-1.0, 0.25}, 1e-6, 1e2, 500, GridKind::Log);
    case FigureId::Fig3: {
      Table table;
      table.x_name = "u0";
      // 501 points put u0 = 0 exactly on the grid.
      for (int i = 0; i <= 500; ++i) {
        const double u0 = -5.0 + i / 50.0;
        Row row = evaluate({u0, 0.25}, 1.0);
        row.x = u0;
        table.rows.push_back(std::move(row));
      }
      return table;
    }
    case FigureId::Fig4: {
      Table table = energy_sweep({1.0, 1.0}, 1e-4, 1e2, 4000, GridKind::Log, "u0=1");
      Table well = energy_sweep({-1.0, 1.0}, 1e-4, 1e2, 4000, GridKind::Log, "u0=-1");
      table.rows.insert(table.rows.end(), well.rows.begin(), well.rows.end());
      table.has_series = true;
      return table;
    }
  }
  throw DomainError("figure: unknown id");
}

std::optional<FigureId> parse_figure(std::string_view name) {
  if (name == "fig1" || name == "1") return FigureId::Fig1;
  if (name == "fig2" || name == "2") return FigureId::Fig2;
  if (name == "fig3" || name == "3") return FigureId::Fig3;
  if (name == "fig4" || name == "4") return FigureId::Fig4;
  return std::nullopt;
}

}  // namespace sptunnel::cli
