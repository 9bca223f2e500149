#include <CLI11.hpp>
#include <sstream>

#include "sptunnel/cli.hpp"
#include "sptunnel/errors.hpp"
#include "sptunnel/oracle.hpp"
#include "sptunnel/selftest.hpp"

namespace sptunnel::cli {

namespace {

const std::map<std::string, GridKind> kGrids{{"linear", GridKind::Linear}, {"log", GridKind::Log}};
const std::map<std::string, Format> kFormats{{"csv", Format::Csv}, {"json", Format::Json}};
const std::map<std::string, oracle::CapMode> kCaps{{"plateau", oracle::CapMode::Plateau},
                                                   {"truncate", oracle::CapMode::Truncate}};

int point_command(const PotentialSpec& spec, double epsilon, std::ostream& out) {
  const Regime regime = classify(spec.alpha);
  const ScatteringResult result = transmission_any(spec, epsilon);
  out << "epsilon=" << format_number(epsilon) << " T=" << (result.T ? format_number(*result.T) : "")
      << " R=" << (result.R ? format_number(*result.R) : "") << " status=" << to_string(result.status)
      << " regime=" << to_string(regime) << '\n';
  return result.status == Status::Undetermined ? kExitUndetermined : kExitOk;
}

int oracle_command(const PotentialSpec& spec, double epsilon, const std::vector<double>& deltas,
                   oracle::CapMode cap, std::ostream& out) {
  const std::vector<oracle::CutoffPoint> points = oracle::cutoff_sweep(spec.u0, spec.alpha, epsilon, deltas, cap);
  std::ostringstream text;
  text << "delta,T\n";
  for (const oracle::CutoffPoint& p : points) text << format_number(p.delta) << ',' << format_number(p.T) << '\n';
  out << text.str();
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transmission through the singular potential u0/|z|^alpha"};
  app.require_subcommand(1);

  PotentialSpec spec;
  double epsilon = 1.0;
  SweepRequest request;
  Format format = Format::Csv;
  std::string figure_name;
  std::vector<double> deltas(std::begin(oracle::kDefaultDeltas), std::end(oracle::kDefaultDeltas));
  oracle::CapMode cap = oracle::CapMode::Plateau;

  CLI::App* point = app.add_subcommand("point", "T and R at a single energy");
  point->add_option("--u0", spec.u0, "potential strength")->required();
  point->add_option("--alpha", spec.alpha, "singularity exponent")->required();
  point->add_option("--epsilon", epsilon, "incident energy")->required();

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "T and R over an energy grid");
  sweep_cmd->add_option("--u0", request.spec.u0, "potential strength")->required();
  sweep_cmd->add_option("--alpha", request.spec.alpha, "singularity exponent")->required();
  sweep_cmd->add_option("--emin", request.e_min, "lowest energy")->capture_default_str();
  sweep_cmd->add_option("--emax", request.e_max, "highest energy")->capture_default_str();
  sweep_cmd->add_option("--points", request.points, "grid points")->capture_default_str();
  sweep_cmd->add_option("--grid", request.grid, "linear or log")->transform(CLI::CheckedTransformer(kGrids));
  sweep_cmd->add_option("--format", format, "csv or json")->transform(CLI::CheckedTransformer(kFormats));

  CLI::App* figure_cmd = app.add_subcommand("figure", "data behind the standard figures");
  figure_cmd->add_option("id", figure_name, "fig1, fig2, fig3 or fig4")->required();
  figure_cmd->add_option("--format", format, "csv or json")->transform(CLI::CheckedTransformer(kFormats));

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "cutoff-regularized Numerov transmission");
  oracle_cmd->add_option("--u0", spec.u0, "potential strength")->required();
  oracle_cmd->add_option("--alpha", spec.alpha, "singularity exponent")->required();
  oracle_cmd->add_option("--epsilon", epsilon, "incident energy")->required();
  oracle_cmd->add_option("--deltas", deltas, "strictly decreasing cutoff widths")->delimiter(',');
  oracle_cmd->add_option("--cap", cap, "plateau or truncate")->transform(CLI::CheckedTransformer(kCaps));

  CLI::App* selftest = app.add_subcommand("selftest", "run the invariant suites");

  std::vector<const char*> argv{"sptunnel"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*point) return point_command(spec, epsilon, out);
    if (*sweep_cmd) {
      const Table table = sweep(request);
      out << render(table, format);
      return exit_code(table);
    }
    if (*figure_cmd) {
      const std::optional<FigureId> id = parse_figure(figure_name);
      if (!id) {
        err << "error: unknown figure '" << figure_name << "'\n";
        return kExitUsage;
      }
      const Table table = figure(*id);
      out << render(table, format);
      return exit_code(table);
    }
    if (*oracle_cmd) return oracle_command(spec, epsilon, deltas, cap, out);
    if (*selftest) return run_selftest(out) ? kExitOk : kExitError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace sptunnel::cli
