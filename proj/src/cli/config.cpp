#include <string>
#include <vector>

#include <CLI11.hpp>

#include "yukawa/cli.hpp"
#include "yukawa/errors.hpp"

namespace yukawa::cli {
namespace {

struct RawOptions {
  PhysicalParams::Init physical;
  std::optional<double> omega_c;
  std::optional<double> b_field;
  double xi = 0.0;
  bool strict_xi = false;
  std::string format = "csv";
  std::string output;

  int n = 0;
  int m = 0;
  int n_max = 3;
  std::vector<int> m_values{-1, 0, 1};
  std::optional<double> r_min;
  std::optional<double> r_max;
  std::size_t points = 500;
  std::string spacing = "log";
  std::size_t verify_points = 4000;
  double verify_tolerance = 1e-3;
  std::string axis;
  std::vector<double> values;
  std::optional<double> tolerance;
};

void add_state(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--n", raw.n, "Radial quantum number")->capture_default_str();
  sub->add_option("--m", raw.m, "Magnetic quantum number")->capture_default_str();
}

void add_product(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--n-max", raw.n_max, "Largest radial quantum number")->capture_default_str();
  sub->add_option("--m-values", raw.m_values, "Comma-separated m values")->delimiter(',')->capture_default_str();
}

void add_range(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--r-min", raw.r_min, "Smallest radius");
  sub->add_option("--r-max", raw.r_max, "Largest radius");
  sub->add_option("--points", raw.points, "Number of samples")->capture_default_str();
  sub->add_option("--spacing", raw.spacing, "Sample spacing")
      ->check(CLI::IsMember({"log", "uniform"}))
      ->capture_default_str();
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RawOptions raw;
  CLI::App app{"Bound states of a Yukawa potential in magnetic and Aharonov-Bohm flux fields", "yukawa_ab"};
  app.require_subcommand(1);

  app.add_option("--hbar", raw.physical.hbar, "Reduced Planck constant")->capture_default_str();
  app.add_option("--mu", raw.physical.mu, "Reduced mass")->capture_default_str();
  app.add_option("--e-charge", raw.physical.e_charge, "Particle charge")->capture_default_str();
  app.add_option("--c-light", raw.physical.c_light, "Speed of light")->capture_default_str();
  app.add_option("--v1", raw.physical.v1, "Yukawa strength V1")->capture_default_str();
  app.add_option("--delta", raw.physical.delta, "Screening parameter")->capture_default_str();
  auto* wc = app.add_option("--omega-c", raw.omega_c, "Cyclotron frequency (default 0)");
  auto* bf = app.add_option("--b-field", raw.b_field, "Magnetic field, converted to omega_c = eB/(mu c)");
  wc->excludes(bf);
  app.add_option("--xi", raw.xi, "Aharonov-Bohm flux ratio")->capture_default_str();
  app.add_flag("--strict-integer-xi", raw.strict_xi, "Reject non-integer xi");
  app.add_option("--format", raw.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--output", raw.output, "Write the result to this file instead of stdout");

  auto* energy = app.add_subcommand("energy", "Closed-form energy of one state");
  add_state(energy, raw);
  auto* spectrum = app.add_subcommand("spectrum", "Energies for n = 0..n_max and each m");
  add_product(spectrum, raw);
  auto* wavefunction = app.add_subcommand("wavefunction", "Normalized radial function R(r)");
  add_state(wavefunction, raw);
  add_range(wavefunction, raw);
  auto* potential = app.add_subcommand("potential", "Exact and approximated effective potential");
  potential->add_option("--m", raw.m, "Magnetic quantum number")->capture_default_str();
  add_range(potential, raw);
  auto* table1 = app.add_subcommand("table1", "Recompute the published 48-cell table");
  auto* verify = app.add_subcommand("verify", "Check the closed form against the finite-difference oracle");
  add_state(verify, raw);
  verify->add_option("--points", raw.verify_points, "Coarse grid cells (fine grid doubles)")->capture_default_str();
  verify->add_option("--tolerance", raw.verify_tolerance, "Relative tolerance")->capture_default_str();
  auto* sweep_cmd = app.add_subcommand("sweep", "Energies along one parameter axis");
  sweep_cmd->add_option("--axis", raw.axis, "delta, v1, omega_c or xi")->required();
  sweep_cmd->add_option("--values", raw.values, "Comma-separated axis values")->delimiter(',')->required();
  add_product(sweep_cmd, raw);
  auto* degeneracy = app.add_subcommand("degeneracy", "Group states by equal energy");
  add_product(degeneracy, raw);
  degeneracy->add_option("--tolerance", raw.tolerance, "Absolute grouping tolerance");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("yukawa_ab");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig config;
  const std::pair<CLI::App*, Command> commands[] = {
      {energy, Command::Energy}, {spectrum, Command::Spectrum}, {wavefunction, Command::Wavefunction},
      {potential, Command::Potential}, {table1, Command::Table1},   {verify, Command::Verify},
      {sweep_cmd, Command::Sweep},     {degeneracy, Command::Degeneracy}};
  for (const auto& [sub, cmd] : commands) {
    if (sub->parsed()) config.command = cmd;
  }

  try {
    config.physical = PhysicalParams(raw.physical);
    config.xi_policy = raw.strict_xi ? XiPolicy::Reject : XiPolicy::Warn;
    config.fields = raw.b_field ? FieldConfig::from_magnetic_field(*raw.b_field, config.physical, raw.xi, config.xi_policy)
                                : FieldConfig(raw.omega_c.value_or(0.0), raw.xi, config.xi_policy);

    switch (config.command) {
      case Command::Energy:
      case Command::Wavefunction:
      case Command::Verify:
        config.states = {QuantumNumbers(raw.n, raw.m)};
        break;
      case Command::Potential:
        config.states = {QuantumNumbers(0, raw.m)};
        break;
      case Command::Spectrum:
      case Command::Sweep:
      case Command::Degeneracy:
        require(raw.n_max >= 0, "n-max must be >= 0");
        require(!raw.m_values.empty(), "m-values must not be empty");
        for (int m : raw.m_values) {
          for (int n = 0; n <= raw.n_max; ++n) config.states.emplace_back(n, m);
        }
        break;
      case Command::Table1:
        break;
    }
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  config.n_max = raw.n_max;
  config.m_values = raw.m_values;

  if (config.command == Command::Wavefunction || config.command == Command::Potential) {
    require(raw.points >= 2, "points must be >= 2");
    require(!raw.r_min || *raw.r_min > 0.0, "r-min must be > 0");
    require(!raw.r_max || *raw.r_max > 0.0, "r-max must be > 0");
    require(!(raw.r_min && raw.r_max) || *raw.r_min < *raw.r_max, "r-min must be < r-max");
    config.grid = {raw.r_min, raw.r_max, raw.points, raw.spacing == "uniform" ? Spacing::Uniform : Spacing::Log};
  }
  if (config.command == Command::Verify) {
    require(raw.verify_points >= 100, "points must be >= 100");
    require(raw.verify_tolerance > 0.0, "tolerance must be > 0");
    config.verify_points = raw.verify_points;
    config.verify_tolerance = raw.verify_tolerance;
  }
  if (config.command == Command::Sweep) {
    try {
      config.axis = parse_sweep_axis(raw.axis);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    config.sweep_values = raw.values;
  }
  if (config.command == Command::Degeneracy) {
    require(!raw.tolerance || *raw.tolerance > 0.0, "tolerance must be > 0");
    config.tolerance = raw.tolerance;
  }

  config.format = raw.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  config.output_path = raw.output;
  return config;
}

}  // namespace yukawa::cli
