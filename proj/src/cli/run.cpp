#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "yukawa/analytic.hpp"
#include "yukawa/cli.hpp"
#include "yukawa/errors.hpp"
#include "yukawa/serialize.hpp"
#include "yukawa/tridiagonal.hpp"

namespace yukawa::cli {
namespace {

using nlohmann::json;

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// Energy row without normalizing the state: solve() would run quadrature for
// every cell, and only the energy and flags are reported here.
EnergyRow spectrum_row(const PhysicalParams& params, const FieldConfig& fields, const QuantumNumbers& qn) {
  const auto dp = reduce(params, fields, qn.m);
  const double energy = energy_closed_form(dp, qn.n, params);
  return {qn.m, qn.n, fields.omega_c(), fields.xi(), energy, energy < 0.0, quantized_lambda(dp, qn.n) > 0.0};
}

void write_energy_rows(const RunConfig& config, const std::vector<EnergyRow>& rows, std::ostream& out) {
  if (config.format == OutputFormat::Json) {
    emit_json(out, json{{"states", rows}});
    return;
  }
  out << "m,n,omega_c,xi,energy,is_bound\n";
  for (const auto& r : rows) {
    out << r.m << ',' << r.n << ',' << csv::number(r.omega_c) << ',' << csv::number(r.xi) << ','
        << csv::energy(r.energy) << ',' << csv::boolean(r.is_bound) << '\n';
  }
}

void warn_unphysical(const EnergyRow& r, std::ostream& err) {
  if (!r.is_bound) {
    err << "warning: (n=" << r.n << ", m=" << r.m << ") has E >= 0 and is not a bound state\n";
  } else if (!r.normalizable) {
    err << "warning: (n=" << r.n << ", m=" << r.m
        << ") closed-form solution is not square integrable (negative lambda)\n";
  }
}

int run_energy(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<EnergyRow> rows;
  for (const auto& qn : config.states) {
    rows.push_back(make_energy_row(solve(config.physical, config.fields, qn.n, qn.m), config.fields));
    warn_unphysical(rows.back(), err);
  }
  write_energy_rows(config, rows, out);
  return kExitSuccess;
}

int run_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<EnergyRow> rows;
  for (const auto& qn : config.states) {
    rows.push_back(spectrum_row(config.physical, config.fields, qn));
    warn_unphysical(rows.back(), err);
  }
  write_energy_rows(config, rows, out);
  return kExitSuccess;
}

std::vector<double> sample_radii(double r_min, double r_max, std::size_t points, Spacing spacing) {
  std::vector<double> r(points);
  const double last = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / last;
    r[i] = spacing == Spacing::Log ? r_min * std::pow(r_max / r_min, t) : r_min + (r_max - r_min) * t;
  }
  r.back() = r_max;
  return r;
}

int run_wavefunction(const RunConfig& config, std::ostream& out, std::ostream&) {
  const auto& qn = config.states.front();
  const auto state = solve(config.physical, config.fields, qn.n, qn.m);
  if (!state.is_bound || !state.normalizable) {
    throw DomainError("state (n=" + std::to_string(qn.n) + ", m=" + std::to_string(qn.m) +
                      ") is not a normalizable bound state");
  }
  const double delta = config.physical.delta();
  const double r_max = config.grid.r_max.value_or(integration_radius(state));
  const double r_min_default = config.grid.spacing == Spacing::Log
                                   ? 1e-4 / delta
                                   : r_max / static_cast<double>(config.grid.points);
  const double r_min = config.grid.r_min.value_or(std::min(r_min_default, 0.5 * r_max));
  if (!(r_min < r_max)) throw DomainError("r-min must be < r-max");

  const auto r = sample_radii(r_min, r_max, config.grid.points, config.grid.spacing);
  std::vector<double> values(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) values[i] = radial_wavefunction(state, r[i], delta);

  if (config.format == OutputFormat::Json) {
    emit_json(out, json{{"qn", state.qn},
                        {"energy", state.energy},
                        {"nodes", tridiag::count_sign_changes(values)},
                        {"r", r},
                        {"R", values}});
    return kExitSuccess;
  }
  out << "r,R\n";
  for (std::size_t i = 0; i < r.size(); ++i) out << csv::number(r[i]) << ',' << csv::number(values[i]) << '\n';
  return kExitSuccess;
}

int run_potential(const RunConfig& config, std::ostream& out, std::ostream&) {
  const int m = config.states.front().m;
  const double delta = config.physical.delta();
  const double r_max = config.grid.r_max.value_or(10.0 / delta);
  const double r_min_default = config.grid.spacing == Spacing::Log
                                   ? 1e-3 / delta
                                   : r_max / static_cast<double>(config.grid.points);
  const double r_min = config.grid.r_min.value_or(std::min(r_min_default, 0.5 * r_max));
  if (!(r_min < r_max)) throw DomainError("r-min must be < r-max");

  const auto r = sample_radii(r_min, r_max, config.grid.points, config.grid.spacing);
  std::vector<double> exact(r.size());
  std::vector<double> approx(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    exact[i] = effective_potential(r[i], config.physical, config.fields, m);
    approx[i] = approximated_effective_potential(r[i], config.physical, config.fields, m);
  }

  if (config.format == OutputFormat::Json) {
    emit_json(out, json{{"m", m},
                        {"threshold", approximated_threshold(config.physical, config.fields, m)},
                        {"r", r},
                        {"v_eff", exact},
                        {"v_approx", approx}});
    return kExitSuccess;
  }
  out << "r,v_eff,v_approx\n";
  for (std::size_t i = 0; i < r.size(); ++i) {
    out << csv::number(r[i]) << ',' << csv::number(exact[i]) << ',' << csv::number(approx[i]) << '\n';
  }
  return kExitSuccess;
}

int run_table1(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto report = reproduce_table1(config.physical);
  if (config.format == OutputFormat::Json) {
    emit_json(out, json{{"tolerance", report.tolerance},
                        {"matches", report.matches},
                        {"documented", report.documented},
                        {"unexpected", report.unexpected},
                        {"cells", report.cells}});
  } else {
    out << "m,n,scenario,computed,published,status\n";
    for (const auto& c : report.cells) {
      out << c.m << ',' << c.n << ',' << c.scenario << ',' << csv::energy(c.computed) << ','
          << csv::energy(c.published) << ',' << to_string(c.status) << '\n';
    }
  }
  if (!report.passed()) {
    err << "table1: " << report.unexpected << " cell(s) differ from the published table beyond "
        << report.tolerance << '\n';
    return kExitFailure;
  }
  return kExitSuccess;
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto& qn = config.states.front();
  VerifyOptions options;
  options.coarse_points = config.verify_points;
  options.tolerance = config.verify_tolerance;
  const auto report = verify_closed_form(config.physical, config.fields, qn.n, qn.m, options);

  if (config.format == OutputFormat::Json) {
    emit_json(out, json(report));
  } else {
    out << "quantity,value\n";
    const auto row = [&](const char* name, const std::string& value) { out << name << ',' << value << '\n'; };
    row("n", std::to_string(report.qn.n));
    row("m", std::to_string(report.qn.m));
    row("omega_c", csv::number(report.omega_c));
    row("xi", csv::number(report.xi));
    row("delta", csv::number(report.delta));
    row("closed_form", csv::energy(report.closed_form));
    row("oracle_approx", csv::energy(report.oracle_approx.extrapolated));
    row("oracle_approx_discretization_error", csv::number(report.oracle_approx.discretization_error));
    row("oracle_exact", csv::energy(report.oracle_exact.extrapolated));
    row("oracle_exact_discretization_error", csv::number(report.oracle_exact.discretization_error));
    row("approx_abs_gap", csv::number(report.approx_abs_gap));
    row("approx_rel_gap", csv::number(report.approx_rel_gap));
    row("exact_abs_gap", csv::number(report.exact_abs_gap));
    row("exact_rel_gap", csv::number(report.exact_rel_gap));
    row("r_inner", csv::number(report.r_inner));
    row("r_outer", csv::number(report.r_outer));
    row("coarse_points", std::to_string(report.coarse_points));
    row("fine_points", std::to_string(report.fine_points));
    if (report.cutoff) {
      row("cutoff_energy_small", csv::energy(report.cutoff->energy_small));
      row("cutoff_energy_large", csv::energy(report.cutoff->energy_large));
    }
    row("tolerance", csv::number(report.tolerance));
    row("passed", csv::boolean(report.passed));
  }
  if (!report.passed) {
    err << "verify: closed form and oracle differ by " << report.approx_rel_gap << " relative (tolerance "
        << report.tolerance << ")\n";
    return kExitFailure;
  }
  return kExitSuccess;
}

int run_sweep(const RunConfig& config, std::ostream& out, std::ostream&) {
  const auto result = sweep(config.physical, config.fields, config.axis, config.sweep_values, config.states);
  const auto axis = std::string(to_string(result.axis));

  if (config.format == OutputFormat::Json) {
    json cells = json::array();
    for (std::size_t v = 0; v < result.values.size(); ++v) {
      for (std::size_t s = 0; s < result.states.size(); ++s) {
        const auto& c = result.at(v, s);
        json cell{{"value", result.values[v]},
                  {"m", result.states[s].m},
                  {"n", result.states[s].n},
                  {"energy", finite_or_null(c.energy)},
                  {"flag", std::string(to_string(c.flag))}};
        if (!c.message.empty()) cell["message"] = c.message;
        cells.push_back(std::move(cell));
      }
    }
    json trends = json::array();
    for (std::size_t s = 0; s < result.states.size(); ++s) {
      trends.push_back(json{{"m", result.states[s].m},
                            {"n", result.states[s].n},
                            {"trend", std::string(to_string(result.trends[s]))}});
    }
    emit_json(out, json{{"axis", axis}, {"values", result.values}, {"cells", cells}, {"trends", trends}});
    return kExitSuccess;
  }
  out << "axis,value,m,n,energy,flag\n";
  for (std::size_t v = 0; v < result.values.size(); ++v) {
    for (std::size_t s = 0; s < result.states.size(); ++s) {
      const auto& c = result.at(v, s);
      out << axis << ',' << csv::number(result.values[v]) << ',' << result.states[s].m << ',' << result.states[s].n
          << ',' << csv::energy(c.energy) << ',' << to_string(c.flag) << '\n';
    }
  }
  return kExitSuccess;
}

int run_degeneracy(const RunConfig& config, std::ostream& out, std::ostream&) {
  const double tol = config.tolerance.value_or(
      default_degeneracy_tolerance(config.physical, config.fields, config.n_max, config.m_values));
  const auto report = degeneracy_report(config.physical, config.fields, config.n_max, config.m_values, tol);

  if (config.format == OutputFormat::Json) {
    json groups = json::array();
    for (const auto& g : report.groups) {
      groups.push_back(json{{"energy", g.energy}, {"members", g.members}, {"max_gap", g.max_gap}});
    }
    emit_json(out, json{{"tolerance", report.tolerance},
                        {"omega_c", report.fields.omega_c()},
                        {"xi", report.fields.xi()},
                        {"groups", groups}});
    return kExitSuccess;
  }
  out << "group,energy,n,m,max_gap\n";
  for (std::size_t g = 0; g < report.groups.size(); ++g) {
    const auto& group = report.groups[g];
    for (const auto& qn : group.members) {
      out << g << ',' << csv::energy(group.energy) << ',' << qn.n << ',' << qn.m << ','
          << csv::number(group.max_gap) << '\n';
    }
  }
  return kExitSuccess;
}

void write_error(const RunConfig& config, const std::string& kind, const std::string& message, std::ostream& out) {
  if (config.format == OutputFormat::Json) {
    emit_json(out, json{{"error", {{"kind", kind}, {"message", message}}}});
  } else {
    std::string quoted;
    for (char ch : message) {
      if (ch == '"') quoted += '"';
      quoted += ch;
    }
    out << "error,message\n" << kind << ",\"" << quoted << "\"\n";
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!config.fields.xi_is_integer() && config.xi_policy == XiPolicy::Warn) {
    err << "warning: xi = " << config.fields.xi()
        << " is not an integer; the flux shifts m + xi off the integer lattice\n";
  }
  // Buffer so that a failing command emits only the error record.
  std::ostringstream buffer;
  try {
    int code = kExitSuccess;
    switch (config.command) {
      case Command::Energy: code = run_energy(config, buffer, err); break;
      case Command::Spectrum: code = run_spectrum(config, buffer, err); break;
      case Command::Wavefunction: code = run_wavefunction(config, buffer, err); break;
      case Command::Potential: code = run_potential(config, buffer, err); break;
      case Command::Table1: code = run_table1(config, buffer, err); break;
      case Command::Verify: code = run_verify(config, buffer, err); break;
      case Command::Sweep: code = run_sweep(config, buffer, err); break;
      case Command::Degeneracy: code = run_degeneracy(config, buffer, err); break;
    }
    out << buffer.str();
    return code;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    write_error(config, "domain_error", e.what(), out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    write_error(config, "numerical_error", e.what(), out);
  }
  return kExitFailure;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const HelpRequested& help) {
    out << help.what();
    return kExitSuccess;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (config.output_path.empty()) return run(config, out, err);

  std::ostringstream buffer;
  const int code = run(config, buffer, err);
  std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open " << config.output_path << " for writing\n";
    return kExitFailure;
  }
  file << buffer.str();
  return code;
}

}  // namespace yukawa::cli
