#include "yukawa/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <string>

#include "yukawa/analytic.hpp"
#include "yukawa/errors.hpp"

namespace yukawa {
namespace detail {
extern const std::string_view kTable1Csv;
extern const std::string_view kTable1ExceptionsCsv;
}  // namespace detail

namespace {

std::vector<std::string> split(const std::string& line, char sep, std::size_t max_fields) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (out.size() + 1 < max_fields) {
    const auto pos = line.find(sep, start);
    if (pos == std::string::npos) break;
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  out.push_back(line.substr(start));
  return out;
}

// Data lines of a CSV, skipping comments, blanks and the header.
std::vector<std::vector<std::string>> csv_records(std::string_view csv, std::size_t fields) {
  std::vector<std::vector<std::string>> records;
  std::istringstream in{std::string(csv)};
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    auto parts = split(line, ',', fields);
    if (parts.size() != fields) throw DomainError("malformed CSV line: " + line);
    records.push_back(std::move(parts));
  }
  return records;
}

int to_int(const std::string& s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw DomainError("bad integer in CSV: " + s);
  return value;
}

double to_double(const std::string& s) {
  std::size_t used = 0;
  const double value = std::stod(s, &used);
  if (used != s.size()) throw DomainError("bad number in CSV: " + s);
  return value;
}

}  // namespace

const std::vector<Scenario>& table1_scenarios() {
  static const std::vector<Scenario> scenarios{
      {"wc0_xi0", 0.0, 0.0}, {"wc5_xi0", 5.0, 0.0}, {"wc0_xi5", 0.0, 5.0}, {"wc5_xi5", 5.0, 5.0}};
  return scenarios;
}

const Scenario& scenario_by_label(std::string_view label) {
  for (const auto& s : table1_scenarios()) {
    if (s.label == label) return s;
  }
  throw DomainError("unknown scenario label: " + std::string(label));
}

std::string_view table1_csv() { return detail::kTable1Csv; }
std::string_view table1_exceptions_csv() { return detail::kTable1ExceptionsCsv; }

std::vector<PublishedCell> parse_published_cells(std::string_view csv) {
  std::vector<PublishedCell> cells;
  for (const auto& r : csv_records(csv, 4)) {
    scenario_by_label(r[2]);
    cells.push_back({to_int(r[0]), to_int(r[1]), r[2], to_double(r[3])});
  }
  return cells;
}

std::vector<DocumentedException> parse_exceptions(std::string_view csv) {
  std::vector<DocumentedException> out;
  for (const auto& r : csv_records(csv, 4)) {
    out.push_back({to_int(r[0]), to_int(r[1]), r[2], r[3]});
  }
  return out;
}

const std::vector<PublishedCell>& published_table1() {
  static const std::vector<PublishedCell> cells = parse_published_cells(table1_csv());
  return cells;
}

const std::vector<DocumentedException>& table1_exceptions() {
  static const std::vector<DocumentedException> list = parse_exceptions(table1_exceptions_csv());
  return list;
}

SpectrumTable compute_spectrum(const PhysicalParams& params, const std::vector<Scenario>& scenarios,
                               const std::vector<int>& m_values, const std::vector<int>& n_values,
                               Execution exec) {
  SpectrumTable table{scenarios, {}, params};
  for (int m : m_values) {
    for (int n : n_values) table.rows.push_back({m, n, std::vector<double>(scenarios.size())});
  }
  const auto cols = scenarios.size();
  const auto total = static_cast<std::ptrdiff_t>(table.rows.size() * cols);
  auto cell = [&](std::ptrdiff_t idx) {
    auto& row = table.rows[static_cast<std::size_t>(idx) / cols];
    const auto& sc = scenarios[static_cast<std::size_t>(idx) % cols];
    const auto dp = reduce(params, sc.fields(), row.m);
    double energy = std::numeric_limits<double>::quiet_NaN();
    try {
      energy = energy_closed_form(dp, row.n, params);
    } catch (const DomainError&) {
    }
    row.energies[static_cast<std::size_t>(idx) % cols] = energy;
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < total; ++i) cell(i);
  } else {
    for (std::ptrdiff_t i = 0; i < total; ++i) cell(i);
  }
  return table;
}

std::string_view to_string(CellStatus status) {
  switch (status) {
    case CellStatus::Match: return "MATCH";
    case CellStatus::MismatchDocumented: return "MISMATCH-DOCUMENTED";
    case CellStatus::MismatchNew: return "MISMATCH-NEW";
  }
  return "?";
}

Table1Report reproduce_table1(const PhysicalParams& params, Execution exec) {
  Table1Report report;
  report.tolerance = kTable1Tolerance;
  report.table = compute_spectrum(params, table1_scenarios(), {0, -1, 1}, {0, 1, 2, 3}, exec);

  const auto& exceptions = table1_exceptions();
  for (const auto& pub : published_table1()) {
    const Scenario& sc = scenario_by_label(pub.scenario);
    const BoundState state = solve(params, sc.fields(), pub.n, pub.m);
    Table1Cell cell;
    cell.m = pub.m;
    cell.n = pub.n;
    cell.scenario = pub.scenario;
    cell.computed = state.energy;
    cell.published = pub.energy;
    cell.abs_diff = std::abs(state.energy - pub.energy);
    cell.is_bound = state.is_bound;
    cell.normalizable = state.normalizable;
    const bool documented = std::any_of(exceptions.begin(), exceptions.end(), [&](const auto& e) {
      return e.m == pub.m && e.n == pub.n && e.scenario == pub.scenario;
    });
    if (cell.abs_diff <= report.tolerance) {
      cell.status = CellStatus::Match;
      ++report.matches;
    } else if (documented) {
      cell.status = CellStatus::MismatchDocumented;
      ++report.documented;
    } else {
      cell.status = CellStatus::MismatchNew;
      ++report.unexpected;
    }
    report.cells.push_back(std::move(cell));
  }
  return report;
}

DegeneracyReport degeneracy_report(const PhysicalParams& params, const FieldConfig& fields, int n_max,
                                   const std::vector<int>& m_values, double tolerance) {
  if (!(tolerance > 0.0)) throw DomainError("degeneracy tolerance must be > 0");
  struct Level {
    double energy;
    QuantumNumbers qn;
  };
  std::vector<Level> levels;
  for (int m : m_values) {
    const auto dp = reduce(params, fields, m);
    for (int n = 0; n <= n_max; ++n) levels.push_back({energy_closed_form(dp, n, params), QuantumNumbers(n, m)});
  }
  std::stable_sort(levels.begin(), levels.end(), [](const Level& a, const Level& b) { return a.energy < b.energy; });

  DegeneracyReport report;
  report.tolerance = tolerance;
  report.fields = fields;
  std::size_t i = 0;
  while (i < levels.size()) {
    std::size_t j = i + 1;
    while (j < levels.size() && levels[j].energy - levels[j - 1].energy <= tolerance) ++j;
    DegeneracyGroup g;
    double sum = 0.0;
    for (std::size_t k = i; k < j; ++k) {
      g.members.push_back(levels[k].qn);
      sum += levels[k].energy;
    }
    g.energy = sum / static_cast<double>(j - i);
    g.max_gap = levels[j - 1].energy - levels[i].energy;
    report.groups.push_back(std::move(g));
    i = j;
  }
  return report;
}

double default_degeneracy_tolerance(const PhysicalParams& params, const FieldConfig& fields, int n_max,
                                    const std::vector<int>& m_values) {
  double peak = 0.0;
  for (int m : m_values) {
    const auto dp = reduce(params, fields, m);
    for (int n = 0; n <= n_max; ++n) peak = std::max(peak, std::abs(energy_closed_form(dp, n, params)));
  }
  return std::max(1e-12 * peak, std::numeric_limits<double>::min());
}

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::Delta: return "delta";
    case SweepAxis::V1: return "v1";
    case SweepAxis::OmegaC: return "omega_c";
    case SweepAxis::Xi: return "xi";
  }
  return "?";
}

SweepAxis parse_sweep_axis(std::string_view name) {
  for (auto axis : {SweepAxis::Delta, SweepAxis::V1, SweepAxis::OmegaC, SweepAxis::Xi}) {
    if (to_string(axis) == name) return axis;
  }
  if (name == "omega-c") return SweepAxis::OmegaC;
  throw DomainError("unknown sweep axis '" + std::string(name) + "' (delta, v1, omega_c, xi)");
}

std::string_view to_string(CellFlag flag) {
  switch (flag) {
    case CellFlag::Ok: return "ok";
    case CellFlag::Unbound: return "unbound";
    case CellFlag::NotNormalizable: return "not_normalizable";
    case CellFlag::DomainError: return "domain_error";
  }
  return "?";
}

std::string_view to_string(Trend trend) {
  switch (trend) {
    case Trend::Increasing: return "increasing";
    case Trend::Decreasing: return "decreasing";
    case Trend::NonMonotonic: return "non_monotonic";
    case Trend::Undetermined: return "undetermined";
  }
  return "?";
}

SweepResult sweep(const PhysicalParams& params, const FieldConfig& base, SweepAxis axis,
                  const std::vector<double>& values, const std::vector<QuantumNumbers>& states, Execution exec) {
  SweepResult result;
  result.axis = axis;
  result.values = values;
  result.states = states;
  result.cells.resize(values.size() * states.size());

  const auto total = static_cast<std::ptrdiff_t>(result.cells.size());
  auto evaluate = [&](std::ptrdiff_t idx) {
    const auto vi = static_cast<std::size_t>(idx) / states.size();
    const auto& qn = states[static_cast<std::size_t>(idx) % states.size()];
    SweepCell& cell = result.cells[static_cast<std::size_t>(idx)];
    try {
      PhysicalParams p = params;
      FieldConfig f = base;
      switch (axis) {
        case SweepAxis::Delta: p = params.with_delta(values[vi]); break;
        case SweepAxis::V1: p = params.with_v1(values[vi]); break;
        case SweepAxis::OmegaC: f = base.with_omega_c(values[vi]); break;
        case SweepAxis::Xi: f = base.with_xi(values[vi]); break;
      }
      const auto dp = reduce(p, f, qn.m);
      cell.energy = energy_closed_form(dp, qn.n, p);
      const double lambda = quantized_lambda(dp, qn.n);
      if (!(cell.energy < 0.0)) {
        cell.flag = CellFlag::Unbound;
      } else if (!(lambda > 0.0)) {
        cell.flag = CellFlag::NotNormalizable;
      }
    } catch (const std::exception& e) {
      cell.energy = std::numeric_limits<double>::quiet_NaN();
      cell.flag = CellFlag::DomainError;
      cell.message = e.what();
    }
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < total; ++i) evaluate(i);
  } else {
    for (std::ptrdiff_t i = 0; i < total; ++i) evaluate(i);
  }

  for (std::size_t s = 0; s < states.size(); ++s) {
    std::vector<double> finite;
    for (std::size_t v = 0; v < values.size(); ++v) {
      const double e = result.at(v, s).energy;
      if (std::isfinite(e)) finite.push_back(e);
    }
    Trend trend = Trend::Undetermined;
    if (finite.size() >= 2) {
      bool up = true;
      bool down = true;
      for (std::size_t k = 1; k < finite.size(); ++k) {
        up = up && finite[k] > finite[k - 1];
        down = down && finite[k] < finite[k - 1];
      }
      trend = up ? Trend::Increasing : down ? Trend::Decreasing : Trend::NonMonotonic;
    }
    result.trends.push_back(trend);
  }
  return result;
}

ApproximationErrorStudy approximation_error_study(const PhysicalParams& params, const FieldConfig& fields,
                                                  const std::vector<QuantumNumbers>& states,
                                                  const std::vector<double>& deltas,
                                                  const VerifyOptions& options) {
  ApproximationErrorStudy study;
  study.states = states;
  study.deltas = deltas;
  VerifyOptions opts = options;
  opts.cutoff_sensitivity = false;
  for (double delta : deltas) {
    for (const auto& qn : states) {
      ApproximationErrorRow row;
      row.delta = delta;
      row.qn = qn;
      try {
        const auto report = verify_closed_form(params.with_delta(delta), fields, qn.n, qn.m, opts);
        row.closed_form = report.closed_form;
        row.approx_numeric = report.oracle_approx.extrapolated;
        row.exact_numeric = report.oracle_exact.extrapolated;
        row.gap = report.exact_abs_gap;
        row.resolvable = report.oracle_exact.resolvable && report.oracle_approx.resolvable;
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      study.rows.push_back(std::move(row));
    }
  }
  for (std::size_t s = 0; s < states.size(); ++s) {
    bool increasing = true;
    for (std::size_t d = 1; d < deltas.size(); ++d) {
      const auto& prev = study.rows[(d - 1) * states.size() + s];
      const auto& cur = study.rows[d * states.size() + s];
      increasing = increasing && prev.error.empty() && cur.error.empty() && cur.gap > prev.gap;
    }
    study.monotone.push_back(increasing);
  }
  return study;
}

std::vector<FieldEffectRow> field_effect_comparison(const PhysicalParams& params) {
  std::vector<FieldEffectRow> rows;
  const auto& sc = table1_scenarios();
  const auto table = compute_spectrum(params, sc, {0, -1, 1}, {0, 1, 2, 3}, Execution::Serial);
  for (const auto& row : table.rows) {
    FieldEffectRow r;
    r.m = row.m;
    r.n = row.n;
    r.zero_field = row.energies[0];
    r.magnetic = row.energies[1];
    r.flux = row.energies[2];
    r.combined = row.energies[3];
    r.combined_above_zero_field = r.combined > r.zero_field;
    r.magnetic_closer_to_zero_than_combined = std::abs(r.magnetic) < std::abs(r.combined);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace yukawa
