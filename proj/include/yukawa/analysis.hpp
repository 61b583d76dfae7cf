#pragma once

// Reproduction of the published spectrum table, degeneracy grouping,
// parameter sweeps and the Greene-Aldrich error study.

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "yukawa/execution.hpp"
#include "yukawa/model.hpp"
#include "yukawa/oracle.hpp"

namespace yukawa {

struct Scenario {
  std::string label;
  double omega_c = 0.0;
  double xi = 0.0;

  FieldConfig fields() const { return FieldConfig(omega_c, xi); }
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// The four field configurations in table order: wc0_xi0, wc5_xi0, wc0_xi5, wc5_xi5.
const std::vector<Scenario>& table1_scenarios();
const Scenario& scenario_by_label(std::string_view label);  // throws DomainError

struct PublishedCell {
  int m = 0;
  int n = 0;
  std::string scenario;
  double energy = 0.0;
};

struct DocumentedException {
  int m = 0;
  int n = 0;
  std::string scenario;
  std::string note;
};

/// Raw embedded data files (CSV with '#' comment lines).
std::string_view table1_csv();
std::string_view table1_exceptions_csv();

std::vector<PublishedCell> parse_published_cells(std::string_view csv);
std::vector<DocumentedException> parse_exceptions(std::string_view csv);

/// 48 published cells, in file order.
const std::vector<PublishedCell>& published_table1();
const std::vector<DocumentedException>& table1_exceptions();

struct SpectrumRow {
  int m = 0;
  int n = 0;
  std::vector<double> energies;  // one per scenario
};

struct SpectrumTable {
  std::vector<Scenario> scenarios;
  std::vector<SpectrumRow> rows;
  PhysicalParams params;
};

/// Closed-form energies for every (m, n) pair and scenario; rows ordered by
/// m_values then n_values.
SpectrumTable compute_spectrum(const PhysicalParams& params, const std::vector<Scenario>& scenarios,
                               const std::vector<int>& m_values, const std::vector<int>& n_values,
                               Execution exec = Execution::Parallel);

enum class CellStatus { Match, MismatchDocumented, MismatchNew };
std::string_view to_string(CellStatus status);

struct Table1Cell {
  int m = 0;
  int n = 0;
  std::string scenario;
  double computed = 0.0;
  double published = 0.0;
  double abs_diff = 0.0;
  CellStatus status = CellStatus::Match;
  bool is_bound = false;
  bool normalizable = false;

  friend bool operator==(const Table1Cell&, const Table1Cell&) = default;
};

struct Table1Report {
  SpectrumTable table;
  std::vector<Table1Cell> cells;  // published file order
  double tolerance = 1e-6;
  std::size_t matches = 0;
  std::size_t documented = 0;
  std::size_t unexpected = 0;

  bool passed() const { return unexpected == 0; }
};

/// Absolute match tolerance, set by the 7-decimal printing of the table.
inline constexpr double kTable1Tolerance = 1e-6;

Table1Report reproduce_table1(const PhysicalParams& params = {}, Execution exec = Execution::Parallel);

struct DegeneracyGroup {
  double energy = 0.0;  // mean of members
  std::vector<QuantumNumbers> members;
  double max_gap = 0.0;  // largest pairwise |dE| inside the group
};

struct DegeneracyReport {
  std::vector<DegeneracyGroup> groups;  // ascending energy
  double tolerance = 0.0;
  FieldConfig fields;
};

/// Groups states whose sorted energies chain within tolerance. Throws
/// DomainError unless tolerance > 0.
DegeneracyReport degeneracy_report(const PhysicalParams& params, const FieldConfig& fields, int n_max,
                                   const std::vector<int>& m_values, double tolerance);

/// 1e-12 * max |E| over the states, the analytic-vs-analytic noise floor.
double default_degeneracy_tolerance(const PhysicalParams& params, const FieldConfig& fields, int n_max,
                                    const std::vector<int>& m_values);

enum class SweepAxis { Delta, V1, OmegaC, Xi };
std::string_view to_string(SweepAxis axis);
SweepAxis parse_sweep_axis(std::string_view name);  // throws DomainError

enum class CellFlag { Ok, Unbound, NotNormalizable, DomainError };
std::string_view to_string(CellFlag flag);

struct SweepCell {
  double energy = std::numeric_limits<double>::quiet_NaN();
  CellFlag flag = CellFlag::Ok;
  std::string message;  // set for DomainError
};

enum class Trend { Increasing, Decreasing, NonMonotonic, Undetermined };
std::string_view to_string(Trend trend);

struct SweepResult {
  SweepAxis axis = SweepAxis::Delta;
  std::vector<double> values;
  std::vector<QuantumNumbers> states;
  std::vector<SweepCell> cells;  // row-major: values.size() x states.size()
  std::vector<Trend> trends;     // per state, over the finite energies

  const SweepCell& at(std::size_t value_index, std::size_t state_index) const {
    return cells[value_index * states.size() + state_index];
  }
};

SweepResult sweep(const PhysicalParams& params, const FieldConfig& base, SweepAxis axis,
                  const std::vector<double>& values, const std::vector<QuantumNumbers>& states,
                  Execution exec = Execution::Parallel);

struct ApproximationErrorRow {
  double delta = 0.0;
  QuantumNumbers qn;
  double closed_form = 0.0;
  double approx_numeric = 0.0;
  double exact_numeric = 0.0;
  double gap = 0.0;  // |exact_numeric - closed_form|
  bool resolvable = false;
  std::string error;  // non-empty when the cell could not be computed
};

struct ApproximationErrorStudy {
  std::vector<ApproximationErrorRow> rows;  // delta-major
  std::vector<QuantumNumbers> states;
  std::vector<double> deltas;
  std::vector<bool> monotone;  // per state: gap strictly increasing along deltas
};

ApproximationErrorStudy approximation_error_study(const PhysicalParams& params, const FieldConfig& fields,
                                                  const std::vector<QuantumNumbers>& states,
                                                  const std::vector<double>& deltas,
                                                  const VerifyOptions& options = {});

/// Per-cell comparison of the field scenarios against the zero-field energy.
struct FieldEffectRow {
  int m = 0;
  int n = 0;
  double zero_field = 0.0;
  double magnetic = 0.0;
  double flux = 0.0;
  double combined = 0.0;
  bool combined_above_zero_field = false;
  bool magnetic_closer_to_zero_than_combined = false;
};

std::vector<FieldEffectRow> field_effect_comparison(const PhysicalParams& params = {});

}  // namespace yukawa
