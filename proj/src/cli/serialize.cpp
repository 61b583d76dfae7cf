#include "yukawa/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "yukawa/errors.hpp"

namespace yukawa {
namespace {

using nlohmann::json;

// NaN has no JSON form; store it as null and read null back as NaN.
json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }
double read_number(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

std::string printf_double(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

}  // namespace

EnergyRow make_energy_row(const BoundState& state, const FieldConfig& fields) {
  return {state.qn.m, state.qn.n, fields.omega_c(), fields.xi(), state.energy, state.is_bound, state.normalizable};
}

void to_json(json& j, const QuantumNumbers& qn) { j = json{{"n", qn.n}, {"m", qn.m}}; }
void from_json(const json& j, QuantumNumbers& qn) { qn = QuantumNumbers(j.at("n").get<int>(), j.at("m").get<int>()); }

void to_json(json& j, const EnergyRow& r) {
  j = json{{"m", r.m},         {"n", r.n},
           {"omega_c", r.omega_c}, {"xi", r.xi},
           {"energy", number_or_null(r.energy)}, {"is_bound", r.is_bound},
           {"normalizable", r.normalizable}};
}
void from_json(const json& j, EnergyRow& r) {
  r.m = j.at("m").get<int>();
  r.n = j.at("n").get<int>();
  r.omega_c = j.at("omega_c").get<double>();
  r.xi = j.at("xi").get<double>();
  r.energy = read_number(j.at("energy"));
  r.is_bound = j.at("is_bound").get<bool>();
  r.normalizable = j.at("normalizable").get<bool>();
}

void to_json(json& j, const OracleEstimate& e) {
  j = json{{"coarse", e.coarse},
           {"fine", e.fine},
           {"extrapolated", e.extrapolated},
           {"discretization_error", e.discretization_error},
           {"resolvable", e.resolvable}};
}
void from_json(const json& j, OracleEstimate& e) {
  e.coarse = j.at("coarse").get<double>();
  e.fine = j.at("fine").get<double>();
  e.extrapolated = j.at("extrapolated").get<double>();
  e.discretization_error = j.at("discretization_error").get<double>();
  e.resolvable = j.at("resolvable").get<bool>();
}

void to_json(json& j, const CutoffSensitivity& c) {
  j = json{{"r_min_small", c.r_min_small},
           {"r_min_large", c.r_min_large},
           {"energy_small", c.energy_small},
           {"energy_large", c.energy_large}};
}
void from_json(const json& j, CutoffSensitivity& c) {
  c.r_min_small = j.at("r_min_small").get<double>();
  c.r_min_large = j.at("r_min_large").get<double>();
  c.energy_small = j.at("energy_small").get<double>();
  c.energy_large = j.at("energy_large").get<double>();
}

void to_json(json& j, const VerificationReport& r) {
  j = json{{"qn", r.qn},
           {"omega_c", r.omega_c},
           {"xi", r.xi},
           {"delta", r.delta},
           {"closed_form", r.closed_form},
           {"oracle_approx", r.oracle_approx},
           {"oracle_exact", r.oracle_exact},
           {"gaps",
            {{"approx_abs", r.approx_abs_gap},
             {"approx_rel", r.approx_rel_gap},
             {"exact_abs", r.exact_abs_gap},
             {"exact_rel", r.exact_rel_gap}}},
           {"grid",
            {{"r_inner", r.r_inner},
             {"r_outer", r.r_outer},
             {"coarse_points", r.coarse_points},
             {"fine_points", r.fine_points}}},
           {"cutoff_sensitivity", r.cutoff ? json(*r.cutoff) : json(nullptr)},
           {"tolerance", r.tolerance},
           {"passed", r.passed}};
}
void from_json(const json& j, VerificationReport& r) {
  r.qn = j.at("qn").get<QuantumNumbers>();
  r.omega_c = j.at("omega_c").get<double>();
  r.xi = j.at("xi").get<double>();
  r.delta = j.at("delta").get<double>();
  r.closed_form = j.at("closed_form").get<double>();
  r.oracle_approx = j.at("oracle_approx").get<OracleEstimate>();
  r.oracle_exact = j.at("oracle_exact").get<OracleEstimate>();
  const auto& gaps = j.at("gaps");
  r.approx_abs_gap = gaps.at("approx_abs").get<double>();
  r.approx_rel_gap = gaps.at("approx_rel").get<double>();
  r.exact_abs_gap = gaps.at("exact_abs").get<double>();
  r.exact_rel_gap = gaps.at("exact_rel").get<double>();
  const auto& grid = j.at("grid");
  r.r_inner = grid.at("r_inner").get<double>();
  r.r_outer = grid.at("r_outer").get<double>();
  r.coarse_points = grid.at("coarse_points").get<std::size_t>();
  r.fine_points = grid.at("fine_points").get<std::size_t>();
  const auto& cut = j.at("cutoff_sensitivity");
  r.cutoff = cut.is_null() ? std::nullopt : std::optional<CutoffSensitivity>(cut.get<CutoffSensitivity>());
  r.tolerance = j.at("tolerance").get<double>();
  r.passed = j.at("passed").get<bool>();
}

CellStatus parse_cell_status(const std::string& s) {
  for (auto st : {CellStatus::Match, CellStatus::MismatchDocumented, CellStatus::MismatchNew}) {
    if (to_string(st) == s) return st;
  }
  throw DomainError("unknown cell status: " + s);
}

void to_json(json& j, const Table1Cell& c) {
  j = json{{"m", c.m},
           {"n", c.n},
           {"scenario", c.scenario},
           {"computed", c.computed},
           {"published", c.published},
           {"abs_diff", c.abs_diff},
           {"status", std::string(to_string(c.status))},
           {"is_bound", c.is_bound},
           {"normalizable", c.normalizable}};
}
void from_json(const json& j, Table1Cell& c) {
  c.m = j.at("m").get<int>();
  c.n = j.at("n").get<int>();
  c.scenario = j.at("scenario").get<std::string>();
  c.computed = j.at("computed").get<double>();
  c.published = j.at("published").get<double>();
  c.abs_diff = j.at("abs_diff").get<double>();
  c.status = parse_cell_status(j.at("status").get<std::string>());
  c.is_bound = j.at("is_bound").get<bool>();
  c.normalizable = j.at("normalizable").get<bool>();
}

namespace csv {

std::string energy(double value) {
  if (!std::isfinite(value)) return "nan";
  if (value == 0.0) value = 0.0;
  return printf_double("%.7f", value);
}

std::string number(double value) {
  if (!std::isfinite(value)) return "nan";
  if (value == 0.0) return "0";  // no "-0"
  return printf_double("%.10g", value);
}

std::string boolean(bool value) { return value ? "true" : "false"; }

}  // namespace csv
}  // namespace yukawa
