#pragma once

// JSON mappings (nlohmann::json ADL hooks) and fixed CSV formatting for the
// command-line reports.

#include <string>

#include <json.hpp>

#include "yukawa/analysis.hpp"
#include "yukawa/analytic.hpp"
#include "yukawa/oracle.hpp"

namespace yukawa {

/// One energy record: columns m, n, omega_c, xi, energy, is_bound.
struct EnergyRow {
  int m = 0;
  int n = 0;
  double omega_c = 0.0;
  double xi = 0.0;
  double energy = 0.0;
  bool is_bound = false;
  bool normalizable = false;  // JSON only

  friend bool operator==(const EnergyRow&, const EnergyRow&) = default;
};

EnergyRow make_energy_row(const BoundState& state, const FieldConfig& fields);

void to_json(nlohmann::json& j, const QuantumNumbers& qn);
void from_json(const nlohmann::json& j, QuantumNumbers& qn);
void to_json(nlohmann::json& j, const EnergyRow& row);
void from_json(const nlohmann::json& j, EnergyRow& row);
void to_json(nlohmann::json& j, const OracleEstimate& e);
void from_json(const nlohmann::json& j, OracleEstimate& e);
void to_json(nlohmann::json& j, const CutoffSensitivity& c);
void from_json(const nlohmann::json& j, CutoffSensitivity& c);
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);
void to_json(nlohmann::json& j, const Table1Cell& c);
void from_json(const nlohmann::json& j, Table1Cell& c);

CellStatus parse_cell_status(const std::string& s);

namespace csv {

/// Energies: fixed, 7 decimals.
std::string energy(double value);
/// Everything else: 10 significant digits.
std::string number(double value);
std::string boolean(bool value);

}  // namespace csv

}  // namespace yukawa
