#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "yukawa/analysis.hpp"
#include "yukawa/model.hpp"

namespace yukawa::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFailure = 1;  // verification / acceptance failure, command error
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was given; what() holds the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { Energy, Spectrum, Wavefunction, Potential, Table1, Verify, Sweep, Degeneracy };
enum class OutputFormat { Csv, Json };
enum class Spacing { Log, Uniform };

struct GridOverrides {
  std::optional<double> r_min;
  std::optional<double> r_max;
  std::size_t points = 500;
  Spacing spacing = Spacing::Log;
};

struct RunConfig {
  Command command = Command::Energy;
  PhysicalParams physical;
  FieldConfig fields;
  XiPolicy xi_policy = XiPolicy::Warn;
  /// energy / wavefunction / verify: one state; spectrum / sweep: the n x m product.
  std::vector<QuantumNumbers> states;
  int n_max = 0;
  std::vector<int> m_values;
  GridOverrides grid;
  std::size_t verify_points = 4000;
  double verify_tolerance = 1e-3;
  SweepAxis axis = SweepAxis::OmegaC;
  std::vector<double> sweep_values;
  std::optional<double> tolerance;  // degeneracy
  OutputFormat format = OutputFormat::Csv;
  std::string output_path;  // empty: stdout
};

/// Parses and validates argv (argv[0] is the program name). Throws
/// UsageError naming the offending flag or violated invariant, HelpRequested
/// for --help.
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes the command, writing the serialized result to out and warnings
/// or errors to err. Returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run, routing output to --output when given.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace yukawa::cli
