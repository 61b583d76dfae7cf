#pragma once

// Finite-difference eigensolver for the radial equation
//   -(hbar^2 / 2mu) R'' + V(r) R = E R
// on a uniform grid, used as an independent check of the closed form.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "yukawa/execution.hpp"
#include "yukawa/model.hpp"
#include "yukawa/tridiagonal.hpp"

namespace yukawa {

enum class PotentialMode { Exact, GreeneAldrich };

/// ThreePoint: plain 3-point Laplacian on R with R = 0 one spacing beyond
/// either end of the grid.
///
/// Cylindrical: the same Laplacian written for F = R / sqrt(r) in flux form,
/// (1/r)(r F')', then symmetrized back onto R. On a cell grid that starts at
/// the origin the inner flux weight is zero, so no cutoff is needed and the
/// regular solution is selected even for the critical -1/(4 r^2) centrifugal
/// term at m + xi = 0, where a Dirichlet cutoff converges only
/// logarithmically.
enum class Stencil { ThreePoint, Cylindrical };

/// num_points nodes r_min, r_min + h, ..., r_max with
/// h = (r_max - r_min) / (num_points - 1).
class RadialGrid {
 public:
  /// Throws DomainError unless 0 < r_min < r_max and num_points >= 100.
  RadialGrid(double r_min, double r_max, std::size_t num_points);

  /// Nodes strictly inside (a, b), with the Dirichlet zeros exactly at a and b.
  static RadialGrid interior(double a, double b, std::size_t num_points);
  /// Cell centres of num_points equal cells covering (a, b).
  static RadialGrid cells(double a, double b, std::size_t num_points);

  double r_min() const { return r_min_; }
  double r_max() const { return r_max_; }
  std::size_t num_points() const { return num_points_; }
  double spacing() const { return spacing_; }
  double node(std::size_t i) const { return r_min_ + static_cast<double>(i) * spacing_; }

 private:
  double r_min_;
  double r_max_;
  std::size_t num_points_;
  double spacing_;
};

struct TridiagonalHamiltonian {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;  // size num_points - 1
  RadialGrid grid;
  PotentialMode potential_mode = PotentialMode::Exact;
  Stencil stencil = Stencil::ThreePoint;
};

struct HamiltonianOptions {
  Stencil stencil = Stencil::Cylindrical;
  /// Reject grids where |V| exceeds this multiple of hbar^2 delta^2 / 2mu.
  double overflow_guard = 1e12;
  Execution exec = Execution::Parallel;
};

/// Assemble the radial Hamiltonian with V_eff (Exact) or its Greene-Aldrich
/// form. Throws DomainError when the potential at a node is non-finite or
/// beyond the overflow guard, or when a Cylindrical grid reaches below r = h/2.
TridiagonalHamiltonian build_hamiltonian(const RadialGrid& grid, const PhysicalParams& params,
                                         const FieldConfig& fields, int m, PotentialMode mode,
                                         const HamiltonianOptions& options = {});

/// Same assembly for an arbitrary potential (self-tests: box, oscillator).
TridiagonalHamiltonian build_hamiltonian(const RadialGrid& grid, const std::function<double(double)>& potential,
                                         double hbar, double mu, Stencil stencil = Stencil::ThreePoint,
                                         Execution exec = Execution::Parallel);

/// Serial reference assembly, kept for testing the parallel kernel.
TridiagonalHamiltonian build_hamiltonian_serial(const RadialGrid& grid,
                                                const std::function<double(double)>& potential,
                                                double hbar, double mu, Stencil stencil);

struct NumericSpectrum {
  std::vector<double> eigenvalues;                         // ascending
  std::optional<std::vector<std::vector<double>>> eigenvectors;  // grid-sampled R
  std::vector<int> node_counts;                            // filled with eigenvectors
  PotentialMode mode = PotentialMode::Exact;
};

NumericSpectrum eigenvalues_lowest(const TridiagonalHamiltonian& h, std::size_t k,
                                   const tridiag::BisectionOptions& options = {},
                                   Execution exec = Execution::Parallel, bool with_eigenvectors = false);

struct GridFunction {
  std::vector<double> r;
  std::vector<double> values;  // h * sum values^2 = 1
  int nodes = 0;
};

/// Inverse-iteration eigenvector, normalized with the trapezoidal rule (the
/// Dirichlet zeros make that h * sum R_i^2) and sign fixed so the first
/// significant entry is positive.
GridFunction eigenvector(const TridiagonalHamiltonian& h, double eigenvalue);

/// h * sum a_i b_i over the grid.
double grid_inner_product(const TridiagonalHamiltonian& h, const std::vector<double>& a,
                          const std::vector<double>& b);

struct OracleEstimate {
  double coarse = 0.0;        // N points
  double fine = 0.0;          // 2N points
  double extrapolated = 0.0;  // (4 fine - coarse) / 3
  double discretization_error = 0.0;  // |fine - extrapolated|
  bool resolvable = true;     // |E| >= 10 * discretization_error

  friend bool operator==(const OracleEstimate&, const OracleEstimate&) = default;
};

/// Dirichlet-cutoff three-point results at two inner radii a factor 10 apart.
/// Only produced for m + xi = 0, where the cutoff matters.
struct CutoffSensitivity {
  double r_min_small = 0.0;
  double r_min_large = 0.0;
  double energy_small = 0.0;
  double energy_large = 0.0;

  friend bool operator==(const CutoffSensitivity&, const CutoffSensitivity&) = default;
};

struct VerificationReport {
  QuantumNumbers qn;
  double omega_c = 0.0;
  double xi = 0.0;
  double delta = 0.0;
  double closed_form = 0.0;
  OracleEstimate oracle_approx;
  OracleEstimate oracle_exact;
  double approx_abs_gap = 0.0;
  double approx_rel_gap = 0.0;
  double exact_abs_gap = 0.0;  // exact-potential numeric vs closed form
  double exact_rel_gap = 0.0;
  double r_inner = 0.0;
  double r_outer = 0.0;
  std::size_t coarse_points = 0;
  std::size_t fine_points = 0;
  std::optional<CutoffSensitivity> cutoff;
  double tolerance = 1e-3;
  bool passed = false;  // oracle_approx resolvable and approx_rel_gap <= tolerance

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct VerifyOptions {
  std::size_t coarse_points = 4000;  // fine grid uses twice as many
  double tolerance = 1e-3;
  /// Outer radius = profile peak + (outer_decay_lengths + 4n) / (lambda delta).
  double outer_decay_lengths = 40.0;
  /// Cells start where (1 - s)^nu < e^{-inner_log_floor}; 0 when nu is small.
  double inner_log_floor = 70.0;
  bool cutoff_sensitivity = true;
  Execution exec = Execution::Parallel;
};

/// Closed-form energy against the numeric spectrum of both potentials,
/// Richardson-extrapolated over N and 2N cells. Throws DomainError unless the
/// closed-form state is bound and normalizable.
VerificationReport verify_closed_form(const PhysicalParams& params, const FieldConfig& fields, int n, int m,
                                      const VerifyOptions& options = {});

/// Richardson step for a second-order scheme with h halved.
inline double richardson(double coarse, double fine) { return (4.0 * fine - coarse) / 3.0; }

}  // namespace yukawa
