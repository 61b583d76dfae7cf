#include "yukawa/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "yukawa/analytic.hpp"
#include "yukawa/errors.hpp"

namespace yukawa {
namespace {

double evaluate_or_nan(const std::function<double(double)>& potential, double r) noexcept {
  try {
    return potential(r);
  } catch (...) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

// One row of the stencil. Pure in (grid, i), so every row is independent.
inline void assemble_row(const RadialGrid& grid, std::size_t i, double potential_value, double kinetic,
                         double hbar2_over_mu, Stencil stencil, std::vector<double>& diag,
                         std::vector<double>& off) {
  const double h = grid.spacing();
  const std::size_t n = grid.num_points();
  if (stencil == Stencil::ThreePoint) {
    diag[i] = 2.0 * kinetic + potential_value;
    if (i + 1 < n) off[i] = -kinetic;
    return;
  }
  const double r = grid.node(i);
  const double outer = r + 0.5 * h;
  const double inner = std::max(0.0, r - 0.5 * h);
  diag[i] = kinetic * (outer + inner) / r + potential_value + 0.125 * hbar2_over_mu / (r * r);
  if (i + 1 < n) off[i] = -kinetic * outer / std::sqrt(r * grid.node(i + 1));
}

void check_cylindrical(const RadialGrid& grid) {
  if (grid.r_min() < 0.5 * grid.spacing() * (1.0 - 1e-9)) {
    throw DomainError("cylindrical stencil needs r_min >= h/2");
  }
}

TridiagonalHamiltonian assemble(const RadialGrid& grid, const std::function<double(double)>& potential,
                                double hbar, double mu, Stencil stencil, Execution exec) {
  if (stencil == Stencil::Cylindrical) check_cylindrical(grid);
  const std::size_t n = grid.num_points();
  const double h = grid.spacing();
  const double kinetic = hbar * hbar / (2.0 * mu * h * h);
  const double hbar2_over_mu = hbar * hbar / mu;

  TridiagonalHamiltonian ham{std::vector<double>(n), std::vector<double>(n - 1), grid,
                             PotentialMode::Exact, stencil};
  const auto count = static_cast<std::ptrdiff_t>(n);
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      const auto k = static_cast<std::size_t>(i);
      assemble_row(grid, k, evaluate_or_nan(potential, grid.node(k)), kinetic, hbar2_over_mu, stencil,
                   ham.diagonal, ham.off_diagonal);
    }
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      const auto k = static_cast<std::size_t>(i);
      assemble_row(grid, k, evaluate_or_nan(potential, grid.node(k)), kinetic, hbar2_over_mu, stencil,
                   ham.diagonal, ham.off_diagonal);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(ham.diagonal[i])) {
      throw DomainError("potential is not finite at r = " + std::to_string(grid.node(i)));
    }
  }
  return ham;
}

}  // namespace

RadialGrid::RadialGrid(double r_min, double r_max, std::size_t num_points)
    : r_min_(r_min), r_max_(r_max), num_points_(num_points) {
  if (!(r_min > 0.0) || !(r_max > r_min)) throw DomainError("grid needs 0 < r_min < r_max");
  if (num_points < 100) throw DomainError("grid needs at least 100 points");
  spacing_ = (r_max - r_min) / static_cast<double>(num_points - 1);
}

RadialGrid RadialGrid::interior(double a, double b, std::size_t num_points) {
  const double h = (b - a) / static_cast<double>(num_points + 1);
  return RadialGrid(a + h, b - h, num_points);
}

RadialGrid RadialGrid::cells(double a, double b, std::size_t num_points) {
  const double h = (b - a) / static_cast<double>(num_points);
  return RadialGrid(a + 0.5 * h, b - 0.5 * h, num_points);
}

TridiagonalHamiltonian build_hamiltonian(const RadialGrid& grid, const PhysicalParams& params,
                                         const FieldConfig& fields, int m, PotentialMode mode,
                                         const HamiltonianOptions& options) {
  std::function<double(double)> potential;
  if (mode == PotentialMode::Exact) {
    potential = [&](double r) { return effective_potential(r, params, fields, m); };
  } else {
    potential = [&](double r) { return approximated_effective_potential(r, params, fields, m); };
  }
  TridiagonalHamiltonian ham =
      assemble(grid, potential, params.hbar(), params.mu(), options.stencil, options.exec);
  ham.potential_mode = mode;

  const double limit = options.overflow_guard * params.energy_scale();
  for (std::size_t i = 0; i < grid.num_points(); ++i) {
    const double v = potential(grid.node(i));
    if (std::abs(v) > limit) {
      throw DomainError("|V_eff| = " + std::to_string(std::abs(v)) + " at r = " + std::to_string(grid.node(i)) +
                        " exceeds the overflow guard; raise r_min");
    }
  }
  return ham;
}

TridiagonalHamiltonian build_hamiltonian(const RadialGrid& grid, const std::function<double(double)>& potential,
                                         double hbar, double mu, Stencil stencil, Execution exec) {
  return assemble(grid, potential, hbar, mu, stencil, exec);
}

TridiagonalHamiltonian build_hamiltonian_serial(const RadialGrid& grid,
                                                const std::function<double(double)>& potential,
                                                double hbar, double mu, Stencil stencil) {
  return assemble(grid, potential, hbar, mu, stencil, Execution::Serial);
}

NumericSpectrum eigenvalues_lowest(const TridiagonalHamiltonian& h, std::size_t k,
                                   const tridiag::BisectionOptions& options, Execution exec,
                                   bool with_eigenvectors) {
  NumericSpectrum spectrum;
  spectrum.mode = h.potential_mode;
  spectrum.eigenvalues = tridiag::lowest_eigenvalues(h.diagonal, h.off_diagonal, k, options, exec);
  if (with_eigenvectors) {
    std::vector<std::vector<double>> vectors;
    vectors.reserve(k);
    for (double value : spectrum.eigenvalues) {
      GridFunction f = eigenvector(h, value);
      spectrum.node_counts.push_back(f.nodes);
      vectors.push_back(std::move(f.values));
    }
    spectrum.eigenvectors = std::move(vectors);
  }
  return spectrum;
}

GridFunction eigenvector(const TridiagonalHamiltonian& h, double eigenvalue) {
  GridFunction f;
  f.values = tridiag::inverse_iteration(h.diagonal, h.off_diagonal, eigenvalue);
  const double spacing = h.grid.spacing();
  const double scale = 1.0 / std::sqrt(spacing);  // unit 2-norm -> h * sum v^2 = 1
  double peak = 0.0;
  for (double v : f.values) peak = std::max(peak, std::abs(v));
  double sign = 1.0;
  for (double v : f.values) {
    if (std::abs(v) > 1e-10 * peak) {
      sign = v > 0.0 ? 1.0 : -1.0;
      break;
    }
  }
  for (double& v : f.values) v *= sign * scale;
  f.r.resize(f.values.size());
  for (std::size_t i = 0; i < f.r.size(); ++i) f.r[i] = h.grid.node(i);
  f.nodes = tridiag::count_sign_changes(f.values);
  return f;
}

double grid_inner_product(const TridiagonalHamiltonian& h, const std::vector<double>& a,
                          const std::vector<double>& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return h.grid.spacing() * sum;
}

namespace {

OracleEstimate estimate(double coarse, double fine) {
  OracleEstimate e;
  e.coarse = coarse;
  e.fine = fine;
  e.extrapolated = richardson(coarse, fine);
  e.discretization_error = std::abs(fine - e.extrapolated);
  e.resolvable = std::abs(e.extrapolated) >= 10.0 * e.discretization_error;
  return e;
}

}  // namespace

VerificationReport verify_closed_form(const PhysicalParams& params, const FieldConfig& fields, int n, int m,
                                      const VerifyOptions& options) {
  const BoundState state = solve(params, fields, n, m);
  if (!state.is_bound || !state.normalizable) {
    throw DomainError("verify needs a bound, normalizable closed-form state (E < 0 and lambda > 0)");
  }

  VerificationReport report;
  report.qn = state.qn;
  report.omega_c = fields.omega_c();
  report.xi = fields.xi();
  report.delta = params.delta();
  report.closed_form = state.energy;
  report.tolerance = options.tolerance;
  report.coarse_points = options.coarse_points;
  report.fine_points = 2 * options.coarse_points;

  const double delta = params.delta();
  const double lambda = state.quantized_lambda;
  const double nu = state.exponents.nu;
  const double peak = std::log((lambda + nu) / lambda) / delta;
  report.r_outer = std::min(peak + (options.outer_decay_lengths + 4.0 * n) / (lambda * delta), 1e6 / delta);
  const double s_inner = -std::expm1(-options.inner_log_floor / nu);
  report.r_inner = s_inner < 1.0 ? std::max(0.0, -std::log(s_inner) / delta) : 0.0;

  tridiag::BisectionOptions bisect;
  bisect.tolerance = 1e-14;
  bisect.scale = params.energy_scale();
  const auto k = static_cast<std::size_t>(n) + 1;

  HamiltonianOptions ham_options;
  ham_options.stencil = Stencil::Cylindrical;
  ham_options.exec = options.exec;

  auto level = [&](PotentialMode mode, std::size_t points) {
    const RadialGrid grid = RadialGrid::cells(report.r_inner, report.r_outer, points);
    const auto ham = build_hamiltonian(grid, params, fields, m, mode, ham_options);
    return eigenvalues_lowest(ham, k, bisect, options.exec).eigenvalues[n];
  };

  report.oracle_approx = estimate(level(PotentialMode::GreeneAldrich, report.coarse_points),
                                  level(PotentialMode::GreeneAldrich, report.fine_points));
  report.oracle_exact = estimate(level(PotentialMode::Exact, report.coarse_points),
                                 level(PotentialMode::Exact, report.fine_points));

  report.approx_abs_gap = std::abs(report.oracle_approx.extrapolated - report.closed_form);
  report.approx_rel_gap = report.approx_abs_gap / std::abs(report.closed_form);
  report.exact_abs_gap = std::abs(report.oracle_exact.extrapolated - report.closed_form);
  report.exact_rel_gap = report.exact_abs_gap / std::abs(report.closed_form);
  report.passed = report.oracle_approx.resolvable && report.approx_rel_gap <= options.tolerance;

  if (options.cutoff_sensitivity && m + fields.xi() == 0.0) {
    HamiltonianOptions plain = ham_options;
    plain.stencil = Stencil::ThreePoint;
    auto cutoff_level = [&](double r_min) {
      auto at = [&](std::size_t points) {
        const RadialGrid grid = RadialGrid::interior(r_min, report.r_outer, points);
        const auto ham = build_hamiltonian(grid, params, fields, m, PotentialMode::GreeneAldrich, plain);
        return eigenvalues_lowest(ham, k, bisect, options.exec).eigenvalues[n];
      };
      return richardson(at(report.coarse_points), at(report.fine_points));
    };
    CutoffSensitivity c;
    c.r_min_small = 1e-6 / delta;
    c.r_min_large = 1e-5 / delta;
    c.energy_small = cutoff_level(c.r_min_small);
    c.energy_large = cutoff_level(c.r_min_large);
    report.cutoff = c;
  }
  return report;
}

}  // namespace yukawa
