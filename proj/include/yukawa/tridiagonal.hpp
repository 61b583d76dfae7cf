#pragma once

// Kernels for real symmetric tridiagonal matrices given by their diagonal d
// (length N) and off-diagonal e (length N-1).

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "yukawa/execution.hpp"

namespace yukawa::tridiag {

/// Number of eigenvalues strictly below sigma (negative pivots of the
/// LDL^T factorization of T - sigma I). Throws IterationLimit on NaN input.
std::size_t sturm_count(std::span<const double> d, std::span<const double> e, double sigma);

/// [min_i (d_i - |e_{i-1}| - |e_i|), max_i (d_i + |e_{i-1}| + |e_i|)].
std::pair<double, double> gershgorin_bounds(std::span<const double> d, std::span<const double> e);

struct BisectionOptions {
  /// Stop once the bracket is narrower than tolerance * max(scale, |lambda|).
  double tolerance = 1e-10;
  double scale = 1.0;
  int max_iterations = 400;
};

/// The index-th smallest eigenvalue (0-based) by bisection on the Sturm count,
/// starting from the bracket [lo, hi]. Throws IterationLimit on NaN or if the
/// bracket fails to shrink within max_iterations.
double bisect_eigenvalue(std::span<const double> d, std::span<const double> e, std::size_t index,
                         double lo, double hi, const BisectionOptions& options = {});

/// The k algebraically smallest eigenvalues, ascending. Each index is bisected
/// independently from the Gershgorin bracket, so the serial and parallel paths
/// agree bitwise.
std::vector<double> lowest_eigenvalues(std::span<const double> d, std::span<const double> e,
                                       std::size_t k, const BisectionOptions& options = {},
                                       Execution exec = Execution::Parallel);

/// Unit-2-norm eigenvector for a converged eigenvalue by inverse iteration.
/// Retries once with the shift moved by 1e-12 |shift|; throws SingularShift
/// if that also hits an exact zero pivot.
std::vector<double> inverse_iteration(std::span<const double> d, std::span<const double> e,
                                      double shift, int iterations = 3);

/// Sign changes of v, ignoring entries with |v_i| <= relative_floor * max|v|.
int count_sign_changes(std::span<const double> v, double relative_floor = 1e-10);

}  // namespace yukawa::tridiag
