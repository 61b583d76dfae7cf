#include "yukawa/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>

#include "yukawa/errors.hpp"

namespace yukawa::tridiag {

std::size_t sturm_count(std::span<const double> d, std::span<const double> e, double sigma) {
  // Pivot floor keeps the recurrence finite when a pivot is exactly zero.
  constexpr double kPivotFloor = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  std::size_t count = 0;
  double q = d[0] - sigma;
  for (std::size_t i = 0;; ++i) {
    if (std::abs(q) < kPivotFloor) q = -kPivotFloor;
    if (q < 0.0) ++count;
    if (i + 1 == d.size()) break;
    q = (d[i + 1] - sigma) - e[i] * e[i] / q;
  }
  // A NaN anywhere propagates to the last pivot.
  if (std::isnan(q)) throw IterationLimit("Sturm recurrence produced NaN");
  return count;
}

std::pair<double, double> gershgorin_bounds(std::span<const double> d, std::span<const double> e) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < d.size(); ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(e[i - 1]);
    if (i + 1 < d.size()) radius += std::abs(e[i]);
    lo = std::min(lo, d[i] - radius);
    hi = std::max(hi, d[i] + radius);
  }
  return {lo, hi};
}

double bisect_eigenvalue(std::span<const double> d, std::span<const double> e, std::size_t index,
                         double lo, double hi, const BisectionOptions& options) {
  for (int it = 0; it < options.max_iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (!std::isfinite(mid)) throw IterationLimit("bisection bracket contains non-finite values");
    const double width = hi - lo;
    if (width < options.tolerance * std::max(options.scale, std::abs(mid)) || mid <= lo || mid >= hi) {
      return mid;
    }
    if (sturm_count(d, e, mid) > index) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  throw IterationLimit("bisection for eigenvalue " + std::to_string(index) + " did not converge");
}

std::vector<double> lowest_eigenvalues(std::span<const double> d, std::span<const double> e,
                                       std::size_t k, const BisectionOptions& options, Execution exec) {
  if (k == 0 || k > d.size()) throw DomainError("requested eigenvalue count must be in [1, N]");
  const auto finite = [](double x) { return std::isfinite(x); };
  if (!std::all_of(d.begin(), d.end(), finite) || !std::all_of(e.begin(), e.end(), finite)) {
    throw IterationLimit("matrix has non-finite entries");
  }
  auto [lo, hi] = gershgorin_bounds(d, e);
  // Widen slightly so the bracket is strict at both ends.
  const double pad = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
  lo -= pad;
  hi += pad;

  std::vector<double> values(k);
  const auto count = static_cast<std::ptrdiff_t>(k);
  if (exec == Execution::Parallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t j = 0; j < count; ++j) {
      try {
        values[j] = bisect_eigenvalue(d, e, static_cast<std::size_t>(j), lo, hi, options);
      } catch (...) {
#pragma omp critical(yukawa_bisection_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::ptrdiff_t j = 0; j < count; ++j) {
      values[j] = bisect_eigenvalue(d, e, static_cast<std::size_t>(j), lo, hi, options);
    }
  }
  return values;
}

namespace {

// Gaussian elimination with partial pivoting on (T - shift I), LAPACK gttrf
// layout: u0 main, u1 first super, u2 second super, l multipliers.
struct TridiagonalLU {
  std::vector<double> l, u0, u1, u2;
  std::vector<char> swapped;
};

bool factor(std::span<const double> d, std::span<const double> e, double shift, TridiagonalLU& f) {
  const std::size_t n = d.size();
  f.u0.assign(n, 0.0);
  f.u1.assign(n, 0.0);
  f.u2.assign(n, 0.0);
  f.l.assign(n, 0.0);
  f.swapped.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) f.u0[i] = d[i] - shift;
  for (std::size_t i = 0; i + 1 < n; ++i) f.u1[i] = e[i];
  std::vector<double> sub(e.begin(), e.end());

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(f.u0[i]) >= std::abs(sub[i])) {
      if (f.u0[i] == 0.0) return false;
      const double m = sub[i] / f.u0[i];
      f.l[i] = m;
      f.u0[i + 1] -= m * f.u1[i];
    } else {
      const double m = f.u0[i] / sub[i];
      f.l[i] = m;
      f.swapped[i] = 1;
      f.u0[i] = sub[i];
      const double tmp = f.u1[i];
      f.u1[i] = f.u0[i + 1];
      f.u0[i + 1] = tmp - m * f.u0[i + 1];
      if (i + 2 < n) {
        f.u2[i] = f.u1[i + 1];
        f.u1[i + 1] = -m * f.u1[i + 1];
      }
    }
  }
  return f.u0[n - 1] != 0.0;
}

void solve_in_place(const TridiagonalLU& f, std::vector<double>& b) {
  const std::size_t n = b.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (f.swapped[i]) {
      const double tmp = b[i];
      b[i] = b[i + 1];
      b[i + 1] = tmp - f.l[i] * b[i + 1];
    } else {
      b[i + 1] -= f.l[i] * b[i];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    double v = b[k];
    if (k + 1 < n) v -= f.u1[k] * b[k + 1];
    if (k + 2 < n) v -= f.u2[k] * b[k + 2];
    b[k] = v / f.u0[k];
  }
}

void normalize2(std::vector<double>& v) {
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  if (scale == 0.0 || !std::isfinite(scale)) return;
  double sum = 0.0;
  for (double& x : v) {
    x /= scale;
    sum += x * x;
  }
  const double inv = 1.0 / std::sqrt(sum);
  for (double& x : v) x *= inv;
}

}  // namespace

std::vector<double> inverse_iteration(std::span<const double> d, std::span<const double> e, double shift,
                                      int iterations) {
  TridiagonalLU lu;
  if (!factor(d, e, shift, lu)) {
    const double moved = shift + 1e-12 * std::max(std::abs(shift), std::numeric_limits<double>::min());
    if (!factor(d, e, moved, lu)) throw SingularShift("shifted tridiagonal system is exactly singular");
  }
  std::vector<double> v(d.size());
  // Deterministic start vector with components along every eigenvector.
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 1.0 + 1e-3 * std::sin(0.7 * static_cast<double>(i));
  for (int it = 0; it < iterations; ++it) {
    solve_in_place(lu, v);
    normalize2(v);
  }
  return v;
}

int count_sign_changes(std::span<const double> v, double relative_floor) {
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  const double floor = relative_floor * peak;
  int changes = 0;
  int last_sign = 0;
  for (double x : v) {
    if (std::abs(x) <= floor) continue;
    const int sign = x > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++changes;
    last_sign = sign;
  }
  return changes;
}

}  // namespace yukawa::tridiag
