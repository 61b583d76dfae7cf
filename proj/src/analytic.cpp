#include "yukawa/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "yukawa/errors.hpp"
#include "yukawa/hypergeometric.hpp"

namespace yukawa {
namespace {

using ext = long double;
// The energy is a small difference of terms of order beta2 when the field is
// strong and delta small, so it is formed in 113-bit arithmetic.
using quad = boost::multiprecision::cpp_bin_float_quad;

// N = n + nu = n + 1/2 + sqrt(beta2 + beta1 + (m + xi)^2).
quad radial_order(const DimensionlessParams& dp, int n) {
  if (n < 0) throw DomainError("n must be >= 0");
  const quad radicand = quad{0.25} + quad{dp.beta2} + quad{dp.beta1} + quad{dp.eta};
  if (radicand < 0) {
    throw DomainError("nu radicand 1/4 + beta2 + beta1 + eta = " +
                      std::to_string(static_cast<double>(radicand)) + " is negative");
  }
  return quad(n) + quad{0.5} + sqrt(radicand);
}

quad energy_unit(const PhysicalParams& params) {
  const quad hbar = params.hbar();
  const quad delta = params.delta();
  return hbar * hbar * delta * delta / (quad{2} * quad{params.mu()});
}

// P_n(s) in extended precision. Towards s = 1 the coefficients alternate and
// nearly cancel, and the rounding noise of plain Horner defeats adaptive
// quadrature, so there the polynomial is re-expanded in t = 1 - s.
ext series_at(const std::vector<double>& c, ext s, ext t) {
  ext value = 0;
  if (s < ext{0.5}) {
    for (auto it = c.rbegin(); it != c.rend(); ++it) value = value * s + ext{*it};
    return value;
  }
  const std::size_t n = c.size();
  for (std::size_t j = n; j-- > 0;) {
    // d_j = (-1)^j sum_{k >= j} C(k, j) c_k
    ext d = 0;
    ext binom = 1;
    for (std::size_t k = j; k < n; ++k) {
      d += binom * ext{c[k]};
      binom = binom * ext(k + 1) / ext(k + 1 - j);
    }
    value = value * t + ((j % 2 == 0) ? d : -d);
  }
  return value;
}

double profile_at(const BoundState& state, double r, double amplitude) {
  const ext x = ext{state.delta} * ext{r};
  const ext s = std::exp(-x);
  const ext t = -std::expm1(-x);
  const ext log_envelope = -ext{state.quantized_lambda} * x + ext{state.exponents.nu} * std::log(t);
  return static_cast<double>(ext{amplitude} * std::exp(log_envelope) * series_at(state.poly_coeffs, s, t));
}

template <class F>
double integrate(F&& f, double r_max, const QuadratureConfig& config, const char* what) {
  double error = 0.0;
  double l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, 0.0, r_max, config.max_depth, config.tolerance, &error, &l1);
  if (!std::isfinite(value) || error > 1e-10 * std::max(l1, 1e-300)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, " did not converge (value %.6g, error estimate %.3g, L1 %.6g)", value, error, l1);
    throw QuadratureError(std::string(what) + buf);
  }
  return value;
}

}  // namespace

double energy_closed_form(const DimensionlessParams& dp, int n, const PhysicalParams& params) {
  const quad big_n = radial_order(dp, n);
  const quad eta = dp.eta;
  const quad bracket = (quad{dp.beta0} + quad{dp.beta2} - eta - big_n * big_n) / big_n;
  const quad unit = energy_unit(params);
  return static_cast<double>(unit * eta - unit / quad{4} * bracket * bracket);
}

double energy_from_quantization(const DimensionlessParams& dp, int n, const PhysicalParams& params) {
  const quad big_n = radial_order(dp, n);
  const quad b0_plus_b2 = quad{dp.beta0} + quad{dp.beta2};
  const quad root = (b0_plus_b2 - quad{dp.eta} + big_n * big_n) / (quad{2} * big_n);
  const quad epsilon = root * root - b0_plus_b2;
  return static_cast<double>(-energy_unit(params) * epsilon);
}

double quantized_lambda(const DimensionlessParams& dp, int n) {
  const quad big_n = radial_order(dp, n);
  const quad c_term = quad{dp.beta0} + quad{dp.beta2} - quad{dp.eta};
  return static_cast<double>((c_term / big_n - big_n) / quad{2});
}

Exponents exponents(const DimensionlessParams& dp, double epsilon) {
  const double lambda_radicand = epsilon + dp.eta;
  if (lambda_radicand < 0.0) {
    throw DomainError("lambda radicand eps + eta = " + std::to_string(lambda_radicand) + " is negative");
  }
  const double nu_radicand = dp.nu_radicand();
  if (nu_radicand < 0.0) {
    throw DomainError("nu radicand 1/4 + beta2 + beta1 + eta = " + std::to_string(nu_radicand) +
                      " is negative");
  }
  return {std::sqrt(lambda_radicand), 0.5 + std::sqrt(nu_radicand)};
}

double radial_profile(const BoundState& state, double r) {
  if (!(r > 0.0)) throw DomainError("r must be > 0");
  return profile_at(state, r, state.norm_constant.value_or(1.0));
}

double radial_wavefunction(const BoundState& state, double r, double delta) {
  if (!state.normalizable) throw DomainError("state is not normalizable (quantized lambda <= 0)");
  if (!state.norm_constant) throw DomainError("state has not been normalized");
  if (delta != state.delta) throw DomainError("delta does not match the state's screening");
  return radial_profile(state, r);
}

std::complex<double> wavefunction_2d(const BoundState& state, double r, double phi, double delta) {
  const double radial = radial_wavefunction(state, r, delta) / std::sqrt(2.0 * std::numbers::pi * r);
  return std::polar(radial, state.qn.m * phi);
}

double integration_radius(const BoundState& state, const QuadratureConfig& config) {
  const double lambda = state.quantized_lambda;
  if (!(lambda > 0.0)) throw DomainError("integration radius needs a positive lambda");
  const double nu = state.exponents.nu;
  const double peak = std::log((lambda + nu) / lambda) / state.delta;
  const double tail = config.tail_decades * std::numbers::ln10 / (2.0 * lambda * state.delta);
  return std::min(peak + tail, config.max_radius_in_screening_lengths / state.delta);
}

BoundState normalize(BoundState state, const QuadratureConfig& config) {
  if (!state.is_bound) throw DomainError("only states with E < 0 are normalized");
  if (!state.normalizable) throw DomainError("state is not normalizable (quantized lambda <= 0)");
  const double r_max = integration_radius(state, config);
  // Bring the peak to O(1) first; unscaled profiles can sit near 1e-15 and the
  // quadrature's absolute floor would then dominate the error estimate.
  double peak = 0.0;
  for (int i = 1; i <= 256; ++i) {
    peak = std::max(peak, std::abs(profile_at(state, r_max * i / 257.0, 1.0)));
  }
  if (!(peak > 0.0) || !std::isfinite(peak)) throw QuadratureError("radial profile vanishes on the grid");
  // Sign convention: R > 0 just outside the origin, where P_n(s -> 1) decides.
  const bool flip = series_at(state.poly_coeffs, 1, 0) < 0;
  const double amplitude = (flip ? -1.0 : 1.0) / peak;
  const double norm2 = integrate(
      [&](double r) {
        if (r <= 0.0) return 0.0;
        const double v = profile_at(state, r, amplitude);
        return v * v;
      },
      r_max, config, "normalization integral");
  if (!(norm2 > 0.0)) throw QuadratureError("normalization integral is not positive");
  state.norm_constant = amplitude / std::sqrt(norm2);
  return state;
}

double overlap(const BoundState& a, const BoundState& b, const QuadratureConfig& config) {
  if (a.delta != b.delta) throw DomainError("overlap needs states with the same delta");
  const double r_max = std::max(integration_radius(a, config), integration_radius(b, config));
  return integrate(
      [&](double r) {
        if (r <= 0.0) return 0.0;
        return radial_wavefunction(a, r, a.delta) * radial_wavefunction(b, r, b.delta);
      },
      r_max, config, "overlap integral");
}

BoundState solve(const PhysicalParams& params, const FieldConfig& fields, int n, int m,
                 const QuadratureConfig& config) {
  BoundState state;
  state.qn = QuantumNumbers(n, m);
  state.delta = params.delta();

  const DimensionlessParams dp = reduce(params, fields, m);
  state.energy = energy_closed_form(dp, n, params);
  state.epsilon = -state.energy / params.energy_scale();
  state.is_bound = state.energy < 0.0;

  state.quantized_lambda = quantized_lambda(dp, n);
  state.normalizable = state.quantized_lambda > 0.0;

  // eps + eta equals quantized_lambda^2; a negative value here is rounding only.
  state.exponents = exponents(dp, std::max(state.epsilon, -dp.eta));

  const double lambda = state.quantized_lambda;
  const double nu = state.exponents.nu;
  state.series_a = 2.0 * (lambda + nu) + n;
  state.series_c = 2.0 * lambda + 1.0;
  state.poly_coeffs = terminating_series_coefficients(state.series_a, n, state.series_c);

  if (state.is_bound && state.normalizable) state = normalize(std::move(state), config);
  return state;
}

double coulomb_limit_energy(const PhysicalParams& params, int n, double m_plus_xi) {
  const double order = n + std::abs(m_plus_xi) + 0.5;
  return -params.mu() * params.v1() * params.v1() /
         (2.0 * params.hbar() * params.hbar() * order * order);
}

}  // namespace yukawa
