#pragma once

// Closed-form bound states of the Greene-Aldrich approximated radial equation.
//
// With s = e^{-delta r} the radial function is
//   R(s) = C s^lambda (1 - s)^nu 2F1(2(lambda + nu) + n, -n; 2 lambda + 1; s),
// and the quantization (lambda + nu) - sqrt(eps + beta0 + beta2) = -n fixes eps.

#include <complex>
#include <optional>
#include <vector>

#include "yukawa/model.hpp"

namespace yukawa {

struct Exponents {
  double lambda = 0.0;  // sqrt(eps + eta)
  double nu = 0.0;      // 1/2 + sqrt(1/4 + beta2 + beta1 + eta)
};

struct BoundState {
  QuantumNumbers qn;
  double energy = 0.0;
  double epsilon = 0.0;  // -2 mu E / (hbar^2 delta^2)
  Exponents exponents;
  /// lambda demanded by the quantization condition. It equals
  /// exponents.lambda when non-negative; when it is negative the closed-form
  /// "state" grows as s -> 0 and is not square integrable.
  double quantized_lambda = 0.0;
  double delta = 0.0;
  double series_a = 0.0;  // first 2F1 argument
  double series_c = 0.0;  // third 2F1 argument, 2 lambda + 1
  std::vector<double> poly_coeffs;
  std::optional<double> norm_constant;
  bool is_bound = false;      // energy < 0
  bool normalizable = false;  // quantized_lambda > 0
};

/// Closed-form eigenvalue, term for term:
///   E = hbar^2 delta^2 eta / 2mu - (hbar^2 delta^2 / 8mu) [(beta0 + beta2 - eta - N^2)/N]^2,
///   N = n + 1/2 + sqrt(beta2 + beta1 + (m + xi)^2).
/// Evaluated in 113-bit precision. Throws DomainError if the nu radicand is negative.
double energy_closed_form(const DimensionlessParams& dp, int n, const PhysicalParams& params);

/// Same energy through the quantization chain: sqrt(eps + beta0 + beta2) =
/// (beta0 + beta2 - eta + N^2) / 2N, eps = (.)^2 - beta0 - beta2, E = -hbar^2 delta^2 eps / 2mu.
double energy_from_quantization(const DimensionlessParams& dp, int n, const PhysicalParams& params);

/// lambda fixed by the quantization condition, ((beta0 + beta2 - eta)/N - N) / 2.
/// Negative values mean the closed-form solution is not square integrable.
double quantized_lambda(const DimensionlessParams& dp, int n);

/// Throws DomainError naming the negative radicand.
Exponents exponents(const DimensionlessParams& dp, double epsilon);

/// s^lambda (1-s)^nu P_n(s) times the stored amplitude (1 when unnormalized).
/// Uses the quantized lambda, so it is the formal solution even when it is not
/// normalizable.
double radial_profile(const BoundState& state, double r);

/// Normalized R(r). Throws DomainError if the state is not normalizable or
/// has not been normalized yet.
double radial_wavefunction(const BoundState& state, double r, double delta);

/// psi(r, phi) = e^{i m phi} R(r) / sqrt(2 pi r).
std::complex<double> wavefunction_2d(const BoundState& state, double r, double phi, double delta);

struct QuadratureConfig {
  double tolerance = 1e-13;  // relative, per adaptive Gauss-Kronrod call
  unsigned max_depth = 20;
  double tail_decades = 16.0;  // r_max puts s^{2 lambda} below 10^-tail_decades
  double max_radius_in_screening_lengths = 1e6;
};

/// Outer radius used for integrals over R: the profile peak plus the distance
/// over which s^{2 lambda} falls by tail_decades, capped at max_radius / delta.
double integration_radius(const BoundState& state, const QuadratureConfig& config = {});

/// Rescale so integral_0^inf R^2 dr = 1, with R > 0 near the origin. Throws DomainError if the state is not
/// bound or not normalizable, QuadratureError if the integral does not converge.
BoundState normalize(BoundState state, const QuadratureConfig& config = {});

/// integral_0^inf R_a R_b dr of two normalized states with the same delta.
double overlap(const BoundState& a, const BoundState& b, const QuadratureConfig& config = {});

/// Full composition: reduce, energy, exponents, series, and normalization
/// where the state is bound and normalizable. States with E >= 0 or with
/// a negative quantized lambda are returned flagged, never dropped.
BoundState solve(const PhysicalParams& params, const FieldConfig& fields, int n, int m,
                 const QuadratureConfig& config = {});

/// Lowest-order Coulomb limit -mu V1^2 / (2 hbar^2 (n + |m + xi| + 1/2)^2).
double coulomb_limit_energy(const PhysicalParams& params, int n, double m_plus_xi);

}  // namespace yukawa
