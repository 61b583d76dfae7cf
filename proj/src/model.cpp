#include "yukawa/model.hpp"

#include <cmath>
#include <string>

#include "yukawa/errors.hpp"

namespace yukawa {
namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be > 0");
  }
}

// 1 - e^{-x} without cancellation for small x.
double one_minus_exp(double x) { return -std::expm1(-x); }

void require_radius(double r) {
  if (!(r > 0.0)) throw DomainError("r must be > 0");
}

}  // namespace

PhysicalParams::PhysicalParams(const Init& init) : v_(init) {
  require_positive(v_.hbar, "hbar");
  require_positive(v_.mu, "mu");
  require_positive(v_.c_light, "c_light");
  require_positive(v_.delta, "delta");
  require_positive(v_.v1, "v1");
  if (!std::isfinite(v_.e_charge)) throw DomainError("e_charge must be finite");
}

PhysicalParams PhysicalParams::with_delta(double delta) const {
  Init next = v_;
  next.delta = delta;
  return PhysicalParams(next);
}

PhysicalParams PhysicalParams::with_v1(double v1) const {
  Init next = v_;
  next.v1 = v1;
  return PhysicalParams(next);
}

double PhysicalParams::energy_scale() const {
  return v_.hbar * v_.hbar * v_.delta * v_.delta / (2.0 * v_.mu);
}

FieldConfig::FieldConfig(double omega_c, double xi, XiPolicy policy) : omega_c_(omega_c), xi_(xi) {
  if (!(omega_c >= 0.0) || !std::isfinite(omega_c)) throw DomainError("omega_c must be >= 0");
  if (!std::isfinite(xi)) throw DomainError("xi must be finite");
  if (policy == XiPolicy::Reject && !xi_is_integer()) {
    throw DomainError("xi must be an integer (strict flux quantization)");
  }
}

FieldConfig FieldConfig::from_magnetic_field(double b_field, const PhysicalParams& params, double xi,
                                             XiPolicy policy) {
  return FieldConfig(params.e_charge() * b_field / (params.mu() * params.c_light()), xi, policy);
}

bool FieldConfig::xi_is_integer() const { return std::nearbyint(xi_) == xi_; }

FieldConfig FieldConfig::with_omega_c(double omega_c) const { return FieldConfig(omega_c, xi_); }
FieldConfig FieldConfig::with_xi(double xi) const { return FieldConfig(omega_c_, xi); }

QuantumNumbers::QuantumNumbers(int n_, int m_) : n(n_), m(m_) {
  if (n_ < 0) throw DomainError("n must be >= 0");
}

DimensionlessParams reduce(const PhysicalParams& params, const FieldConfig& fields, int m) {
  const double hbar = params.hbar();
  const double mu = params.mu();
  const double delta = params.delta();
  const double wc = fields.omega_c();
  const double mx = m + fields.xi();

  DimensionlessParams dp;
  dp.beta0 = 2.0 * mu * params.v1() / (hbar * hbar * delta);
  dp.beta1 = 2.0 * mu * wc * mx / (hbar * delta);
  dp.beta2 = (mu * wc / (hbar * delta)) * (mu * wc / (hbar * delta));
  dp.eta = mx * mx - 0.25;
  return dp;
}

double effective_potential(double r, const PhysicalParams& params, const FieldConfig& fields, int m) {
  require_radius(r);
  const double hbar = params.hbar();
  const double mu = params.mu();
  const double wc = fields.omega_c();
  const double mx = m + fields.xi();
  const double s = std::exp(-params.delta() * r);
  const double one_minus_s = one_minus_exp(params.delta() * r);
  const double ratio = s / one_minus_s;

  const double yukawa = -params.v1() * s / r;
  const double linear = hbar * wc * mx * ratio / r;
  const double quadratic = 0.5 * mu * wc * wc * ratio * ratio;
  const double centrifugal = hbar * hbar / (2.0 * mu) * (mx * mx - 0.25) / (r * r);
  return yukawa + linear + quadratic + centrifugal;
}

double greene_aldrich(double r, double delta) {
  require_radius(r);
  if (!(delta > 0.0)) throw DomainError("delta must be > 0");
  const double q = delta / one_minus_exp(delta * r);
  return q * q;
}

double approximated_effective_potential(double r, const PhysicalParams& params,
                                        const FieldConfig& fields, int m) {
  require_radius(r);
  const double hbar = params.hbar();
  const double mu = params.mu();
  const double delta = params.delta();
  const double wc = fields.omega_c();
  const double mx = m + fields.xi();
  const double s = std::exp(-delta * r);
  const double one_minus_s = one_minus_exp(delta * r);
  const double ratio = s / one_minus_s;
  const double inv_r = delta / one_minus_s;

  const double yukawa = -params.v1() * s * inv_r;
  const double linear = hbar * wc * mx * ratio * inv_r;
  const double quadratic = 0.5 * mu * wc * wc * ratio * ratio;
  const double centrifugal = hbar * hbar / (2.0 * mu) * (mx * mx - 0.25) * inv_r * inv_r;
  return yukawa + linear + quadratic + centrifugal;
}

double approximated_threshold(const PhysicalParams& params, const FieldConfig& fields, int m) {
  const double mx = m + fields.xi();
  return params.energy_scale() * (mx * mx - 0.25);
}

}  // namespace yukawa
