#pragma once

// Physical inputs, the dimensionless reduction of the radial problem, and the
// effective potential (exact and Greene-Aldrich approximated).

namespace yukawa {

/// Particle and potential constants. Natural units (hbar = mu = e = c = 1)
/// with V1 = 2 and delta = 0.005 by default.
class PhysicalParams {
 public:
  struct Init {
    double hbar = 1.0;
    double mu = 1.0;
    double e_charge = 1.0;
    double c_light = 1.0;
    double v1 = 2.0;       // Yukawa strength, energy * length
    double delta = 0.005;  // screening, 1 / length
  };

  PhysicalParams() : PhysicalParams(Init{}) {}
  /// Throws DomainError naming the first violated invariant.
  explicit PhysicalParams(const Init& init);

  double hbar() const { return v_.hbar; }
  double mu() const { return v_.mu; }
  double e_charge() const { return v_.e_charge; }
  double c_light() const { return v_.c_light; }
  double v1() const { return v_.v1; }
  double delta() const { return v_.delta; }
  const Init& values() const { return v_; }

  PhysicalParams with_delta(double delta) const;
  PhysicalParams with_v1(double v1) const;

  /// hbar^2 delta^2 / (2 mu), the natural energy unit of the reduced problem.
  double energy_scale() const;

  friend bool operator==(const PhysicalParams& a, const PhysicalParams& b) {
    return a.v_.hbar == b.v_.hbar && a.v_.mu == b.v_.mu && a.v_.e_charge == b.v_.e_charge &&
           a.v_.c_light == b.v_.c_light && a.v_.v1 == b.v_.v1 && a.v_.delta == b.v_.delta;
  }

 private:
  Init v_;
};

/// What to do with a non-integer AB flux ratio.
enum class XiPolicy { Warn, Reject };

/// External fields: cyclotron frequency omega_c and AB flux ratio xi.
class FieldConfig {
 public:
  FieldConfig() = default;
  /// Throws DomainError if omega_c < 0, or if xi is non-integer under Reject.
  FieldConfig(double omega_c, double xi, XiPolicy policy = XiPolicy::Warn);

  /// omega_c = e B / (mu c).
  static FieldConfig from_magnetic_field(double b_field, const PhysicalParams& params, double xi,
                                         XiPolicy policy = XiPolicy::Warn);

  double omega_c() const { return omega_c_; }
  double xi() const { return xi_; }
  bool xi_is_integer() const;

  FieldConfig with_omega_c(double omega_c) const;
  FieldConfig with_xi(double xi) const;

  friend bool operator==(const FieldConfig& a, const FieldConfig& b) {
    return a.omega_c_ == b.omega_c_ && a.xi_ == b.xi_;
  }

 private:
  double omega_c_ = 0.0;
  double xi_ = 0.0;
};

/// Radial quantum number n >= 0 and magnetic quantum number m.
struct QuantumNumbers {
  int n = 0;
  int m = 0;

  QuantumNumbers() = default;
  QuantumNumbers(int n_, int m_);  // throws DomainError for n < 0

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

/// beta0 = 2 mu V1 / (hbar^2 delta), beta1 = 2 mu omega_c (m + xi) / (hbar delta),
/// beta2 = mu^2 omega_c^2 / (hbar^2 delta^2), eta = (m + xi)^2 - 1/4.
struct DimensionlessParams {
  double beta0 = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  double eta = 0.0;

  /// beta2 + beta1 + (m + xi)^2 = 1/4 + beta2 + beta1 + eta; nu exists iff >= 0.
  double nu_radicand() const { return 0.25 + beta2 + beta1 + eta; }
};

DimensionlessParams reduce(const PhysicalParams& params, const FieldConfig& fields, int m);

/// V_eff(r): Yukawa + linear field + quadratic field + centrifugal.
/// Throws DomainError for r <= 0.
double effective_potential(double r, const PhysicalParams& params, const FieldConfig& fields, int m);

/// delta^2 / (1 - e^{-delta r})^2, the stand-in for 1/r^2.
double greene_aldrich(double r, double delta);

/// V_eff with 1/r -> delta/(1 - e^{-delta r}) and 1/r^2 -> greene_aldrich(r, delta).
/// Its spectrum is exactly the closed-form one.
double approximated_effective_potential(double r, const PhysicalParams& params,
                                        const FieldConfig& fields, int m);

/// Limit of the approximated potential as r -> infinity: hbar^2 delta^2 eta / (2 mu).
/// The exact potential tends to 0 instead.
double approximated_threshold(const PhysicalParams& params, const FieldConfig& fields, int m);

}  // namespace yukawa
