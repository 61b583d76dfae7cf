#pragma once

#include <span>
#include <vector>

namespace yukawa {

/// Coefficients of 2F1(a, -n; c; s) = sum_{k=0}^{n} coeff[k] s^k, built by the
/// Pochhammer recurrence coeff[k+1] = coeff[k] (a+k)(k-n) / ((c+k)(k+1)).
/// The second argument is the integer -n, so the series stops at k = n exactly.
/// Throws DomainError if c + k == 0 for some k < n.
std::vector<double> terminating_series_coefficients(double a, int n, double c);

/// Value of the terminating series at s.
double hypergeometric_terminating(double a, int n, double c, double s);

/// Horner evaluation of sum coeff[k] s^k and its first two derivatives.
struct PolynomialValue {
  double value = 0.0;
  double first = 0.0;
  double second = 0.0;
};
PolynomialValue evaluate_polynomial(std::span<const double> coeffs, double s);

}  // namespace yukawa
