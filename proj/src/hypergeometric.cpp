#include "yukawa/hypergeometric.hpp"

#include <string>

#include "yukawa/errors.hpp"

namespace yukawa {

std::vector<double> terminating_series_coefficients(double a, int n, double c) {
  if (n < 0) throw DomainError("series degree n must be >= 0");
  std::vector<double> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs[0] = 1.0;
  for (int k = 0; k < n; ++k) {
    const double denom = (c + k) * (k + 1);
    if (c + k == 0.0) {
      throw DomainError("hypergeometric c = " + std::to_string(c) +
                        " hits a Pochhammer zero before the series terminates");
    }
    coeffs[k + 1] = coeffs[k] * (a + k) * (k - n) / denom;
  }
  return coeffs;
}

double hypergeometric_terminating(double a, int n, double c, double s) {
  const auto coeffs = terminating_series_coefficients(a, n, c);
  return evaluate_polynomial(coeffs, s).value;
}

PolynomialValue evaluate_polynomial(std::span<const double> coeffs, double s) {
  PolynomialValue p;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    p.second = p.second * s + 2.0 * p.first;
    p.first = p.first * s + p.value;
    p.value = p.value * s + *it;
  }
  return p;
}

}  // namespace yukawa
