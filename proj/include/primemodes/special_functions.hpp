#pragma once

#include <complex>
#include <vector>

namespace primemodes {

using Complex = std::complex<double>;

/// Truncated power series sum_j coeffs[j] * (x - center)^j.
struct PowerSeries {
  double center = 0.0;
  std::vector<double> coeffs;

  double operator()(double x) const;
};

/// Riemann zeta for real s > 1 by Euler-Maclaurin summation.
double zeta_real(double s);

/// zeta(s) - 1, accurate to full relative precision for large s.
double zeta_minus_one(double s);

/// Complex Gamma via a Lanczos approximation (g = 607/128, 15 terms) and the
/// reflection formula for Re z < 1/2. Relative error below 1e-12 for
/// |Im z| <= 200. Throws PoleError at non-positive integers and DomainError
/// when the result would not be finite.
Complex gamma_complex(Complex z);

/// Series of log Gamma(1 + z) about z = 0: -gamma z + sum_{j>=2} (-1)^j zeta(j) z^j / j.
/// Requires k_max <= 30.
PowerSeries log_gamma_series_at_1(int k_max);

/// Taylor coefficients of Gamma(center + z), center in {1, 2}, up to z^k_max.
PowerSeries gamma_series(int center, int k_max);

/// Gamma^{(k)}(center) for k = 0..k_max, center in {1, 2}. Requires k_max <= 20.
std::vector<double> gamma_derivatives(int center, int k_max);

}  // namespace primemodes
