#pragma once

#include <span>
#include <vector>

#include "primemodes/quadrature.hpp"

namespace primemodes {

/// Small-a expansions of the damped prime sums.
///
/// FSeries: f(a) ~ log L + B1 + sum_{k=1}^{k_max} c_k L^{-k},  c_k = -(-1)^k Gamma^{(k)}(1)/k
/// GSeries: g(a) ~ a^{-2} sum_{k=0}^{k_max} d_k L^{-(k+1)},   d_k = (-1)^k Gamma^{(k)}(2)
/// with L = -log a.
struct AsymptoticSeries {
  enum class Kind { FSeries, GSeries };

  Kind kind = Kind::FSeries;
  int k_max = 0;
  std::vector<double> coefficients;  // FSeries: index k-1 holds c_k; GSeries: index k holds d_k
  double B1 = 0.0;

  static AsymptoticSeries f_series(int k_max);
  static AsymptoticSeries g_series(int k_max);

  double evaluate(double a) const;
};

/// f_log_series(a, k) = FSeries with k terms. Requires 0 < a < 1/e, k_max <= 12.
double f_log_series(double a, int k_max);

/// g_log_series(a, k) = GSeries with terms 0..k. Requires 0 < a < 1/e, k_max <= 12.
double g_log_series(double a, int k_max);

/// Im of the integral over t in [0, inf) of e^{i t log a} (Gamma(-i t) - i e^{-t}/t).
///
/// The bracket tends to -gamma + i at t = 0; below t = 0.25 it is evaluated
/// from its Taylor series so the two 1/t poles cancel exactly.
QuadratureValue oscillatory_I1(double a, double tol);

/// Large-L asymptotic series of oscillatory_I1:
/// sum_k (-1)^k Gamma^{(k)}(1)/k L^{-k} - 1/2 sum_k (-1)^k/k L^{-2k}, k = 1..k_max.
double oscillatory_I1_series(double a, int k_max);

/// 1/2 log(1 + L^2) + B1 - I1(a).
QuadratureValue f_integral_form(double a, double tol);

/// F(a) = -a^{-2} Im of the integral of e^{i t log a} Gamma(2 - i t) over [0, inf).
/// The reported error is the integral's error times a^{-2}.
QuadratureValue F_of_a(double a, double tol);

/// One row of a residual table: residual = exact - approx.
struct ResidualRow {
  double a = 0.0;
  double exact = 0.0;
  double approx = 0.0;
  double residual = 0.0;
  double normalized_residual = 0.0;  // f: residual / a^{0.45};  g: residual * a^{1.55}
};

enum class ResidualKind { F, G };

struct ResidualReport {
  ResidualKind kind = ResidualKind::F;
  std::vector<ResidualRow> integral_rows;  // approx = f_integral_form or F_of_a
  std::vector<ResidualRow> series_rows;    // approx = truncated log series
  double integral_exponent = 0.0;          // fitted decay exponent, NaN if < 2 rows
  double series_exponent = 0.0;
};

/// Least-squares slope of log y against log x.
double fit_loglog_slope(std::span<const double> x, std::span<const double> y);

/// Compares the exact Abel sums against both asymptotic forms on a grid of a.
/// Rows are sorted by a. For F the fitted quantity is |residual|, for G it is
/// a^2 |residual|.
ResidualReport residual_report(ResidualKind kind, std::span<const double> a_grid, int k_max,
                               double tol);

}  // namespace primemodes
