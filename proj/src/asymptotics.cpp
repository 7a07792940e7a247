#include "primemodes/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "primemodes/abel_sums.hpp"
#include "primemodes/errors.hpp"
#include "primemodes/prime_core.hpp"
#include "primemodes/special_functions.hpp"

namespace primemodes {

namespace {

constexpr double kSeriesSwitch = 0.25;  // below this t the I1 bracket uses its Taylor series
constexpr int kSeriesTerms = 24;

double mertens_b1() {
  static const double b1 = mertens_constant(64);
  return b1;
}

void check_series_args(double a, int k_max) {
  if (!(a > 0.0) || !(a < std::exp(-1.0))) {
    throw DomainError("log series needs 0 < a < 1/e, got a = " + std::to_string(a));
  }
  if (k_max < 0 || k_max > 12) throw DomainError("log series needs 0 <= k_max <= 12");
}

void check_unit_interval(double a) {
  if (!(a > 0.0) || !(a < 1.0)) throw DomainError("need 0 < a < 1, got " + std::to_string(a));
}

// Taylor coefficients of h(t) = Gamma(-it) - i e^{-t}/t about t = 0:
// h_m = b_{m+1} (-i)^m - i (-1)^{m+1} / (m+1)!,  b = Taylor coefficients of Gamma(1+z).
const std::vector<Complex>& bracket_series() {
  static const std::vector<Complex> h = [] {
    const auto b = gamma_series(1, kSeriesTerms + 1).coeffs;
    std::vector<Complex> out(kSeriesTerms);
    Complex mi_pow{1.0, 0.0};  // (-i)^m
    double fact = 1.0;         // (m+1)!
    for (int m = 0; m < kSeriesTerms; ++m) {
      fact *= m + 1;
      const double sign = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^{m+1}
      out[m] = b[m + 1] * mi_pow - Complex{0.0, sign / fact};
      mi_pow *= Complex{0.0, -1.0};
    }
    return out;
  }();
  return h;
}

Complex bracket(double t) {
  if (t < kSeriesSwitch) {
    const auto& h = bracket_series();
    Complex acc{0.0, 0.0};
    for (auto it = h.rbegin(); it != h.rend(); ++it) acc = acc * t + *it;
    return acc;
  }
  return gamma_complex(Complex{0.0, -t}) - Complex{0.0, std::exp(-t) / t};
}

// Panels resolve half-periods pi/L; the envelope decays like e^{-pi t/2}
// (Gamma) and e^{-t} (the subtracted pole), which fixes t_max.
double t_max_for(double tol) {
  const double lt = std::log(1.0 / tol);
  return std::max({40.0, 2.0 * (12.0 + lt) / std::numbers::pi, lt + 2.0});
}

}  // namespace

AsymptoticSeries AsymptoticSeries::f_series(int k_max) {
  if (k_max < 0 || k_max > 20) throw DomainError("f_series needs 0 <= k_max <= 20");
  const auto g1 = gamma_derivatives(1, k_max);
  AsymptoticSeries s;
  s.kind = Kind::FSeries;
  s.k_max = k_max;
  s.B1 = mertens_b1();
  for (int k = 1; k <= k_max; ++k) {
    s.coefficients.push_back(-(k % 2 == 0 ? 1.0 : -1.0) * g1[k] / k);
  }
  return s;
}

AsymptoticSeries AsymptoticSeries::g_series(int k_max) {
  if (k_max < 0 || k_max > 20) throw DomainError("g_series needs 0 <= k_max <= 20");
  const auto g2 = gamma_derivatives(2, k_max);
  AsymptoticSeries s;
  s.kind = Kind::GSeries;
  s.k_max = k_max;
  s.B1 = mertens_b1();
  for (int k = 0; k <= k_max; ++k) s.coefficients.push_back((k % 2 == 0 ? 1.0 : -1.0) * g2[k]);
  return s;
}

double AsymptoticSeries::evaluate(double a) const {
  const double L = -std::log(a);
  const double inv = 1.0 / L;
  double acc = 0.0;
  // Horner in 1/L, highest order first.
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = (acc + *it) * inv;
  if (kind == Kind::FSeries) return std::log(L) + B1 + acc;
  return acc / (a * a);
}

double f_log_series(double a, int k_max) {
  check_series_args(a, k_max);
  return AsymptoticSeries::f_series(k_max).evaluate(a);
}

double g_log_series(double a, int k_max) {
  check_series_args(a, k_max);
  return AsymptoticSeries::g_series(k_max).evaluate(a);
}

QuadratureValue oscillatory_I1(double a, double tol) {
  check_unit_interval(a);
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const double L = -std::log(a);
  auto f = [L](double t) {
    return (std::polar(1.0, -t * L) * bracket(t)).imag();
  };
  return integrate_panels(f, t_max_for(tol), std::numbers::pi / L, 1.0, tol);
}

double oscillatory_I1_series(double a, int k_max) {
  check_unit_interval(a);
  if (k_max < 0 || k_max > 20) throw DomainError("I1 series needs 0 <= k_max <= 20");
  const auto g1 = gamma_derivatives(1, k_max);
  const double L = -std::log(a);
  double acc = 0.0;
  for (int k = k_max; k >= 1; --k) {
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    acc += sign * g1[k] / k * std::pow(L, -k) - 0.5 * sign / k * std::pow(L, -2 * k);
  }
  return acc;
}

QuadratureValue f_integral_form(double a, double tol) {
  const auto i1 = oscillatory_I1(a, tol);
  const double L = -std::log(a);
  return {0.5 * std::log1p(L * L) + mertens_b1() - i1.value, i1.error, i1.panels};
}

QuadratureValue F_of_a(double a, double tol) {
  check_unit_interval(a);
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const double L = -std::log(a);
  auto f = [L](double t) {
    return (std::polar(1.0, -t * L) * gamma_complex(Complex{2.0, -t})).imag();
  };
  const auto q = integrate_panels(f, t_max_for(tol), std::numbers::pi / L, 1.0, tol);
  const double s = 1.0 / (a * a);
  return {-s * q.value, s * q.error, q.panels};
}

double fit_loglog_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = std::min(x.size(), y.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) continue;
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++used;
  }
  if (used < 2) return std::numeric_limits<double>::quiet_NaN();
  const double m = static_cast<double>(used);
  const double den = m * sxx - sx * sx;
  if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return (m * sxy - sx * sy) / den;
}

ResidualReport residual_report(ResidualKind kind, std::span<const double> a_grid, int k_max,
                               double tol) {
  std::vector<double> grid(a_grid.begin(), a_grid.end());
  std::sort(grid.begin(), grid.end());
  for (double a : grid) check_unit_interval(a);
  if (k_max < 0 || k_max > 12) throw DomainError("residual_report needs 0 <= k_max <= 12");

  ResidualReport out;
  out.kind = kind;
  const bool is_f = kind == ResidualKind::F;
  auto normalize = [is_f](double a, double r) {
    return is_f ? r / std::pow(a, 0.45) : r * std::pow(a, 1.55);
  };
  auto fitted = [is_f](const ResidualRow& row) {
    return is_f ? std::abs(row.residual) : row.a * row.a * std::abs(row.residual);
  };

  for (double a : grid) {
    const double exact =
        is_f ? f_abel(a, ModeSet::PrimesP, std::max(kMinTolerance, std::min(tol, 1e-12))).value
             : g_abel(a, ModeSet::PrimesP, std::max(kMinTolerance, 1e-12 / (a * a))).value;
    const double integral = is_f ? f_integral_form(a, tol).value : F_of_a(a, tol).value;
    out.integral_rows.push_back(
        {a, exact, integral, exact - integral, normalize(a, exact - integral)});
    if (a < std::exp(-1.0)) {
      const double series = is_f ? f_log_series(a, k_max) : g_log_series(a, k_max);
      out.series_rows.push_back({a, exact, series, exact - series, normalize(a, exact - series)});
    }
  }

  auto exponent = [&](const std::vector<ResidualRow>& rows) {
    std::vector<double> x, y;
    for (const auto& r : rows) {
      x.push_back(r.a);
      y.push_back(fitted(r));
    }
    return fit_loglog_slope(x, y);
  };
  out.integral_exponent = exponent(out.integral_rows);
  out.series_exponent = exponent(out.series_rows);
  return out;
}

}  // namespace primemodes
