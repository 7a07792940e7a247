#include "primemodes/casimir.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "primemodes/abel_sums.hpp"
#include "primemodes/asymptotics.hpp"
#include "primemodes/errors.hpp"
#include "primemodes/summation.hpp"

namespace primemodes {

using std::numbers::pi;

double closed_form_energy(double eps, double R) {
  if (!(eps > 0.0) || !(R > 0.0)) throw DomainError("closed_form_energy needs eps > 0, R > 0");
  // e^{x} - e^{-x} = 2 sinh(x), x = eps / 2R
  const double s = 2.0 * std::sinh(eps / (2.0 * R));
  return 1.0 / (2.0 * pi * R * R * s * s);
}

EnergyDensityReport renormalized_energy(ModeSet modes, double R, double eps) {
  if (is_prime_family(modes)) {
    throw UnsupportedError(
        "no flat-space subtraction renormalizes prime modes; use prime_energy_report");
  }
  if (!(eps > 0.0) || !(R > 0.0)) throw DomainError("renormalized_energy needs eps > 0, R > 0");
  if (eps / R > 1e-2) throw DomainError("renormalized_energy needs eps/R <= 1e-2");
  EnergyDensityReport out;
  out.modes = modes;
  out.R = R;
  out.eps = eps;
  out.raw = damped_energy_sum(modes, eps, R).value;
  const double c = modes == ModeSet::AllIntegers ? 1.0 : 0.5;
  out.counterterm = c / (2.0 * pi * eps * eps);
  out.renormalized = out.raw - out.counterterm;
  return out;
}

double RationalOverPi::value() const {
  return static_cast<double>(num) / (static_cast<double>(den) * pi);
}

Rational ramanujan_sum_at_minus_one(ModeSet modes) {
  // zeta(-1) = -1/12; even: 2^{-s} zeta(s); odd: (1 - 2^{-s}) zeta(s), at s = -1.
  switch (modes) {
    case ModeSet::AllIntegers: return {-1, 12};
    case ModeSet::Even: return {-1, 6};
    case ModeSet::Odd: return {1, 12};
    default: break;
  }
  throw UnsupportedError(
      "the prime zeta function has a natural boundary at Re s = 0 and cannot be "
      "continued to s = -1");
}

RationalOverPi zeta_regularized_density(ModeSet modes) {
  const Rational r = ramanujan_sum_at_minus_one(modes);
  return {r.num, 2 * r.den};  // (1 / 2 pi) S(-1)
}

PrimeEnergyReport prime_energy_report(double R, std::span<const double> eps_grid, ModeSet modes,
                                      double tol) {
  if (!is_prime_family(modes)) {
    throw UnsupportedError("prime_energy_report is for PrimesP or PrimesPPrime");
  }
  if (!(R > 0.0)) throw DomainError("R must be positive");
  std::vector<double> grid(eps_grid.begin(), eps_grid.end());
  std::sort(grid.begin(), grid.end());
  PrimeEnergyReport out;
  out.modes = modes;
  out.R = R;
  const double scale = 1.0 / (4.0 * pi * R * R);
  std::vector<double> xs, ys;
  for (double eps : grid) {
    if (!(eps > 0.0)) throw DomainError("eps must be positive");
    const double a = eps / R;
    const auto g = g_abel(a, modes, std::max(kMinTolerance, 1e-12 / (a * a)));
    const auto F = F_of_a(a, tol);
    PrimeEnergyRow row;
    row.eps = eps;
    row.raw = -scale * g.value;
    // P' = P - {2} + {1} shifts g by -1 as a -> 0, i.e. the energy by +1/(4 pi R^2).
    row.counterterm = -scale * F.value + (modes == ModeSet::PrimesPPrime ? scale : 0.0);
    row.difference = row.raw - row.counterterm;
    row.scaled_residual = a * a * std::abs(row.difference) / scale;
    out.rows.push_back(row);
    xs.push_back(eps);
    ys.push_back(row.scaled_residual);
  }
  out.scaled_residual_exponent = fit_loglog_slope(xs, ys);
  return out;
}

namespace {

// 1 - e^{-z} for z = x + iy, x > 0, without cancellation near z = 0.
std::complex<double> one_minus_exp(double x, double y) {
  const double em1 = -std::expm1(-x);  // 1 - e^{-x}
  const double s = std::sin(0.5 * y);
  const double re = 2.0 * s * s + std::cos(y) * em1;
  const double im = std::exp(-x) * std::sin(y);
  return {re, im};
}

}  // namespace

TwoPointSample two_point_scalar(double du, double dv, double eps, double R, int n_max) {
  if (!(eps > 0.0)) throw DomainError("two_point_scalar needs eps > 0");
  if (!(R > 0.0)) throw DomainError("two_point_scalar needs R > 0");
  if (n_max < 1) throw DomainError("two_point_scalar needs n_max >= 1");
  TwoPointSample out{du, dv, eps, R, n_max, {}, {}, 0.0, 0.0};
  const double x = eps / R;
  const double yu = du / R;
  const double yv = dv / R;
  ComplexCompensatedSum sum;
  double abs_sum = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const double damp = std::exp(-n * x) / n;
    // e^{-i n (d - i eps)/R} = e^{-n eps/R} e^{-i n d/R}
    sum.add(std::polar(damp, -n * yu) + std::polar(damp, -n * yv));
    abs_sum += 2.0 * damp;
  }
  const double c = 1.0 / (4.0 * pi);
  out.mode_sum = c * sum.value();
  // 1 - e^{-i(d - i eps)/R} = 1 - e^{-(x + i y)}
  out.closed_form = -c * (std::log(one_minus_exp(x, yu)) + std::log(one_minus_exp(x, yv)));
  const double M = n_max + 1.0;
  out.truncation_bound = 2.0 * c * std::exp(-x * M) / (M * -std::expm1(-x));
  const double u = std::numeric_limits<double>::epsilon();
  // rounding: accumulated sum and logs, plus the phase error of n*y in each term
  out.bound = out.truncation_bound + 16.0 * u * (c * abs_sum + std::abs(out.closed_form)) +
              2.0 * c * u * (std::abs(yu) + std::abs(yv)) / -std::expm1(-x);
  return out;
}

std::complex<double> two_point_prime(double d, double eps, double R, double tol) {
  if (!(eps > 0.0)) throw DomainError("two_point_prime needs eps > 0");
  if (!(R > 0.0)) throw DomainError("two_point_prime needs R > 0");
  const auto s = mode_sum_complex({eps / R, d / R}, ModeSet::PrimesPPrime, tol);
  return s.value / (2.0 * pi * R);
}

}  // namespace primemodes
