#pragma once

#include <complex>
#include <span>
#include <vector>

#include "primemodes/mode_set.hpp"

namespace primemodes {

/// 1 / (2 pi R^2 (e^{eps/2R} - e^{-eps/2R})^2), the damped integer-mode energy sum in closed form.
double closed_form_energy(double eps, double R);

struct EnergyDensityReport {
  ModeSet modes = ModeSet::AllIntegers;
  double R = 0.0;
  double eps = 0.0;
  double raw = 0.0;
  double counterterm = 0.0;
  double renormalized = 0.0;  // raw - counterterm
};

/// Point-split energy density minus its flat-space divergence c/(2 pi eps^2),
/// c = 1 for AllIntegers and 1/2 for Even or Odd. Requires eps/R <= 1e-2.
/// Prime families throw UnsupportedError (see prime_energy_report).
EnergyDensityReport renormalized_energy(ModeSet modes, double R, double eps);

/// Exact rational multiple of 1/pi.
struct RationalOverPi {
  long num = 0;
  long den = 1;
  double value() const;
};

/// Zeta-regularized vacuum energy density coefficient of 1/R^2: (1/2 pi) S(-1)
/// with S(s) = zeta(s), 2^{-s} zeta(s), (1 - 2^{-s}) zeta(s) for all, even and
/// odd modes, and zeta(-1) = -1/12. Prime families throw UnsupportedError:
/// the prime zeta function has a natural boundary at Re s = 0.
RationalOverPi zeta_regularized_density(ModeSet modes);

/// Ramanujan values S(-1) for the three integer families: -1/12, -1/6, 1/12.
struct Rational {
  long num = 0;
  long den = 1;
};
Rational ramanujan_sum_at_minus_one(ModeSet modes);

struct PrimeEnergyRow {
  double eps = 0.0;
  double raw = 0.0;          // -(4 pi R^2)^{-1} g(eps/R)
  double counterterm = 0.0;  // -(4 pi R^2)^{-1} F(eps/R)  (+ 1/(4 pi R^2) for PrimesPPrime)
  double difference = 0.0;   // raw - counterterm
  double scaled_residual = 0.0;  // (eps/R)^2 * 4 pi R^2 * |difference|
};

struct PrimeEnergyReport {
  ModeSet modes = ModeSet::PrimesP;
  double R = 0.0;
  std::vector<PrimeEnergyRow> rows;  // ascending eps
  double scaled_residual_exponent = 0.0;
};

PrimeEnergyReport prime_energy_report(double R, std::span<const double> eps_grid,
                                      ModeSet modes = ModeSet::PrimesP, double tol = 1e-10);

struct TwoPointSample {
  double du = 0.0;
  double dv = 0.0;
  double eps = 0.0;
  double R = 0.0;
  int n_max = 0;
  std::complex<double> mode_sum;
  std::complex<double> closed_form;
  double truncation_bound = 0.0;
  double bound = 0.0;  // truncation_bound plus a floating-point allowance
};

/// Scalar two-point function on the cylinder, as a truncated mode sum and in closed form
/// -(1/4 pi) [log(1 - e^{-i(du - i eps)/R}) + log(1 - e^{-i(dv - i eps)/R})].
TwoPointSample two_point_scalar(double du, double dv, double eps, double R, int n_max);

/// (1 / 2 pi R) sum_{p in P'} e^{-p (eps + i d)/R}.
std::complex<double> two_point_prime(double d, double eps, double R, double tol);

}  // namespace primemodes
