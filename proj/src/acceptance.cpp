#include "primemodes/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "primemodes/abel_sums.hpp"
#include "primemodes/asymptotics.hpp"
#include "primemodes/casimir.hpp"
#include "primemodes/fock.hpp"
#include "primemodes/prime_core.hpp"
#include "primemodes/special_functions.hpp"
#include "primemodes/table.hpp"

namespace primemodes {

namespace {

using std::numbers::pi;
constexpr double kEulerGamma = std::numbers::egamma;
constexpr double kApery = 1.2020569031595942854;  // zeta(3)

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string g(double x) { return format_double(x); }

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

// --- 1: renormalized Casimir densities at R = 1, eps = 1e-3
Outcome casimir_constants(const AcceptanceOptions&) {
  struct Target {
    ModeSet modes;
    double value;
    double tol;
  };
  const Target targets[] = {
      {ModeSet::AllIntegers, -1.0 / (24.0 * pi), 1e-7},
      {ModeSet::Even, -1.0 / (6.0 * pi), 1e-6},
      {ModeSet::Odd, 1.0 / (12.0 * pi), 1e-6},
  };
  Outcome o{true, ""};
  for (const auto& t : targets) {
    const auto rep = renormalized_energy(t.modes, 1.0, 1e-3);
    const double diff = std::abs(rep.renormalized - t.value);
    const bool ok = diff <= t.tol;
    o.passed = o.passed && ok;
    o.detail += std::string(to_string(t.modes)) + "=" + fmt("%.10f", rep.renormalized) +
                " (target " + fmt("%.10f", t.value) + ", |diff| " + fmt("%.3g", diff) +
                (ok ? ") " : " > tol) ");
  }
  return o;
}

// --- 2: damped integer energy sum vs closed form, 10-point grid
Outcome closed_form_identity(const AcceptanceOptions&) {
  const double grid[10][2] = {{1e-3, 1.0}, {3e-3, 2.0}, {1e-2, 0.5}, {3e-2, 3.0}, {0.1, 1.0},
                              {0.3, 1.5},  {1.0, 4.0},  {5e-2, 0.7}, {2e-3, 1.0}, {0.5, 2.5}};
  double worst = 0.0;
  for (const auto& p : grid) {
    const double sum = damped_energy_sum(ModeSet::AllIntegers, p[0], p[1]).value;
    const double closed = closed_form_energy(p[0], p[1]);
    worst = std::max(worst, std::abs(sum - closed) / std::abs(closed));
  }
  return {worst <= 1e-12, "max relative deviation " + fmt("%.3g", worst) + " (tol 1e-12)"};
}

// --- 3: Mertens constant to 8 digits
Outcome mertens(const AcceptanceOptions&) {
  const double b1 = mertens_constant(64);
  const bool ok = std::round(b1 * 1e8) == 26149721.0;
  return {ok, "B1 = " + g(b1) + " (expected 0.26149721...)"};
}

// --- 4: first three f-series coefficients
Outcome series_coefficients(const AcceptanceOptions&) {
  const auto s = AsymptoticSeries::f_series(3);
  const double gm = kEulerGamma;
  const double expected[3] = {
      -gm,
      -(pi * pi + 6.0 * gm * gm) / 12.0,
      -(4.0 * kApery + gm * pi * pi + 2.0 * gm * gm * gm) / 6.0,
  };
  double worst = 0.0;
  std::string d;
  for (int k = 0; k < 3; ++k) {
    const double rel = std::abs(s.coefficients[k] - expected[k]) / std::abs(expected[k]);
    worst = std::max(worst, rel);
    d += "c" + std::to_string(k + 1) + "=" + g(s.coefficients[k]) + " ";
  }
  return {worst <= 1e-12, d + "max rel " + fmt("%.3g", worst) + " (tol 1e-12)"};
}

// --- 5: f(a) - log(-log a) - B1 shrinks monotonically, < 0.05 at a = 1e-6
Outcome f_leading_law(const AcceptanceOptions&) {
  const double b1 = mertens_constant(64);
  const double grid[] = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  double prev = INFINITY;
  bool mono = true;
  std::string d;
  double last = 0.0;
  for (double a : grid) {
    const double f = f_abel(a, ModeSet::PrimesP, 1e-12).value;
    last = std::abs(f - std::log(-std::log(a)) - b1);
    mono = mono && last < prev;
    prev = last;
    d += fmt("%.0e:", a) + fmt("%.5f ", last);
  }
  return {mono && last < 0.05, d + (mono ? "monotone" : "NOT monotone")};
}

// --- 6: integral-form residual decay exponent
Outcome f_integral_decay(const AcceptanceOptions&) {
  const double grid[] = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
  const auto rep = residual_report(ResidualKind::F, grid, 5, 1e-10);
  std::string d;
  for (const auto& r : rep.integral_rows) d += fmt("%.0e:", r.a) + fmt("%.3e ", r.residual);
  return {rep.integral_exponent >= 0.4,
          d + "exponent " + fmt("%.4f", rep.integral_exponent) + " (>= 0.4)"};
}

// --- 7: a^2 |g - F| decay exponent
Outcome g_vs_F(const AcceptanceOptions&) {
  const double grid[] = {1e-2, 1e-3, 1e-4};
  const auto rep = residual_report(ResidualKind::G, grid, 5, 1e-10);
  std::string d;
  for (const auto& r : rep.integral_rows) {
    d += fmt("%.0e:", r.a) + fmt("%.3e ", r.a * r.a * std::abs(r.residual));
  }
  return {rep.integral_exponent >= 0.4,
          d + "exponent " + fmt("%.4f", rep.integral_exponent) + " (>= 0.4)"};
}

// --- 8: f'' = g via central second differences
Outcome derivative_link(const AcceptanceOptions&) {
  double worst = 0.0;
  std::string d;
  for (double a : {0.5, 0.1, 0.01}) {
    const double h = 1e-3 * a;
    // One cutoff for all three evaluations so the truncated sums share their terms.
    const auto n = cutoff_for(AbelKind::InversePrimes, a - h, 1e-15);
    const double fm = prime_damped_sum(AbelKind::InversePrimes, a - h, ModeSet::PrimesP, n);
    const double f0 = prime_damped_sum(AbelKind::InversePrimes, a, ModeSet::PrimesP, n);
    const double fp = prime_damped_sum(AbelKind::InversePrimes, a + h, ModeSet::PrimesP, n);
    const double second = (fp - 2.0 * f0 + fm) / (h * h);
    const double gv = g_abel(a, ModeSet::PrimesP, std::max(kMinTolerance, 1e-14 / (a * a))).value;
    const double rel = std::abs(second - gv) / std::abs(gv);
    worst = std::max(worst, rel);
    d += fmt("a=%g:", a) + fmt("%.2e ", rel);
  }
  return {worst <= 1e-4, d + "(tol 1e-4 relative)"};
}

// Ordered pairs (p, q), p + q = n, by trial division only.
std::uint64_t brute_ordered_pairs(int n, ModeSet modes) {
  std::uint64_t c = 0;
  for (int p = 1; p < n; ++p) {
    if (in_mode_set(modes, static_cast<std::uint64_t>(p)) &&
        in_mode_set(modes, static_cast<std::uint64_t>(n - p))) {
      ++c;
    }
  }
  return c;
}

// --- 9: central terms
Outcome central_terms(const AcceptanceOptions&) {
  int failures = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    if (failures++ == 0) first = what;
  };
  for (int n = 2; n <= 20; n += 2) {
    const auto all = central_term(n, n, ModeSet::AllIntegers, 2 * n);
    if (std::abs(all.normalized - 1.0) > 1e-12) fail("AllIntegers n=" + std::to_string(n));
    const auto odd = central_term(n, n, ModeSet::Odd, 2 * n);
    if (std::abs(odd.normalized - 0.5) > 1e-12) fail("Odd n=" + std::to_string(n));
  }
  for (int n = 2; n <= 40; n += 2) {
    for (auto modes : {ModeSet::PrimesPPrime, ModeSet::PrimesP}) {
      const auto rep = central_term(n, n, modes, 2 * n);
      const double expected = static_cast<double>(brute_ordered_pairs(n, modes));
      if (rep.raw != expected) {
        fail(std::string(to_string(modes)) + " n=" + std::to_string(n) + " raw " + g(rep.raw) +
             " vs " + g(expected));
      }
    }
  }
  int off = 0;
  for (auto modes : {ModeSet::AllIntegers, ModeSet::Even, ModeSet::Odd, ModeSet::PrimesP,
                     ModeSet::PrimesPPrime}) {
    const int step = (modes == ModeSet::AllIntegers || modes == ModeSet::PrimesP) ? 1 : 2;
    for (int n = step; n <= 12; n += step) {
      for (int m = step; m <= 12; m += step) {
        if (n == m) continue;
        ++off;
        const auto rep = central_term(n, m, modes, n + m);
        if (rep.raw != 0.0) fail("off-diagonal " + std::string(to_string(modes)));
      }
    }
  }
  std::string d = "diagonal n<=20 (integer sets), n<=40 (prime sets), " + std::to_string(off) +
                  " off-diagonal cells";
  if (failures) d += "; " + std::to_string(failures) + " failures, first: " + first;
  return {failures == 0, d};
}

// --- 10: two-point function, 100 random samples
Outcome two_point(const AcceptanceOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> ang(-pi, pi);
  std::uniform_real_distribution<double> leps(std::log(1e-2), 0.0);
  std::uniform_real_distribution<double> lR(std::log(0.5), std::log(2.0));
  std::uniform_int_distribution<int> nmax(200, 5000);
  int bad = 0;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double R = std::exp(lR(rng));
    const auto s = two_point_scalar(R * ang(rng), R * ang(rng), R * std::exp(leps(rng)), R,
                                    nmax(rng));
    const double dev = std::abs(s.mode_sum - s.closed_form);
    worst = std::max(worst, dev / s.bound);
    if (dev > s.bound) ++bad;
  }
  return {bad == 0, std::to_string(bad) + " of 100 outside bound; max |diff|/bound " +
                        fmt("%.3g", worst)};
}

// --- 11: no plateau for primes, plateaus for the integer families
Outcome non_renormalizable(const AcceptanceOptions&) {
  const double grid[] = {1e-4, 1e-3, 1e-2};
  const auto rep = prime_energy_report(1.0, grid, ModeSet::PrimesP);
  // rows ascending in eps
  const double d_small = std::abs(rep.rows.front().difference);
  const double d_mid = std::abs(rep.rows[1].difference);
  const double d_large = std::abs(rep.rows.back().difference);
  const double growth = d_small / d_large;
  const bool diverges = growth > 10.0 && d_small > d_mid && d_mid > d_large;

  // Integer families: next correction is c eps^2 / (480 pi R^2), c = 1, 8, -7.
  const double eps = 1e-3;
  bool plateau = true;
  std::string pd;
  for (auto [modes, c] : {std::pair{ModeSet::AllIntegers, 1.0}, std::pair{ModeSet::Even, 8.0},
                          std::pair{ModeSet::Odd, 7.0}}) {
    const double r1 = renormalized_energy(modes, 1.0, eps).renormalized;
    const double r2 = renormalized_energy(modes, 1.0, eps / 2).renormalized;
    const double pred = c * eps * eps / (480.0 * pi);
    const bool ok = std::abs(r1 - r2) < 4.0 * pred;
    plateau = plateau && ok;
    pd += std::string(to_string(modes)) + (ok ? " plateau " : " NO plateau ");
  }
  return {diverges && plateau, "prime |difference| at eps=1e-4,1e-3,1e-2: " + fmt("%.4g", d_small) +
                                   ", " + fmt("%.4g", d_mid) + ", " + fmt("%.4g", d_large) +
                                   " (growth " + fmt("%.1f", growth) + "x); " + pd};
}

// --- 12: prime zeta cross-method
Outcome prime_zeta_cross(const AcceptanceOptions&) {
  bool ok = true;
  std::string d;
  for (double s : {1.5, 2.0, 3.0, 5.0}) {
    const auto direct = prime_zeta_direct(s, 100'000'000);
    const auto mob = prime_zeta_mobius(s);
    const double diff = std::abs(direct.value - mob.value);
    const double bound = direct.tail_bound + mob.error_bound +
                         4.0 * std::numeric_limits<double>::epsilon() * direct.value;
    ok = ok && diff <= bound;
    d += fmt("s=%g:", s) + fmt("|diff| %.2e", diff) + fmt(" <= %.2e ", bound);
  }
  return {ok, d};
}

struct Criterion {
  int id;
  const char* name;
  double budget;
  Outcome (*run)(const AcceptanceOptions&);
};

constexpr Criterion kCriteria[] = {
    {1, "renormalized Casimir densities", 1.0, casimir_constants},
    {2, "damped energy sum closed form", 1.0, closed_form_identity},
    {3, "Mertens constant", 1.0, mertens},
    {4, "f-series coefficients", 1.0, series_coefficients},
    {5, "f(a) leading law", 120.0, f_leading_law},
    {6, "integral form residual decay", 180.0, f_integral_decay},
    {7, "g(a) vs F(a) decay", 120.0, g_vs_F},
    {8, "second derivative link f'' = g", 10.0, derivative_link},
    {9, "central terms", 30.0, central_terms},
    {10, "two-point function", 5.0, two_point},
    {11, "non-renormalizability signature", 120.0, non_renormalizable},
    {12, "prime zeta cross-method", 60.0, prime_zeta_cross},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (const auto& c : kCriteria) {
    if (!options.only.empty() && !options.only.count(c.id)) continue;
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    r.budget_seconds = c.budget;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(options);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.passed = o.passed && r.seconds <= c.budget;
    r.detail = o.detail;
    if (r.seconds > c.budget) r.detail += " [over runtime budget]";
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace primemodes
