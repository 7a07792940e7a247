#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "primemodes/abel_sums.hpp"
#include "primemodes/asymptotics.hpp"
#include "primemodes/errors.hpp"
#include "primemodes/prime_core.hpp"
#include "primemodes/quadrature.hpp"

using namespace primemodes;
using std::numbers::pi;

namespace {
constexpr double kGamma = std::numbers::egamma;
constexpr double kB1 = 0.26149721284764278376;
}  // namespace

TEST_SUITE("asymptotics") {
  TEST_CASE("panel quadrature on known integrals") {
    // int_0^inf e^{-t} cos(3t) dt = 1/10
    auto f = [](double t) { return std::exp(-t) * std::cos(3 * t); };
    const auto q = integrate_panels(f, 50.0, pi / 3, 1.0, 1e-13);
    CHECK(std::abs(q.value - 0.1) < 1e-13);
    CHECK(q.error <= 1e-13);
    CHECK_THROWS_AS(integrate_panels(f, 50.0, pi / 3, 1.0, 1e-300), QuadratureError);
  }

  TEST_CASE("f log series leading terms") {
    const double a = 1e-6;
    const double L = -std::log(a);
    CHECK(f_log_series(a, 0) == doctest::Approx(std::log(L) + kB1).epsilon(1e-14));
    CHECK(f_log_series(a, 0) == doctest::Approx(2.88727).epsilon(1e-5));
    CHECK(f_log_series(a, 1) - f_log_series(a, 0) == doctest::Approx(-kGamma / L).epsilon(1e-12));
    CHECK(-kGamma / L == doctest::Approx(-0.04178).epsilon(1e-3));
    CHECK_THROWS_AS(f_log_series(0.5, 2), DomainError);
    CHECK_THROWS_AS(f_log_series(0.1, 13), DomainError);
  }

  TEST_CASE("series coefficients in closed form") {
    const auto s = AsymptoticSeries::f_series(3);
    const double z3 = 1.2020569031595942854;
    CHECK(s.coefficients[0] == doctest::Approx(-kGamma).epsilon(1e-12));
    CHECK(s.coefficients[1] == doctest::Approx(-(pi * pi + 6 * kGamma * kGamma) / 12).epsilon(1e-12));
    CHECK(s.coefficients[2] ==
          doctest::Approx(-(4 * z3 + kGamma * pi * pi + 2 * kGamma * kGamma * kGamma) / 6)
              .epsilon(1e-12));
    const auto g = AsymptoticSeries::g_series(2);
    CHECK(g.coefficients[0] == 1.0);
    CHECK(g.coefficients[1] == doctest::Approx(-(1 - kGamma)).epsilon(1e-14));
  }

  TEST_CASE("truncated f series approaches f(1e-3) over the first terms") {
    const double f = f_abel(1e-3, ModeSet::PrimesP, 1e-12).value;
    std::vector<double> err;
    for (int k = 0; k <= 5; ++k) err.push_back(std::abs(f - f_log_series(1e-3, k)));
    MESSAGE("|f - series_k| at a=1e-3: " << err[0] << " " << err[1] << " " << err[2] << " "
                                         << err[3] << " " << err[4] << " " << err[5]);
    CHECK(err[1] < err[0]);
    CHECK(err[2] < err[1]);
    CHECK(err[5] < err[0]);
  }

  TEST_CASE("I1 reference values") {
    struct Ref {
      double a, v;
    };
    for (auto r : {Ref{0.5, 0.595138551663}, Ref{0.1, 0.496403451456}, Ref{1e-2, 0.229394178031},
                   Ref{1e-3, 0.125892639545}, Ref{1e-4, 0.0841803134632},
                   Ref{1e-5, 0.0631208720204}, Ref{1e-6, 0.0505066295958}}) {
      const auto q = oscillatory_I1(r.a, 1e-12);
      CHECK_MESSAGE(std::abs(q.value - r.v) < 2e-12, "a = " << r.a << " got " << q.value);
    }
  }

  TEST_CASE("halving the panels stays within the reported error") {
    for (double a : {1e-2, 1e-4}) {
      const auto coarse = oscillatory_I1(a, 1e-9);
      const auto fine = oscillatory_I1(a, 1e-13);
      CHECK(std::abs(coarse.value - fine.value) <= coarse.error);
      const auto Fc = F_of_a(a, 1e-9);
      const auto Ff = F_of_a(a, 1e-13);
      CHECK(std::abs(Fc.value - Ff.value) <= Fc.error);
    }
  }

  TEST_CASE("I1 minus its four-term series is O(L^-5)") {
    std::vector<double> Ls, res;
    for (double a : {1e-8, 1e-16, 1e-32, 1e-64}) {
      const double r = oscillatory_I1(a, 1e-13).value - oscillatory_I1_series(a, 4);
      Ls.push_back(-std::log(a));
      res.push_back(std::abs(r));
    }
    const double slope = fit_loglog_slope(Ls, res);
    MESSAGE("residual slope in L: " << slope);
    CHECK(slope < -4.5);
  }

  TEST_CASE("F(a) reference values and leading order") {
    struct Ref {
      double a, v;
    };
    for (auto r : {Ref{1e-2, 2057.489}, Ref{1e-3, 138322.198}, Ref{1e-4, 10460497.20}}) {
      CHECK(F_of_a(r.a, 1e-10).value == doctest::Approx(r.v).epsilon(1e-6));
    }
    const double a = 1e-4;
    const double lead = F_of_a(a, 1e-10).value * a * a * -std::log(a);
    CHECK(lead >= 0.8);
    CHECK(lead <= 1.2);
    // relative agreement with the five-term series improves as a decreases
    double prev = INFINITY;
    for (double x : {1e-2, 1e-4, 1e-8}) {
      const double r = std::abs(F_of_a(x, 1e-10).value / g_log_series(x, 4) - 1);
      CHECK(r < prev);
      prev = r;
    }
  }

  TEST_CASE("integral form and log series merge") {
    for (double a : {1e-30, 1e-100}) {
      const double L = -std::log(a);
      CHECK(std::abs(0.5 * std::log1p(L * L) - std::log(L)) < 1.0 / (L * L));
    }
    double prev = INFINITY;
    for (double a : {1e-4, 1e-6, 1e-12}) {
      const double d = std::abs(f_integral_form(a, 1e-12).value - f_log_series(a, 8));
      CHECK(d < prev);
      prev = d;
    }
    CHECK(prev < 1e-5);
  }

  TEST_CASE("residual reports") {
    const std::vector<double> grid{1e-6, 1e-2, 1e-4, 1e-3, 1e-5};
    const auto rep = residual_report(ResidualKind::F, grid, 5, 1e-10);
    REQUIRE(rep.integral_rows.size() == 5);
    CHECK(rep.integral_rows.front().a == 1e-6);  // sorted
    for (const auto& r : rep.integral_rows) CHECK(r.residual == r.exact - r.approx);
    CHECK(rep.integral_exponent >= 0.4);
    const auto tighter = residual_report(ResidualKind::F, grid, 5, 1e-12);
    CHECK(std::abs(tighter.integral_exponent - rep.integral_exponent) < 1e-4);

    const auto g = residual_report(ResidualKind::G, std::vector<double>{1e-2, 1e-3, 1e-4}, 5, 1e-10);
    CHECK(g.integral_exponent >= 0.4);

    const auto empty = residual_report(ResidualKind::F, std::vector<double>{}, 5, 1e-10);
    CHECK(empty.integral_rows.empty());
    CHECK(std::isnan(empty.integral_exponent));
  }

  TEST_CASE("bracketing by consecutive truncations (empirical)") {
    for (int k = 0; k <= 3; ++k) {
      const double a = 1e-6;
      const double f = f_abel(a, ModeSet::PrimesP, 1e-12).value;
      const double lo = f_log_series(a, k), hi = f_log_series(a, k + 1);
      const bool brackets = (f - lo) * (f - hi) <= 0;
      MESSAGE("k=" << k << " brackets f(1e-6): " << std::string(brackets ? "yes" : "no"));
    }
  }
}
