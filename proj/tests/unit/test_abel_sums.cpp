#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "primemodes/abel_sums.hpp"
#include "primemodes/asymptotics.hpp"
#include "primemodes/casimir.hpp"
#include "primemodes/errors.hpp"
#include "primemodes/mode_set.hpp"

using namespace primemodes;
using std::numbers::pi;

namespace {

// long double brute force over trial-division primes
long double brute(double a, int power, int upto = 400, bool pprime = false) {
  long double s = 0.0L;
  for (int n = upto; n >= 1; --n) {
    if (!in_mode_set(pprime ? ModeSet::PrimesPPrime : ModeSet::PrimesP, n)) continue;
    s += std::pow(static_cast<long double>(n), power) * std::exp(-static_cast<long double>(a) * n);
  }
  return s;
}

}  // namespace

TEST_SUITE("abel-sums") {
  TEST_CASE("brute-force values at a = 1") {
    const auto f = f_abel(1.0, ModeSet::PrimesP, 1e-13);
    const auto g = g_abel(1.0, ModeSet::PrimesP, 1e-13);
    const auto p = mode_sum_complex({1.0, 0.0}, ModeSet::PrimesP, 1e-13);
    CHECK(std::abs(f.value - static_cast<double>(brute(1.0, -1))) <= f.tail_bound + 1e-16);
    CHECK(std::abs(g.value - static_cast<double>(brute(1.0, 1))) <= g.tail_bound + 1e-16);
    CHECK(std::abs(p.value.real() - static_cast<double>(brute(1.0, 0))) <= p.tail_bound + 1e-16);
    CHECK(p.value.imag() == 0.0);
    CHECK(f.value == doctest::Approx(0.0857429).epsilon(1e-6));
    CHECK(g.value == doctest::Approx(0.460319).epsilon(1e-6));
    CHECK(p.value.real() == doctest::Approx(0.192791).epsilon(1e-6));
    const auto fp = f_abel(1.0, ModeSet::PrimesPPrime, 1e-13);
    CHECK(fp.value == doctest::Approx(static_cast<double>(brute(1.0, -1, 400, true))).epsilon(1e-14));
  }

  TEST_CASE("large damping is dominated by the first prime") {
    const auto f = f_abel(50.0, ModeSet::PrimesP, 1e-13);
    CHECK(f.value < 1e-40);
    CHECK(f.value / (std::exp(-100.0) / 2) == doctest::Approx(1.0).epsilon(1e-6));
    const auto g = g_abel(50.0, ModeSet::PrimesP, 1e-13);
    CHECK(g.value / (2 * std::exp(-100.0)) == doctest::Approx(1.0).epsilon(1e-6));
  }

  TEST_CASE("tail bounds dominate the true integer tails") {
    for (double a : {0.05, 0.3, 1.0}) {
      for (std::uint64_t N : {3ull, 10ull, 100ull}) {
        long double inv = 0, lin = 0, plain = 0;
        for (std::uint64_t n = 200000; n > N; --n) {
          const long double e = std::exp(-static_cast<long double>(a) * n);
          inv += e / n;
          lin += e * n;
          plain += e;
        }
        CHECK(std::exp(log_tail_bound(AbelKind::InversePrimes, a, N)) >= inv * (1 - 1e-12));
        CHECK(std::exp(log_tail_bound(AbelKind::Primes, a, N)) ==
              doctest::Approx(static_cast<double>(lin)).epsilon(1e-12));
        CHECK(std::exp(log_tail_bound(AbelKind::Plain, a, N)) ==
              doctest::Approx(static_cast<double>(plain)).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("cutoff_for is minimal") {
    for (auto kind : {AbelKind::InversePrimes, AbelKind::Primes, AbelKind::Plain}) {
      for (double a : {1e-6, 1e-3, 0.2, 3.0}) {
        const double tol = 1e-11;
        const auto n = cutoff_for(kind, a, tol);
        CHECK(log_tail_bound(kind, a, n) <= std::log(tol));
        if (n > 2) CHECK(log_tail_bound(kind, a, n - 1) > std::log(tol));
      }
    }
  }

  TEST_CASE("tail certification: doubling the cutoff moves the sum by at most the bound") {
    std::mt19937_64 rng(0);
    std::uniform_real_distribution<double> la(std::log(1e-4), 0.0), lt(std::log(1e-13), std::log(1e-6));
    for (int i = 0; i < 20; ++i) {
      const double a = std::exp(la(rng));
      const double tol = std::exp(lt(rng));
      for (auto kind : {AbelKind::InversePrimes, AbelKind::Primes}) {
        const auto r = kind == AbelKind::InversePrimes ? f_abel(a, ModeSet::PrimesP, tol)
                                                       : g_abel(a, ModeSet::PrimesP, tol);
        CHECK(r.tail_bound <= tol);
        const double wider = prime_damped_sum(kind, a, ModeSet::PrimesP, 2 * r.cutoff);
        CHECK(std::abs(wider - r.value) <= r.tail_bound + 4e-16 * std::abs(wider));
      }
    }
  }

  TEST_CASE("monotone decreasing in a") {
    double pf = INFINITY, pg = INFINITY;
    for (double a = 1e-4; a <= 1.0; a *= 1.7) {
      const double f = f_abel(a, ModeSet::PrimesP, 1e-13).value;
      const double g = g_abel(a, ModeSet::PrimesP, 1e-10).value;
      CHECK(f < pf);
      CHECK(g < pg);
      pf = f;
      pg = g;
    }
  }

  TEST_CASE("-f'(a) equals the plain damped sum") {
    for (double a : {0.5, 0.1, 0.01}) {
      const double h = 1e-4 * a;
      const auto n = cutoff_for(AbelKind::InversePrimes, a - h, 1e-16);
      const double d = (prime_damped_sum(AbelKind::InversePrimes, a - h, ModeSet::PrimesP, n) -
                        prime_damped_sum(AbelKind::InversePrimes, a + h, ModeSet::PrimesP, n)) /
                       (2 * h);
      const double plain = mode_sum_complex({a, 0.0}, ModeSet::PrimesP, 1e-13).value.real();
      CHECK(std::abs(d / plain - 1) < 1e-6);
    }
  }

  TEST_CASE("complex sums: Schwarz reflection and integer families") {
    const std::complex<double> z{0.03, 1.7};
    const auto s = mode_sum_complex(z, ModeSet::PrimesPPrime, 1e-12).value;
    const auto c = mode_sum_complex(std::conj(z), ModeSet::PrimesPPrime, 1e-12).value;
    CHECK(std::abs(std::conj(s) - c) <= 1e-14 * std::abs(s));
    // sum_{n>=1} e^{-nz} = 1/(e^z - 1)
    const auto all = mode_sum_complex(z, ModeSet::AllIntegers, 1e-13).value;
    CHECK(std::abs(all - 1.0 / (std::exp(z) - 1.0)) < 1e-12);
    const auto even = mode_sum_complex(z, ModeSet::Even, 1e-13).value;
    CHECK(std::abs(even - 1.0 / (std::exp(2.0 * z) - 1.0)) < 1e-12);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(f_abel(1e-9, ModeSet::PrimesP, 1e-10), DomainError);
    CHECK_THROWS_AS(f_abel(0.1, ModeSet::PrimesP, 1e-14), DomainError);
    CHECK_THROWS_AS(f_abel(0.1, ModeSet::Odd, 1e-10), DomainError);
    AbelOptions small;
    small.max_cutoff = 1000;
    try {
      f_abel(1e-4, ModeSet::PrimesP, 1e-12, small);
      FAIL("expected CapacityError");
    } catch (const CapacityError& e) {
      CHECK(e.best_bound() > 1e-12);
      CHECK(e.max_cutoff() == 1000);
    }
  }

  TEST_CASE("damped energy sums") {
    for (double eps : {0.1, 0.01}) {
      const double sum = damped_energy_sum(ModeSet::AllIntegers, eps, 1.0).value;
      CHECK(std::abs(sum / closed_form_energy(eps, 1.0) - 1) < 1e-12);
      // sum over even n of n e^{-eps n} = 2 sum_m m e^{-2 eps m}
      const double even = damped_energy_sum(ModeSet::Even, eps, 2.0).value;
      const double all2 = damped_energy_sum(ModeSet::AllIntegers, 2 * eps, 2.0).value;
      CHECK(std::abs(even / (2 * all2) - 1) < 1e-13);
      const double odd = damped_energy_sum(ModeSet::Odd, eps, 2.0).value;
      const double all = damped_energy_sum(ModeSet::AllIntegers, eps, 2.0).value;
      CHECK(std::abs((even + odd) / all - 1) < 1e-13);
    }
    const auto prime = damped_energy_sum(ModeSet::PrimesP, 1.0, 1.0);
    CHECK(prime.value == doctest::Approx(-static_cast<double>(brute(1.0, 1)) / (4 * pi)).epsilon(1e-13));
    CHECK(prime.value == doctest::Approx(-0.0366310).epsilon(1e-5));
  }

  TEST_CASE("f at a = 1e-4 against the five-term asymptote") {
    const double f = f_abel(1e-4, ModeSet::PrimesP, 1e-12).value;
    CHECK(std::abs(f - f_log_series(1e-4, 5)) < 3e-3);
  }
}
