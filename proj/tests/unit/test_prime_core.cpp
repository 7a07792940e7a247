#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "primemodes/errors.hpp"
#include "primemodes/prime_core.hpp"

using namespace primemodes;

namespace {

bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_upto(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k <= n; ++k) {
    if (trial_prime(k)) out.push_back(k);
  }
  return out;
}

// squarefree with sign by repeated division, written independently of mobius()
int mu_oracle(std::uint64_t k) {
  int primes = 0;
  for (std::uint64_t d = 2; d <= k; ++d) {
    int e = 0;
    while (k % d == 0) {
      k /= d;
      ++e;
    }
    if (e > 1) return 0;
    primes += e;
  }
  return primes % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_SUITE("prime-core") {
  TEST_CASE("small tables") {
    const auto t10 = sieve(10);
    CHECK(std::vector<std::uint64_t>(t10.primes().begin(), t10.primes().end()) ==
          std::vector<std::uint64_t>{2, 3, 5, 7});
    const auto t2 = sieve(2);
    REQUIRE(t2.size() == 1);
    CHECK(t2.primes()[0] == 2);
    CHECK_THROWS_AS(sieve(1), DomainError);
    CHECK_THROWS_AS(t10.is_prime(11), std::out_of_range);
  }

  TEST_CASE("sieve equals trial division up to 1e5, membership included") {
    const auto want = primes_upto(100'000);
    const auto t = sieve(100'000);
    CHECK(std::vector<std::uint64_t>(t.primes().begin(), t.primes().end()) == want);
    for (std::uint64_t n = 0; n <= 100'000; ++n) {
      if (t.is_prime(n) != trial_prime(n)) {
        FAIL("membership differs at " << n);
      }
    }
    // prefixes: every N <= 2000 plus random N
    std::mt19937_64 rng(0);
    std::vector<std::uint64_t> limits;
    for (std::uint64_t n = 2; n <= 2000; ++n) limits.push_back(n);
    for (int i = 0; i < 50; ++i) limits.push_back(2 + rng() % 99'999);
    for (auto n : limits) {
      const auto tn = sieve(n, kernels::Execution::Serial);
      const auto end = std::upper_bound(want.begin(), want.end(), n);
      if (!std::equal(tn.primes().begin(), tn.primes().end(), want.begin(), end) ||
          tn.size() != static_cast<std::size_t>(end - want.begin())) {
        FAIL("prefix differs at N = " << n);
      }
    }
  }

  TEST_CASE("mode-set membership") {
    const auto t = sieve(50);
    CHECK(t.contains(ModeSet::PrimesPPrime, 1));
    CHECK_FALSE(t.contains(ModeSet::PrimesPPrime, 2));
    CHECK(t.contains(ModeSet::PrimesP, 2));
    CHECK_FALSE(t.contains(ModeSet::PrimesP, 1));
    CHECK(t.contains(ModeSet::PrimesPPrime, 47));
  }

  TEST_CASE("Goldbach examples") {
    auto c = goldbach_partitions(10, ModeSet::PrimesP);
    CHECK(c.unordered == 2);
    CHECK(c.ordered == 3);
    c = goldbach_partitions(2, ModeSet::PrimesPPrime);
    CHECK(c.unordered == 1);
    CHECK(c.ordered == 1);
    c = goldbach_partitions(4, ModeSet::PrimesP);
    CHECK(c.unordered == 1);
    CHECK(c.ordered == 1);
    CHECK_THROWS_AS(goldbach_partitions(9, ModeSet::PrimesP), DomainError);
    CHECK_THROWS_AS(goldbach_partitions(10, ModeSet::Odd), DomainError);
  }

  TEST_CASE("ordered = 2 unordered - diagonal on 10^4 random even n") {
    const auto t = sieve(20'000);
    std::mt19937_64 rng(0);
    for (int i = 0; i < 10'000; ++i) {
      const std::uint64_t n = 2 * (1 + rng() % 10'000);
      for (auto modes : {ModeSet::PrimesP, ModeSet::PrimesPPrime}) {
        const auto c = goldbach_partitions(t, n, modes);
        const std::uint64_t diag = t.contains(modes, n / 2) ? 1 : 0;
        if (c.ordered != 2 * c.unordered - diag) FAIL("n = " << n);
      }
    }
  }

  TEST_CASE("count table agrees with brute force pairs") {
    const auto t = sieve(2000);
    for (auto modes : {ModeSet::PrimesP, ModeSet::PrimesPPrime}) {
      const auto table = goldbach_count_table(t, 2000, modes);
      for (std::uint64_t n = 1; n <= 2000; ++n) {
        std::uint32_t brute = 0;
        for (std::uint64_t p = 1; p < n; ++p) {
          if (in_mode_set(modes, p) && in_mode_set(modes, n - p)) ++brute;
        }
        if (table[n] != brute) FAIL(to_string(modes) << " n = " << n);
      }
    }
  }

  TEST_CASE("every even 4 <= n <= 10^6 has a Goldbach partition") {
    const auto t = sieve(1'000'000);
    const auto table = goldbach_count_table(t, 1'000'000, ModeSet::PrimesP);
    std::uint64_t zeros = 0;
    for (std::uint64_t n = 4; n <= 1'000'000; n += 2) zeros += table[n] == 0;
    CHECK(zeros == 0);
  }

  TEST_CASE("Polignac counts") {
    CHECK(polignac_count(2, 20) == 4);
    CHECK(polignac_count(2, 5) == 1);
    CHECK(polignac_count(4, 30) == 4);  // (3,7) (7,11) (13,17) (19,23)
    CHECK_THROWS_AS(polignac_count(3, 30), DomainError);
    CHECK_THROWS_AS(polignac_count(4, 5), DomainError);
    const auto t = sieve(5000);
    for (std::uint64_t gap = 2; gap <= 40; gap += 2) {
      std::uint64_t brute = 0;
      for (std::uint64_t q = gap + 2; q <= 5000; ++q) brute += trial_prime(q) && trial_prime(q - gap);
      CHECK(polignac_count(t, gap, 5000) == brute);
    }
  }

  TEST_CASE("prime zeta, direct sum") {
    const auto p10 = prime_zeta_direct(2.0, 10);
    CHECK(p10.value == doctest::Approx(1.0 / 4 + 1.0 / 9 + 1.0 / 25 + 1.0 / 49).epsilon(1e-15));
    CHECK(p10.terms == 4);
    const auto big = prime_zeta_direct(20.0, 1000);
    CHECK(big.value / std::exp2(-20.0) > 1.0);
    CHECK(big.value / std::exp2(-20.0) < 1.0 + 1e-3);

    const double P2 = 0.45224742004106549851;
    const auto d = prime_zeta_direct(2.0, 100'000'000);
    CHECK(d.value <= P2);
    CHECK(P2 - d.value <= d.tail_bound);
    CHECK_THROWS_AS(prime_zeta_direct(1.0, 100), DomainError);
  }

  TEST_CASE("Moebius function") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(30) == -1);
    for (std::uint64_t k = 1; k <= 500; ++k) CHECK(mobius(k) == mu_oracle(k));
    CHECK_THROWS(mobius(0));
  }

  TEST_CASE("Mertens constant") {
    CHECK(std::abs(mertens_constant(64) - 0.26149721284764278376) < 1e-15);
    // gamma - log(zeta(2))/2 with zeta(2) = pi^2/6
    const double two = std::numbers::egamma - 0.5 * std::log(std::numbers::pi * std::numbers::pi / 6);
    CHECK(std::abs(mertens_constant(2) - two) < 1e-15);
    CHECK(std::abs(mertens_constant(2) - 0.32836551366616018687) < 1e-15);
    CHECK(std::abs(mertens_constant(64) - mertens_constant(32)) < 1e-9);
    for (int k = 2; k <= 56; ++k) {
      CHECK(std::abs(mertens_constant(k + 8) - mertens_constant(k)) < std::exp2(-k + 4));
    }
    CHECK_THROWS_AS(mertens_constant(1), DomainError);
  }

  TEST_CASE("prime zeta by Moebius inversion") {
    const auto one = prime_zeta_mobius(4.0, 1);
    CHECK(std::abs(one.value - 0.079109873067335629765) < 1e-16);  // log zeta(4)
    struct Ref {
      double s, value;
    };
    for (auto r : {Ref{1.5, 0.84956268362156644635}, Ref{2.0, 0.45224742004106549851},
                   Ref{3.0, 0.17476263929944353642}, Ref{5.0, 0.035755017483924257133}}) {
      const auto m = prime_zeta_mobius(r.s);
      CHECK_MESSAGE(std::abs(m.value - r.value) <= m.error_bound + 1e-16, "s = " << r.s);
      CHECK(m.error_bound < 1e-13);
    }
    const auto thirty = prime_zeta_mobius(30.0);
    CHECK(thirty.value / std::exp2(-30.0) > 1.0);
    CHECK(thirty.value / std::exp2(-30.0) < 1.0 + 1e-5);
    CHECK_THROWS_AS(prime_zeta_mobius(0.5), DomainError);
  }

  TEST_CASE("direct and Moebius agree within combined bounds") {
    for (double s : {1.5, 2.0, 3.0, 5.0}) {
      const auto d = prime_zeta_direct(s, 1'000'000);
      const auto m = prime_zeta_mobius(s);
      CHECK(std::abs(d.value - m.value) <= d.tail_bound + m.error_bound + 1e-16);
    }
  }
}
