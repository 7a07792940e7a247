#include "primemodes/prime_core.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "primemodes/errors.hpp"
#include "primemodes/special_functions.hpp"
#include "primemodes/summation.hpp"

namespace primemodes {

using kernels::Execution;
using kernels::SegmentedSieve;

bool PrimeTable::is_prime(std::uint64_t n) const {
  if (n > limit_) {
    throw std::out_of_range("is_prime(" + std::to_string(n) + ") beyond table limit " +
                            std::to_string(limit_));
  }
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  const std::uint64_t k = n / 2;
  return (odd_bits_[k / 64] >> (k % 64)) & 1u;
}

bool PrimeTable::contains(ModeSet modes, std::uint64_t n) const {
  switch (modes) {
    case ModeSet::PrimesP: return is_prime(n);
    case ModeSet::PrimesPPrime: return n == 1 || (n != 2 && is_prime(n));
    default: return in_mode_set(modes, n);
  }
}

PrimeTable sieve(std::uint64_t limit, Execution exec) {
  SegmentedSieve seg(limit);
  PrimeTable table;
  table.limit_ = limit;
  // Bit k of the table is the odd number 2k+1; a segment's words start at begin/128.
  table.odd_bits_.assign(limit / 128 + 1, 0);
  auto counts = kernels::map_segments<std::uint64_t>(
      seg, exec, [&](std::size_t i, std::vector<std::uint64_t>& bits) {
        seg.sieve_segment(i, bits);
        const std::size_t offset = seg.segment_begin(i) / 128;
        std::uint64_t c = 0;
        for (std::size_t w = 0; w < bits.size(); ++w) {
          table.odd_bits_[offset + w] = bits[w];
          c += static_cast<std::uint64_t>(std::popcount(bits[w]));
        }
        return c;
      });
  std::uint64_t total = 1;
  for (auto c : counts) total += c;
  table.primes_.reserve(total);
  table.primes_.push_back(2);
  for (std::size_t w = 0; w < table.odd_bits_.size(); ++w) {
    std::uint64_t word = table.odd_bits_[w];
    while (word != 0) {
      const auto j = static_cast<std::uint64_t>(std::countr_zero(word));
      word &= word - 1;
      table.primes_.push_back(2 * (w * 64 + j) + 1);
    }
  }
  return table;
}

namespace {

void check_goldbach_args(std::uint64_t n, ModeSet modes) {
  if (n < 2 || n % 2 != 0) {
    throw DomainError("Goldbach partitions need an even n >= 2, got " + std::to_string(n));
  }
  if (!is_prime_family(modes)) {
    throw DomainError("Goldbach partitions are defined for PrimesP or PrimesPPrime, not " +
                      std::string(to_string(modes)));
  }
}

}  // namespace

PartitionCount goldbach_partitions(const PrimeTable& table, std::uint64_t n, ModeSet modes) {
  check_goldbach_args(n, modes);
  if (n > table.limit()) {
    throw DomainError("prime table limit " + std::to_string(table.limit()) +
                      " is below n = " + std::to_string(n));
  }
  PartitionCount out{n, modes, 0, 0};
  for (std::uint64_t p = 1; p <= n / 2; ++p) {
    if (!table.contains(modes, p) || !table.contains(modes, n - p)) continue;
    ++out.unordered;
    out.ordered += (p == n - p) ? 1 : 2;
  }
  return out;
}

PartitionCount goldbach_partitions(std::uint64_t n, ModeSet modes) {
  check_goldbach_args(n, modes);
  return goldbach_partitions(sieve(n, Execution::Serial), n, modes);
}

std::vector<std::uint32_t> goldbach_count_table(const PrimeTable& table, std::uint64_t max_n,
                                                ModeSet modes, Execution exec) {
  if (!is_prime_family(modes)) throw DomainError("goldbach_count_table needs a prime family");
  if (max_n > table.limit()) throw DomainError("prime table too small for goldbach_count_table");
  std::vector<std::uint64_t> members;
  if (modes == ModeSet::PrimesPPrime) members.push_back(1);
  for (auto p : table.primes()) {
    if (p > max_n) break;
    if (modes == ModeSet::PrimesPPrime && p == 2) continue;
    members.push_back(p);
  }
  const auto m = static_cast<std::ptrdiff_t>(members.size());
  std::vector<std::uint32_t> counts(max_n + 1, 0);

  auto row = [&](std::ptrdiff_t i, std::vector<std::uint32_t>& local) {
    const std::uint64_t p = members[i];
    if (2 * p <= max_n) local[2 * p] += 1;
    for (std::ptrdiff_t j = i + 1; j < m; ++j) {
      const std::uint64_t s = p + members[j];
      if (s > max_n) break;
      local[s] += 2;
    }
  };

  if (exec == Execution::Serial) {
    for (std::ptrdiff_t i = 0; i < m; ++i) row(i, counts);
    return counts;
  }
#pragma omp parallel
  {
    std::vector<std::uint32_t> local(max_n + 1, 0);
#pragma omp for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < m; ++i) row(i, local);
#pragma omp critical
    for (std::size_t k = 0; k < local.size(); ++k) counts[k] += local[k];
  }
  return counts;
}

std::uint64_t polignac_count(const PrimeTable& table, std::uint64_t gap, std::uint64_t limit) {
  if (gap < 2 || gap % 2 != 0) {
    throw DomainError("Polignac gap must be even and >= 2, got " + std::to_string(gap));
  }
  if (limit < gap + 2) throw DomainError("Polignac limit must be at least gap + 2");
  if (limit > table.limit()) throw DomainError("prime table too small for Polignac count");
  std::uint64_t count = 0;
  for (auto p : table.primes()) {
    if (p + gap > limit) break;
    if (table.is_prime(p + gap)) ++count;
  }
  return count;
}

std::uint64_t polignac_count(std::uint64_t gap, std::uint64_t limit) {
  if (gap < 2 || gap % 2 != 0) {
    throw DomainError("Polignac gap must be even and >= 2, got " + std::to_string(gap));
  }
  if (limit < gap + 2) throw DomainError("Polignac limit must be at least gap + 2");
  return polignac_count(sieve(limit), gap, limit);
}

PrimeZetaSum prime_zeta_direct(double s, std::uint64_t limit, Execution exec) {
  if (!(s > 1.0)) throw DomainError("prime zeta diverges for s <= 1");
  if (limit < 2) throw DomainError("prime zeta limit must be at least 2");
  SegmentedSieve seg(limit);
  auto sum = kernels::sum_over_primes<double>(
      seg, exec, false, [s](std::uint64_t p) { return std::pow(static_cast<double>(p), -s); });
  // sum_{n > N} n^{-s} <= int_N^inf x^{-s} dx
  const double tail = std::pow(static_cast<double>(limit), 1.0 - s) / (s - 1.0);
  return {s, limit, sum.value, tail, sum.terms};
}

int mobius(std::uint64_t k) {
  if (k == 0) throw DomainError("mobius(0) is undefined");
  int sign = 1;
  for (std::uint64_t d = 2; d <= k / d; ++d) {
    if (k % d != 0) continue;
    k /= d;
    if (k % d == 0) return 0;
    sign = -sign;
  }
  if (k > 1) sign = -sign;
  return sign;
}

double mertens_constant(int k_max) {
  if (k_max < 2) throw DomainError("mertens_constant needs k_max >= 2");
  // Smallest terms first.
  double acc = 0.0;
  for (int k = k_max; k >= 2; --k) {
    const int mu = mobius(static_cast<std::uint64_t>(k));
    if (mu == 0) continue;
    acc += mu * std::log1p(zeta_minus_one(k)) / k;
  }
  return std::numbers::egamma + acc;
}

namespace {

// sum_{n>=2} n^{-x} <= 2^{-x} (1 + 2/(x-1)), and log(1+y) <= y.
double log_zeta_bound(double x) { return std::exp2(-x) * (1.0 + 2.0 / (x - 1.0)); }

double mobius_tail_bound(double s, int k_max) {
  const double x = (k_max + 1) * s;
  return log_zeta_bound(x) / (k_max + 1) / (1.0 - std::exp2(-s));
}

}  // namespace

PrimeZetaSeries prime_zeta_mobius(double s, int k_max) {
  if (!(s > 1.0)) throw DomainError("prime zeta diverges for s <= 1");
  if (k_max <= 0) {
    k_max = 1;
    while (mobius_tail_bound(s, k_max) > 1e-18 && k_max < 400) ++k_max;
  }
  double acc = 0.0;
  double eval = 0.0;
  for (int k = k_max; k >= 1; --k) {
    const int mu = mobius(static_cast<std::uint64_t>(k));
    if (mu == 0) continue;
    const double x = k * s;
    const double zm1 = zeta_minus_one(x);
    const double term = mu * std::log1p(zm1) / k;
    acc += term;
    // zeta_minus_one is good to a few ulps of zeta(x) - 1 itself
    eval += 8.0 * std::numeric_limits<double>::epsilon() * (zm1 / k + std::abs(term));
  }
  return {s, k_max, acc, mobius_tail_bound(s, k_max) + eval};
}

}  // namespace primemodes
