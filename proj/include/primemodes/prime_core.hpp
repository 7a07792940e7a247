#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "primemodes/kernels.hpp"
#include "primemodes/mode_set.hpp"

namespace primemodes {

/// Primes up to a limit, with O(1) membership on [1, limit].
class PrimeTable {
 public:
  PrimeTable() = default;

  std::uint64_t limit() const { return limit_; }
  std::span<const std::uint64_t> primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }

  /// Throws std::out_of_range for n > limit.
  bool is_prime(std::uint64_t n) const;

  /// Membership of n in a mode family restricted to [1, limit].
  bool contains(ModeSet modes, std::uint64_t n) const;

 private:
  friend PrimeTable sieve(std::uint64_t, kernels::Execution);

  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> odd_bits_;  // bit k <-> 2k+1 is prime
  std::vector<std::uint64_t> primes_;
};

/// Sieves [2, limit]. Requires 2 <= limit <= 2^40.
PrimeTable sieve(std::uint64_t limit, kernels::Execution exec = kernels::Execution::Parallel);

struct PartitionCount {
  std::uint64_t n = 0;
  ModeSet modes = ModeSet::PrimesP;
  std::uint64_t ordered = 0;    // pairs (p, q) with p + q = n
  std::uint64_t unordered = 0;  // pairs with p <= q
};

/// Goldbach partitions of an even n over PrimesP or PrimesPPrime.
PartitionCount goldbach_partitions(const PrimeTable& table, std::uint64_t n, ModeSet modes);
PartitionCount goldbach_partitions(std::uint64_t n, ModeSet modes);

/// Ordered partition counts for every n in [0, max_n] (odd entries included,
/// which for PrimesPPrime are always zero). Index n holds r(n).
std::vector<std::uint32_t> goldbach_count_table(const PrimeTable& table, std::uint64_t max_n,
                                                ModeSet modes,
                                                kernels::Execution exec = kernels::Execution::Parallel);

/// Number of prime pairs (p, p + gap) with p + gap <= limit.
std::uint64_t polignac_count(const PrimeTable& table, std::uint64_t gap, std::uint64_t limit);
std::uint64_t polignac_count(std::uint64_t gap, std::uint64_t limit);

/// Truncated prime zeta sum with a certified bound on the omitted tail.
struct PrimeZetaSum {
  double s = 0.0;
  std::uint64_t limit = 0;
  double value = 0.0;
  double tail_bound = 0.0;  // 0 <= P(s) - value <= tail_bound
  std::uint64_t terms = 0;
};

PrimeZetaSum prime_zeta_direct(double s, std::uint64_t limit,
                               kernels::Execution exec = kernels::Execution::Parallel);

/// Moebius function by trial factoring.
int mobius(std::uint64_t k);

/// gamma + sum_{k=2}^{k_max} mu(k)/k log zeta(k).
double mertens_constant(int k_max = 64);

struct PrimeZetaSeries {
  double s = 0.0;
  int k_max = 0;
  double value = 0.0;
  double error_bound = 0.0;  // truncation plus evaluation allowance
};

/// P(s) = sum_k mu(k)/k log zeta(k s). k_max <= 0 picks the smallest k_max
/// whose truncation bound is below 1e-18.
PrimeZetaSeries prime_zeta_mobius(double s, int k_max = 0);

}  // namespace primemodes
