#pragma once

// Data-parallel building blocks shared by the prime sums.
//
// Every kernel has a Serial path (the reference) and a Parallel path driven
// by OpenMP. Work is split into partials whose boundaries depend only on the
// inputs, each partial is summed serially with compensation, and partials are
// combined with pairwise_sum. Both paths therefore return identical bits for
// any thread count.

#include <algorithm>
#include <bit>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <type_traits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "primemodes/summation.hpp"

namespace primemodes::kernels {

enum class Execution { Serial, Parallel };

/// Caps the OpenMP team size for Parallel kernels. n <= 0 restores the default.
void set_thread_count(int n);
int thread_count();

/// Odd-only segmented sieve of Eratosthenes over [0, limit].
///
/// Segment i covers the integers [i*span, min((i+1)*span, limit+1)); bit j of
/// a segment stands for the odd number begin + 2j + 1. A segment of the
/// default span is a 128 KiB bitset.
class SegmentedSieve {
 public:
  static constexpr std::uint64_t kDefaultSpan = std::uint64_t{1} << 21;
  static constexpr std::uint64_t kMaxLimit = std::uint64_t{1} << 40;

  explicit SegmentedSieve(std::uint64_t limit, std::uint64_t span = kDefaultSpan);

  std::uint64_t limit() const { return limit_; }
  std::uint64_t span() const { return span_; }
  std::size_t segment_count() const { return count_; }
  std::uint64_t segment_begin(std::size_t i) const { return i * span_; }
  std::uint64_t segment_end(std::size_t i) const;

  void sieve_segment(std::size_t i, std::vector<std::uint64_t>& bits) const;

  /// Calls f(p) for every prime p in segment i, ascending. Segment 0 starts with 2.
  template <class F>
  void for_each_prime(std::size_t i, std::vector<std::uint64_t>& bits, F&& f) const {
    if (i == 0 && limit_ >= 2) f(std::uint64_t{2});
    sieve_segment(i, bits);
    const std::uint64_t begin = segment_begin(i);
    for (std::size_t w = 0; w < bits.size(); ++w) {
      std::uint64_t word = bits[w];
      while (word != 0) {
        const int j = std::countr_zero(word);
        word &= word - 1;
        f(begin + 2 * (std::uint64_t{w} * 64 + static_cast<std::uint64_t>(j)) + 1);
      }
    }
  }

 private:
  std::uint64_t limit_;
  std::uint64_t span_;
  std::size_t count_;
  std::vector<std::uint32_t> base_primes_;  // odd primes <= sqrt(limit)
};

/// Evaluates fn(i, scratch) for every segment and returns the results in
/// segment order. `scratch` is a per-thread bit buffer.
template <class T, class SegmentFn>
std::vector<T> map_segments(const SegmentedSieve& sieve, Execution exec, SegmentFn&& fn) {
  const auto n = static_cast<std::ptrdiff_t>(sieve.segment_count());
  std::vector<T> out(static_cast<std::size_t>(n));
  if (exec == Execution::Serial) {
    std::vector<std::uint64_t> scratch;
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = fn(static_cast<std::size_t>(i), scratch);
    return out;
  }
#pragma omp parallel
  {
    std::vector<std::uint64_t> scratch;
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = fn(static_cast<std::size_t>(i), scratch);
  }
  return out;
}

template <class T>
struct Accumulator;
template <>
struct Accumulator<double> {
  using type = CompensatedSum;
};
template <>
struct Accumulator<std::complex<double>> {
  using type = ComplexCompensatedSum;
};

template <class T>
struct PrimeSum {
  T value{};
  std::uint64_t terms = 0;
};

/// Sum of weight(p) over primes p <= sieve.limit(), optionally skipping 2.
template <class T, class Weight>
PrimeSum<T> sum_over_primes(const SegmentedSieve& sieve, Execution exec, bool skip_two,
                            Weight&& weight) {
  auto partials = map_segments<PrimeSum<T>>(
      sieve, exec, [&](std::size_t i, std::vector<std::uint64_t>& bits) {
        typename Accumulator<T>::type acc;
        std::uint64_t terms = 0;
        sieve.for_each_prime(i, bits, [&](std::uint64_t p) {
          if (skip_two && p == 2) return;
          acc.add(weight(p));
          ++terms;
        });
        return PrimeSum<T>{acc.value(), terms};
      });
  std::vector<T> values(partials.size());
  PrimeSum<T> out;
  for (std::size_t i = 0; i < partials.size(); ++i) {
    values[i] = partials[i].value;
    out.terms += partials[i].terms;
  }
  out.value = pairwise_sum(values);
  return out;
}

/// Sum of term(n) for n = first, first+step, ..., n <= last, in fixed chunks.
template <class T, class Term>
T sum_progression(std::uint64_t first, std::uint64_t last, std::uint64_t step, Execution exec,
                  Term&& term) {
  if (first > last || step == 0) return T{};
  constexpr std::uint64_t kChunk = std::uint64_t{1} << 16;
  const std::uint64_t count = (last - first) / step + 1;
  const auto chunks = static_cast<std::ptrdiff_t>((count + kChunk - 1) / kChunk);
  std::vector<T> partials(static_cast<std::size_t>(chunks));
  auto run = [&](std::ptrdiff_t c) {
    typename Accumulator<T>::type acc;
    const std::uint64_t k0 = static_cast<std::uint64_t>(c) * kChunk;
    const std::uint64_t k1 = std::min(count, k0 + kChunk);
    for (std::uint64_t k = k0; k < k1; ++k) acc.add(term(first + k * step));
    partials[c] = acc.value();
  };
  if (exec == Execution::Serial) {
    for (std::ptrdiff_t c = 0; c < chunks; ++c) run(c);
  } else {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t c = 0; c < chunks; ++c) run(c);
  }
  return pairwise_sum(partials);
}

/// pi(limit) by streaming the sieve.
std::uint64_t count_primes(std::uint64_t limit, Execution exec = Execution::Parallel);

}  // namespace primemodes::kernels
