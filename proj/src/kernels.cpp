#include "primemodes/kernels.hpp"

#include <cmath>
#include <string>

#include "primemodes/errors.hpp"

namespace primemodes::kernels {

namespace {
int g_threads = 0;
}

void set_thread_count(int n) {
  g_threads = n > 0 ? n : 0;
#ifdef _OPENMP
  if (n > 0) {
    omp_set_num_threads(n);
  } else {
    omp_set_num_threads(omp_get_num_procs());
  }
#endif
}

int thread_count() {
#ifdef _OPENMP
  return g_threads > 0 ? g_threads : omp_get_max_threads();
#else
  return 1;
#endif
}

SegmentedSieve::SegmentedSieve(std::uint64_t limit, std::uint64_t span)
    : limit_(limit), span_(span) {
  if (limit < 2) throw DomainError("sieve limit must be at least 2");
  if (limit > kMaxLimit) {
    throw DomainError("sieve limit " + std::to_string(limit) + " exceeds 2^40");
  }
  // Words must not straddle segments: span is a multiple of 128 integers.
  if (span_ < 128 || span_ % 128 != 0) throw DomainError("sieve span must be a multiple of 128");
  count_ = static_cast<std::size_t>(limit_ / span_ + 1);
  if (segment_begin(count_ - 1) > limit_) --count_;

  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit_)));
  while (root * root > limit_) --root;
  while ((root + 1) * (root + 1) <= limit_) ++root;
  std::vector<bool> composite(root + 1, false);
  for (std::uint64_t p = 3; p <= root; p += 2) {
    if (composite[p]) continue;
    base_primes_.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t q = p * p; q <= root; q += 2 * p) composite[q] = true;
  }
}

std::uint64_t SegmentedSieve::segment_end(std::size_t i) const {
  return std::min(segment_begin(i) + span_, limit_ + 1);
}

void SegmentedSieve::sieve_segment(std::size_t i, std::vector<std::uint64_t>& bits) const {
  const std::uint64_t begin = segment_begin(i);
  const std::uint64_t end = segment_end(i);
  const std::uint64_t nbits = (end - begin) / 2;  // odd numbers begin+1, begin+3, ... < end
  bits.assign((nbits + 63) / 64, ~std::uint64_t{0});
  if (nbits % 64 != 0) bits.back() = (std::uint64_t{1} << (nbits % 64)) - 1;
  if (nbits == 0) return;
  if (begin == 0) bits[0] &= ~std::uint64_t{1};  // 1 is not prime

  for (std::uint32_t p32 : base_primes_) {
    const std::uint64_t p = p32;
    const std::uint64_t sq = p * p;
    if (sq >= end) break;
    std::uint64_t start = sq;
    if (start < begin) {
      start = (begin + p - 1) / p * p;
      if (start % 2 == 0) start += p;
    }
    for (std::uint64_t q = start; q < end; q += 2 * p) {
      const std::uint64_t j = (q - begin) / 2;
      bits[j / 64] &= ~(std::uint64_t{1} << (j % 64));
    }
  }
}

std::uint64_t count_primes(std::uint64_t limit, Execution exec) {
  if (limit < 2) return 0;
  SegmentedSieve sieve(limit);
  auto counts = map_segments<std::uint64_t>(
      sieve, exec, [&](std::size_t i, std::vector<std::uint64_t>& bits) {
        sieve.sieve_segment(i, bits);
        std::uint64_t c = 0;
        for (auto w : bits) c += static_cast<std::uint64_t>(std::popcount(w));
        return c;
      });
  std::uint64_t total = 1;  // the prime 2
  for (auto c : counts) total += c;
  return total;
}

}  // namespace primemodes::kernels
