#include "primemodes/abel_sums.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "primemodes/errors.hpp"

namespace primemodes {

using kernels::Execution;
using kernels::SegmentedSieve;

namespace {

constexpr std::uint64_t kSearchCeiling = std::uint64_t{1} << 62;

void check_damping(double a) {
  if (!(a >= kMinDamping) || !std::isfinite(a)) {
    throw DomainError("damping must be finite and >= 1e-8, got " + std::to_string(a));
  }
}

void check_tol(double tol) {
  if (!(tol >= kMinTolerance)) {
    throw DomainError("tolerance must be >= 1e-13, got " + std::to_string(tol));
  }
}

void check_prime_family(ModeSet modes) {
  if (!is_prime_family(modes)) {
    throw DomainError("expected PrimesP or PrimesPPrime, got " + std::string(to_string(modes)));
  }
}

std::uint64_t certified_cutoff(AbelKind kind, double a, double tol, const AbelOptions& options) {
  const std::uint64_t max_cutoff = std::min(options.max_cutoff, SegmentedSieve::kMaxLimit);
  const std::uint64_t n = cutoff_for(kind, a, tol);
  if (n > max_cutoff) {
    const double best = std::exp(log_tail_bound(kind, a, max_cutoff));
    throw CapacityError("tolerance " + std::to_string(tol) + " at a = " + std::to_string(a) +
                            " needs cutoff " + std::to_string(n) + " > " +
                            std::to_string(max_cutoff),
                        best, max_cutoff);
  }
  return n;
}

double log1m_exp(double a) { return std::log(-std::expm1(-a)); }  // log(1 - e^{-a})

template <class T, class Term>
T integer_family_sum(ModeSet modes, std::uint64_t cutoff, Execution exec, Term&& term) {
  switch (modes) {
    case ModeSet::AllIntegers: return kernels::sum_progression<T>(1, cutoff, 1, exec, term);
    case ModeSet::Even: return kernels::sum_progression<T>(2, cutoff, 2, exec, term);
    case ModeSet::Odd: return kernels::sum_progression<T>(1, cutoff, 2, exec, term);
    default: break;
  }
  throw DomainError("not an integer family");
}

}  // namespace

double log_tail_bound(AbelKind kind, double a, std::uint64_t cutoff) {
  if (!(a > 0.0)) throw DomainError("damping must be positive");
  const double M = static_cast<double>(cutoff) + 1.0;
  switch (kind) {
    case AbelKind::InversePrimes:
      // sum_{n>N} e^{-an}/n <= (1/M) sum_{n>=M} e^{-an}
      return -a * M - std::log(M) - log1m_exp(a);
    case AbelKind::Primes:
      // sum_{n>=M} n x^n = x^M (M - (M-1) x) / (1-x)^2, and M - (M-1)x = 1 + (M-1)(1-x)
      return -a * M + std::log1p((M - 1.0) * -std::expm1(-a)) - 2.0 * log1m_exp(a);
    case AbelKind::Plain:
      return -a * M - log1m_exp(a);
  }
  return 0.0;
}

std::uint64_t cutoff_for(AbelKind kind, double a, double tol) {
  if (!(a > 0.0) || !(tol > 0.0)) throw DomainError("cutoff_for needs a > 0 and tol > 0");
  const double log_tol = std::log(tol);
  auto ok = [&](std::uint64_t n) { return log_tail_bound(kind, a, n) <= log_tol; };
  if (ok(2)) return 2;
  std::uint64_t lo = 2;
  std::uint64_t hi = std::max<std::uint64_t>(2, static_cast<std::uint64_t>(std::ceil(1.0 / a)));
  while (!ok(hi)) {
    lo = hi;
    if (hi >= kSearchCeiling) return kSearchCeiling;
    hi *= 2;
  }
  // invariant: !ok(lo), ok(hi)
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

namespace {

kernels::PrimeSum<double> prime_sum_impl(AbelKind kind, double a, ModeSet modes,
                                         std::uint64_t cutoff, Execution exec) {
  check_prime_family(modes);
  auto weight = [kind, a](std::uint64_t n) {
    const double p = static_cast<double>(n);
    const double e = std::exp(-a * p);
    switch (kind) {
      case AbelKind::InversePrimes: return e / p;
      case AbelKind::Primes: return p * e;
      case AbelKind::Plain: return e;
    }
    return 0.0;
  };
  const bool pprime = modes == ModeSet::PrimesPPrime;
  if (cutoff < 2) {
    if (pprime && cutoff == 1) return {weight(1), 1};
    return {};
  }
  SegmentedSieve sieve(cutoff);
  auto sum = kernels::sum_over_primes<double>(sieve, exec, pprime, weight);
  if (pprime) {
    sum.value += weight(1);
    ++sum.terms;
  }
  return sum;
}

}  // namespace

double prime_damped_sum(AbelKind kind, double a, ModeSet modes, std::uint64_t cutoff,
                        Execution exec) {
  return prime_sum_impl(kind, a, modes, cutoff, exec).value;
}

namespace {

AbelSumResult prime_abel(AbelKind kind, double a, ModeSet modes, double tol,
                         const AbelOptions& options) {
  check_prime_family(modes);
  check_damping(a);
  check_tol(tol);
  const std::uint64_t n = certified_cutoff(kind, a, tol, options);
  AbelSumResult out;
  const auto sum = prime_sum_impl(kind, a, modes, n, options.execution);
  out.value = sum.value;
  out.damping = a;
  out.cutoff = n;
  out.tail_bound = std::exp(log_tail_bound(kind, a, n));
  out.terms = sum.terms;
  return out;
}

}  // namespace

AbelSumResult f_abel(double a, ModeSet modes, double tol, const AbelOptions& options) {
  return prime_abel(AbelKind::InversePrimes, a, modes, tol, options);
}

AbelSumResult g_abel(double a, ModeSet modes, double tol, const AbelOptions& options) {
  return prime_abel(AbelKind::Primes, a, modes, tol, options);
}

ComplexAbelSumResult mode_sum_complex(std::complex<double> z, ModeSet modes, double tol,
                                      const AbelOptions& options) {
  check_damping(z.real());
  check_tol(tol);
  if (!std::isfinite(z.imag())) throw DomainError("mode_sum_complex needs finite Im z");
  const std::uint64_t n = certified_cutoff(AbelKind::Plain, z.real(), tol, options);
  auto term = [z](std::uint64_t k) { return std::exp(-static_cast<double>(k) * z); };
  ComplexAbelSumResult out;
  out.damping = z.real();
  out.cutoff = n;
  out.tail_bound = std::exp(log_tail_bound(AbelKind::Plain, z.real(), n));
  if (is_prime_family(modes)) {
    const bool pprime = modes == ModeSet::PrimesPPrime;
    SegmentedSieve sieve(n);
    const auto sum =
        kernels::sum_over_primes<std::complex<double>>(sieve, options.execution, pprime, term);
    out.value = pprime ? sum.value + term(1) : sum.value;
    out.terms = sum.terms + (pprime ? 1 : 0);
  } else {
    out.value = integer_family_sum<std::complex<double>>(modes, n, options.execution, term);
    out.terms = modes == ModeSet::AllIntegers ? n : (modes == ModeSet::Even ? n / 2 : (n + 1) / 2);
  }
  return out;
}

AbelSumResult damped_energy_sum(ModeSet modes, double eps, double R, const AbelOptions& options) {
  if (!(eps > 0.0) || !(R > 0.0)) throw DomainError("damped_energy_sum needs eps > 0 and R > 0");
  const double a = eps / R;
  check_damping(a);
  AbelSumResult out;
  out.damping = a;
  if (is_prime_family(modes)) {
    // -(4 pi R^2)^{-1} g(a); ask g for ~1e-15 relative to its 1/a^2 size.
    const double scale = -1.0 / (4.0 * std::numbers::pi * R * R);
    const auto g = g_abel(a, modes, std::max(kMinTolerance, 1e-15 / (a * a)), options);
    out.value = scale * g.value;
    out.cutoff = g.cutoff;
    out.tail_bound = std::abs(scale) * g.tail_bound;
    out.terms = g.terms;
    return out;
  }
  // (2 pi R)^{-1} sum_n (n/R) e^{-a n}; tail relative to the 1/a^2 leading size.
  const double scale = 1.0 / (2.0 * std::numbers::pi * R * R);
  const double tol = 1e-17 / (a * a);
  const std::uint64_t n = certified_cutoff(AbelKind::Primes, a, tol, options);
  const double sum = integer_family_sum<double>(modes, n, options.execution, [a](std::uint64_t k) {
    const double x = static_cast<double>(k);
    return x * std::exp(-a * x);
  });
  out.value = scale * sum;
  out.cutoff = n;
  out.tail_bound = scale * std::exp(log_tail_bound(AbelKind::Primes, a, n));
  out.terms = modes == ModeSet::AllIntegers ? n : (modes == ModeSet::Even ? n / 2 : (n + 1) / 2);
  return out;
}

}  // namespace primemodes
