#pragma once

#include <complex>
#include <cstdint>

#include "primemodes/kernels.hpp"
#include "primemodes/mode_set.hpp"

namespace primemodes {

/// Value of a damped mode sum truncated at `cutoff`, with a certified bound on
/// the omitted tail (tail_bound >= |true value - value| up to rounding).
template <class T>
struct BasicAbelSumResult {
  T value{};
  double damping = 0.0;
  std::uint64_t cutoff = 0;
  double tail_bound = 0.0;
  std::uint64_t terms = 0;
};

using AbelSumResult = BasicAbelSumResult<double>;
using ComplexAbelSumResult = BasicAbelSumResult<std::complex<double>>;

struct AbelOptions {
  std::uint64_t max_cutoff = 10'000'000'000ULL;
  kernels::Execution execution = kernels::Execution::Parallel;
};

inline constexpr double kMinDamping = 1e-8;
inline constexpr double kMinTolerance = 1e-13;

/// Which damped prime sum to evaluate.
enum class AbelKind {
  InversePrimes,  // sum e^{-a p} / p        (f)
  Primes,         // sum p e^{-a p}          (g)
  Plain,          // sum e^{-a p}
};

/// Tail bounds over all integers n > cutoff, which dominate any sub-family:
///   InversePrimes: e^{-a(N+1)} / ((N+1)(1 - e^{-a}))
///   Primes:        x^M (M - (M-1)x) / (1-x)^2,  x = e^{-a}, M = N+1 (exact for integers)
///   Plain:         e^{-a(N+1)} / (1 - e^{-a})
/// Returned as natural logarithms to survive underflow.
double log_tail_bound(AbelKind kind, double a, std::uint64_t cutoff);

/// Smallest cutoff N >= 2 with tail bound <= tol (monotone search).
std::uint64_t cutoff_for(AbelKind kind, double a, double tol);

/// Damped sum over mode-set primes p <= cutoff, without tolerance logic.
double prime_damped_sum(AbelKind kind, double a, ModeSet modes, std::uint64_t cutoff,
                        kernels::Execution exec = kernels::Execution::Parallel);

/// f(a) = sum_{p in modes} e^{-a p} / p. modes must be a prime family.
AbelSumResult f_abel(double a, ModeSet modes, double tol, const AbelOptions& options = {});

/// g(a) = sum_{p in modes} p e^{-a p}.
AbelSumResult g_abel(double a, ModeSet modes, double tol, const AbelOptions& options = {});

/// sum_{p in modes} e^{-p z} for Re z > 0; tail bounded via the real damping Re z.
ComplexAbelSumResult mode_sum_complex(std::complex<double> z, ModeSet modes, double tol,
                                      const AbelOptions& options = {});

/// Damped vacuum energy density of a mode family on a circle of radius R.
///
/// Integer families: (2 pi R)^{-1} sum_n (n/R) e^{-eps n / R} over n >= 1 in the family.
/// Prime families:   -(4 pi R^2)^{-1} g(eps / R) (fermionic sign).
AbelSumResult damped_energy_sum(ModeSet modes, double eps, double R,
                                const AbelOptions& options = {});

}  // namespace primemodes
