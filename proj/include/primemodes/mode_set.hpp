#pragma once

#include <cstdint>
#include <string_view>

namespace primemodes {

/// Integer family labelling the Fourier modes of a field on the circle.
///
/// PrimesP is the ordinary set of primes (2, 3, 5, ...). PrimesPPrime is the
/// odd primes together with 1, so that P u {1} = P' u {2}.
enum class ModeSet { AllIntegers, Even, Odd, PrimesP, PrimesPPrime };

std::string_view to_string(ModeSet modes);

/// Accepts the canonical names printed by to_string plus the short CLI aliases
/// (all, even, odd, primes, pprime). Throws DomainError otherwise.
ModeSet parse_mode_set(std::string_view name);

constexpr bool is_prime_family(ModeSet modes) {
  return modes == ModeSet::PrimesP || modes == ModeSet::PrimesPPrime;
}

/// True when 0 belongs to the family (relevant for fermion zero modes).
constexpr bool contains_zero(ModeSet modes) {
  return modes == ModeSet::AllIntegers || modes == ModeSet::Even;
}

/// Deterministic primality by trial division; meant for small arguments.
bool is_prime_small(std::uint64_t n);

/// Membership of a positive integer in the family. Prime families use trial
/// division, so this is for small n; use PrimeTable::contains for bulk queries.
bool in_mode_set(ModeSet modes, std::uint64_t n);

}  // namespace primemodes
