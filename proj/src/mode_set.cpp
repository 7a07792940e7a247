#include "primemodes/mode_set.hpp"

#include <string>

#include "primemodes/errors.hpp"

namespace primemodes {

std::string_view to_string(ModeSet modes) {
  switch (modes) {
    case ModeSet::AllIntegers: return "AllIntegers";
    case ModeSet::Even: return "Even";
    case ModeSet::Odd: return "Odd";
    case ModeSet::PrimesP: return "PrimesP";
    case ModeSet::PrimesPPrime: return "PrimesPPrime";
  }
  return "?";
}

ModeSet parse_mode_set(std::string_view name) {
  for (auto m : {ModeSet::AllIntegers, ModeSet::Even, ModeSet::Odd, ModeSet::PrimesP,
                 ModeSet::PrimesPPrime}) {
    if (name == to_string(m)) return m;
  }
  if (name == "all" || name == "integers") return ModeSet::AllIntegers;
  if (name == "even") return ModeSet::Even;
  if (name == "odd") return ModeSet::Odd;
  if (name == "primes" || name == "P" || name == "p") return ModeSet::PrimesP;
  if (name == "pprime" || name == "P'" || name == "odd-primes") return ModeSet::PrimesPPrime;
  throw DomainError("unknown mode set '" + std::string(name) +
                    "' (expected all, even, odd, primes or pprime)");
}

bool is_prime_small(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

bool in_mode_set(ModeSet modes, std::uint64_t n) {
  if (n == 0) return contains_zero(modes);
  switch (modes) {
    case ModeSet::AllIntegers: return true;
    case ModeSet::Even: return n % 2 == 0;
    case ModeSet::Odd: return n % 2 == 1;
    case ModeSet::PrimesP: return is_prime_small(n);
    case ModeSet::PrimesPPrime: return n == 1 || (n != 2 && is_prime_small(n));
  }
  return false;
}

}  // namespace primemodes
