#pragma once

// Sparse fermionic Fock space for the bosonization central terms.
//
// Operators b^j_r (species j = 1..K, integer mode r) obey
// {b^i_r, b^j_s} = delta^{ij} delta_{r,-s}, with b^j_{-p} the creator of mode
// p > 0 and b^j_p |0> = 0. A basis state is
//
//   prod_j prod_{p in S_j, ascending} b^j_{-p}  (d^dagger)^z |0>
//
// with species ordered left to right. For two species the zero modes b^1_0,
// b^2_0 ({b_0, b_0} = 1) are carried by one auxiliary fermion d:
//   b^1_0 = d + d^dagger / 2,   b^2_0 = i (d - d^dagger / 2).
// This representation is similar (not unitary) to the usual one; vacuum
// expectation values are unchanged and all amplitudes stay dyadic, hence exact
// in double precision.

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "primemodes/mode_set.hpp"

namespace primemodes {

using Amplitude = std::complex<double>;

struct BasisState {
  std::vector<std::vector<int>> occupied;  // per species, ascending positive modes
  bool zero_mode = false;

  auto operator<=>(const BasisState&) const = default;
  int particle_count() const;
};

class FockVector {
 public:
  explicit FockVector(int species = 2);
  static FockVector vacuum(int species = 2);

  int species() const { return species_; }
  const std::map<BasisState, Amplitude>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(const BasisState& state, Amplitude amp);
  Amplitude amplitude(const BasisState& state) const;
  Amplitude vacuum_amplitude() const;

  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  FockVector& operator*=(Amplitude c);

  /// Sum of |amplitude|^2. Meaningful as a norm only without zero modes.
  double norm_squared() const;

  bool operator==(const FockVector& other) const = default;

 private:
  int species_;
  std::map<BasisState, Amplitude> terms_;  // no zero amplitudes stored
};

FockVector operator+(FockVector a, const FockVector& b);
FockVector operator-(FockVector a, const FockVector& b);
FockVector operator*(Amplitude c, FockVector v);

/// b^species_mode, species counted from 1.
struct FermionOp {
  int species = 1;
  int mode = 0;
};

FockVector apply_fermion(FermionOp op, const FockVector& v);

/// coeff * :b^1_r b^2_s:. Species 1 and 2 anticommute, so the normal-ordered
/// product coincides with the plain product b^1_r b^2_s.
struct BilinearTerm {
  int r = 0;
  int s = 0;
  Amplitude coeff{1.0, 0.0};
};

struct BilinearOperator {
  std::vector<BilinearTerm> terms;
  int max_abs_mode() const;
};

/// Applies every term to v. Throws CutoffError if a term carries |mode| > cutoff.
FockVector apply_bilinear(const BilinearOperator& op, const FockVector& v, int cutoff);

/// (c b^1_r b^2_s)^dagger = -conj(c) b^1_{-r} b^2_{-s}.
BilinearOperator adjoint(const BilinearOperator& op);

/// a_n = sgn(n) sum_r i :b^1_r b^2_{n-r}: with r and n - r in +-modes (0 included
/// when the family contains it) and both within the cutoff. Families whose
/// members are all of one parity (Even, Odd, PrimesPPrime) require even n.
BilinearOperator build_composite(int n, ModeSet modes, int cutoff);

/// <0| [A, B] |0> by sparse application.
Amplitude vacuum_commutator(const BilinearOperator& A, const BilinearOperator& B, int cutoff);

struct CentralTermReport {
  ModeSet modes = ModeSet::AllIntegers;
  int n = 0;
  int m = 0;
  int cutoff = 0;
  double raw = 0.0;          // <0| [a_n, a_m^dagger] |0>
  double normalized = 0.0;   // raw / n
  double raw_literal = 0.0;  // <0| [a_n, a_{-m}] |0> = -raw for this coefficient convention
};

/// Central term of the composite modes n, m > 0. Requires cutoff >= n + m,
/// which covers every contributing contraction (they need |r| <= max(n, m)).
CentralTermReport central_term(int n, int m, ModeSet modes, int cutoff);

/// All multisets (ascending) of `parts` members of the family summing to n.
std::vector<std::vector<std::uint64_t>> enumerate_prime_states(std::uint64_t n, int parts,
                                                               ModeSet modes);

/// 1 / sqrt(prod multiplicity!) for an ascending multiset.
double normalization_factor(const std::vector<std::uint64_t>& state);

/// Fully symmetrized creation state sum over orderings sigma of
/// prod_j b^j_{-p_sigma(j)} |0> on parts species (one species per part).
FockVector symmetrized_state(const std::vector<std::uint64_t>& state);

}  // namespace primemodes
