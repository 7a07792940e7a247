#include "primemodes/fock.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "primemodes/errors.hpp"
#include "primemodes/prime_core.hpp"

namespace primemodes {

namespace {

constexpr Amplitude kI{0.0, 1.0};

BasisState empty_state(int species) {
  BasisState s;
  s.occupied.assign(static_cast<std::size_t>(species), {});
  return s;
}

// Number of nonzero-mode operators standing left of species `j`'s block.
std::size_t ops_before_species(const BasisState& s, std::size_t j) {
  std::size_t n = 0;
  for (std::size_t k = 0; k < j; ++k) n += s.occupied[k].size();
  return n;
}

bool in_family_signed(ModeSet modes, int r) {
  return in_mode_set(modes, static_cast<std::uint64_t>(std::abs(r)));
}

}  // namespace

int BasisState::particle_count() const {
  int n = zero_mode ? 1 : 0;
  for (const auto& v : occupied) n += static_cast<int>(v.size());
  return n;
}

FockVector::FockVector(int species) : species_(species) {
  if (species < 1) throw DomainError("a Fock vector needs at least one species");
}

FockVector FockVector::vacuum(int species) {
  FockVector v(species);
  v.add(empty_state(species), 1.0);
  return v;
}

void FockVector::add(const BasisState& state, Amplitude amp) {
  if (state.occupied.size() != static_cast<std::size_t>(species_)) {
    throw DomainError("basis state has the wrong number of species");
  }
  if (amp == Amplitude{}) return;
  auto [it, inserted] = terms_.try_emplace(state, amp);
  if (!inserted) {
    it->second += amp;
    if (it->second == Amplitude{}) terms_.erase(it);
  }
}

Amplitude FockVector::amplitude(const BasisState& state) const {
  auto it = terms_.find(state);
  return it == terms_.end() ? Amplitude{} : it->second;
}

Amplitude FockVector::vacuum_amplitude() const { return amplitude(empty_state(species_)); }

FockVector& FockVector::operator+=(const FockVector& other) {
  if (other.species_ != species_) throw DomainError("species mismatch");
  for (const auto& [s, a] : other.terms_) add(s, a);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  if (other.species_ != species_) throw DomainError("species mismatch");
  for (const auto& [s, a] : other.terms_) add(s, -a);
  return *this;
}

FockVector& FockVector::operator*=(Amplitude c) {
  if (c == Amplitude{}) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, a] : terms_) a *= c;
  return *this;
}

double FockVector::norm_squared() const {
  double n = 0.0;
  for (const auto& [s, a] : terms_) n += std::norm(a);
  return n;
}

FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
FockVector operator*(Amplitude c, FockVector v) { return v *= c; }

FockVector apply_fermion(FermionOp op, const FockVector& v) {
  const int K = v.species();
  if (op.species < 1 || op.species > K) {
    throw DomainError("species " + std::to_string(op.species) + " out of range");
  }
  const auto j = static_cast<std::size_t>(op.species - 1);
  FockVector out(K);

  if (op.mode == 0) {
    // b^1_0 = d + d^dagger/2, b^2_0 = i (d - d^dagger/2); d sits right of every b.
    if (K != 2 || op.species > 2) throw DomainError("zero modes exist only for two species");
    for (const auto& [state, amp] : v.terms()) {
      const std::size_t crossed = ops_before_species(state, 2);
      const double sign = crossed % 2 == 0 ? 1.0 : -1.0;
      BasisState next = state;
      next.zero_mode = !state.zero_mode;
      Amplitude c;
      if (state.zero_mode) {
        c = op.species == 1 ? Amplitude{1.0} : kI;  // d |1> = |0>
      } else {
        c = op.species == 1 ? Amplitude{0.5} : -0.5 * kI;  // d^dagger |0> = |1>
      }
      out.add(next, sign * c * amp);
    }
    return out;
  }

  const int p = std::abs(op.mode);
  for (const auto& [state, amp] : v.terms()) {
    const auto& occ = state.occupied[j];
    const auto pos = std::lower_bound(occ.begin(), occ.end(), p);
    const bool present = pos != occ.end() && *pos == p;
    const std::size_t before =
        ops_before_species(state, j) + static_cast<std::size_t>(pos - occ.begin());
    const double sign = before % 2 == 0 ? 1.0 : -1.0;
    BasisState next = state;
    auto& nocc = next.occupied[j];
    if (op.mode < 0) {  // creation b_{-p}
      if (present) continue;
      nocc.insert(nocc.begin() + (pos - occ.begin()), p);
    } else {  // annihilation b_p
      if (!present) continue;
      nocc.erase(nocc.begin() + (pos - occ.begin()));
    }
    out.add(next, sign * amp);
  }
  return out;
}

int BilinearOperator::max_abs_mode() const {
  int m = 0;
  for (const auto& t : terms) m = std::max({m, std::abs(t.r), std::abs(t.s)});
  return m;
}

FockVector apply_bilinear(const BilinearOperator& op, const FockVector& v, int cutoff) {
  if (v.species() < 2) throw DomainError("bilinears act on two species");
  FockVector out(v.species());
  for (const auto& t : op.terms) {
    if (std::abs(t.r) > cutoff || std::abs(t.s) > cutoff) {
      throw CutoffError("bilinear term (" + std::to_string(t.r) + ", " + std::to_string(t.s) +
                        ") exceeds cutoff " + std::to_string(cutoff));
    }
    auto w = apply_fermion({2, t.s}, v);
    if (w.empty()) continue;
    w = apply_fermion({1, t.r}, w);
    w *= t.coeff;
    out += w;
  }
  return out;
}

BilinearOperator adjoint(const BilinearOperator& op) {
  BilinearOperator out;
  out.terms.reserve(op.terms.size());
  for (const auto& t : op.terms) out.terms.push_back({-t.r, -t.s, -std::conj(t.coeff)});
  return out;
}

BilinearOperator build_composite(int n, ModeSet modes, int cutoff) {
  if (n == 0) throw DomainError("composite mode n must be nonzero");
  const bool single_parity =
      modes == ModeSet::Even || modes == ModeSet::Odd || modes == ModeSet::PrimesPPrime;
  if (single_parity && n % 2 != 0) {
    throw DomainError("mode set " + std::string(to_string(modes)) + " needs an even n");
  }
  if (cutoff < 0) throw DomainError("cutoff must be non-negative");
  const Amplitude coeff = n > 0 ? kI : -kI;
  BilinearOperator op;
  for (int r = -cutoff; r <= cutoff; ++r) {
    const int s = n - r;
    if (std::abs(s) > cutoff) continue;
    if (!in_family_signed(modes, r) || !in_family_signed(modes, s)) continue;
    op.terms.push_back({r, s, coeff});
  }
  return op;
}

Amplitude vacuum_commutator(const BilinearOperator& A, const BilinearOperator& B, int cutoff) {
  const auto vac = FockVector::vacuum(2);
  const auto ab = apply_bilinear(A, apply_bilinear(B, vac, cutoff), cutoff);
  const auto ba = apply_bilinear(B, apply_bilinear(A, vac, cutoff), cutoff);
  return (ab - ba).vacuum_amplitude();
}

CentralTermReport central_term(int n, int m, ModeSet modes, int cutoff) {
  if (n <= 0 || m <= 0) throw DomainError("central_term needs positive n and m");
  if (cutoff < n + m) {
    throw CutoffError("cutoff " + std::to_string(cutoff) + " below the window n + m = " +
                      std::to_string(n + m));
  }
  const auto A = build_composite(n, modes, cutoff);
  const auto raw = vacuum_commutator(A, adjoint(build_composite(m, modes, cutoff)), cutoff);
  const auto literal = vacuum_commutator(A, build_composite(-m, modes, cutoff), cutoff);
  CentralTermReport out;
  out.modes = modes;
  out.n = n;
  out.m = m;
  out.cutoff = cutoff;
  out.raw = raw.real();
  out.normalized = raw.real() / n;
  out.raw_literal = literal.real();
  return out;
}

std::vector<std::vector<std::uint64_t>> enumerate_prime_states(std::uint64_t n, int parts,
                                                               ModeSet modes) {
  if (n < 2) throw DomainError("enumerate_prime_states needs n >= 2");
  if (parts < 1 || parts > 16) throw DomainError("parts must be in [1, 16]");
  std::vector<std::uint64_t> members;
  if (is_prime_family(modes)) {
    const auto table = sieve(n, kernels::Execution::Serial);
    for (std::uint64_t k = 1; k <= n; ++k) {
      if (table.contains(modes, k)) members.push_back(k);
    }
  } else {
    for (std::uint64_t k = 1; k <= n; ++k) {
      if (in_mode_set(modes, k)) members.push_back(k);
    }
  }
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> cur;
  // nondecreasing sequences of members summing to n
  auto rec = [&](auto&& self, std::size_t from, std::uint64_t remaining, int left) -> void {
    if (left == 0) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < members.size(); ++i) {
      const std::uint64_t p = members[i];
      if (p * static_cast<std::uint64_t>(left) > remaining) break;
      cur.push_back(p);
      self(self, i, remaining - p, left - 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, n, parts);
  return out;
}

double normalization_factor(const std::vector<std::uint64_t>& state) {
  if (state.empty()) throw DomainError("normalization_factor needs a nonempty multiset");
  auto sorted = state;
  std::sort(sorted.begin(), sorted.end());
  double prod = 1.0;
  std::size_t run = 1;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    if (i < sorted.size() && sorted[i] == sorted[i - 1]) {
      prod *= static_cast<double>(++run);
    } else {
      run = 1;
    }
  }
  return 1.0 / std::sqrt(prod);
}

FockVector symmetrized_state(const std::vector<std::uint64_t>& state) {
  if (state.empty()) throw DomainError("symmetrized_state needs a nonempty multiset");
  const int K = static_cast<int>(state.size());
  std::vector<std::size_t> perm(state.size());
  std::iota(perm.begin(), perm.end(), 0);
  FockVector out(K);
  do {
    auto v = FockVector::vacuum(K);
    // prod_j b^j_{-p_sigma(j)}: apply the rightmost factor first
    for (int j = K; j >= 1; --j) {
      v = apply_fermion({j, -static_cast<int>(state[perm[j - 1]])}, v);
    }
    out += v;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace primemodes
