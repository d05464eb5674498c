#pragma once

// Omega primality: closed forms for regular and singular monoids, the bullet
// predicate, a bounded bullet search and the regular witness construction.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "acm/error.hpp"
#include "acm/integer.hpp"
#include "acm/monoid.hpp"

namespace acm {

enum class OmegaVariant { Floor, Ceiling };

inline const char* to_string(OmegaVariant v) { return v == OmegaVariant::Floor ? "floor" : "ceiling"; }

inline unsigned omega_closed_regular(const Monoid& m, u64 x) {
  if (!m.is_regular()) fail(ErrorKind::InvalidInput, m.name() + " is not regular");
  detail::require_nonunit_member(m.descriptor(), x, "omega_closed_regular");
  return factor_integer(x).total_multiplicity();
}

/// max{1 + round(v_q(x) / v_q(d)) over primes q of d} u {sum of the other
/// prime exponents of x}, rounding per `variant`.
inline unsigned omega_closed_singular(const Monoid& m, u64 x, OmegaVariant variant = OmegaVariant::Ceiling) {
  if (m.is_regular()) fail(ErrorKind::InvalidInput, m.name() + " is not singular");
  detail::require_nonunit_member(m.descriptor(), x, "omega_closed_singular");
  const auto d_pf = factor_integer(m.descriptor().d);
  const auto x_pf = factor_integer(x);
  unsigned best = 0;
  for (const auto& q : d_pf.factors) {
    const unsigned v = x_pf.exponent_of(q.prime);
    if (v < q.exponent) {
      std::ostringstream msg;
      msg << x << " has v_" << q.prime << " = " << v << " < " << q.exponent;
      fail(ErrorKind::InvalidInput, msg.str());
    }
    const unsigned r = q.exponent;
    const unsigned rounded = variant == OmegaVariant::Floor ? v / r : (v + r - 1) / r;
    best = std::max(best, 1 + rounded);
  }
  unsigned other = 0;
  for (const auto& f : x_pf.factors) {
    if (d_pf.exponent_of(f.prime) == 0) other += f.exponent;
  }
  return std::max(best, other);
}

namespace detail {

/// x |_M (product of atoms, skipping index `skip`). Works modulo x*b so
/// long products never overflow; an exact saturated product detects the
/// quotient-is-identity case.
inline bool divides_product(const AcmDescriptor& desc, u64 x, std::span<const u64> atoms,
                            std::size_t skip = static_cast<std::size_t>(-1)) {
  const u64 modulus = checked_mul(x, desc.b);
  u64 residue = 1 % modulus;
  u64 exact = 1;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i == skip) continue;
    residue = mul_mod(residue, atoms[i], modulus);
    exact = saturating_mul(exact, atoms[i]);
  }
  if (residue % x != 0) return false;
  if (exact == x) return true;
  return (residue / x) % desc.b == desc.a % desc.b;
}

}  // namespace detail

/// x divides the product in M and divides no proper sub-product.
inline bool is_bullet(const Monoid& m, u64 x, std::span<const u64> atoms) {
  detail::require_nonunit_member(m.descriptor(), x, "is_bullet");
  for (u64 a : atoms) {
    if (a == 1 || !m.contains(a) || !m.is_atom(a)) {
      fail(ErrorKind::InvalidInput, "is_bullet: " + std::to_string(a) + " is not an atom of " + m.name());
    }
  }
  if (atoms.empty() || !detail::divides_product(m.descriptor(), x, atoms)) return false;
  // Divisibility is inherited by super-multisets, so checking each
  // single-removal covers every proper sub-multiset.
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (detail::divides_product(m.descriptor(), x, atoms, i)) return false;
  }
  return true;
}

struct OmegaReport {
  u64 element = 0;
  unsigned closed_form = 0;                 // regular: exponent sum; singular: ceiling variant
  std::optional<unsigned> floor_variant;    // singular only
  std::optional<unsigned> ceiling_variant;  // singular only
  unsigned oracle_lower_bound = 0;
  std::vector<u64> witness_bullet;
  bool oracle_exact = false;
  bool length_bound_reached = false;
  u64 atom_bound = 0;
  unsigned length_bound = 0;

  bool closed_form_agrees() const { return closed_form == oracle_lower_bound; }
  std::optional<bool> floor_agrees() const {
    if (!floor_variant) return std::nullopt;
    return *floor_variant == oracle_lower_bound;
  }
  std::optional<bool> ceiling_agrees() const {
    if (!ceiling_variant) return std::nullopt;
    return *ceiling_variant == oracle_lower_bound;
  }
};

namespace detail {

// Regular monoids: x |_M P iff x | P in Z, so an atom matters only through
// its valuations at the primes of x, truncated at v_p(x).
class RegularBulletState {
 public:
  RegularBulletState(std::vector<unsigned> target, std::vector<std::vector<unsigned>> types)
      : target_(std::move(target)), types_(std::move(types)), sums_(target_.size(), 0) {}

  std::size_t type_count() const { return types_.size(); }

  void push(std::size_t t) {
    for (std::size_t i = 0; i < sums_.size(); ++i) sums_[i] += types_[t][i];
    items_.push_back(t);
  }
  void pop() {
    const std::size_t t = items_.back();
    items_.pop_back();
    for (std::size_t i = 0; i < sums_.size(); ++i) sums_[i] -= types_[t][i];
  }

  bool divisible() const {
    for (std::size_t i = 0; i < sums_.size(); ++i) {
      if (sums_[i] < target_[i]) return false;
    }
    return true;
  }

  // Item t stays removable-proof only if some prime it carries is still
  // short without it. Sums only grow, so failing this is permanent.
  bool essential(std::size_t t) const {
    for (std::size_t i = 0; i < sums_.size(); ++i) {
      if (types_[t][i] > 0 && sums_[i] - types_[t][i] < target_[i]) return true;
    }
    return false;
  }

  bool all_essential() const {
    return std::all_of(items_.begin(), items_.end(), [&](std::size_t t) { return essential(t); });
  }

  bool can_extend() const { return all_essential(); }
  bool is_bullet() const { return divisible() && all_essential(); }

 private:
  std::vector<unsigned> target_;
  std::vector<std::vector<unsigned>> types_;
  std::vector<unsigned> sums_;
  std::vector<std::size_t> items_;
};

// Singular monoids: x |_M P depends on P mod x*b and on whether P == x.
// Prefix residues and saturated products are stacked so a push is O(1).
class SingularBulletState {
 public:
  SingularBulletState(const AcmDescriptor& desc, u64 x, std::vector<u64> reps)
      : desc_(desc), x_(x), modulus_(checked_mul(x, desc.b)), reps_(std::move(reps)) {
    residues_.push_back(1 % modulus_);
    exacts_.push_back(1);
  }

  std::size_t type_count() const { return reps_.size(); }

  void push(std::size_t t) {
    items_.push_back(reps_[t]);
    residues_.push_back(mul_mod(residues_.back(), reps_[t], modulus_));
    exacts_.push_back(saturating_mul(exacts_.back(), reps_[t]));
  }
  void pop() {
    items_.pop_back();
    residues_.pop_back();
    exacts_.pop_back();
  }

  bool divisible() const {
    const u64 r = residues_.back();
    if (r % x_ != 0) return false;
    if (exacts_.back() == x_) return true;
    return (r / x_) % desc_.b == desc_.a % desc_.b;
  }
  bool can_extend() const { return true; }
  bool is_bullet() const {
    if (!divisible()) return false;
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (divides_product(desc_, x_, items_, i)) return false;
    }
    return true;
  }

 private:
  AcmDescriptor desc_;
  u64 x_;
  u64 modulus_;
  std::vector<u64> reps_;
  std::vector<u64> items_;
  std::vector<u64> residues_;
  std::vector<u64> exacts_;
};

template <class State>
struct BulletSearch {
  State& state;
  unsigned length_bound;
  std::vector<std::size_t> current;
  std::vector<std::size_t> best;
  bool truncated = false;

  void run(std::size_t first_type) {
    for (std::size_t t = first_type; t < state.type_count(); ++t) {
      state.push(t);
      current.push_back(t);
      if (state.divisible()) {
        // Extensions of a divisible multiset are never minimal.
        if (current.size() > best.size() && state.is_bullet()) best = current;
      } else if (state.can_extend()) {
        if (current.size() < length_bound) {
          run(t);
        } else {
          truncated = true;
        }
      }
      current.pop_back();
      state.pop();
    }
  }
};

}  // namespace detail

/// Longest bullet of x over multisets of atoms <= atom_bound with at most
/// length_bound entries. Atoms are grouped into classes that behave
/// identically for divisibility, and the search runs over class multisets.
inline OmegaReport omega_oracle(const Monoid& m, u64 x, u64 atom_bound, unsigned length_bound) {
  detail::require_nonunit_member(m.descriptor(), x, "omega_oracle");
  OmegaReport report;
  report.element = x;
  report.atom_bound = atom_bound;
  report.length_bound = length_bound;
  if (m.is_regular()) {
    report.closed_form = omega_closed_regular(m, x);
  } else {
    report.floor_variant = omega_closed_singular(m, x, OmegaVariant::Floor);
    report.ceiling_variant = omega_closed_singular(m, x, OmegaVariant::Ceiling);
    report.closed_form = *report.ceiling_variant;
  }

  const auto atoms = m.atoms_up_to(atom_bound);
  std::vector<u64> reps;
  std::vector<std::size_t> best;
  if (m.is_regular()) {
    const auto x_pf = factor_integer(x);
    std::vector<unsigned> target;
    for (const auto& f : x_pf.factors) target.push_back(f.exponent);
    std::map<std::vector<unsigned>, u64> by_type;
    for (u64 a : atoms) {
      std::vector<unsigned> v;
      bool any = false;
      u64 rest = a;
      for (const auto& f : x_pf.factors) {
        unsigned e = 0;
        while (rest % f.prime == 0 && e < f.exponent) {
          rest /= f.prime;
          ++e;
        }
        v.push_back(e);
        any = any || e > 0;
      }
      if (any) by_type.emplace(std::move(v), a);  // atoms ascend: keeps the smallest
    }
    std::vector<std::pair<u64, std::vector<unsigned>>> ordered;
    for (auto& [type, rep] : by_type) ordered.emplace_back(rep, type);
    std::sort(ordered.begin(), ordered.end());
    std::vector<std::vector<unsigned>> types;
    for (auto& [rep, type] : ordered) {
      reps.push_back(rep);
      types.push_back(type);
    }
    u64 possible = 1;
    for (unsigned e : target) possible *= (e + 1);
    detail::RegularBulletState state(target, types);
    detail::BulletSearch<detail::RegularBulletState> search{state, length_bound, {}, {}, false};
    search.run(0);
    best = search.best;
    report.length_bound_reached = search.truncated;
    // Exact when every nonzero truncated valuation pattern occurs among the
    // scanned atoms and the search was never cut off by the length bound.
    report.oracle_exact = !search.truncated && types.size() + 1 == possible;
  } else {
    const u64 modulus = checked_mul(x, m.b());
    std::map<std::pair<u64, u64>, u64> by_type;
    for (u64 a : atoms) by_type.emplace(std::make_pair(a % modulus, x % a == 0 ? a : 0), a);
    for (const auto& [_, rep] : by_type) reps.push_back(rep);
    std::sort(reps.begin(), reps.end());
    detail::SingularBulletState state(m.descriptor(), x, reps);
    detail::BulletSearch<detail::SingularBulletState> search{state, length_bound, {}, {}, false};
    search.run(0);
    best = search.best;
    report.length_bound_reached = search.truncated;
  }
  if (best.empty()) {
    std::ostringstream msg;
    msg << "no bullet of " << x << " among atoms <= " << atom_bound << " with length <= " << length_bound;
    fail(ErrorKind::CapExceeded, msg.str());
  }
  for (std::size_t t : best) report.witness_bullet.push_back(reps[t]);
  std::sort(report.witness_bullet.begin(), report.witness_bullet.end());
  report.oracle_lower_bound = static_cast<unsigned>(report.witness_bullet.size());
  return report;
}

/// Bullet of length sum(e_i) for x = prod p_i^e_i in M_{1,b}: e_i copies of
/// p_i * q^(k-1) per prime, with k the order of p_i mod b and q distinct
/// fresh primes = p_i (mod b) above p_i. Primes already in M (k = 1) are
/// used directly.
inline std::vector<u64> omega_witness_regular(const Monoid& m, u64 x) {
  if (!m.is_regular()) fail(ErrorKind::InvalidInput, m.name() + " is not regular");
  detail::require_nonunit_member(m.descriptor(), x, "omega_witness_regular");
  const u64 b = m.b();
  const auto x_pf = factor_integer(x);
  std::set<u64> excluded;
  for (const auto& f : x_pf.factors) excluded.insert(f.prime);
  std::vector<u64> bullet;
  for (const auto& f : x_pf.factors) {
    const u64 order = b == 1 ? 1 : multiplicative_order(f.prime % b, b);
    for (unsigned j = 0; j < f.exponent; ++j) {
      if (order == 1) {
        bullet.push_back(f.prime);
        continue;
      }
      const u64 q = find_prime_in_class(f.prime + b, b, excluded);
      excluded.insert(q);
      bullet.push_back(checked_mul(f.prime, checked_pow(q, static_cast<unsigned>(order - 1))));
    }
  }
  std::sort(bullet.begin(), bullet.end());
  if (bullet.size() != x_pf.total_multiplicity() || !is_bullet(m, x, bullet)) {
    fail(ErrorKind::Structural, "constructed omega witness for " + std::to_string(x) + " is not a bullet");
  }
  return bullet;
}

}  // namespace acm
