#pragma once

// Arithmetical congruence monoids M_{a,b} = {1} u {a, a+b, a+2b, ...}:
// validation, classification, membership, monoid divisibility and atoms.

#include <cmath>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "acm/error.hpp"
#include "acm/integer.hpp"

namespace acm {

/// A validated pair (a, b) with d = gcd(a, b) and f = b / d.
struct AcmDescriptor {
  u64 a = 1;
  u64 b = 1;
  u64 d = 1;
  u64 f = 1;

  bool operator==(const AcmDescriptor&) const = default;

  std::string name() const {
    return "M_{" + std::to_string(a) + "," + std::to_string(b) + "}";
  }
};

inline AcmDescriptor validate_acm(u64 a, u64 b) {
  std::ostringstream msg;
  if (b == 0 || a == 0) {
    msg << "need 0 < a <= b, got a=" << a << " b=" << b;
    fail(ErrorKind::InvalidInput, msg.str());
  }
  if (a > b) {
    msg << "need a <= b, got a=" << a << " b=" << b;
    fail(ErrorKind::InvalidInput, msg.str());
  }
  if (mul_mod(a, a, b) != a % b) {
    msg << "a² ≢ a (mod b) for a=" << a << " b=" << b;
    fail(ErrorKind::InvalidInput, msg.str());
  }
  const u64 d = std::gcd(a, b);
  return AcmDescriptor{a, b, d, b / d};
}

struct Regular {
  bool operator==(const Regular&) const = default;
};

/// d = p^alpha; beta is the least exponent with p^beta in M.
struct LocalSingular {
  u64 p = 0;
  unsigned alpha = 0;
  unsigned beta = 0;
  unsigned delta = 0;

  bool operator==(const LocalSingular&) const = default;
};

struct GlobalSingular {
  PrimeFactorization d_factorization;
  u64 f = 1;

  bool operator==(const GlobalSingular& other) const {
    return d_factorization.value == other.d_factorization.value &&
           d_factorization.factors == other.d_factorization.factors && f == other.f;
  }
};

using AcmClassification = std::variant<Regular, LocalSingular, GlobalSingular>;

inline const char* class_name(const AcmClassification& cls) {
  if (std::holds_alternative<Regular>(cls)) return "regular";
  if (std::holds_alternative<LocalSingular>(cls)) return "local_singular";
  return "global_singular";
}

inline bool contains(const AcmDescriptor& desc, u64 x) {
  if (x == 1) return true;
  return x >= desc.a && x % desc.b == desc.a % desc.b;
}

/// The predicate "x = 1 (mod b)". It agrees with membership for regular
/// monoids only; kept so the two can be compared on a range.
inline bool congruent_to_one(const AcmDescriptor& desc, u64 x) { return x % desc.b == 1 % desc.b; }

struct MembershipDiagnostic {
  u64 checked = 0;
  u64 disagreements = 0;
  std::optional<u64> first_disagreement;
};

inline MembershipDiagnostic compare_membership_predicates(const AcmDescriptor& desc, u64 bound) {
  MembershipDiagnostic out;
  for (u64 x = 1; x <= bound; ++x) {
    ++out.checked;
    if (contains(desc, x) != congruent_to_one(desc, x)) {
      ++out.disagreements;
      if (!out.first_disagreement) out.first_disagreement = x;
    }
  }
  return out;
}

namespace detail {

inline void require_member(const AcmDescriptor& desc, u64 x, const char* what) {
  if (!contains(desc, x)) {
    std::ostringstream msg;
    msg << what << ": " << x << " is not in " << desc.name();
    fail(ErrorKind::InvalidInput, msg.str());
  }
}

inline void require_nonunit_member(const AcmDescriptor& desc, u64 x, const char* what) {
  if (x == 1) {
    std::ostringstream msg;
    msg << what << ": the identity is not a nonunit of " << desc.name();
    fail(ErrorKind::InvalidInput, msg.str());
  }
  require_member(desc, x, what);
}

}  // namespace detail

/// x |_M y: x divides y in Z and y / x is in M (possibly 1).
inline bool divides_in_monoid(const AcmDescriptor& desc, u64 x, u64 y) {
  detail::require_member(desc, x, "divides_in_monoid");
  detail::require_member(desc, y, "divides_in_monoid");
  return y % x == 0 && contains(desc, y / x);
}

/// x / y as a nonunit element of M, if it is one. Requires y | x in Z.
inline std::optional<u64> quotient_in_monoid(const AcmDescriptor& desc, u64 x, u64 y) {
  detail::require_nonunit_member(desc, x, "quotient_in_monoid");
  detail::require_nonunit_member(desc, y, "quotient_in_monoid");
  if (x % y != 0) {
    std::ostringstream msg;
    msg << "quotient_in_monoid: " << y << " does not divide " << x;
    fail(ErrorKind::InvalidInput, msg.str());
  }
  const u64 q = x / y;
  if (q == 1) return std::nullopt;
  if (q % desc.d == 0 || contains(desc, q)) return q;
  return std::nullopt;
}

/// Largest integer strictly below beta/alpha; 0 when beta <= alpha.
inline unsigned delta_bound(unsigned alpha, unsigned beta) {
  if (alpha == 0) fail(ErrorKind::InvalidInput, "delta_bound requires alpha >= 1");
  if (beta <= alpha) return 0;
  return (beta + alpha - 1) / alpha - 1;
}

/// Least beta >= 1 with p^beta in M, where d = p^alpha.
inline unsigned compute_beta(const AcmDescriptor& desc) {
  if (desc.d == 1) fail(ErrorKind::InvalidInput, desc.name() + " is regular; beta is undefined");
  const auto df = factor_integer(desc.d);
  if (df.factors.size() != 1) {
    fail(ErrorKind::InvalidInput, desc.name() + " is not local singular; beta is undefined");
  }
  const u64 p = df.factors.front().prime;
  const u64 target = desc.a % desc.b;
  std::set<u64> seen;
  u64 residue = 1 % desc.b;
  for (unsigned k = 1;; ++k) {
    residue = mul_mod(residue, p, desc.b);
    // p^k > 0 with p^k = a (mod b) forces p^k >= a because a <= b.
    if (residue == target) return k;
    if (!seen.insert(residue).second) {
      fail(ErrorKind::Structural,
           "no power of " + std::to_string(p) + " lies in " + desc.name());
    }
  }
}

inline AcmClassification classify(const AcmDescriptor& desc) {
  if (desc.d == 1) return Regular{};
  auto df = factor_integer(desc.d);
  if (df.factors.size() == 1) {
    LocalSingular local;
    local.p = df.factors.front().prime;
    local.alpha = df.factors.front().exponent;
    local.beta = compute_beta(desc);
    local.delta = delta_bound(local.alpha, local.beta);
    return local;
  }
  return GlobalSingular{std::move(df), desc.f};
}

/// Atom test by scanning integer divisors y <= sqrt(x).
inline bool is_atom_by_divisors(const AcmDescriptor& desc, u64 x) {
  detail::require_nonunit_member(desc, x, "is_atom");
  for (u64 y : divisors(x)) {
    if (y > x / y) break;
    if (y == 1) continue;
    if (contains(desc, y) && contains(desc, x / y)) return false;
  }
  return true;
}

/// Closed-form atom characterizations for local singular monoids.
inline std::optional<bool> atom_fast_path(const AcmDescriptor& desc, const AcmClassification& cls,
                                          u64 x) {
  const auto* local = std::get_if<LocalSingular>(&cls);
  if (local == nullptr) return std::nullopt;
  detail::require_nonunit_member(desc, x, "atom_fast_path");
  const unsigned v = p_adic_valuation(x, local->p);
  const unsigned alpha = local->alpha;
  const unsigned beta = local->beta;
  if (alpha == beta) {
    if (alpha == 1) return v == 1;
    return v >= alpha && v <= 2 * alpha - 1;
  }
  if (v >= alpha + beta) return false;
  if (v < 2 * alpha) return true;
  return std::nullopt;
}

/// Bit table of atoms among members <= bound, built by marking all products
/// of two nonunit members.
class AtomTable {
 public:
  AtomTable(const AcmDescriptor& desc, u64 bound) : desc_(desc), bound_(bound) {
    if (bound < desc.a) return;
    const u64 count = (bound - desc.a) / desc.b + 1;
    reducible_.assign(count, false);
    const u64 first = desc.a == 1 ? 1 : 0;  // skip the identity in M_{1,b}
    if (desc.a == 1) reducible_[0] = true;
    for (u64 i = first; i < count; ++i) {
      const u64 y = desc.a + i * desc.b;
      if (y > bound / y) break;
      for (u64 j = i; j < count; ++j) {
        const u64 z = desc.a + j * desc.b;
        if (z > bound / y) break;
        reducible_[(y * z - desc.a) / desc.b] = true;
      }
    }
  }

  u64 bound() const { return bound_; }
  const AcmDescriptor& descriptor() const { return desc_; }

  /// Requires x in M, 1 < x <= bound.
  bool is_atom(u64 x) const { return !reducible_[(x - desc_.a) / desc_.b]; }

  std::vector<u64> atoms() const {
    std::vector<u64> out;
    for (u64 i = 0; i < reducible_.size(); ++i) {
      if (!reducible_[i]) out.push_back(desc_.a + i * desc_.b);
    }
    return out;
  }

 private:
  AcmDescriptor desc_;
  u64 bound_;
  std::vector<bool> reducible_;
};

/// Descriptor plus its classification and an optional atom table. Copies
/// share the table, which is immutable once built.
class Monoid {
 public:
  explicit Monoid(const AcmDescriptor& desc) : desc_(desc), cls_(classify(desc)) {}
  Monoid(u64 a, u64 b) : Monoid(validate_acm(a, b)) {}

  const AcmDescriptor& descriptor() const { return desc_; }
  const AcmClassification& classification() const { return cls_; }
  u64 a() const { return desc_.a; }
  u64 b() const { return desc_.b; }
  std::string name() const { return desc_.name(); }

  bool is_regular() const { return std::holds_alternative<Regular>(cls_); }
  const LocalSingular* local() const { return std::get_if<LocalSingular>(&cls_); }
  const GlobalSingular* global() const { return std::get_if<GlobalSingular>(&cls_); }

  bool contains(u64 x) const { return acm::contains(desc_, x); }

  /// Builds (or widens) the shared atom table. Not safe to call while other
  /// threads read this Monoid.
  void reserve_atoms(u64 bound) {
    if (table_ && table_->bound() >= bound) return;
    table_ = std::make_shared<const AtomTable>(desc_, bound);
  }

  u64 atom_table_bound() const { return table_ ? table_->bound() : 0; }

  std::optional<bool> atom_fast_path(u64 x) const { return acm::atom_fast_path(desc_, cls_, x); }

  bool is_atom(u64 x) const {
    detail::require_nonunit_member(desc_, x, "is_atom");
    if (table_ && x <= table_->bound()) return table_->is_atom(x);
    if (auto fast = atom_fast_path(x)) return *fast;
    return is_atom_by_divisors(desc_, x);
  }

  /// All atoms <= bound, ascending.
  std::vector<u64> atoms_up_to(u64 bound) const {
    if (table_ && bound <= table_->bound()) {
      std::vector<u64> out;
      for (u64 x : table_->atoms()) {
        if (x > bound) break;
        out.push_back(x);
      }
      return out;
    }
    return AtomTable(desc_, bound).atoms();
  }

 private:
  AcmDescriptor desc_;
  AcmClassification cls_;
  std::shared_ptr<const AtomTable> table_;
};

inline bool is_atom(const Monoid& m, u64 x) { return m.is_atom(x); }

inline std::vector<u64> atoms_up_to(const Monoid& m, u64 bound) { return m.atoms_up_to(bound); }

}  // namespace acm
