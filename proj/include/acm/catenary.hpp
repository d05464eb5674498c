#pragma once

// Catenary degree of local singular monoids: the closed form, explicit chains
// from any factorization to a canonical one, range surveys and the
// delta-set lower bound.

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

#include "acm/factorization.hpp"
#include "acm/integer.hpp"
#include "acm/monoid.hpp"
#include "acm/survey.hpp"

namespace acm {

inline unsigned catenary_closed_local(const Monoid& m) {
  const auto* local = m.local();
  if (local == nullptr) fail(ErrorKind::InvalidInput, m.name() + " is not local singular");
  if (local->alpha == local->beta) return local->alpha == 1 ? 2 : 3;
  return 1 + (local->beta + local->alpha - 1) / local->alpha;
}

/// Upper bound on every link of build_canonical_chain.
inline unsigned canonical_chain_bound(const LocalSingular& local) {
  if (local.alpha == local.beta) return local.alpha == 1 ? 2 : 3;
  return 1 + (local.alpha + local.beta - 1) / local.alpha;
}

namespace detail {

inline const LocalSingular& require_local(const Monoid& m) {
  const auto* local = m.local();
  if (local == nullptr) fail(ErrorKind::InvalidInput, m.name() + " is not local singular");
  return *local;
}

inline u64 strip_prime(u64 x, u64 p) {
  while (x % p == 0) x /= p;
  return x;
}

inline Factorization first_factorization(const Monoid& m, u64 x) {
  // The lexicographically least factorization comes out first.
  auto zs = enumerate_factorizations(m, x);
  return zs.front();
}

inline Factorization with_atoms(std::vector<u64> atoms, u64 element) {
  std::sort(atoms.begin(), atoms.end());
  Factorization z;
  z.atoms = std::move(atoms);
  z.element = element;
  return z;
}

inline void remove_one(std::vector<u64>& atoms, u64 value) {
  atoms.erase(std::find(atoms.begin(), atoms.end(), value));
}

}  // namespace detail

/// The factorization every canonical chain of x ends at:
///   alpha = beta = 1:  p, ..., p, x / p^(v-1)
///   alpha = beta > 1:  p^a, ..., p^a, one atom with v_p in [alpha, 2 alpha)
///   alpha < beta:      (p^beta)^n times the least factorization of a
///                      residual with v_p in [alpha, alpha + beta) (or 1).
inline Factorization canonical_factorization(const Monoid& m, u64 x) {
  const auto& local = detail::require_local(m);
  detail::require_nonunit_member(m.descriptor(), x, "canonical_factorization");
  const u64 p = local.p;
  const unsigned v = p_adic_valuation(x, p);
  std::vector<u64> atoms;
  if (local.alpha == local.beta) {
    const u64 unit = checked_pow(p, local.alpha);
    const unsigned copies = local.alpha == 1 ? v - 1 : v / local.alpha - 1;
    u64 rest = x;
    for (unsigned i = 0; i < copies; ++i) {
      atoms.push_back(unit);
      rest /= unit;
    }
    atoms.push_back(rest);
    return detail::with_atoms(std::move(atoms), x);
  }
  const u64 pb = checked_pow(p, local.beta);
  const bool pure = detail::strip_prime(x, p) == 1;
  unsigned n = 0;
  if (pure && v % local.beta == 0) {
    n = v / local.beta;
  } else {
    n = (v - local.alpha) / local.beta;
  }
  u64 rest = x;
  for (unsigned i = 0; i < n; ++i) {
    atoms.push_back(pb);
    rest /= pb;
  }
  if (rest != 1) {
    const auto tail = detail::first_factorization(m, rest);
    atoms.insert(atoms.end(), tail.atoms.begin(), tail.atoms.end());
  }
  return detail::with_atoms(std::move(atoms), x);
}

/// A chain from z to canonical_factorization(x) built from local relations;
/// every link is at most canonical_chain_bound(local).
inline ChainCertificate build_canonical_chain(const Monoid& m, u64 x, const Factorization& z) {
  const auto& local = detail::require_local(m);
  if (!is_factorization_of(m, z, x)) {
    fail(ErrorKind::InvalidInput, "build_canonical_chain: " + z.str() + " is not a factorization of " +
                                      std::to_string(x));
  }
  const u64 p = local.p;
  const unsigned alpha = local.alpha;
  const unsigned beta = local.beta;
  std::vector<Factorization> steps{z};
  std::vector<u64> cur = z.atoms;

  if (alpha == beta) {
    // Merge the two largest atoms other than p^alpha into p^alpha (or two
    // copies of it) and one leftover atom, until at most one remains.
    const u64 unit = checked_pow(p, alpha);
    for (;;) {
      std::vector<u64> others;
      for (u64 a : cur) {
        if (a != unit) others.push_back(a);
      }
      if (others.size() <= 1) break;
      const u64 u = others[others.size() - 2];
      const u64 w = others[others.size() - 1];
      const unsigned s = p_adic_valuation(u, p) + p_adic_valuation(w, p) - 2 * alpha;
      detail::remove_one(cur, u);
      detail::remove_one(cur, w);
      // (u/p^a)*(w/p^a) carries v_p = s; it is an atom itself once s >= alpha.
      const u64 merged = (u / unit) * (w / unit);
      if (s >= alpha) {
        cur.insert(cur.end(), {unit, unit, merged});
      } else {
        cur.insert(cur.end(), {unit, checked_mul(merged, unit)});
      }
      std::sort(cur.begin(), cur.end());
      steps.push_back(detail::with_atoms(cur, x));
    }
  } else {
    // Peel atoms off the large end until their p-valuation reaches
    // alpha + beta, trade p^beta (once or twice) out of that block and
    // refactor the remainder; finish with one link to the canonical tail.
    const u64 pb = checked_pow(p, beta);
    for (;;) {
      std::vector<u64> rest;
      unsigned total = 0;
      for (u64 a : cur) {
        if (a != pb) {
          rest.push_back(a);
          total += p_adic_valuation(a, p);
        }
      }
      if (total < alpha + beta) break;
      std::vector<u64> block;
      unsigned v = 0;
      for (auto it = rest.rbegin(); it != rest.rend() && v < alpha + beta; ++it) {
        block.push_back(*it);
        v += p_adic_valuation(*it, p);
      }
      u64 product = 1;
      for (u64 a : block) {
        product = checked_mul(product, a);
        detail::remove_one(cur, a);
      }
      const unsigned copies = v < alpha + 2 * beta ? 1 : 2;
      for (unsigned i = 0; i < copies; ++i) {
        product /= pb;
        cur.push_back(pb);
      }
      const auto tail = detail::first_factorization(m, product);
      cur.insert(cur.end(), tail.atoms.begin(), tail.atoms.end());
      std::sort(cur.begin(), cur.end());
      steps.push_back(detail::with_atoms(cur, x));
    }
  }

  const auto target = canonical_factorization(m, x);
  if (steps.back() != target) steps.push_back(target);
  return make_chain(std::move(steps));
}

struct CatenarySurvey {
  std::size_t max_catenary = 0;
  std::optional<u64> witness;  // smallest element attaining the maximum
  std::vector<u64> skipped;
};

inline CatenarySurvey catenary_survey(const ScanResult& scan) {
  CatenarySurvey out;
  for (const auto& row : scan.rows) {
    if (row.capped) continue;
    if (row.catenary > out.max_catenary) {
      out.max_catenary = row.catenary;
      out.witness = row.element;
    }
  }
  out.skipped = scan.skipped;
  return out;
}

/// max c(x) over members x <= bound: a certified lower bound for c(M).
inline CatenarySurvey catenary_survey(const Monoid& m, u64 bound, ScanOptions opts = {}) {
  opts.with_catenary = true;
  return catenary_survey(scan_range(m, bound, opts));
}

/// M_{2^(n-1), (2^(n-1) - 1) * 2}: alpha = 1, beta = n - 1, so the closed
/// form gives n. For n = 2 this is M_{2,2}.
inline AcmDescriptor acm_with_catenary_degree(unsigned n) {
  if (n < 2) fail(ErrorKind::InvalidInput, "acm_with_catenary_degree requires n >= 2");
  if (n > 63) fail(ErrorKind::Overflow, "2^(n-1) does not fit in 64 bits for n = " + std::to_string(n));
  const u64 a = u64{1} << (n - 1);
  const u64 b = checked_mul(a - 1, 2);
  return validate_acm(a, b);
}

struct CatenaryLowerBoundCheck {
  bool applicable = false;  // false when the scanned delta set is empty
  unsigned max_delta = 0;
  std::optional<u64> max_delta_witness;
  unsigned lower_bound = 0;  // 2 + max delta
  std::size_t reference = 0;
  bool reference_is_closed_form = false;
  bool consistent = true;
};

inline CatenaryLowerBoundCheck catenary_lower_bound_check(const Monoid& m, const ScanResult& scan) {
  CatenaryLowerBoundCheck out;
  const auto deltas = delta_set_survey(scan);
  if (!deltas.max()) return out;
  out.applicable = true;
  out.max_delta = *deltas.max();
  out.max_delta_witness = deltas.witnesses.rbegin()->second;
  out.lower_bound = 2 + out.max_delta;
  if (m.local() != nullptr) {
    out.reference = catenary_closed_local(m);
    out.reference_is_closed_form = true;
  } else {
    out.reference = catenary_survey(scan).max_catenary;
  }
  out.consistent = out.lower_bound <= out.reference;
  return out;
}

/// 2 + max surveyed delta against c(M) (closed form when local).
inline CatenaryLowerBoundCheck catenary_lower_bound_check(const Monoid& m, u64 bound, ScanOptions opts = {}) {
  opts.with_catenary = m.local() == nullptr;
  return catenary_lower_bound_check(m, scan_range(m, bound, opts));
}

}  // namespace acm
