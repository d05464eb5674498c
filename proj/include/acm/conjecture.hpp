#pragma once

// Structural parameters of global singular monoids and empirical probes of
// two open identities: LD(M) = 1 / max Delta(M), and
// c(M) = max{zeta + 1, w_mu, c(mu'^zeta * mu^(w_mu - 1))}.
// Probes compare surveyed quantities; they never assert the identities.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "acm/catenary.hpp"
#include "acm/factorization.hpp"
#include "acm/length_density.hpp"
#include "acm/monoid.hpp"
#include "acm/survey.hpp"

namespace acm {

inline constexpr unsigned kDefaultPowerCap = 8;

struct XMember {
  u64 element = 0;
  std::vector<unsigned> multipliers;  // k_i with element = prod p_i^(k_i alpha_i)
  unsigned max_multiplier = 0;
};

struct GlobalProfile {
  unsigned zeta = 0;
  u64 mu = 0;
  u64 mu_prime = 0;
  unsigned mu_prime_max_multiplier = 0;
  std::optional<unsigned> catenary_order_mu;
  u64 search_bound = 0;
  std::size_t x_members_scanned = 0;
  // zeta is a minimum over a finite prefix of X only.
  bool bounded_estimate = true;
};

namespace detail {

inline const GlobalSingular& require_global(const Monoid& m) {
  const auto* g = m.global();
  if (g == nullptr) fail(ErrorKind::InvalidInput, m.name() + " is not global singular");
  return *g;
}

inline void collect_x_members(const Monoid& m, const std::vector<PrimePower>& primes, std::size_t i, u64 value,
                              std::vector<unsigned>& ks, u64 bound, std::vector<XMember>& out) {
  if (i == primes.size()) {
    if (m.contains(value)) {
      XMember x{value, ks, *std::max_element(ks.begin(), ks.end())};
      out.push_back(std::move(x));
    }
    return;
  }
  const u64 step = checked_pow(primes[i].prime, primes[i].exponent);
  u64 cur = value;
  for (unsigned k = 1;; ++k) {
    if (cur > bound / step) break;
    cur *= step;
    ks.push_back(k);
    collect_x_members(m, primes, i + 1, cur, ks, bound, out);
    ks.pop_back();
  }
}

}  // namespace detail

/// Members of M <= bound built from exactly the primes of d, each to a
/// positive multiple of its exponent in d; ascending.
inline std::vector<XMember> x_members(const Monoid& m, u64 bound) {
  const auto& g = detail::require_global(m);
  std::vector<XMember> out;
  std::vector<unsigned> ks;
  detail::collect_x_members(m, g.d_factorization.factors, 0, 1, ks, bound, out);
  std::sort(out.begin(), out.end(), [](const XMember& l, const XMember& r) { return l.element < r.element; });
  return out;
}

/// Least t <= power_cap with |Z(m^t)| > 1.
inline unsigned catenary_order(const Monoid& mon, u64 m, unsigned power_cap = kDefaultPowerCap) {
  detail::require_nonunit_member(mon.descriptor(), m, "catenary_order");
  u64 power = 1;
  for (unsigned t = 1; t <= power_cap; ++t) {
    power = checked_mul(power, m);
    try {
      if (enumerate_factorizations(mon, power, 1).size() > 1) return t;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CapExceeded) throw;
      return t;  // a second factorization exists
    }
  }
  std::ostringstream msg;
  msg << "every power " << m << "^t, t <= " << power_cap << ", factors uniquely";
  fail(ErrorKind::CapExceeded, msg.str());
}

/// zeta = least max-multiplier over X (searched up to the bound), mu its
/// smallest realizer, mu' the smallest member with the next larger
/// max-multiplier.
inline GlobalProfile global_profile(const Monoid& m, u64 search_bound, unsigned power_cap = kDefaultPowerCap) {
  auto members = x_members(m, search_bound);
  GlobalProfile out;
  out.search_bound = search_bound;
  out.x_members_scanned = members.size();
  std::stable_sort(members.begin(), members.end(),
                   [](const XMember& l, const XMember& r) { return l.max_multiplier < r.max_multiplier; });
  auto next = members.end();
  if (!members.empty()) {
    next = std::find_if(members.begin(), members.end(),
                        [&](const XMember& x) { return x.max_multiplier > members.front().max_multiplier; });
  }
  if (next == members.end()) {
    std::ostringstream msg;
    msg << "fewer than two max-multiplier levels among X-members <= " << search_bound << " in " << m.name();
    fail(ErrorKind::CapExceeded, msg.str());
  }
  out.zeta = members.front().max_multiplier;
  out.mu = members.front().element;
  out.mu_prime = next->element;
  out.mu_prime_max_multiplier = next->max_multiplier;
  try {
    out.catenary_order_mu = catenary_order(m, out.mu, power_cap);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CapExceeded && e.kind() != ErrorKind::Overflow) throw;
  }
  return out;
}

enum class Verdict { Consistent, Inconsistent, InsufficientData };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "consistent";
    case Verdict::Inconsistent: return "inconsistent";
    case Verdict::InsufficientData: return "insufficient_data";
  }
  return "unknown";
}

struct LdConjectureReport {
  u64 bound = 0;
  std::optional<unsigned> max_delta;
  std::optional<u64> max_delta_witness;
  std::optional<Rational> min_ld;  // left side
  std::optional<u64> min_ld_witness;
  std::optional<Rational> inverse_max_delta;  // right side
  Verdict verdict = Verdict::InsufficientData;
  std::vector<u64> skipped;
};

inline Verdict ld_verdict(const std::optional<Rational>& lhs, const std::optional<Rational>& rhs) {
  if (!lhs || !rhs) return Verdict::InsufficientData;
  return *lhs == *rhs ? Verdict::Consistent : Verdict::Inconsistent;
}

inline LdConjectureReport probe_ld_conjecture(const Monoid& m, u64 bound, ScanOptions opts = {}) {
  detail::require_global(m);
  opts.with_catenary = false;
  const auto scan = scan_range(m, bound, opts);
  const auto deltas = delta_set_survey(scan);
  const auto ld = ld_survey(scan);
  LdConjectureReport out;
  out.bound = bound;
  out.max_delta = deltas.max();
  if (out.max_delta) {
    out.max_delta_witness = deltas.witnesses.rbegin()->second;
    out.inverse_max_delta = Rational(1, *out.max_delta);
  }
  out.min_ld = ld.min_ld;
  out.min_ld_witness = ld.witness;
  out.verdict = ld_verdict(out.min_ld, out.inverse_max_delta);
  out.skipped = scan.skipped;
  return out;
}

struct CatenaryProbeTerm {
  unsigned exponent = 0;  // t - 1 in mu'^zeta * mu^(t-1)
  u64 element = 0;
  std::optional<std::size_t> catenary;  // absent when enumeration was capped
};

struct CatenaryConjectureReport {
  u64 bound = 0;
  GlobalProfile profile;
  std::optional<u64> probe_element;  // mu'^zeta * mu^(w_mu - 1)
  std::optional<std::size_t> probe_catenary;
  std::vector<CatenaryProbeTerm> hedges;  // t in {w_mu - 1, w_mu, w_mu + 1}
  std::optional<std::size_t> rhs;
  std::size_t surveyed_max = 0;
  std::optional<u64> surveyed_witness;
  bool within_reach = false;  // the probe element and mu^w_mu lie in the scan
  Verdict verdict = Verdict::InsufficientData;
  std::vector<u64> skipped;
};

/// Consistent when nothing scanned exceeds the right side and, if the
/// right side is within reach, something scanned attains it.
inline Verdict catenary_verdict(std::optional<std::size_t> rhs, std::size_t surveyed_max, bool within_reach) {
  if (!rhs) return Verdict::InsufficientData;
  if (surveyed_max > *rhs) return Verdict::Inconsistent;
  if (within_reach && surveyed_max != *rhs) return Verdict::Inconsistent;
  return Verdict::Consistent;
}

inline CatenaryConjectureReport probe_catenary_conjecture(const Monoid& m, u64 bound, ScanOptions opts = {},
                                                          unsigned power_cap = kDefaultPowerCap) {
  detail::require_global(m);
  CatenaryConjectureReport out;
  out.bound = bound;
  out.profile = global_profile(m, bound, power_cap);

  const auto term = [&](unsigned exponent) {
    CatenaryProbeTerm t;
    t.exponent = exponent;
    t.element = checked_mul(checked_pow(out.profile.mu_prime, out.profile.zeta),
                            checked_pow(out.profile.mu, exponent));
    try {
      t.catenary = catenary_of_element(m, t.element, opts.factorization_cap);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CapExceeded) throw;
    }
    return t;
  };

  if (out.profile.catenary_order_mu) {
    const unsigned w = *out.profile.catenary_order_mu;
    const auto main = term(w - 1);
    out.probe_element = main.element;
    out.probe_catenary = main.catenary;
    for (unsigned t = (w >= 2 ? w - 1 : w); t <= w + 1; ++t) {
      try {
        out.hedges.push_back(term(t - 1));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Overflow) throw;
      }
    }
    if (out.probe_catenary) {
      out.rhs = std::max<std::size_t>({out.profile.zeta + 1, w, *out.probe_catenary});
    }
    const u64 mu_power = saturating_pow(out.profile.mu, w);
    out.within_reach = main.element <= bound && mu_power <= bound;
  }

  opts.with_catenary = true;
  const auto scan = scan_range(m, bound, opts);
  const auto survey = catenary_survey(scan);
  out.surveyed_max = survey.max_catenary;
  out.surveyed_witness = survey.witness;
  out.skipped = scan.skipped;
  out.verdict = catenary_verdict(out.rhs, out.surveyed_max, out.within_reach);
  return out;
}

}  // namespace acm
