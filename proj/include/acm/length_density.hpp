#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "acm/factorization.hpp"
#include "acm/integer.hpp"
#include "acm/monoid.hpp"
#include "acm/rational.hpp"
#include "acm/survey.hpp"

namespace acm {

/// LD(M_{1,b}): none when phi(b) <= 2 (half-factorial), else 1/(phi(b) - 2).
inline std::optional<Rational> ld_closed_regular(const Monoid& m) {
  if (!m.is_regular()) fail(ErrorKind::InvalidInput, m.name() + " is not regular");
  const u64 phi = euler_phi(m.b());
  if (phi <= 2) return std::nullopt;
  return Rational(1, phi - 2);
}

/// LD for local singular monoids: none when alpha = beta = 1, 1 when
/// alpha = beta > 1, and 1/delta(alpha, beta) when alpha < beta.
inline std::optional<Rational> ld_closed_local(const Monoid& m) {
  const auto* local = m.local();
  if (local == nullptr) fail(ErrorKind::InvalidInput, m.name() + " is not local singular");
  if (local->alpha == local->beta) {
    if (local->alpha == 1) return std::nullopt;
    return Rational(1, 1);
  }
  return Rational(1, local->delta);
}

/// LD(M_{b,b}) = 1 when b has at least two distinct prime divisors.
inline Rational ld_closed_power(const Monoid& m) {
  if (m.a() != m.b()) fail(ErrorKind::InvalidInput, m.name() + " does not have a = b");
  if (m.global() == nullptr) {
    fail(ErrorKind::InvalidInput, m.name() + ": b must have at least two distinct prime divisors");
  }
  return Rational(1, 1);
}

struct LdSurvey {
  std::optional<Rational> min_ld;
  std::optional<u64> witness;  // smallest element attaining min_ld
  std::vector<u64> skipped;
};

inline LdSurvey ld_survey(const ScanResult& scan) {
  LdSurvey out;
  for (const auto& row : scan.rows) {
    if (row.capped || !row.profile.length_density) continue;
    if (!out.min_ld || *row.profile.length_density < *out.min_ld) {
      out.min_ld = row.profile.length_density;
      out.witness = row.element;
    }
  }
  out.skipped = scan.skipped;
  return out;
}

/// Minimum LD(x) over members x <= bound with positive length spread.
inline LdSurvey ld_survey(const Monoid& m, u64 bound, ScanOptions opts = {}) {
  opts.with_catenary = false;
  return ld_survey(scan_range(m, bound, opts));
}

struct LdWitness {
  u64 element = 0;
  LengthProfile profile;
  u64 generator = 0;  // residue of order phi(b)
  u64 prime_a = 0;    // = generator (mod b)
  u64 prime_b = 0;    // = generator^-1 (mod b)
};

/// x = a1^phi(b) * b1^phi(b) with a1 = g, b1 = g^-1 (mod b) for a residue g
/// of order phi(b); its only factorizations have lengths 2 and phi(b).
inline LdWitness ld_witness_regular(const Monoid& m, std::size_t cap = kDefaultFactorizationCap) {
  if (!m.is_regular()) fail(ErrorKind::InvalidInput, m.name() + " is not regular");
  const u64 b = m.b();
  const u64 phi = euler_phi(b);
  if (phi < 3) fail(ErrorKind::Unavailable, m.name() + " is half-factorial (phi(b) <= 2)");
  LdWitness out;
  for (u64 g = 2; g < b; ++g) {
    if (std::gcd(g, b) == 1 && multiplicative_order(g, b) == phi) {
      out.generator = g;
      break;
    }
  }
  if (out.generator == 0) {
    fail(ErrorKind::Unavailable, "no residue of order phi(b) modulo " + std::to_string(b));
  }
  out.prime_a = find_prime_in_class(out.generator, b, {});
  out.prime_b = find_prime_in_class(mod_inverse(out.generator, b), b, {out.prime_a});
  const unsigned e = static_cast<unsigned>(phi);
  out.element = checked_mul(checked_pow(out.prime_a, e), checked_pow(out.prime_b, e));
  out.profile = length_profile(m, out.element, cap);
  if (out.profile.lengths != std::vector<unsigned>{2, e}) {
    std::ostringstream msg;
    msg << "witness " << out.element << " does not have lengths {2, " << phi << "}";
    fail(ErrorKind::Structural, msg.str());
  }
  return out;
}

}  // namespace acm
