#pragma once

// Elementary number theory on unsigned 64-bit integers: checked arithmetic,
// a cached prime sieve, factoring by trial division, valuations, totients,
// multiplicative orders, inverses and primes in residue classes.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "acm/error.hpp"

namespace acm {

using u64 = std::uint64_t;

inline constexpr u64 kDefaultSieveBound = 1'000'000;
inline constexpr u64 kDefaultPrimeSearchCap = 10'000'000;

inline u64 checked_mul(u64 a, u64 b) {
  u64 out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    std::ostringstream msg;
    msg << "64-bit overflow in " << a << " * " << b;
    fail(ErrorKind::Overflow, msg.str());
  }
  return out;
}

inline u64 checked_add(u64 a, u64 b) {
  u64 out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    std::ostringstream msg;
    msg << "64-bit overflow in " << a << " + " << b;
    fail(ErrorKind::Overflow, msg.str());
  }
  return out;
}

inline u64 checked_pow(u64 base, unsigned exponent) {
  u64 out = 1;
  for (unsigned i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

/// Product that clamps at UINT64_MAX instead of wrapping.
inline u64 saturating_mul(u64 a, u64 b) {
  u64 out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return UINT64_MAX;
  return out;
}

inline u64 saturating_pow(u64 base, unsigned exponent) {
  u64 out = 1;
  for (unsigned i = 0; i < exponent; ++i) out = saturating_mul(out, base);
  return out;
}

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

inline u64 pow_mod(u64 base, u64 exponent, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exponent > 0) {
    if (exponent & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exponent >>= 1U;
  }
  return result;
}

namespace detail {

inline u64 sieve_bound_from_env() {
  const char* raw = std::getenv("ACM_SIEVE_BOUND");
  if (raw == nullptr || *raw == '\0') return kDefaultSieveBound;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || parsed < 100) return kDefaultSieveBound;
  // Past ~4e9 the squared bound no longer fits in 64 bits.
  return std::min<u64>(parsed, 4'000'000'000ULL);
}

/// Eratosthenes sieve built once per process and read-only afterwards.
class PrimeSieve {
 public:
  explicit PrimeSieve(u64 bound) : bound_(bound), composite_(bound + 1, false) {
    composite_[0] = true;
    if (bound >= 1) composite_[1] = true;
    for (u64 i = 2; i <= bound; ++i) {
      if (composite_[i]) continue;
      primes_.push_back(i);
      if (i > bound / i) continue;
      for (u64 j = i * i; j <= bound; j += i) composite_[j] = true;
    }
  }

  u64 bound() const { return bound_; }
  const std::vector<u64>& primes() const { return primes_; }
  bool is_prime_small(u64 n) const { return !composite_[n]; }

 private:
  u64 bound_;
  std::vector<bool> composite_;
  std::vector<u64> primes_;
};

inline const PrimeSieve& sieve() {
  static const PrimeSieve instance(sieve_bound_from_env());
  return instance;
}

}  // namespace detail

/// Every integer up to this bound is fully resolved by trial division.
inline u64 factoring_limit() {
  const u64 b = detail::sieve().bound();
  return b * b;
}

inline bool is_prime(u64 n) {
  const auto& sv = detail::sieve();
  if (n <= sv.bound()) return sv.is_prime_small(n);
  for (u64 p : sv.primes()) {
    if (p > n / p) return true;
    if (n % p == 0) return false;
  }
  std::ostringstream msg;
  msg << n << " exceeds the primality range " << factoring_limit() << " (raise ACM_SIEVE_BOUND)";
  fail(ErrorKind::OutOfRange, msg.str());
}

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

/// Canonical factorization over (Z, *): primes ascending, exponents >= 1.
struct PrimeFactorization {
  u64 value = 1;
  std::vector<PrimePower> factors;

  unsigned exponent_of(u64 p) const {
    for (const auto& f : factors) {
      if (f.prime == p) return f.exponent;
    }
    return 0;
  }

  /// Sum of exponents (big-Omega).
  unsigned total_multiplicity() const {
    unsigned total = 0;
    for (const auto& f : factors) total += f.exponent;
    return total;
  }

  std::vector<u64> primes() const {
    std::vector<u64> out;
    out.reserve(factors.size());
    for (const auto& f : factors) out.push_back(f.prime);
    return out;
  }

  u64 reassemble() const {
    u64 out = 1;
    for (const auto& f : factors) out = checked_mul(out, checked_pow(f.prime, f.exponent));
    return out;
  }
};

inline PrimeFactorization factor_integer(u64 n) {
  if (n < 2) fail(ErrorKind::InvalidInput, "factor_integer requires n >= 2");
  PrimeFactorization out;
  out.value = n;
  u64 rest = n;
  bool resolved = false;
  for (u64 p : detail::sieve().primes()) {
    if (p > rest / p) {
      resolved = true;
      break;
    }
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    out.factors.push_back({p, e});
  }
  if (!resolved && rest > factoring_limit()) {
    std::ostringstream msg;
    msg << n << " has a cofactor " << rest << " beyond the factoring range " << factoring_limit()
        << " (raise ACM_SIEVE_BOUND)";
    fail(ErrorKind::OutOfRange, msg.str());
  }
  // Every prime up to sqrt(rest) has been divided out, so a leftover is prime.
  if (rest > 1) out.factors.push_back({rest, 1});
  return out;
}

inline unsigned p_adic_valuation(u64 n, u64 p) {
  if (n == 0) fail(ErrorKind::InvalidInput, "p_adic_valuation requires n >= 1");
  if (!is_prime(p)) {
    std::ostringstream msg;
    msg << p << " is not prime";
    fail(ErrorKind::InvalidInput, msg.str());
  }
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

inline u64 euler_phi(u64 n) {
  if (n == 0) fail(ErrorKind::InvalidInput, "euler_phi requires n >= 1");
  if (n == 1) return 1;
  u64 phi = n;
  for (const auto& f : factor_integer(n).factors) phi = phi / f.prime * (f.prime - 1);
  return phi;
}

inline u64 multiplicative_order(u64 a, u64 n) {
  if (n < 2) fail(ErrorKind::InvalidInput, "multiplicative_order requires n >= 2");
  if (std::gcd(a, n) != 1) {
    std::ostringstream msg;
    msg << "gcd(" << a << ", " << n << ") != 1";
    fail(ErrorKind::InvalidInput, msg.str());
  }
  u64 order = euler_phi(n);
  if (order == 1) return 1;
  for (const auto& f : factor_integer(order).factors) {
    while (order % f.prime == 0 && pow_mod(a, order / f.prime, n) == 1) order /= f.prime;
  }
  return order;
}

inline u64 mod_inverse(u64 a, u64 n) {
  if (n < 2) fail(ErrorKind::InvalidInput, "mod_inverse requires n >= 2");
  if (std::gcd(a, n) != 1) {
    std::ostringstream msg;
    msg << "gcd(" << a << ", " << n << ") != 1";
    fail(ErrorKind::InvalidInput, msg.str());
  }
  __int128 r0 = n, r1 = a % n;
  __int128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    const __int128 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    const __int128 t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t0 < 0) t0 += n;
  return static_cast<u64>(t0);
}

/// Smallest prime among residue, residue + modulus, residue + 2*modulus, ...
/// that is not excluded. The scan starts at `residue` itself, so callers that
/// need primes above some p pass p + modulus.
inline u64 find_prime_in_class(u64 residue, u64 modulus, const std::set<u64>& exclusions,
                               u64 search_cap = kDefaultPrimeSearchCap) {
  if (modulus < 2) fail(ErrorKind::InvalidInput, "find_prime_in_class requires modulus >= 2");
  if (std::gcd(residue, modulus) != 1) {
    std::ostringstream msg;
    msg << "gcd(" << residue << ", " << modulus << ") != 1";
    fail(ErrorKind::InvalidInput, msg.str());
  }
  u64 candidate = residue;
  for (u64 scanned = 0; scanned < search_cap; ++scanned) {
    if (candidate >= 2 && !exclusions.contains(candidate) && is_prime(candidate)) return candidate;
    candidate = checked_add(candidate, modulus);
  }
  std::ostringstream msg;
  msg << "no prime = " << residue << " (mod " << modulus << ") within " << search_cap
      << " candidates";
  fail(ErrorKind::CapExceeded, msg.str());
}

/// All positive divisors, ascending.
inline std::vector<u64> divisors(const PrimeFactorization& pf) {
  std::vector<u64> out{1};
  for (const auto& f : pf.factors) {
    const std::size_t base = out.size();
    u64 power = 1;
    for (unsigned e = 1; e <= f.exponent; ++e) {
      power *= f.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<u64> divisors(u64 n) {
  if (n == 1) return {1};
  return divisors(factor_integer(n));
}

}  // namespace acm
