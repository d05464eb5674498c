#pragma once

// Factorization sets Z(x), length profiles, the factorization distance,
// chains of factorizations and the catenary degree of a single element.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "acm/error.hpp"
#include "acm/integer.hpp"
#include "acm/monoid.hpp"
#include "acm/rational.hpp"
#include "acm/union_find.hpp"

namespace acm {

inline constexpr std::size_t kDefaultFactorizationCap = 100'000;

/// A multiset of atoms in canonical (nondecreasing) order.
struct Factorization {
  std::vector<u64> atoms;
  u64 element = 1;

  Factorization() = default;
  explicit Factorization(std::vector<u64> atom_list) : atoms(std::move(atom_list)) {
    std::sort(atoms.begin(), atoms.end());
    element = 1;
    for (u64 a : atoms) element = checked_mul(element, a);
  }

  std::size_t length() const { return atoms.size(); }

  bool operator==(const Factorization& other) const { return atoms == other.atoms; }
  auto operator<=>(const Factorization& other) const { return atoms <=> other.atoms; }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (i) out += "·";
      out += std::to_string(atoms[i]);
    }
    return out;
  }
};

namespace detail {

class FactorizationEnumerator {
 public:
  FactorizationEnumerator(const Monoid& m, u64 x, std::size_t cap)
      : m_(m), x_(x), cap_(cap), divisors_(divisors(x)) {}

  std::vector<Factorization> run() {
    walk(x_, 0);
    return std::move(out_);
  }

 private:
  void emit(u64 last) {
    current_.push_back(last);
    if (out_.size() >= cap_) {
      std::ostringstream msg;
      msg << "more than " << cap_ << " factorizations of " << x_ << " in " << m_.name();
      fail(ErrorKind::CapExceeded, msg.str());
    }
    Factorization z;
    z.atoms = current_;
    z.element = x_;
    out_.push_back(std::move(z));
    current_.pop_back();
  }

  // Extend current_ by atoms >= min_atom whose product is rest.
  void walk(u64 rest, u64 min_atom) {
    auto it = std::lower_bound(divisors_.begin(), divisors_.end(), std::max<u64>(min_atom, 2));
    for (; it != divisors_.end(); ++it) {
      const u64 y = *it;
      if (y > rest / y) break;
      if (rest % y != 0 || !m_.contains(y)) continue;
      const u64 q = rest / y;
      if (!m_.contains(q) || !m_.is_atom(y)) continue;
      current_.push_back(y);
      walk(q, y);
      current_.pop_back();
    }
    if (rest >= min_atom && rest > 1 && m_.is_atom(rest)) emit(rest);
  }

  const Monoid& m_;
  u64 x_;
  std::size_t cap_;
  std::vector<u64> divisors_;
  std::vector<u64> current_;
  std::vector<Factorization> out_;
};

}  // namespace detail

/// Complete Z(x), each factorization canonical, sorted lexicographically.
inline std::vector<Factorization> enumerate_factorizations(const Monoid& m, u64 x,
                                                           std::size_t cap = kDefaultFactorizationCap) {
  detail::require_nonunit_member(m.descriptor(), x, "enumerate_factorizations");
  return detail::FactorizationEnumerator(m, x, cap).run();
}

struct LengthProfile {
  std::vector<unsigned> lengths;  // L(x), ascending
  unsigned min_length = 0;
  unsigned max_length = 0;
  unsigned spread = 0;
  std::vector<unsigned> delta_set;  // ascending, distinct
  std::optional<Rational> length_density;
};

inline LengthProfile profile_from_factorizations(std::span<const Factorization> zs) {
  if (zs.empty()) fail(ErrorKind::InvalidInput, "length profile of an empty factorization set");
  LengthProfile p;
  for (const auto& z : zs) p.lengths.push_back(static_cast<unsigned>(z.length()));
  std::sort(p.lengths.begin(), p.lengths.end());
  p.lengths.erase(std::unique(p.lengths.begin(), p.lengths.end()), p.lengths.end());
  p.min_length = p.lengths.front();
  p.max_length = p.lengths.back();
  p.spread = p.max_length - p.min_length;
  for (std::size_t i = 1; i < p.lengths.size(); ++i) p.delta_set.push_back(p.lengths[i] - p.lengths[i - 1]);
  std::sort(p.delta_set.begin(), p.delta_set.end());
  p.delta_set.erase(std::unique(p.delta_set.begin(), p.delta_set.end()), p.delta_set.end());
  if (p.spread > 0) p.length_density = Rational(p.lengths.size() - 1, p.spread);
  return p;
}

inline LengthProfile length_profile(const Monoid& m, u64 x, std::size_t cap = kDefaultFactorizationCap) {
  const auto zs = enumerate_factorizations(m, x, cap);
  return profile_from_factorizations(zs);
}

/// Strip the common sub-multiset and take the larger remainder.
inline std::size_t factorization_distance(const Factorization& z1, const Factorization& z2) {
  if (z1.element != z2.element) {
    std::ostringstream msg;
    msg << "distance between factorizations of different elements (" << z1.element << " vs "
        << z2.element << ")";
    fail(ErrorKind::InvalidInput, msg.str());
  }
  std::size_t i = 0, j = 0, common = 0;
  while (i < z1.atoms.size() && j < z2.atoms.size()) {
    if (z1.atoms[i] == z2.atoms[j]) {
      ++common;
      ++i;
      ++j;
    } else if (z1.atoms[i] < z2.atoms[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return std::max(z1.length() - common, z2.length() - common);
}

struct ChainCertificate {
  std::vector<Factorization> steps;
  std::vector<std::size_t> link_distances;
  std::size_t max_link = 0;
};

inline ChainCertificate make_chain(std::vector<Factorization> steps) {
  if (steps.empty()) fail(ErrorKind::InvalidInput, "a chain needs at least one factorization");
  ChainCertificate cert;
  for (std::size_t i = 1; i < steps.size(); ++i) {
    const std::size_t d = factorization_distance(steps[i - 1], steps[i]);
    cert.link_distances.push_back(d);
    cert.max_link = std::max(cert.max_link, d);
  }
  cert.steps = std::move(steps);
  return cert;
}

/// True iff the certificate is an N-chain. Recorded distances are recomputed.
inline bool verify_chain(const ChainCertificate& cert, std::size_t n) {
  if (cert.steps.empty() || cert.link_distances.size() + 1 != cert.steps.size()) {
    fail(ErrorKind::InvalidInput, "malformed chain certificate");
  }
  const u64 element = cert.steps.front().element;
  std::size_t max_link = 0;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    if (cert.steps[i].element != element) {
      fail(ErrorKind::InvalidInput, "chain certificate mixes factorizations of different elements");
    }
    if (i == 0) continue;
    const std::size_t d = factorization_distance(cert.steps[i - 1], cert.steps[i]);
    if (d != cert.link_distances[i - 1]) {
      fail(ErrorKind::InvalidInput, "chain certificate records a wrong link distance");
    }
    max_link = std::max(max_link, d);
  }
  if (max_link != cert.max_link) fail(ErrorKind::InvalidInput, "chain certificate records a wrong max_link");
  return max_link <= n;
}

/// Least N making the distance graph on zs connected: the bottleneck weight
/// of a minimum spanning tree, found by Kruskal order with union-find.
inline std::size_t catenary_of_factorizations(std::span<const Factorization> zs) {
  const std::size_t n = zs.size();
  if (n <= 1) return 0;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(factorization_distance(zs[i], zs[j]), i, j);
  }
  std::sort(edges.begin(), edges.end());
  UnionFind uf(n);
  for (const auto& [w, i, j] : edges) {
    if (uf.merge(i, j) && uf.components() == 1) return w;
  }
  return 0;  // unreachable: the complete graph is connected
}

inline std::size_t catenary_of_element(const Monoid& m, u64 x, std::size_t cap = kDefaultFactorizationCap) {
  const auto zs = enumerate_factorizations(m, x, cap);
  return catenary_of_factorizations(zs);
}

/// Validates that z is a factorization of x into atoms of m.
inline bool is_factorization_of(const Monoid& m, const Factorization& z, u64 x) {
  if (z.atoms.empty() || !std::is_sorted(z.atoms.begin(), z.atoms.end())) return false;
  u64 product = 1;
  for (u64 a : z.atoms) {
    if (a == 1 || !m.contains(a) || !m.is_atom(a)) return false;
    product = saturating_mul(product, a);
  }
  return product == x && z.element == x;
}

}  // namespace acm
