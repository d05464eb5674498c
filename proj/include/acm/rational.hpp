#pragma once

#include <compare>
#include <numeric>
#include <ostream>
#include <string>

#include "acm/integer.hpp"

namespace acm {

/// Nonnegative exact rational in lowest terms. Rendered as "p/q" always.
class Rational {
 public:
  Rational() = default;
  Rational(u64 num, u64 den) {
    if (den == 0) fail(ErrorKind::InvalidInput, "rational with zero denominator");
    const u64 g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  u64 num() const { return num_; }
  u64 den() const { return den_; }

  friend bool operator==(const Rational&, const Rational&) = default;

  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const unsigned __int128 l = static_cast<unsigned __int128>(lhs.num_) * rhs.den_;
    const unsigned __int128 r = static_cast<unsigned __int128>(rhs.num_) * lhs.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  u64 num_ = 0;
  u64 den_ = 1;
};

}  // namespace acm
