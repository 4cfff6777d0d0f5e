#pragma once

// Exact rationals extended by two signed infinities, with the formal rules
//   1/0 = +inf,  r/(+-inf) = 0,  r +- inf = +-inf.
// Finite values are arbitrary precision and always reduced.

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/gmp.hpp>

#include "nsum/errors.hpp"

namespace nsum {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "p", "p/q" or "-p/q". The result is reduced.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw Error("empty rational literal");
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view digits) {
    std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
    if (digits.size() == start) throw Error("malformed rational literal '" + std::string(text) + "'");
    for (std::size_t i = start; i < digits.size(); ++i) {
      if (digits[i] < '0' || digits[i] > '9') {
        throw Error("malformed rational literal '" + std::string(text) + "'");
      }
    }
    std::string owned(digits[0] == '+' ? digits.substr(1) : digits);
    return Integer(owned);
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

class ExtRat {
 public:
  enum class Kind : std::uint8_t { finite, pos_inf, neg_inf };

  ExtRat() = default;
  ExtRat(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  ExtRat(long long value) : value_(value) {}            // NOLINT(google-explicit-constructor)

  static ExtRat pos_inf() { return ExtRat(Kind::pos_inf); }
  static ExtRat neg_inf() { return ExtRat(Kind::neg_inf); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  bool is_pos_inf() const noexcept { return kind_ == Kind::pos_inf; }
  bool is_neg_inf() const noexcept { return kind_ == Kind::neg_inf; }

  /// The finite value. Throws for infinities.
  const Rational& value() const {
    if (!is_finite()) throw Error("value() on an infinite ExtRat");
    return value_;
  }

  bool is_one() const { return is_finite() && value_ == 1; }
  bool is_zero() const { return is_finite() && value_ == 0; }

  std::string str() const {
    switch (kind_) {
      case Kind::pos_inf:
        return "+inf";
      case Kind::neg_inf:
        return "-inf";
      case Kind::finite:
        break;
    }
    return to_string(value_);
  }

  /// Inverse of str().
  static ExtRat parse(std::string_view text) {
    if (text == "+inf" || text == "inf") return pos_inf();
    if (text == "-inf") return neg_inf();
    return ExtRat(parse_rational(text));
  }

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
    if (a.is_finite() && b.is_finite()) return ExtRat(Rational(a.value_ + b.value_));
    if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
      throw IndeterminateSum();
    }
    return a.is_finite() ? b : a;
  }

  ExtRat& operator+=(const ExtRat& other) {
    if (is_finite() && other.is_finite()) {
      value_ += other.value_;
      return *this;
    }
    return *this = *this + other;
  }

  friend ExtRat operator-(const ExtRat& a) {
    switch (a.kind_) {
      case Kind::pos_inf:
        return neg_inf();
      case Kind::neg_inf:
        return pos_inf();
      case Kind::finite:
        break;
    }
    return ExtRat(Rational(-a.value_));
  }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.is_finite() || a.value_ == b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtRat& x) { return os << x.str(); }

 private:
  explicit ExtRat(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::finite;
  Rational value_{0};
};

/// (1 - s)^{-1} under the formal rules: 1 -> +inf, +-inf -> 0. Total.
inline ExtRat one_minus_inv(const ExtRat& s) {
  if (!s.is_finite()) return ExtRat(0);
  Rational denom = 1 - s.value();
  if (denom == 0) return ExtRat::pos_inf();
  return ExtRat(Rational(1 / denom));
}

}  // namespace nsum
