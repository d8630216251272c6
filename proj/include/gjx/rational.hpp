#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include "gjx/error.hpp"

namespace gjx {

/// Thrown by Rational::parse; carries the offending text.
class BadRational : public Error {
 public:
  BadRational(std::string_view text, std::string_view why)
      : Error("bad rational '" + std::string(text) + "': " + std::string(why)) {}
};

class ZeroDenominator : public BadRational {
 public:
  explicit ZeroDenominator(std::string_view text)
      : BadRational(text, "zero denominator") {}
};

/// Exact rational number in canonical form: denominator > 0, numerator and
/// denominator coprime, zero stored as 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: integers convert freely
  Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT

  explicit Rational(const mpz_class& integer) : value_(integer) {}

  Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw DivisionByZero("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
  }

  /// Parses `[sign] digits`, `[sign] digits "/" digits` or
  /// `[sign] digits "." digits`. Decimals convert exactly.
  static Rational parse(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      negative = text[pos] == '-';
      ++pos;
    }
    auto digits = [&](std::size_t from) {
      std::size_t end = from;
      while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
      return end;
    };
    std::size_t int_end = digits(pos);
    if (int_end == pos) throw BadRational(text, "expected digits");
    mpz_class numerator(std::string(text.substr(pos, int_end - pos)), 10);
    mpz_class denominator = 1;

    if (int_end < text.size()) {
      char sep = text[int_end];
      std::size_t frac_begin = int_end + 1;
      std::size_t frac_end = digits(frac_begin);
      if ((sep != '/' && sep != '.') || frac_end == frac_begin ||
          frac_end != text.size()) {
        throw BadRational(text, "unexpected character");
      }
      std::string tail(text.substr(frac_begin, frac_end - frac_begin));
      if (sep == '/') {
        denominator = mpz_class(tail, 10);
        if (denominator == 0) throw ZeroDenominator(text);
      } else {
        mpz_ui_pow_ui(denominator.get_mpz_t(), 10, tail.size());
        numerator = numerator * denominator + mpz_class(tail, 10);
      }
    }
    if (negative) numerator = -numerator;
    return Rational(numerator, denominator);
  }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Canonical text: "p" for integers, "p/q" otherwise, sign on p.
  std::string str() const { return value_.get_str(10); }

  /// True when the stored pair satisfies the canonical-form invariant.
  bool is_canonical() const {
    const mpz_class& den = value_.get_den();
    if (den <= 0) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), value_.get_num_mpz_t(), den.get_mpz_t());
    return g == 1;
  }

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  Rational& operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DivisionByZero("division by zero");
    value_ /= rhs.value_;
    return *this;
  }

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x) {
    Rational r;
    r.value_ = -x.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.str();
  }

 private:
  mpq_class value_{0};
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

/// Compares |a| with |b| as |p|*q' against |p'|*q.
inline std::strong_ordering compare_abs(const Rational& a, const Rational& b) {
  mpz_class lhs = a.raw().get_num() * b.raw().get_den();
  mpz_class rhs = b.raw().get_num() * a.raw().get_den();
  return mpz_cmpabs(lhs.get_mpz_t(), rhs.get_mpz_t()) <=> 0;
}

inline Rational reciprocal(const Rational& x) { return Rational(1) / x; }

}  // namespace gjx
