#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace singulct {

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(mpq_class value);
  explicit Rational(const mpz_class& integer) : value_(integer) {}

  /// Accepts "p", "-p" and "p/q".
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool isZero() const { return sgn(value_) == 0; }
  bool isInteger() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double toDouble() const { return value_.get_d(); }

  /// Always "num/den", including integers ("2/1").
  std::string toString() const;
  /// "num" for integers, "num/den" otherwise.
  std::string toShortString() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.toShortString(); }

 private:
  mpq_class value_{0};
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// A Rational or +infinity. Totally ordered with +infinity above every finite value.
class ExtendedRational {
 public:
  ExtendedRational(const Rational& value) : finite_(true), value_(value) {}  // NOLINT(implicit)
  ExtendedRational(std::int64_t value) : finite_(true), value_(value) {}     // NOLINT(implicit)

  static ExtendedRational infinity() { return ExtendedRational(); }

  bool isInfinite() const { return !finite_; }
  bool isFinite() const { return finite_; }
  /// Throws DomainError on +infinity.
  const Rational& value() const;
  double toDouble() const;
  /// "num/den" or "inf".
  std::string toString() const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
    if (!a.finite_ || !b.finite_) {
      if (a.finite_ == b.finite_) return std::strong_ordering::equal;
      return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.value_ <=> b.value_;
  }
  friend std::ostream& operator<<(std::ostream& os, const ExtendedRational& r) {
    if (r.isInfinite()) return os << "inf";
    return os << r.value_;
  }

 private:
  ExtendedRational() : finite_(false) {}
  bool finite_;
  Rational value_;
};

ExtendedRational min(const ExtendedRational& a, const ExtendedRational& b);

}  // namespace singulct
