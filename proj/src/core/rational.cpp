#include "singulct/rational.hpp"

#include <cctype>
#include <limits>

#include "singulct/error.hpp"

namespace singulct {

namespace {

mpz_class parseInteger(std::string_view text) {
  if (text.empty()) throw DomainError("empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw DomainError("malformed integer literal '" + std::string(text) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw DomainError("malformed integer literal '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parseInteger(text));
  mpz_class num = parseInteger(text.substr(0, slash));
  mpz_class den = parseInteger(text.substr(slash + 1));
  if (den == 0) throw DomainError("rational with zero denominator");
  return Rational(mpq_class(num, den));
}

std::string Rational::toString() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::toShortString() const {
  if (isInteger()) return value_.get_num().get_str();
  return toString();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

const Rational& ExtendedRational::value() const {
  if (!finite_) throw DomainError("value of +infinity requested");
  return value_;
}

double ExtendedRational::toDouble() const {
  return finite_ ? value_.toDouble() : std::numeric_limits<double>::infinity();
}

std::string ExtendedRational::toString() const { return finite_ ? value_.toString() : "inf"; }

ExtendedRational min(const ExtendedRational& a, const ExtendedRational& b) { return b < a ? b : a; }

}  // namespace singulct
