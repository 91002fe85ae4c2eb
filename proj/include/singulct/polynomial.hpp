#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "singulct/rational.hpp"

namespace singulct {

/// Dense exponent vector; its length is the variable count of the owning object.
using Exponent = std::vector<std::uint32_t>;

std::uint64_t totalDegree(const Exponent& e);

/// Graded lexicographic order: total degree first, ties broken lexicographically
/// with x_1 > x_2 > ... > x_n.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map keyed by exponent vector under GrlexLess, so iteration
/// is deterministic. Zero coefficients are never stored; the zero polynomial has
/// no terms.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexLess>;

  explicit Polynomial(std::size_t variableCount);

  static Polynomial constant(std::size_t variableCount, const Rational& c);
  static Polynomial variable(std::size_t variableCount, std::size_t index);
  static Polynomial monomial(const Exponent& e, const Rational& c = Rational(1));

  std::size_t variableCount() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t termCount() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }
  bool isMonomial() const { return terms_.size() == 1; }
  bool hasIntegerCoefficients() const;

  /// Largest total degree among terms; 0 for the zero polynomial.
  std::uint64_t totalDegree() const;
  /// Largest exponent of variable `i` among terms.
  std::uint32_t degreeIn(std::size_t i) const;
  Rational coefficient(const Exponent& e) const;
  Rational constantTerm() const;

  void addTerm(const Exponent& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned k) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Renders in descending grlex order using the grammar accepted by parsePolynomial.
  /// Non-integer coefficients print as "p/q*..." and are not re-parseable.
  std::string toString(const std::vector<std::string>& variableNames) const;

 private:
  std::size_t n_;
  TermMap terms_;
};

/// Parses `+ - * ^`, parentheses, integer literals and identifiers.
/// `^` binds tightest and takes a nonnegative integer literal; unary minus is allowed.
/// Throws ParseError (with byte offset) on malformed text or unknown identifiers.
Polynomial parsePolynomial(std::string_view text, const std::vector<std::string>& variableNames);

/// Default names x1..xn.
std::vector<std::string> defaultVariableNames(std::size_t n);

Polynomial partialDerivative(const Polynomial& f, std::size_t i);

/// f(point) mod `modulus` for integer-coefficient f; `modulus` must be a prime power.
std::uint64_t evalMod(const Polynomial& f, std::span<const std::uint64_t> point, std::uint64_t modulus);

/// Coefficients reduced into [0, modulus); throws DomainError on non-integer coefficients.
std::uint64_t reduceCoefficient(const Rational& c, std::uint64_t modulus);

}  // namespace singulct
