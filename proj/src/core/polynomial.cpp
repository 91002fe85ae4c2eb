#include "singulct/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "singulct/error.hpp"
#include "singulct/modular.hpp"

namespace singulct {

std::uint64_t totalDegree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  const auto da = totalDegree(a);
  const auto db = totalDegree(b);
  if (da != db) return da < db;
  // Larger leading exponent ranks higher, so lexicographically larger is "greater".
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial::Polynomial(std::size_t variableCount) : n_(variableCount) {
  if (variableCount == 0) throw DomainError("polynomial needs at least one variable");
}

Polynomial Polynomial::constant(std::size_t variableCount, const Rational& c) {
  Polynomial p(variableCount);
  p.addTerm(Exponent(variableCount, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t variableCount, std::size_t index) {
  if (index >= variableCount) throw DomainError("variable index out of range");
  Exponent e(variableCount, 0);
  e[index] = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p(e.size());
  p.addTerm(e, c);
  return p;
}

bool Polynomial::hasIntegerCoefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.isInteger(); });
}

std::uint64_t Polynomial::totalDegree() const {
  return terms_.empty() ? 0 : singulct::totalDegree(terms_.rbegin()->first);
}

std::uint32_t Polynomial::degreeIn(std::size_t i) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(i));
  return d;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constantTerm() const { return coefficient(Exponent(n_, 0)); }

void Polynomial::addTerm(const Exponent& e, const Rational& c) {
  if (e.size() != n_) throw DomainError("exponent length does not match variable count");
  if (c.isZero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.n_ != n_) throw DomainError("variable count mismatch");
  for (const auto& [e, c] : o.terms_) addTerm(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.n_ != n_) throw DomainError("variable count mismatch");
  for (const auto& [e, c] : o.terms_) addTerm(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw DomainError("variable count mismatch");
  Polynomial r(a.n_);
  Exponent e(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      r.addTerm(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(n_, Rational(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != n_) throw DomainError("point dimension mismatch");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

std::string Polynomial::toString(const std::vector<std::string>& variableNames) const {
  if (variableNames.size() != n_) throw DomainError("variable name count mismatch");
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variableNames[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += magnitude.toShortString();
    } else if (magnitude == Rational(1)) {
      out += mono;
    } else {
      out += magnitude.toShortString() + "*" + mono;
    }
  }
  return out;
}

std::vector<std::string> defaultVariableNames(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

Polynomial partialDerivative(const Polynomial& f, std::size_t i) {
  if (i >= f.variableCount()) throw DomainError("partial derivative index out of range");
  Polynomial r(f.variableCount());
  for (const auto& [e, c] : f.terms()) {
    if (e[i] == 0) continue;
    Exponent d = e;
    d[i] -= 1;
    r.addTerm(d, c * Rational(static_cast<std::int64_t>(e[i])));
  }
  return r;
}

std::uint64_t reduceCoefficient(const Rational& c, std::uint64_t modulus) {
  if (!c.isInteger()) throw DomainError("non-integer coefficient " + c.toString() + " in modular evaluation");
  mpz_class r;
  mpz_class num = c.numerator();
  mpz_fdiv_r_ui(r.get_mpz_t(), num.get_mpz_t(), modulus);
  return r.get_ui();
}

std::uint64_t evalMod(const Polynomial& f, std::span<const std::uint64_t> point, std::uint64_t modulus) {
  if (!primePowerDecomposition(modulus)) {
    throw DomainError("modulus " + std::to_string(modulus) + " is not a prime power");
  }
  if (point.size() != f.variableCount()) throw DomainError("point dimension mismatch");
  for (const auto x : point) {
    if (x >= modulus) throw DomainError("point entry outside [0, modulus)");
  }
  std::uint64_t sum = 0;
  for (const auto& [e, c] : f.terms()) {
    std::uint64_t term = reduceCoefficient(c, modulus);
    for (std::size_t i = 0; i < e.size() && term != 0; ++i) {
      if (e[i] > 0) term = mulMod(term, powMod(point[i], e[i], modulus), modulus);
    }
    sum = addMod(sum, term, modulus);
  }
  return sum;
}

}  // namespace singulct
