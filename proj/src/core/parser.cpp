#include <cctype>
#include <limits>

#include "singulct/error.hpp"
#include "singulct/polynomial.hpp"

namespace singulct {

namespace {

// expr    := term (('+' | '-') term)*
// term    := unary ('*' unary)*
// unary   := '-' unary | '+' unary | power
// power   := primary ('^' integer)?
// primary := integer | identifier | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& names) : text_(text), names_(names) {}

  Polynomial parse() {
    skipSpace();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    Polynomial p = expr();
    skipSpace();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (!accept('^')) return base;
    skipSpace();
    const std::size_t at = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("exponent must be a nonnegative integer literal", at);
    }
    unsigned long long k = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      k = k * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (k > std::numeric_limits<std::uint32_t>::max()) throw ParseError("exponent too large", at);
      ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == '/')) {
      throw ParseError("exponent must be a nonnegative integer literal", at);
    }
    return base.pow(static_cast<unsigned>(k));
  }

  Polynomial primary() {
    skipSpace();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '.') throw ParseError("only integer literals are allowed", pos_);
      mpz_class value(std::string(text_.substr(start, pos_ - start)), 10);
      return Polynomial::constant(names_.size(), Rational(value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return Polynomial::variable(names_.size(), i);
      }
      throw ParseError("unknown variable '" + name + "'", start);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parsePolynomial(std::string_view text, const std::vector<std::string>& variableNames) {
  if (variableNames.empty()) throw DomainError("at least one variable name is required");
  for (std::size_t i = 0; i < variableNames.size(); ++i) {
    for (std::size_t j = i + 1; j < variableNames.size(); ++j) {
      if (variableNames[i] == variableNames[j]) throw DomainError("duplicate variable name '" + variableNames[i] + "'");
    }
  }
  return Parser(text, variableNames).parse();
}

}  // namespace singulct
