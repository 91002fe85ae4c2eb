#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "singulct/error.hpp"
#include "singulct/polynomial.hpp"

using namespace singulct;

namespace {
const std::vector<std::string> kXY{"x", "y"};
}

TEST_CASE("parse reads terms directly") {
  const Polynomial f = parsePolynomial("x^2 + y^3", kXY);
  CHECK(f.termCount() == 2);
  CHECK(f.coefficient({2, 0}) == Rational(1));
  CHECK(f.coefficient({0, 3}) == Rational(1));

  CHECK(parsePolynomial("0", {"x"}).isZero());

  const std::vector<std::string> m{"x11", "x12", "x21", "x22"};
  const Polynomial det = parsePolynomial("x11*x22 - x12*x21", m);
  CHECK(det.termCount() == 2);
  CHECK(det.coefficient({1, 0, 0, 1}) == Rational(1));
  CHECK(det.coefficient({0, 1, 1, 0}) == Rational(-1));
}

TEST_CASE("parse precedence") {
  CHECK(parsePolynomial("-x^2", kXY) == -parsePolynomial("x^2", kXY));
  CHECK(parsePolynomial("2*(x+y)^2", kXY) == parsePolynomial("2*x^2 + 4*x*y + 2*y^2", kXY));
  CHECK(parsePolynomial("  x -  - y ", kXY) == parsePolynomial("x+y", kXY));
  CHECK(parsePolynomial("2^3*x", kXY) == parsePolynomial("8*x", kXY));
  CHECK(parsePolynomial("x - x", kXY).isZero());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parsePolynomial("x + z", kXY), ParseError);
  try {
    parsePolynomial("x + z", kXY);
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parsePolynomial("x^y", kXY), ParseError);
  CHECK_THROWS_AS(parsePolynomial("x^1.5", kXY), ParseError);
  CHECK_THROWS_AS(parsePolynomial("x^-1", kXY), ParseError);
  CHECK_THROWS_AS(parsePolynomial("(x + y", kXY), ParseError);
  CHECK_THROWS_AS(parsePolynomial("x y", kXY), ParseError);
  CHECK_THROWS_AS(parsePolynomial("", kXY), ParseError);
  CHECK_THROWS_AS(parsePolynomial("1.5*x", kXY), ParseError);
}

TEST_CASE("printing is graded lexicographic descending") {
  const Polynomial f = parsePolynomial("1 + y^3 - 3*x*y + x^2", kXY);
  CHECK(f.toString(kXY) == "y^3 + x^2 - 3*x*y + 1");
  CHECK(Polynomial(2).toString(kXY) == "0");
  CHECK((Polynomial::variable(2, 0) * Rational(1, 2)).toString(kXY) == "1/2*x");
}

TEST_CASE("property: print then parse is the identity") {
  std::mt19937_64 rng(7);
  const auto names = defaultVariableNames(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Polynomial f = testing::randomPolynomial(rng, 3);
    const std::string text = f.toString(names);
    const Polynomial g = parsePolynomial(text, names);
    CHECK(g == f);
    CHECK(g.toString(names) == text);
  }
}

TEST_CASE("partial derivatives") {
  const Polynomial f = parsePolynomial("x^2*y", kXY);
  CHECK(partialDerivative(f, 0) == parsePolynomial("2*x*y", kXY));
  CHECK(partialDerivative(parsePolynomial("y^3", kXY), 0).isZero());
  const auto names = defaultVariableNames(3);
  const Polynomial diag = parsePolynomial("x1^5 + x2^5 + x3^5", names);
  CHECK(partialDerivative(diag, 0) == parsePolynomial("5*x1^4", names));
  CHECK_THROWS_AS(partialDerivative(f, 2), DomainError);
}

TEST_CASE("property: derivative is linear and obeys the product rule") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial f = testing::randomPolynomial(rng, 3);
    const Polynomial g = testing::randomPolynomial(rng, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(partialDerivative(f + g, i) == partialDerivative(f, i) + partialDerivative(g, i));
      CHECK(partialDerivative(f * g, i) == partialDerivative(f, i) * g + f * partialDerivative(g, i));
    }
  }
}

TEST_CASE("evalMod") {
  const Polynomial f = parsePolynomial("x^2 + y^3", kXY);
  const std::uint64_t p1[] = {2, 1};
  CHECK(evalMod(f, p1, 27) == 5);
  const std::uint64_t p2[] = {26};
  CHECK(evalMod(parsePolynomial("x", {"x"}), p2, 27) == 26);
  const std::uint64_t p3[] = {3};
  CHECK(evalMod(parsePolynomial("x^2", {"x"}), p3, 9) == 0);
  const std::uint64_t p4[] = {1};
  CHECK(evalMod(parsePolynomial("-x", {"x"}), p4, 9) == 8);

  CHECK_THROWS_AS(evalMod(Polynomial::variable(1, 0) * Rational(1, 2), p4, 9), DomainError);
  CHECK_THROWS_AS(evalMod(f, p1, 12), DomainError);
  const std::uint64_t big[] = {30, 1};
  CHECK_THROWS_AS(evalMod(f, big, 27), DomainError);
}

TEST_CASE("evalMod does not overflow near 2^62") {
  const std::uint64_t m = 4611686018427387904ULL;  // 2^62
  const std::uint64_t pt[] = {m - 1};
  // (-1)^3 + 5 = 4
  CHECK(evalMod(parsePolynomial("x^3 + 5", {"x"}), pt, m) == 4);
}

TEST_CASE("property: evalMod is additive") {
  std::mt19937_64 rng(13);
  const std::uint64_t moduli[] = {9, 25, 49, 343, 1024};
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial f = testing::randomPolynomial(rng, 2);
    const Polynomial g = testing::randomPolynomial(rng, 2);
    const std::uint64_t m = moduli[trial % 5];
    std::uniform_int_distribution<std::uint64_t> pick(0, m - 1);
    const std::uint64_t pt[] = {pick(rng), pick(rng)};
    CHECK(evalMod(f + g, pt, m) == (evalMod(f, pt, m) + evalMod(g, pt, m)) % m);
  }
}
