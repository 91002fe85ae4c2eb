#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "singulct/classify.hpp"
#include "singulct/error.hpp"
#include "singulct/exact_lp.hpp"
#include "singulct/families.hpp"
#include "singulct/ideals.hpp"
#include "singulct/lct.hpp"
#include "singulct/milnor.hpp"

using namespace singulct;

namespace {

// Test-side oracle: exhaustive weight ratio minimum with exact rationals.
Rational bruteForceWeightLct(const MonomialIdeal& a, std::uint64_t bound) {
  const std::size_t n = a.variableCount();
  std::vector<std::uint64_t> w(n, 0);
  std::optional<Rational> best;
  while (true) {
    std::size_t i = 0;
    while (i < n && w[i] == bound) w[i++] = 0;
    if (i == n) break;
    ++w[i];
    std::uint64_t ord = UINT64_MAX;
    std::uint64_t sum = 0;
    for (auto x : w) sum += x;
    for (const auto& g : a.generators()) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s += w[k] * g[k];
      ord = std::min(ord, s);
    }
    if (ord == 0) continue;
    const Rational r(static_cast<std::int64_t>(sum), static_cast<std::int64_t>(ord));
    if (!best || r < *best) best = r;
  }
  return *best;
}

// Test-side oracle: number of standard monomials of a zero-dimensional monomial ideal.
std::uint64_t staircaseCount(const MonomialIdeal& a, std::uint32_t box) {
  const std::size_t n = a.variableCount();
  Exponent e(n, 0);
  std::uint64_t count = 0;
  while (true) {
    if (!a.contains(e)) ++count;
    std::size_t i = 0;
    while (i < n && e[i] == box) e[i++] = 0;
    if (i == n) break;
    ++e[i];
  }
  return count;
}

}  // namespace

TEST_CASE("jacobian ideal includes f") {
  const std::vector<std::string> xy{"x", "y"};
  const auto j = jacobianIdeal(parsePolynomial("x*y", xy));
  REQUIRE(j.generators().size() == 3);
  CHECK(j.generators()[0] == parsePolynomial("x*y", xy));
  CHECK(j.generators()[1] == parsePolynomial("y", xy));
  CHECK(j.generators()[2] == parsePolynomial("x", xy));

  const auto q = jacobianIdeal(parsePolynomial("x^2 + y^2", xy));
  CHECK(q.generators()[1] == parsePolynomial("2*x", xy));
  CHECK(q.generators()[2] == parsePolynomial("2*y", xy));

  const auto cubic = jacobianIdeal(parsePolynomial("x^3 + y^3", xy));
  CHECK(asMonomialIdeal(IdealPresentation({cubic.generators()[1], cubic.generators()[2]})) ==
        MonomialIdeal::fromGenerators(2, {{2, 0}, {0, 2}}));
  CHECK_THROWS_AS(jacobianIdeal(Polynomial(2)), DomainError);
}

TEST_CASE("pair ideal examples") {
  const std::vector<std::string> xy{"x", "y"};
  const auto square = asMonomialIdeal(pairIdeal(parsePolynomial("x^2 + y^2", xy)));
  REQUIRE(square);
  CHECK(*square == MonomialIdeal::fromGenerators(2, {{1, 0}, {0, 1}}).power(2));

  const auto smooth = asMonomialIdeal(pairIdeal(parsePolynomial("x", {"x"})));
  REQUIRE(smooth);
  CHECK(smooth->isUnit());

  for (unsigned d = 2; d <= 7; ++d) {
    const auto p = asMonomialIdeal(pairIdeal(Polynomial::monomial({d})));
    REQUIRE(p);
    CHECK(*p == MonomialIdeal::fromGenerators(1, {{d}}));
  }
  CHECK_FALSE(asMonomialIdeal(pairIdeal(parsePolynomial("x^3 + y^3", xy))));
}

TEST_CASE("exact LP solves a small problem") {
  // min -x - y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6
  const std::vector<std::vector<Rational>> a{{1, 2, 1, 0}, {3, 1, 0, 1}};
  const auto r = solveStandardFormLp(a, {4, 6}, {-1, -1, 0, 0});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == Rational(-14, 5));
  CHECK(r.solution[0] == Rational(8, 5));
  CHECK(r.solution[1] == Rational(6, 5));
  const auto inf = solveStandardFormLp({{1, 1}}, {-1}, {0, 0});
  CHECK(inf.status == LpStatus::Infeasible);
  const auto unb = solveStandardFormLp({{1, -1}}, {0}, {-1, 0});
  CHECK(unb.status == LpStatus::Unbounded);
}

TEST_CASE("lct of monomial ideals") {
  const auto x2 = MonomialIdeal::fromGenerators(1, {{2}});
  CHECK(lctMonomial(x2).value == ExtendedRational(Rational(1, 2)));

  const auto a = MonomialIdeal::fromGenerators(2, {{2, 0}, {0, 3}});
  CHECK(bruteForceWeightLct(a, 6) == Rational(5, 6));
  const auto r = lctMonomial(a);
  CHECK(r.certified);
  CHECK(r.value == ExtendedRational(Rational(5, 6)));
  CHECK(lctByNewtonLp(a) == ExtendedRational(Rational(5, 6)));

  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<Exponent> gens;
    for (std::size_t i = 0; i < n; ++i) {
      Exponent e(n, 0);
      e[i] = 1;
      gens.push_back(e);
    }
    const auto maxIdeal = MonomialIdeal::fromGenerators(n, gens);
    CHECK(bruteForceWeightLct(maxIdeal, 1) == Rational(static_cast<std::int64_t>(n)));
    const auto res = lctMonomial(maxIdeal);
    CHECK(res.certified);
    CHECK(res.value == ExtendedRational(Rational(static_cast<std::int64_t>(n))));
  }

  const auto unit = lctMonomial(MonomialIdeal::fromGenerators(2, {{0, 0}}));
  CHECK(unit.value.isInfinite());
  CHECK(lctByNewtonLp(MonomialIdeal::fromGenerators(2, {{0, 0}})).isInfinite());
  CHECK_THROWS_AS(lctMonomial(MonomialIdeal::zero(2)), DomainError);
}

TEST_CASE("too small a search bound is reported uncertified") {
  // (x^7, y^11): optimal weight (11, 7); a search capped at 4 cannot find it.
  const auto a = MonomialIdeal::fromGenerators(2, {{7, 0}, {0, 11}});
  const auto r = lctMonomial(a, {.initialBound = 2, .maxBound = 4});
  CHECK_FALSE(r.certified);
  CHECK(r.value > ExtendedRational(Rational(18, 77)));
  const auto full = lctMonomial(a);
  CHECK(full.certified);
  CHECK(full.value == ExtendedRational(Rational(18, 77)));
}

TEST_CASE("property: weight search agrees with the Newton LP on random ideals") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = testing::randomMonomialIdeal(rng, 2 + trial % 2, 5, 4);
    if (a.isUnit()) continue;
    const auto r = lctMonomial(a);
    REQUIRE(r.certified);
    CHECK(r.value == lctByNewtonLp(a));
    CHECK(r.value == ExtendedRational(bruteForceWeightLct(a, r.searchBound)));
  }
}

TEST_CASE("diagonal family closed form") {
  CHECK(lctDiagonalPair(2, 2) == Rational(1));
  CHECK(lctDiagonalPair(4, 3) == Rational(5, 4));
  CHECK(lctDiagonalPair(2, 3) == Rational(2, 3));
  CHECK_THROWS_AS(lctDiagonalPair(1, 3), DomainError);
  CHECK_THROWS_AS(lctDiagonalPair(3, 1), DomainError);
}

TEST_CASE("raw (a,b) minimization") {
  auto r = rawMinDiagonal(3, 2, 4);
  CHECK(r.value == Rational(3, 2));
  CHECK(r.a == 0);
  CHECK(r.b == 1);
  r = rawMinDiagonal(4, 3, 6);
  CHECK(r.value == Rational(5, 4));
  CHECK(r.a == 1);
  CHECK(r.b == 1);
  CHECK(r.conclusive);
  CHECK(rawMinDiagonal(2, 5, 8).value == Rational(2, 5));
  // n=6, d=5: optimum at a = d-2 = 3, so a bound of 2 misses it.
  const auto small = rawMinDiagonal(6, 5, 2);
  CHECK_FALSE(small.conclusive);
  CHECK(small.value > lctDiagonalPair(6, 5));
}

TEST_CASE("orbit codimension and contact order") {
  CHECK(orbitCodimension({0, 0, 0}) == 0);
  CHECK(orbitCodimension({1, 1}) == 4);
  CHECK(orbitCodimension({2, 1, 1}) == 10);
  CHECK(orbitContactOrder({1, 0}) == 0);
  CHECK(orbitContactOrder({1, 1}) == 2);
  CHECK(orbitContactOrder({3, 1}) == 2);
  CHECK_THROWS_AS(orbitCodimension({1, 2}), DomainError);
  CHECK_THROWS_AS(orbitContactOrder({1, -1}), DomainError);
}

TEST_CASE("determinantal pair lct") {
  const auto two = lctDeterminantalPair(2, 4);
  CHECK(two.value == Rational(2));
  CHECK(two.optimalPartition == Partition{1, 1});
  CHECK(two.certified);
  const auto three = lctDeterminantalPair(3, 4);
  CHECK(three.value == Rational(2));
  CHECK(three.optimalPartition == Partition{1, 1, 0});
  // (2,1): (2 + 3) / min{3, 2}
  CHECK(Rational(static_cast<std::int64_t>(orbitCodimension({2, 1})),
                 static_cast<std::int64_t>(orbitContactOrder({2, 1}))) == Rational(5, 2));
  CHECK(determinantalLowerBoundHolds(5, Rational(2)));
  CHECK_FALSE(determinantalLowerBoundHolds(3, Rational(9, 4)));
  CHECK_THROWS_AS(lctDeterminantalPair(1, 4), DomainError);
  CHECK_THROWS_AS(lctDeterminantalPair(2, 1), DomainError);
}

TEST_CASE("minimal exponents from b-function roots") {
  CHECK(minExpFromBFunction(determinantalBFunction(3)) == ExtendedRational(Rational(2)));
  CHECK(minExpFromBFunction(BFunctionRoots({{Rational(-1), 1}})).isInfinite());
  const BFunctionRoots yano({{Rational(-1), 1}, {Rational(-2, 3), 1}, {Rational(-1), 2}, {Rational(-4, 3), 1}});
  CHECK(minExpFromBFunction(yano) == ExtendedRational(Rational(2, 3)));
  CHECK(minExpFromBFunction(diagonalBFunction(2, 3)) == ExtendedRational(Rational(2, 3)));
  CHECK_THROWS_AS(minExpFromBFunction(BFunctionRoots({{Rational(-2), 1}})), DomainError);
  CHECK_THROWS_AS(BFunctionRoots({{Rational(0), 1}}), DomainError);
  CHECK_THROWS_AS(BFunctionRoots({}), DomainError);
}

TEST_CASE("family minimal exponents and lct(f)") {
  CHECK(minExpFamily(FamilyDescriptor::diagonal(4, 3)) == ExtendedRational(Rational(4, 3)));
  CHECK(minExpFamily(FamilyDescriptor::determinantal(5)) == ExtendedRational(Rational(2)));
  CHECK(minExpFamily(FamilyDescriptor::diagonal(2, 2)) == ExtendedRational(Rational(1)));
  CHECK(lctFromMinExp(Rational(4, 3)) == Rational(1));
  CHECK(lctFromMinExp(Rational(2, 3)) == Rational(2, 3));
  CHECK(lctFromMinExp(ExtendedRational::infinity()) == Rational(1));
  CHECK_THROWS_AS(lctFromMinExp(Rational(0)), DomainError);
  CHECK_THROWS_AS(lctFromMinExp(Rational(-1, 2)), DomainError);
}

TEST_CASE("family descriptors") {
  CHECK(FamilyDescriptor::parse("diag:4,3") == FamilyDescriptor::diagonal(4, 3));
  CHECK(FamilyDescriptor::parse("det:3").key() == "det:3");
  CHECK_THROWS_AS(FamilyDescriptor::parse("diag:1,3"), DomainError);
  CHECK_THROWS_AS(FamilyDescriptor::parse("det:x"), DomainError);
  CHECK_THROWS_AS(FamilyDescriptor::parse("cusp:2"), DomainError);

  const auto det2 = FamilyDescriptor::determinantal(2);
  CHECK(det2.polynomial() == parsePolynomial("x11*x22 - x12*x21", det2.variableNames()));
  CHECK(det2.polynomial().termCount() == 2);
  CHECK(FamilyDescriptor::determinantal(3).polynomial().termCount() == 6);
  CHECK(recognizeFamily(det2.polynomial()) == det2);
  CHECK(recognizeFamily(parsePolynomial("2*x^3 - y^3", {"x", "y"})) == FamilyDescriptor::diagonal(2, 3));
  CHECK_FALSE(recognizeFamily(parsePolynomial("x^3 - y^2", {"x", "y"})));
}

TEST_CASE("Milnor numbers against staircase oracles") {
  const std::vector<std::string> xy{"x", "y"};
  CHECK(staircaseCount(MonomialIdeal::fromGenerators(2, {{1, 0}, {0, 1}}), 4) == 1);
  CHECK(milnorNumber(parsePolynomial("x^2 + y^2", xy)).value == 1);
  CHECK(staircaseCount(MonomialIdeal::fromGenerators(2, {{2, 0}, {0, 1}}), 4) == 2);
  CHECK(milnorNumber(parsePolynomial("x^3 - y^2", xy)).value == 2);
  for (unsigned n = 2; n <= 3; ++n) {
    for (unsigned d = 2; d <= 4; ++d) {
      std::vector<Exponent> gens;
      for (unsigned i = 0; i < n; ++i) {
        Exponent e(n, 0);
        e[i] = d - 1;
        gens.push_back(e);
      }
      const auto oracle = staircaseCount(MonomialIdeal::fromGenerators(n, gens), d + 1);
      CHECK(milnorNumber(FamilyDescriptor::diagonal(n, d).polynomial()).value == oracle);
    }
  }
  // Non-monomial Jacobian: E6 singularity x^3 + y^4 has mu = 6; x^3 + x*y^3 (E7) has 7.
  CHECK(milnorNumber(parsePolynomial("x^3 + y^4", xy)).value == 6);
  CHECK(milnorNumber(parsePolynomial("x^3 + x*y^3", xy)).value == 7);
}

TEST_CASE("Milnor number errors and modular mode") {
  const std::vector<std::string> xy{"x", "y"};
  CHECK_THROWS_AS(milnorNumber(parsePolynomial("x + y^2", xy)), DomainError);
  CHECK_THROWS_AS(milnorNumber(parsePolynomial("x^2 + 1", xy)), DomainError);
  CHECK_THROWS_AS(milnorNumber(parsePolynomial("x^2", xy), {.maxTruncation = 8}), Inconclusive);
  const auto modular = milnorNumber(parsePolynomial("x^3 + x*y^3", xy), {.mode = MilnorMode::Modular});
  CHECK(modular.value == 7);
  CHECK(modular.primes.size() == 2);
  CHECK(modular.primes[0] != modular.primes[1]);
}

TEST_CASE("rational singularity classification") {
  auto c = classifyRationalSingularities(FamilyDescriptor::diagonal(3, 2));
  CHECK(c.rationalSingularities);
  CHECK(c.lctPair == ExtendedRational(Rational(3, 2)));
  CHECK(c.minExpAgrees == true);
  c = classifyRationalSingularities(FamilyDescriptor::diagonal(2, 2));
  CHECK_FALSE(c.rationalSingularities);
  CHECK(c.lctPair == ExtendedRational(Rational(1)));
  c = classifyRationalSingularities(FamilyDescriptor::determinantal(3));
  CHECK(c.rationalSingularities);
  CHECK(c.lctPair == ExtendedRational(Rational(2)));
  CHECK(c.pathway == "determinantal-orbit-search");

  c = classifyRationalSingularities(parsePolynomial("x^2 + y^2 + z^2", {"x", "y", "z"}));
  CHECK(c.rationalSingularities);
  c = classifyRationalSingularities(parsePolynomial("x^2", {"x"}));
  CHECK_FALSE(c.rationalSingularities);
  CHECK(c.lctPair == ExtendedRational(Rational(1, 2)));
  CHECK(c.pathway == "monomial-newton-search");
  CHECK_THROWS_AS(classifyRationalSingularities(parsePolynomial("x^3 - y^2", {"x", "y"})), DomainError);
}

TEST_CASE("invariant bundles") {
  const auto b = invariantBundle(FamilyDescriptor::diagonal(4, 3));
  CHECK(b.lctPair.value == ExtendedRational(Rational(5, 4)));
  CHECK(b.minExp == ExtendedRational(Rational(4, 3)));
  CHECK(b.lctF == ExtendedRational(Rational(1)));
  CHECK(b.milnor == 16U);
  CHECK(b.rationalSingularities);

  const auto smooth = invariantBundle(parsePolynomial("x", {"x"}));
  CHECK(smooth.lctPair.value.isInfinite());
  CHECK(smooth.lctF == ExtendedRational(Rational(1)));
  CHECK_FALSE(smooth.milnor.has_value());

  const auto cusp = invariantBundle(parsePolynomial("x^3 + y^3", {"x", "y"}));
  CHECK(cusp.lctPair.value == ExtendedRational(Rational(2, 3)));
  CHECK(cusp.milnor == 4U);
}
