#include "singulct/lct.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

#include "singulct/error.hpp"
#include "singulct/exact_lp.hpp"

namespace singulct {

namespace {

struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 0;  // den == 0 means "none yet"

  bool lessThan(std::uint64_t n, std::uint64_t d) const {
    // n/d < num/den
    return den == 0 || static_cast<unsigned __int128>(n) * den < static_cast<unsigned __int128>(num) * d;
  }
};

// Scans all w in [0, bound]^n \ {0}; returns the best ratio and its weight.
std::pair<Ratio, std::vector<std::uint64_t>> searchWeights(const MonomialIdeal& a, std::uint64_t bound) {
  const std::size_t n = a.variableCount();
  std::vector<std::uint64_t> w(n, 0);
  Ratio best;
  std::vector<std::uint64_t> bestW;
  while (true) {
    // advance odometer
    std::size_t i = 0;
    while (i < n && w[i] == bound) w[i++] = 0;
    if (i == n) break;
    ++w[i];

    std::uint64_t ord = std::numeric_limits<std::uint64_t>::max();
    for (const auto& g : a.generators()) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s += w[k] * g[k];
      ord = std::min(ord, s);
    }
    if (ord == 0) continue;
    std::uint64_t ld = 0;
    for (const auto x : w) ld += x;
    if (best.lessThan(ld, ord)) {
      best = {ld, ord};
      bestW = w;
    }
  }
  return {best, bestW};
}

}  // namespace

bool diagonalPointInNewtonPolyhedron(const MonomialIdeal& a, const Rational& t) {
  if (a.isZero()) return false;
  const std::size_t n = a.variableCount();
  const std::size_t g = a.generators().size();
  // sum_g lambda_g e_g[i] + s_i = t ;  sum_g lambda_g = 1
  std::vector<std::vector<Rational>> rows(n + 1, std::vector<Rational>(g + n));
  std::vector<Rational> rhs(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < g; ++k) rows[i][k] = Rational(static_cast<std::int64_t>(a.generators()[k][i]));
    rows[i][g + i] = Rational(1);
    rhs[i] = t;
  }
  for (std::size_t k = 0; k < g; ++k) rows[n][k] = Rational(1);
  rhs[n] = Rational(1);
  const auto result = solveStandardFormLp(rows, rhs, std::vector<Rational>(g + n));
  return result.status != LpStatus::Infeasible;
}

ExtendedRational lctByNewtonLp(const MonomialIdeal& a) {
  if (a.isZero()) throw DomainError("lct of the zero ideal");
  const std::size_t n = a.variableCount();
  const std::size_t g = a.generators().size();
  // Variables: lambda (g), t, slacks (n).
  // sum_g lambda_g e_g[i] - t + s_i = 0 ;  sum_g lambda_g = 1 ;  minimize t
  const std::size_t cols = g + 1 + n;
  std::vector<std::vector<Rational>> rows(n + 1, std::vector<Rational>(cols));
  std::vector<Rational> rhs(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < g; ++k) rows[i][k] = Rational(static_cast<std::int64_t>(a.generators()[k][i]));
    rows[i][g] = Rational(-1);
    rows[i][g + 1 + i] = Rational(1);
  }
  for (std::size_t k = 0; k < g; ++k) rows[n][k] = Rational(1);
  rhs[n] = Rational(1);
  std::vector<Rational> cost(cols);
  cost[g] = Rational(1);
  const auto result = solveStandardFormLp(rows, rhs, cost);
  if (result.status != LpStatus::Optimal) throw std::logic_error("Newton polyhedron LP did not reach an optimum");
  if (result.objective.isZero()) return ExtendedRational::infinity();
  return Rational(1) / result.objective;
}

MonomialLctResult lctMonomial(const MonomialIdeal& a, const MonomialLctOptions& options) {
  if (a.isZero()) throw DomainError("lct of the zero ideal");
  MonomialLctResult result;
  if (a.isUnit()) {
    result.certified = true;
    return result;
  }
  std::uint64_t bound = options.initialBound > 0 ? options.initialBound : std::max<std::uint64_t>(1, a.maxGeneratorDegree());
  while (true) {
    auto [best, w] = searchWeights(a, bound);
    const Rational candidate(static_cast<std::int64_t>(best.num), static_cast<std::int64_t>(best.den));
    result.value = candidate;
    result.witness = WeightVector(w);
    result.searchBound = bound;
    if (diagonalPointInNewtonPolyhedron(a, Rational(1) / candidate)) {
      result.certified = true;
      return result;
    }
    if (bound * 2 > options.maxBound) return result;
    bound *= 2;
  }
}

Rational lctDiagonalPair(unsigned n, unsigned d) {
  if (n < 2 || d < 2) throw DomainError("diagonal family requires n >= 2 and d >= 2");
  const Rational closed = min(Rational(n + d - 2, 2 * d - 2), Rational(n, d));
  const auto search = rawMinDiagonal(n, d, d + 2);
  if (search.value != closed) {
    throw std::logic_error("diagonal lct closed form disagrees with the (a,b) search for n=" + std::to_string(n) +
                           ", d=" + std::to_string(d));
  }
  return closed;
}

DiagonalSearchResult rawMinDiagonal(unsigned n, unsigned d, std::uint64_t bound) {
  if (n < 2 || d < 2) throw DomainError("diagonal family requires n >= 2 and d >= 2");
  if (bound < 1) throw DomainError("search bound must be positive");
  DiagonalSearchResult result;
  Ratio best;
  for (std::uint64_t b = 1; b <= bound; ++b) {
    for (std::uint64_t a = 0; a <= bound; ++a) {
      const std::uint64_t num = n * b + a;
      const std::uint64_t den = std::min<std::uint64_t>(d * b + a, (2ULL * d - 2) * b);
      if (den == 0) continue;
      if (best.lessThan(num, den)) {
        best = {num, den};
        result.a = a;
        result.b = b;
      }
    }
  }
  result.value = Rational(static_cast<std::int64_t>(best.num), static_cast<std::int64_t>(best.den));
  result.conclusive = result.value == min(Rational(n + d - 2, 2 * d - 2), Rational(n, d));
  return result;
}

namespace {

void validatePartition(const Partition& lambda) {
  if (lambda.empty()) throw DomainError("empty partition");
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0) throw DomainError("partition has a negative entry");
    if (i > 0 && lambda[i] > lambda[i - 1]) throw DomainError("partition is not weakly decreasing");
  }
}

void enumeratePartitions(Partition& current, std::size_t index, std::int64_t maxPart, std::int64_t remaining,
                         const std::function<void(const Partition&)>& visit) {
  if (index == current.size()) {
    visit(current);
    return;
  }
  for (std::int64_t v = 0; v <= std::min(maxPart, remaining); ++v) {
    current[index] = v;
    enumeratePartitions(current, index + 1, v, remaining - v, visit);
  }
  current[index] = 0;
}

}  // namespace

std::uint64_t orbitCodimension(const Partition& lambda) {
  validatePartition(lambda);
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) s += static_cast<std::uint64_t>(lambda[i]) * (2 * i + 1);
  return s;
}

std::uint64_t orbitContactOrder(const Partition& lambda) {
  validatePartition(lambda);
  std::uint64_t total = 0;
  std::uint64_t tail = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    total += static_cast<std::uint64_t>(lambda[i]);
    if (i >= 1) tail += static_cast<std::uint64_t>(lambda[i]);
  }
  return std::min(total, 2 * tail);
}

bool determinantalLowerBoundHolds(unsigned n, const Rational& value) {
  // On the ray e_1 + ... + e_k the codimension is k^2 and 2 * sum_{i>=2} is 2(k-1).
  for (unsigned k = 1; k <= n; ++k) {
    const Rational form = Rational(static_cast<std::int64_t>(k) * k) - value * Rational(2 * (k - 1));
    if (form.sign() < 0) return false;
  }
  return true;
}

DeterminantalSearchResult lctDeterminantalPair(unsigned n, std::uint64_t bound) {
  if (n < 2) throw DomainError("determinantal family requires n >= 2");
  if (bound < 2) throw DomainError("determinantal search bound must be at least 2");
  const auto maxMass = static_cast<std::int64_t>(bound * n);

  DeterminantalSearchResult result;
  Ratio best;
  std::int64_t bestMass = 0;
  Partition current(n, 0);
  enumeratePartitions(current, 0, maxMass, maxMass, [&](const Partition& lambda) {
    if (lambda[1] <= 0) return;
    const std::uint64_t codim = orbitCodimension(lambda);
    const std::uint64_t contact = orbitContactOrder(lambda);
    if (contact == 0) return;
    std::int64_t mass = 0;
    for (const auto v : lambda) mass += v;
    const bool tie = best.den != 0 && static_cast<unsigned __int128>(codim) * best.den ==
                                          static_cast<unsigned __int128>(best.num) * contact;
    if (best.lessThan(codim, contact) || (tie && mass < bestMass)) {
      best = {codim, contact};
      bestMass = mass;
      result.optimalPartition = lambda;
    }
  });
  result.value = Rational(static_cast<std::int64_t>(best.num), static_cast<std::int64_t>(best.den));
  result.certified = determinantalLowerBoundHolds(n, result.value);
  return result;
}

}  // namespace singulct
