#include "singulct/milnor.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "singulct/error.hpp"
#include "singulct/modular.hpp"

namespace singulct {

namespace {

struct RationalField {
  using Value = mpq_class;
  Value fromRational(const Rational& r) const { return r.raw(); }
  static bool isZero(const Value& v) { return sgn(v) == 0; }
  Value inverse(const Value& v) const { return 1 / v; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
};

struct PrimeField {
  using Value = std::uint64_t;
  std::uint64_t p;
  Value fromRational(const Rational& r) const {
    const std::uint64_t num = reduceCoefficient(Rational(r.numerator()), p);
    const std::uint64_t den = reduceCoefficient(Rational(r.denominator()), p);
    if (den == 0) throw DomainError("coefficient denominator divisible by the modular prime");
    return mulMod(num, inverse(den), p);
  }
  static bool isZero(const Value& v) { return v == 0; }
  Value inverse(const Value& v) const { return powMod(v, p - 2, p); }
  Value mul(const Value& a, const Value& b) const { return mulMod(a, b, p); }
  Value sub(const Value& a, const Value& b) const { return a >= b ? a - b : a + p - b; }
};

template <class Field>
class Echelon {
 public:
  using Value = typename Field::Value;
  using Row = std::vector<std::pair<std::uint32_t, Value>>;

  Echelon(Field field, std::size_t columns) : field_(std::move(field)), pivotRow_(columns, -1) {}

  void insert(Row row) {
    while (!row.empty()) {
      const std::uint32_t lead = row.front().first;
      const int pivot = pivotRow_[lead];
      if (pivot < 0) {
        const Value inv = field_.inverse(row.front().second);
        for (auto& [c, v] : row) v = field_.mul(v, inv);
        pivotRow_[lead] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        return;
      }
      row = eliminate(row, rows_[static_cast<std::size_t>(pivot)]);
    }
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  // row - row.lead * pivot, where the pivot row has leading coefficient 1.
  Row eliminate(const Row& row, const Row& pivot) const {
    const Value factor = row.front().second;
    Row out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 1;
    std::size_t j = 1;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        out.push_back(row[i++]);
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        Value v = field_.sub(Value(0), field_.mul(factor, pivot[j].second));
        out.emplace_back(pivot[j].first, std::move(v));
        ++j;
      } else {
        Value v = field_.sub(row[i].second, field_.mul(factor, pivot[j].second));
        if (!Field::isZero(v)) out.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  Field field_;
  std::vector<int> pivotRow_;
  std::vector<Row> rows_;
};

std::uint64_t basisSize(std::size_t n, unsigned k) {
  auto size = checkedPow(k, static_cast<unsigned>(n));
  if (!size) throw DomainError("truncated monomial basis does not fit in 64 bits");
  return *size;
}

template <class Field>
std::uint64_t colength(const Polynomial& f, unsigned k, const Field& field) {
  const std::size_t n = f.variableCount();
  const std::uint64_t columns = basisSize(n, k);
  std::vector<std::vector<std::pair<Exponent, typename Field::Value>>> partials;
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial d = partialDerivative(f, i);
    if (d.isZero()) continue;
    std::vector<std::pair<Exponent, typename Field::Value>> terms;
    for (const auto& [e, c] : d.terms()) {
      auto v = field.fromRational(c);
      if (!Field::isZero(v)) terms.emplace_back(e, std::move(v));
    }
    partials.push_back(std::move(terms));
  }

  Echelon<Field> echelon(field, columns);
  Exponent shift(n, 0);
  for (std::uint64_t index = 0; index < columns; ++index) {
    // shift = digits of index in base k
    std::uint64_t rest = index;
    for (std::size_t i = 0; i < n; ++i) {
      shift[i] = static_cast<std::uint32_t>(rest % k);
      rest /= k;
    }
    for (const auto& terms : partials) {
      typename Echelon<Field>::Row row;
      for (const auto& [e, v] : terms) {
        std::uint64_t col = 0;
        std::uint64_t place = 1;
        bool inside = true;
        for (std::size_t i = 0; i < n; ++i) {
          const std::uint64_t exp = static_cast<std::uint64_t>(e[i]) + shift[i];
          if (exp >= k) {
            inside = false;
            break;
          }
          col += exp * place;
          place *= k;
        }
        if (inside) row.emplace_back(static_cast<std::uint32_t>(col), v);
      }
      if (row.empty()) continue;
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      echelon.insert(std::move(row));
    }
  }
  return columns - echelon.rank();
}

void requireSingularAtOrigin(const Polynomial& f) {
  if (!f.constantTerm().isZero()) throw DomainError("the origin does not lie on the hypersurface");
  for (std::size_t i = 0; i < f.variableCount(); ++i) {
    if (!partialDerivative(f, i).constantTerm().isZero()) {
      throw DomainError("hypersurface is smooth at the origin; Milnor number is defined at singular points");
    }
  }
}

std::vector<std::uint64_t> pickPrimes(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1ULL << 30, (1ULL << 31) - 1);
  std::vector<std::uint64_t> primes;
  while (primes.size() < 2) {
    const std::uint64_t q = dist(rng) | 1ULL;
    if (isPrime(q) && (primes.empty() || primes.front() != q)) primes.push_back(q);
  }
  return primes;
}

}  // namespace

std::uint64_t truncatedJacobianColength(const Polynomial& f, unsigned truncation) {
  if (truncation == 0) throw DomainError("truncation must be positive");
  return colength(f, truncation, RationalField{});
}

std::uint64_t truncatedJacobianColengthModP(const Polynomial& f, unsigned truncation, std::uint64_t prime) {
  if (truncation == 0) throw DomainError("truncation must be positive");
  if (!isPrime(prime)) throw DomainError("modulus is not prime");
  return colength(f, truncation, PrimeField{prime});
}

MilnorResult milnorNumber(const Polynomial& f, const MilnorOptions& options) {
  requireSingularAtOrigin(f);
  const std::size_t n = f.variableCount();
  MilnorResult result;
  result.mode = options.mode;
  if (options.mode == MilnorMode::Modular) result.primes = pickPrimes(options.seed);

  auto evaluate = [&](unsigned k) -> std::uint64_t {
    if (options.mode == MilnorMode::Exact) return truncatedJacobianColength(f, k);
    const auto a = truncatedJacobianColengthModP(f, k, result.primes[0]);
    const auto b = truncatedJacobianColengthModP(f, k, result.primes[1]);
    // A prime can only lose rank, so a disagreement means one of them is unlucky.
    return a == b ? a : truncatedJacobianColength(f, k);
  };

  std::optional<std::uint64_t> previous;
  for (unsigned k = 2; k <= options.maxTruncation; ++k) {
    const auto columns = checkedPow(k, static_cast<unsigned>(n));
    if (!columns || *columns > options.maxColumns) break;
    const std::uint64_t value = evaluate(k);
    if (previous && *previous == value) {
      if (options.mode == MilnorMode::Modular && truncatedJacobianColength(f, k) != value) {
        MilnorOptions exact = options;
        exact.mode = MilnorMode::Exact;
        return milnorNumber(f, exact);
      }
      result.value = value;
      result.truncation = k;
      return result;
    }
    previous = value;
  }
  throw Inconclusive("Jacobian colength did not stabilize within the truncation limits "
                     "(singularity at the origin may not be isolated)");
}

}  // namespace singulct
