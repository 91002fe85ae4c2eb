#include "singulct/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "singulct/error.hpp"

namespace singulct {

FamilyDescriptor FamilyDescriptor::diagonal(unsigned n, unsigned d) {
  if (n < 2 || d < 2) throw DomainError("diagonal family requires n >= 2 and d >= 2");
  return FamilyDescriptor(FamilyKind::Diagonal, n, d);
}

FamilyDescriptor FamilyDescriptor::determinantal(unsigned n) {
  if (n < 2) throw DomainError("determinantal family requires n >= 2");
  return FamilyDescriptor(FamilyKind::Determinantal, n, n);
}

FamilyDescriptor FamilyDescriptor::parse(const std::string& text) {
  auto number = [&](const std::string& s) -> unsigned {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 6) {
      throw DomainError("malformed family descriptor '" + text + "'");
    }
    return static_cast<unsigned>(std::stoul(s));
  };
  if (text.rfind("diag:", 0) == 0) {
    const std::string rest = text.substr(5);
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw DomainError("diagonal descriptor needs 'diag:n,d', got '" + text + "'");
    return diagonal(number(rest.substr(0, comma)), number(rest.substr(comma + 1)));
  }
  if (text.rfind("det:", 0) == 0) return determinantal(number(text.substr(4)));
  throw DomainError("unknown family descriptor '" + text + "' (expected diag:n,d or det:n)");
}

std::string FamilyDescriptor::key() const {
  if (kind_ == FamilyKind::Diagonal) return "diag:" + std::to_string(n_) + "," + std::to_string(d_);
  return "det:" + std::to_string(n_);
}

std::vector<std::string> FamilyDescriptor::variableNames() const {
  if (kind_ == FamilyKind::Diagonal) return defaultVariableNames(n_);
  std::vector<std::string> names;
  for (unsigned i = 1; i <= n_; ++i) {
    for (unsigned j = 1; j <= n_; ++j) {
      names.push_back(n_ < 10 ? "x" + std::to_string(i) + std::to_string(j)
                              : "x" + std::to_string(i) + "_" + std::to_string(j));
    }
  }
  return names;
}

Polynomial FamilyDescriptor::polynomial() const {
  if (kind_ == FamilyKind::Diagonal) {
    Polynomial f(n_);
    for (unsigned i = 0; i < n_; ++i) {
      Exponent e(n_, 0);
      e[i] = d_;
      f.addTerm(e, Rational(1));
    }
    return f;
  }
  const std::size_t vars = static_cast<std::size_t>(n_) * n_;
  Polynomial f(vars);
  std::vector<unsigned> perm(n_);
  std::iota(perm.begin(), perm.end(), 0U);
  do {
    unsigned inversions = 0;
    for (unsigned i = 0; i < n_; ++i) {
      for (unsigned j = i + 1; j < n_; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    Exponent e(vars, 0);
    for (unsigned i = 0; i < n_; ++i) e[i * n_ + perm[i]] = 1;
    f.addTerm(e, Rational(inversions % 2 == 0 ? 1 : -1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return f;
}

std::optional<FamilyDescriptor> recognizeFamily(const Polynomial& f) {
  const std::size_t n = f.variableCount();
  if (n >= 2 && f.termCount() == n) {
    std::optional<unsigned> degree;
    std::vector<bool> seen(n, false);
    bool ok = true;
    for (const auto& [e, c] : f.terms()) {
      std::size_t nonzero = 0;
      std::size_t which = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (e[i] != 0) {
          ++nonzero;
          which = i;
        }
      }
      if (nonzero != 1 || seen[which] || (degree && *degree != e[which])) {
        ok = false;
        break;
      }
      seen[which] = true;
      degree = e[which];
    }
    if (ok && degree && *degree >= 2) return FamilyDescriptor::diagonal(static_cast<unsigned>(n), *degree);
  }
  for (unsigned k = 2; static_cast<std::size_t>(k) * k <= n; ++k) {
    if (static_cast<std::size_t>(k) * k != n) continue;
    const auto det = FamilyDescriptor::determinantal(k);
    if (det.polynomial() == f) return det;
  }
  return std::nullopt;
}

BFunctionRoots::BFunctionRoots(std::vector<Entry> roots) {
  if (roots.empty()) throw DomainError("b-function root list is empty");
  for (const auto& [root, mult] : roots) {
    if (root.sign() >= 0) throw DomainError("b-function root " + root.toShortString() + " is not negative");
    if (mult == 0) throw DomainError("b-function root with zero multiplicity");
  }
  std::sort(roots.begin(), roots.end(), [](const Entry& a, const Entry& b) { return b.first < a.first; });
  for (auto& entry : roots) {
    if (!roots_.empty() && roots_.back().first == entry.first) {
      roots_.back().second += entry.second;
    } else {
      roots_.push_back(std::move(entry));
    }
  }
}

unsigned BFunctionRoots::multiplicity(const Rational& root) const {
  for (const auto& [r, m] : roots_) {
    if (r == root) return m;
  }
  return 0;
}

BFunctionRoots diagonalBFunction(unsigned n, unsigned d) {
  if (n < 2 || d < 2) throw DomainError("diagonal family requires n >= 2 and d >= 2");
  // counts[s] = number of (b_1..b_n) in [1, d-1]^n with sum s
  std::vector<std::uint64_t> counts{1};
  for (unsigned i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next(counts.size() + d - 1, 0);
    for (std::size_t s = 0; s < counts.size(); ++s) {
      if (counts[s] == 0) continue;
      for (unsigned b = 1; b <= d - 1; ++b) next[s + b] += counts[s];
    }
    counts = std::move(next);
  }
  std::vector<BFunctionRoots::Entry> roots{{Rational(-1), 1}};
  for (std::size_t s = 0; s < counts.size(); ++s) {
    if (counts[s] == 0) continue;
    roots.emplace_back(Rational(-static_cast<std::int64_t>(s), d), static_cast<unsigned>(counts[s]));
  }
  return BFunctionRoots(std::move(roots));
}

BFunctionRoots determinantalBFunction(unsigned n) {
  if (n < 2) throw DomainError("determinantal family requires n >= 2");
  std::vector<BFunctionRoots::Entry> roots;
  for (unsigned i = 1; i <= n; ++i) roots.emplace_back(Rational(-static_cast<std::int64_t>(i)), 1);
  return BFunctionRoots(std::move(roots));
}

ExtendedRational minExpFromBFunction(const BFunctionRoots& roots) {
  const Rational minusOne(-1);
  if (roots.multiplicity(minusOne) == 0) throw DomainError("b-function has no root at -1");
  for (const auto& [root, mult] : roots.roots()) {
    // Sorted largest first; -1 consumes one multiplicity.
    if (root == minusOne && mult == 1) continue;
    return -root;
  }
  return ExtendedRational::infinity();
}

BFunctionRoots familyBFunction(const FamilyDescriptor& family) {
  return family.kind() == FamilyKind::Diagonal ? diagonalBFunction(family.n(), family.d())
                                               : determinantalBFunction(family.n());
}

ExtendedRational minExpFamily(const FamilyDescriptor& family) { return minExpFromBFunction(familyBFunction(family)); }

Rational lctFromMinExp(const ExtendedRational& alpha) {
  if (alpha.isFinite() && alpha.value().sign() <= 0) throw DomainError("minimal exponent must be positive");
  if (alpha.isInfinite()) return Rational(1);
  return min(alpha.value(), Rational(1));
}

}  // namespace singulct
