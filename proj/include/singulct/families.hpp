#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singulct/polynomial.hpp"
#include "singulct/rational.hpp"

namespace singulct {

enum class FamilyKind { Diagonal, Determinantal };

/// diagonal(n, d): x_1^d + ... + x_n^d.  determinantal(n): det of the generic n x n matrix.
class FamilyDescriptor {
 public:
  static FamilyDescriptor diagonal(unsigned n, unsigned d);
  static FamilyDescriptor determinantal(unsigned n);
  /// "diag:n,d" or "det:n".
  static FamilyDescriptor parse(const std::string& text);

  FamilyKind kind() const { return kind_; }
  unsigned n() const { return n_; }
  /// Degree; only meaningful for the diagonal family (n for determinantal).
  unsigned d() const { return d_; }
  std::string key() const;

  Polynomial polynomial() const;
  std::vector<std::string> variableNames() const;

  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;

 private:
  FamilyDescriptor(FamilyKind kind, unsigned n, unsigned d) : kind_(kind), n_(n), d_(d) {}
  FamilyKind kind_;
  unsigned n_;
  unsigned d_;
};

/// Recognizes sum_i c_i x_i^d (all c_i nonzero, d >= 2, n >= 2) and the generic
/// determinant with variables in row-major order.
std::optional<FamilyDescriptor> recognizeFamily(const Polynomial& f);

/// Root multiset of a Bernstein-Sato polynomial, sorted by root, largest first.
class BFunctionRoots {
 public:
  using Entry = std::pair<Rational, unsigned>;
  /// Merges equal roots. Throws DomainError on an empty list, a nonnegative root or
  /// a zero multiplicity.
  explicit BFunctionRoots(std::vector<Entry> roots);
  const std::vector<Entry>& roots() const { return roots_; }
  unsigned multiplicity(const Rational& root) const;

 private:
  std::vector<Entry> roots_;
};

/// (s+1) * prod over 1 <= b_i <= d-1 of (s + sum b_i / d).
BFunctionRoots diagonalBFunction(unsigned n, unsigned d);
/// prod_{i=1}^{n} (s + i).
BFunctionRoots determinantalBFunction(unsigned n);

/// Negative of the largest root of b(s)/(s+1); +infinity when b(s) = s+1.
ExtendedRational minExpFromBFunction(const BFunctionRoots& roots);
ExtendedRational minExpFamily(const FamilyDescriptor& family);
BFunctionRoots familyBFunction(const FamilyDescriptor& family);

/// lct(f) = min{alpha, 1}. Throws DomainError for alpha <= 0.
Rational lctFromMinExp(const ExtendedRational& alpha);

}  // namespace singulct
