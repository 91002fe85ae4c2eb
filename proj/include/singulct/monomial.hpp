#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "singulct/polynomial.hpp"

namespace singulct {

/// Monomial ideal stored as its minimal generating antichain under componentwise <=.
///
/// Generators are sorted by GrlexLess. The zero ideal is representable (no generators,
/// `isZero()` true); the unit ideal is the single generator 0.
class MonomialIdeal {
 public:
  static MonomialIdeal zero(std::size_t variableCount);
  /// Canonicalizes: drops non-minimal generators and duplicates. An empty list gives the zero ideal.
  static MonomialIdeal fromGenerators(std::size_t variableCount, std::vector<Exponent> generators);

  std::size_t variableCount() const { return n_; }
  const std::vector<Exponent>& generators() const { return generators_; }
  bool isZero() const { return generators_.empty(); }
  bool isUnit() const;
  bool contains(const Exponent& monomial) const;
  std::uint64_t maxGeneratorDegree() const;

  MonomialIdeal operator*(const MonomialIdeal& o) const;
  MonomialIdeal operator+(const MonomialIdeal& o) const;
  MonomialIdeal power(unsigned k) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_ == b.n_ && a.generators_ == b.generators_;
  }

  std::string toString(const std::vector<std::string>& variableNames) const;

 private:
  MonomialIdeal(std::size_t n, std::vector<Exponent> gens) : n_(n), generators_(std::move(gens)) {}
  std::size_t n_;
  std::vector<Exponent> generators_;
};

bool divides(const Exponent& a, const Exponent& b);

/// Nonnegative integer weights, not all zero; defines the monomial valuation ord_w.
class WeightVector {
 public:
  explicit WeightVector(std::vector<std::uint64_t> weights);
  const std::vector<std::uint64_t>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  /// Sum of the weights, the log discrepancy of the monomial valuation.
  std::uint64_t logDiscrepancy() const;
  std::uint64_t weightedDegree(const Exponent& e) const;

 private:
  std::vector<std::uint64_t> weights_;
};

/// Order of an ideal or polynomial along a weight; +infinity for zero objects.
struct Order {
  bool infinite = false;
  std::uint64_t value = 0;

  static Order infinity() { return {true, 0}; }
  friend bool operator==(const Order&, const Order&) = default;
};

Order ordW(const WeightVector& w, const MonomialIdeal& ideal);
Order ordW(const WeightVector& w, const Polynomial& f);

}  // namespace singulct
