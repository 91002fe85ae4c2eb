#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "singulct/monomial.hpp"
#include "singulct/rational.hpp"

namespace singulct {

// ---------------------------------------------------------------------------
// Monomial ideals
// ---------------------------------------------------------------------------

struct MonomialLctOptions {
  /// Initial bound on weight entries; 0 means "max generator degree".
  std::uint64_t initialBound = 0;
  /// The search bound doubles until certified or until it would pass this ceiling.
  std::uint64_t maxBound = 128;
};

struct MonomialLctResult {
  /// +infinity for the unit ideal.
  ExtendedRational value = ExtendedRational::infinity();
  /// Weight attaining `value` (absent for the unit ideal).
  std::optional<WeightVector> witness;
  /// True once the Newton polyhedron feasibility check proved `value` optimal.
  bool certified = false;
  /// Weight-entry bound of the last search round.
  std::uint64_t searchBound = 0;
};

/// lct of a monomial ideal: min over weights w of sum(w) / ord_w(a).
///
/// The minimum is searched over integer weights with entries up to a bound. The
/// candidate c is then certified by checking exactly that (1/c, ..., 1/c) lies in
/// the Newton polyhedron, which bounds every weight ratio from below by c. If the
/// check fails the bound is doubled; a result with `certified == false` is an upper
/// bound only. Throws DomainError for the zero ideal.
MonomialLctResult lctMonomial(const MonomialIdeal& a, const MonomialLctOptions& options = {});

/// Exact feasibility: is t * (1, ..., 1) in conv(generators) + R^n_{>=0}?
bool diagonalPointInNewtonPolyhedron(const MonomialIdeal& a, const Rational& t);

/// Independent route: 1 / min{ t : t * (1, ..., 1) in Newton polyhedron } via exact LP.
ExtendedRational lctByNewtonLp(const MonomialIdeal& a);

// ---------------------------------------------------------------------------
// Diagonal hypersurfaces x_1^d + ... + x_n^d
// ---------------------------------------------------------------------------

/// min{(n+d-2)/(2d-2), n/d}. Throws DomainError unless n >= 2 and d >= 2.
Rational lctDiagonalPair(unsigned n, unsigned d);

struct DiagonalSearchResult {
  Rational value;
  /// First minimizer found scanning b = 1.. then a = 0..
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  /// False when the search minimum exceeds the closed form (bound too small).
  bool conclusive = false;
};

/// Minimum of (n b + a) / min{d b + a, (2d-2) b} over 0 <= a <= bound, 1 <= b <= bound.
DiagonalSearchResult rawMinDiagonal(unsigned n, unsigned d, std::uint64_t bound);

// ---------------------------------------------------------------------------
// Generic determinantal hypersurface det(x_ij)
// ---------------------------------------------------------------------------

using Partition = std::vector<std::int64_t>;

/// Codimension sum_i lambda_i (2i - 1) of the arc orbit labelled by lambda.
std::uint64_t orbitCodimension(const Partition& lambda);
/// Order min{sum_i lambda_i, 2 sum_{i>=2} lambda_i} of the orbit along (f) + J_f^2.
std::uint64_t orbitContactOrder(const Partition& lambda);

struct DeterminantalSearchResult {
  Rational value;
  Partition optimalPartition;
  /// The linear lower-bound certificate held for `value`.
  bool certified = false;
};

/// Minimum of orbitCodimension / orbitContactOrder over partitions with n parts,
/// lambda_2 > 0 and |lambda| <= bound * n, certified by a lower bound on the
/// cone of partitions.
DeterminantalSearchResult lctDeterminantalPair(unsigned n, std::uint64_t bound);

/// Checks that codim(lambda) - value * 2 * sum_{i>=2} lambda_i is nonnegative on
/// every extreme ray of the cone lambda_1 >= ... >= lambda_n >= 0.
bool determinantalLowerBoundHolds(unsigned n, const Rational& value);

}  // namespace singulct
