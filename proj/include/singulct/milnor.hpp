#pragma once

#include <cstdint>
#include <vector>

#include "singulct/polynomial.hpp"

namespace singulct {

enum class MilnorMode { Exact, Modular };

struct MilnorOptions {
  MilnorMode mode = MilnorMode::Exact;
  /// Largest truncation exponent K tried before giving up.
  unsigned maxTruncation = 24;
  /// Refuse truncations whose monomial basis K^n exceeds this many columns.
  std::uint64_t maxColumns = 250000;
  /// Seeds the choice of the two 31-bit primes in modular mode.
  std::uint64_t seed = 0x5eed;
};

struct MilnorResult {
  std::uint64_t value = 0;
  /// Truncation K at which two consecutive colengths agreed.
  unsigned truncation = 0;
  MilnorMode mode = MilnorMode::Exact;
  /// Modular mode only: the primes used.
  std::vector<std::uint64_t> primes;
};

/// dim Q[x] / (df/dx_1, ..., df/dx_n, x_1^K, ..., x_n^K), computed by linear algebra
/// on the monomial basis {x^a : a_i < K}.
std::uint64_t truncatedJacobianColength(const Polynomial& f, unsigned truncation);
/// Same, with ranks taken over F_p.
std::uint64_t truncatedJacobianColengthModP(const Polynomial& f, unsigned truncation, std::uint64_t prime);

/// Milnor number at the origin: increases K from 2 until two consecutive truncated
/// colengths agree. Throws DomainError if the origin is not a singular point of f,
/// and Inconclusive if no stabilization happens within the configured limits
/// (non-isolated singularities).
MilnorResult milnorNumber(const Polynomial& f, const MilnorOptions& options = {});

}  // namespace singulct
