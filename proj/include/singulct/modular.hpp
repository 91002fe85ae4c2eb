#pragma once

#include <cstdint>
#include <optional>

namespace singulct {

inline std::uint64_t mulMod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t addMod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  const std::uint64_t s = a + b;
  return (s >= m || s < a) ? s - m : s;
}

std::uint64_t powMod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool isPrime(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

/// Returns (p, m) with n = p^m, m >= 1, or nullopt if n is not a prime power.
std::optional<PrimePower> primePowerDecomposition(std::uint64_t n);

/// p^m, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checkedPow(std::uint64_t p, unsigned m);

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b);

}  // namespace singulct
