#include "singulct/modular.hpp"

#include <array>
#include <cmath>

namespace singulct {

std::uint64_t powMod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulMod(result, base, m);
    base = mulMod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kSmall{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (const auto q : kSmall) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These 12 bases are a proven witness set below 3.3e24.
  for (const auto a : kSmall) {
    std::uint64_t x = powMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::uint64_t integerRoot(std::uint64_t n, unsigned k) {
  auto r = static_cast<std::uint64_t>(std::pow(static_cast<double>(n), 1.0 / k));
  // Correct the floating-point estimate in both directions.
  while (r > 0 && !checkedPow(r, k).has_value()) --r;
  while (r > 0 && *checkedPow(r, k) > n) --r;
  while (true) {
    auto next = checkedPow(r + 1, k);
    if (!next || *next > n) break;
    ++r;
  }
  return r;
}

}  // namespace

std::optional<PrimePower> primePowerDecomposition(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  if (isPrime(n)) return PrimePower{n, 1};
  for (unsigned k = 2; k < 64; ++k) {
    const std::uint64_t r = integerRoot(n, k);
    if (r < 2) break;
    if (*checkedPow(r, k) == n && isPrime(r)) return PrimePower{r, k};
  }
  return std::nullopt;
}

std::optional<std::uint64_t> checkedPow(std::uint64_t p, unsigned m) {
  std::uint64_t value = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (__builtin_mul_overflow(value, p, &value)) return std::nullopt;
  }
  return value;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace singulct
