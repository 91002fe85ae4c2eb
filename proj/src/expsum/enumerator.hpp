#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

#include "singulct/expsum.hpp"
#include "singulct/modular.hpp"

namespace singulct::detail {

/// A polynomial reduced mod M and split by degree in the last variable:
/// lines[k] holds the terms of the coefficient of t^k, t being the last variable.
struct LinePolynomial {
  struct Term {
    std::uint64_t coefficient;
    std::vector<std::uint32_t> exponent;
  };
  std::vector<std::vector<Term>> lines;

  LinePolynomial(const Polynomial& f, std::uint64_t modulus);
  std::size_t degree() const { return lines.size() - 1; }
};

std::uint64_t latticeSize(std::uint64_t modulus, std::size_t n);

/// Visits every x in (Z/M)^n admitted by Z, handing the visitor the values of the
/// given polynomials at x (mod M). Points are walked odometer-style; along the last
/// coordinate each polynomial is advanced by forward differences.
class PointEnumerator {
 public:
  PointEnumerator(const std::vector<Polynomial>& polys, const PrimePowerModulus& modulus, const SubschemeSpec& z);

  /// Throws BudgetExceeded if M^n exceeds the budget.
  void checkBudget(const EnumerationOptions& options) const;

  /// One State per worker, built by makeState(); visit(state, values) per admitted point.
  /// States are returned in worker order so that merging is deterministic.
  template <class State, class MakeState, class Visit>
  std::vector<State> run(const EnumerationOptions& options, MakeState makeState, Visit visit) const {
    checkBudget(options);
    unsigned workers = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
    workers = std::max(1u, workers);
    if (n_ == 1) workers = 1;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, modulus_));

    std::vector<State> states;
    states.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) states.push_back(makeState());
    if (workers == 1) {
      walk(0, modulus_, states[0], visit);
      return states;
    }
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (modulus_ + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = std::min<std::uint64_t>(modulus_, w * chunk);
      const std::uint64_t hi = std::min<std::uint64_t>(modulus_, lo + chunk);
      pool.emplace_back([this, lo, hi, &states, w, &visit] { walk(lo, hi, states[w], visit); });
    }
    for (auto& t : pool) t.join();
    return states;
  }

 private:
  // Line coefficients of every polynomial at the current prefix, and the Z mask on t mod p.
  void prepareLine(const std::vector<std::uint64_t>& prefix, std::vector<std::uint64_t>& diffs,
                   std::vector<char>& mask) const;

  template <class State, class Visit>
  void walk(std::uint64_t lo, std::uint64_t hi, State& state, Visit& visit) const {
    if (lo >= hi) return;
    const std::size_t prefixLength = n_ - 1;
    std::vector<std::uint64_t> prefix(prefixLength, 0);
    if (prefixLength > 0) prefix[0] = lo;
    std::vector<std::uint64_t> diffs(diffSize_);
    std::vector<char> mask(p_, 1);
    std::vector<std::uint64_t> values(polys_.size());
    const std::size_t count = polys_.size();
    while (true) {
      prepareLine(prefix, diffs, mask);
      std::uint64_t residue = 0;
      for (std::uint64_t t = 0; t < modulus_; ++t) {
        if (fullSpace_ || mask[residue]) {
          for (std::size_t k = 0; k < count; ++k) values[k] = diffs[offsets_[k]];
          visit(state, values.data());
        }
        for (std::size_t k = 0; k < count; ++k) {
          std::uint64_t* d = diffs.data() + offsets_[k];
          const std::size_t deg = polys_[k].degree();
          for (std::size_t j = 0; j < deg; ++j) d[j] = addMod(d[j], d[j + 1], modulus_);
        }
        if (++residue == p_) residue = 0;
      }
      if (prefixLength == 0) return;
      std::size_t i = prefixLength;
      while (i > 0) {
        --i;
        const std::uint64_t limit = i == 0 ? hi : modulus_;
        if (++prefix[i] < limit) break;
        if (i == 0) return;
        prefix[i] = 0;
      }
    }
  }

  std::size_t n_;
  std::uint64_t p_;
  std::uint64_t modulus_;
  std::vector<LinePolynomial> polys_;
  std::vector<std::size_t> offsets_;
  std::size_t diffSize_ = 0;
  bool fullSpace_;
  std::vector<LinePolynomial> zGenerators_;
};

}  // namespace singulct::detail
