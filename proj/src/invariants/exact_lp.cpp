#include "singulct/exact_lp.hpp"

#include <optional>

#include "singulct/error.hpp"

namespace singulct {

namespace {

class Tableau {
 public:
  Tableau(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b, std::size_t cols)
      : rows_(a.size()), cols_(cols), t_(rows_, std::vector<Rational>(cols_ + rows_ + 1)), basis_(rows_) {
    for (std::size_t i = 0; i < rows_; ++i) {
      const bool flip = b[i].sign() < 0;
      for (std::size_t j = 0; j < cols_; ++j) t_[i][j] = flip ? -a[i][j] : a[i][j];
      t_[i][cols_ + i] = Rational(1);
      t_[i].back() = flip ? -b[i] : b[i];
      basis_[i] = cols_ + i;
    }
    allowed_.assign(cols_ + rows_, true);
  }

  // Returns false when the objective is unbounded below.
  bool optimize(const std::vector<Rational>& cost) {
    loadObjective(cost);
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed_.size(); ++j) {
        if (allowed_[j] && obj_[j].sign() < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (t_[i][*entering].sign() <= 0) continue;
        Rational ratio = t_[i].back() / t_[i][*entering];
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  Rational objectiveValue() const { return -obj_.back(); }

  void dropArtificials() {
    for (std::size_t i = 0; i < t_.size();) {
      if (basis_[i] < cols_) {
        ++i;
        continue;
      }
      std::optional<std::size_t> column;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!t_[i][j].isZero()) {
          column = j;
          break;
        }
      }
      if (column) {
        pivot(i, *column);
        ++i;
      } else {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    for (std::size_t j = cols_; j < allowed_.size(); ++j) allowed_[j] = false;
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(cols_);
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (basis_[i] < cols_) x[basis_[i]] = t_[i].back();
    }
    return x;
  }

 private:
  void loadObjective(const std::vector<Rational>& cost) {
    obj_.assign(cols_ + rows_ + 1, Rational(0));
    for (std::size_t j = 0; j < cost.size(); ++j) obj_[j] = cost[j];
    for (std::size_t i = 0; i < t_.size(); ++i) {
      const Rational cb = basis_[i] < cost.size() ? cost[basis_[i]] : Rational(0);
      if (cb.isZero()) continue;
      for (std::size_t j = 0; j < obj_.size(); ++j) obj_[j] -= cb * t_[i][j];
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = t_[row][col];
    for (auto& v : t_[row]) v /= p;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == row || t_[i][col].isZero()) continue;
      const Rational factor = t_[i][col];
      for (std::size_t j = 0; j < t_[i].size(); ++j) t_[i][j] -= factor * t_[row][j];
    }
    if (!obj_[col].isZero()) {
      const Rational factor = obj_[col];
      for (std::size_t j = 0; j < obj_.size(); ++j) obj_[j] -= factor * t_[row][j];
    }
    basis_[row] = col;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
  std::vector<bool> allowed_;
  std::vector<Rational> obj_;
};

}  // namespace

LpResult solveStandardFormLp(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                             const std::vector<Rational>& c) {
  if (a.size() != b.size()) throw DomainError("LP row count mismatch");
  const std::size_t cols = c.size();
  for (const auto& row : a) {
    if (row.size() != cols) throw DomainError("LP column count mismatch");
  }
  Tableau tableau(a, b, cols);

  std::vector<Rational> phaseOne(cols + a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) phaseOne[cols + i] = Rational(1);
  tableau.optimize(phaseOne);
  if (!tableau.objectiveValue().isZero()) return {LpStatus::Infeasible, Rational(0), {}};

  tableau.dropArtificials();
  if (!tableau.optimize(c)) return {LpStatus::Unbounded, Rational(0), {}};
  return {LpStatus::Optimal, tableau.objectiveValue(), tableau.solution()};
}

}  // namespace singulct
