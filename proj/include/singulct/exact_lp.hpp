#pragma once

#include <vector>

#include "singulct/rational.hpp"

namespace singulct {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational objective;
  std::vector<Rational> solution;
};

/// Exact two-phase simplex for  min c.x  subject to  A x = b, x >= 0.
/// Dense tableau with Bland's rule; intended for the handful of rows and columns
/// that Newton polyhedron problems produce.
LpResult solveStandardFormLp(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                             const std::vector<Rational>& c);

}  // namespace singulct
