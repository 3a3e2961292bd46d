#pragma once

#include <vector>

#include "invstep/linalg.hpp"

namespace invstep {

/// min objective . x  subject to  eq_lhs x = eq_rhs,  ineq_lhs x <= ineq_rhs,
/// and x_j >= 0 wherever nonneg[j] is set (x_j free otherwise).
struct LinearProgram {
  Vector objective;
  Matrix eq_lhs;
  Vector eq_rhs;
  Matrix ineq_lhs;
  Vector ineq_rhs;
  std::vector<bool> nonneg;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Vector solution;           // valid when Optimal
  Rational objective_value;  // valid when Optimal
};

/// Two-phase exact simplex with Bland's anti-cycling rule. Free variables
/// are split into nonnegative pairs; no big-M, no tolerances.
LpOutcome solve(const LinearProgram& lp);

/// Phase-I only: any exact feasible point, or Infeasible.
LpOutcome feasibility(const LinearProgram& lp);

/// True iff x satisfies every constraint of lp exactly.
bool satisfies(const LinearProgram& lp, const Vector& x);

}  // namespace invstep
