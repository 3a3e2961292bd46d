#include <doctest.h>

#include "invstep/lp.hpp"
#include "support/oracles.hpp"

using namespace invstep;
using invstep::testing::brute_force_lp;
using invstep::testing::RationalGen;

TEST_CASE("min x subject to x >= 3") {
  LinearProgram lp;
  lp.objective = {1};
  lp.eq_lhs = Matrix(0, 1);
  lp.ineq_lhs = Matrix(1, 1, {-1});  // -x <= -3
  lp.ineq_rhs = {-3};
  lp.nonneg = {false};
  LpOutcome out = solve(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.solution[0] == 3);
  CHECK(out.objective_value == 3);
}

TEST_CASE("x <= -1 with x >= 0 is infeasible") {
  LinearProgram lp;
  lp.objective = {0};
  lp.eq_lhs = Matrix(0, 1);
  lp.ineq_lhs = Matrix(1, 1, {1});
  lp.ineq_rhs = {-1};
  lp.nonneg = {true};
  CHECK(solve(lp).status == LpStatus::Infeasible);
}

TEST_CASE("square polytope vertex program has objective 1/2") {
  // min sum gamma_j s.t. sum gamma_j (x^j - x^1) = A_c x^1 over the unit
  // square's vertices with A_c = -I, taken at x^1 = (1, 1). The directions are
  // (0,-2), (-2,0), (-2,-2); the target is (-1,-1).
  LinearProgram lp;
  lp.objective = {1, 1, 1};
  lp.eq_lhs = Matrix(2, 3, {0, -2, -2, -2, 0, -2});
  lp.eq_rhs = {-1, -1};
  lp.ineq_lhs = Matrix(0, 3);
  lp.nonneg = {true, true, true};
  LpOutcome out = solve(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.objective_value == Rational(1, 2));
  auto oracle = brute_force_lp(lp);
  REQUIRE(oracle.status == LpStatus::Optimal);
  CHECK(oracle.objective_value == Rational(1, 2));
}

TEST_CASE("feasibility examples") {
  LinearProgram lp;
  lp.objective = {0};
  lp.eq_lhs = Matrix(1, 1, {1});
  lp.eq_rhs = {1};
  lp.ineq_lhs = Matrix(0, 1);
  lp.nonneg = {true};
  LpOutcome out = feasibility(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.solution[0] == 1);

  lp.eq_rhs = {-1};
  CHECK(feasibility(lp).status == LpStatus::Infeasible);
}

TEST_CASE("unbounded detection") {
  LinearProgram lp;  // min -x, x >= 0, no other constraint
  lp.objective = {-1};
  lp.eq_lhs = Matrix(0, 1);
  lp.ineq_lhs = Matrix(0, 1);
  lp.nonneg = {true};
  CHECK(solve(lp).status == LpStatus::Unbounded);
}

TEST_CASE("optimal solutions satisfy every constraint exactly") {
  RationalGen gen(201);
  int optimal_seen = 0;
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = static_cast<std::size_t>(gen.pick(1, 3));
    std::size_t m_eq = static_cast<std::size_t>(gen.pick(0, 1));
    std::size_t m_in = static_cast<std::size_t>(gen.pick(1, 3));
    LinearProgram lp;
    lp.objective.resize(n);
    for (auto& c : lp.objective) c = gen.small(3, 2);
    lp.eq_lhs = Matrix(m_eq, n);
    lp.eq_rhs.resize(m_eq);
    for (std::size_t i = 0; i < m_eq; ++i) {
      for (std::size_t j = 0; j < n; ++j) lp.eq_lhs(i, j) = gen.small(3, 2);
      lp.eq_rhs[i] = gen.small(3, 2);
    }
    lp.ineq_lhs = Matrix(m_in, n);
    lp.ineq_rhs.resize(m_in);
    for (std::size_t i = 0; i < m_in; ++i) {
      for (std::size_t j = 0; j < n; ++j) lp.ineq_lhs(i, j) = gen.small(3, 2);
      lp.ineq_rhs[i] = gen.small(3, 2);
    }
    lp.nonneg.assign(n, true);  // keeps the feasible region pointed

    LpOutcome out = solve(lp);
    auto oracle = brute_force_lp(lp);
    if (out.status == LpStatus::Optimal) {
      ++optimal_seen;
      CHECK(satisfies(lp, out.solution));
      REQUIRE(oracle.status == LpStatus::Optimal);
      CHECK(out.objective_value == oracle.objective_value);
    } else if (out.status == LpStatus::Infeasible) {
      CHECK(oracle.status == LpStatus::Infeasible);
    }
    // Unbounded: the vertex oracle cannot certify it; feasibility must hold.
    if (out.status == LpStatus::Unbounded)
      CHECK(feasibility(lp).status == LpStatus::Optimal);
  }
  CHECK(optimal_seen > 20);  // the generator must actually exercise the path
}
