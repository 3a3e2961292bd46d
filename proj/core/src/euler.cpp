#include "invstep/euler.hpp"

#include <stdexcept>

namespace invstep {

namespace {

void check_polytope(const Polytope& p) {
  if (p.vertices.empty()) throw std::invalid_argument("polytope has no vertices");
  const std::size_t n = p.vertices.front().size();
  if (n == 0) throw std::invalid_argument("polytope vertices must be nonempty");
  for (const auto& v : p.vertices)
    if (v.size() != n)
      throw std::invalid_argument("polytope vertices have mixed dimensions");
}

void check_vertex(const Polytope& p, std::size_t i) {
  check_polytope(p);
  if (i >= p.vertices.size())
    throw std::invalid_argument("vertex index out of range");
}

// Equality rows sum_j gamma_j (x^j - x^i) = y over the l-1 multipliers.
LinearProgram cone_program(const Polytope& p, std::size_t i, const Vector& y) {
  const std::size_t l = p.vertices.size();
  const std::size_t n = p.vertices.front().size();
  if (y.size() != n) throw std::invalid_argument("direction dimension mismatch");

  LinearProgram lp;
  lp.objective = Vector(l - 1);
  lp.nonneg.assign(l - 1, true);
  Matrix eq(n, l - 1);
  std::size_t col = 0;
  for (std::size_t j = 0; j < l; ++j) {
    if (j == i) continue;
    for (std::size_t row = 0; row < n; ++row)
      eq(row, col) = p.vertices[j][row] - p.vertices[i][row];
    ++col;
  }
  lp.eq_lhs = eq;
  lp.eq_rhs = y;
  return lp;
}

}  // namespace

bool tangent_cone_member(const Polytope& p, std::size_t i, const Vector& y) {
  check_vertex(p, i);
  if (p.vertices.size() == 1) {
    for (const auto& v : y)
      if (v != 0) return false;
    return true;
  }
  return feasibility(cone_program(p, i, y)).status == LpStatus::Optimal;
}

VertexEpsilon vertex_epsilon(const LinearSystem& sys, const Polytope& p,
                             std::size_t i) {
  check_vertex(p, i);
  Vector direction = mat_vec(sys.A_c, p.vertices[i]);

  VertexEpsilon result;
  result.vertex_index = i;
  if (p.vertices.size() == 1) {
    for (const auto& v : direction)
      if (v != 0)
        throw std::domain_error("polytope is not invariant at vertex " +
                                std::to_string(i));
    result.infinite = true;
    return result;
  }

  LinearProgram lp = cone_program(p, i, direction);
  for (auto& c : lp.objective) c = 1;  // min sum gamma_j
  LpOutcome outcome = solve(lp);
  if (outcome.status != LpStatus::Optimal)
    throw std::domain_error("polytope is not invariant at vertex " +
                            std::to_string(i));
  result.gammas = outcome.solution;
  if (outcome.objective_value == 0) {
    result.infinite = true;
  } else {
    result.epsilon = 1 / outcome.objective_value;
  }
  return result;
}

VertexEpsilon vertex_epsilon_alt(const LinearSystem& sys, const Polytope& p,
                                 std::size_t i) {
  check_vertex(p, i);
  const std::size_t l = p.vertices.size();
  const std::size_t n = p.vertices.front().size();
  Vector direction = mat_vec(sys.A_c, p.vertices[i]);

  // Variables: u_1..u_l >= 0, then tau (free). Maximize tau.
  LinearProgram lp;
  lp.objective = Vector(l + 1);
  lp.objective[l] = -1;
  lp.nonneg.assign(l + 1, true);
  lp.nonneg[l] = false;

  Matrix eq(n + 1, l + 1);
  Vector eq_rhs(n + 1);
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t j = 0; j < l; ++j) eq(row, j) = p.vertices[j][row];
    eq(row, l) = -direction[row];
    eq_rhs[row] = p.vertices[i][row];
  }
  for (std::size_t j = 0; j < l; ++j) eq(n, j) = 1;
  eq_rhs[n] = 1;
  lp.eq_lhs = eq;
  lp.eq_rhs = eq_rhs;

  LpOutcome outcome = solve(lp);
  VertexEpsilon result;
  result.vertex_index = i;
  if (outcome.status == LpStatus::Infeasible)
    throw std::domain_error("polytope is not invariant at vertex " +
                            std::to_string(i));
  if (outcome.status == LpStatus::Unbounded) {
    result.infinite = true;
    return result;
  }
  Rational tau = outcome.solution[l];
  if (tau < 0)
    throw std::domain_error("polytope is not invariant at vertex " +
                            std::to_string(i));
  if (tau == 0) {
    // Optimal tau = 0 with A_c x^i = 0 means no restriction; otherwise the
    // direction leaves the polytope immediately.
    bool zero_direction = true;
    for (const auto& v : direction)
      if (v != 0) zero_direction = false;
    if (!zero_direction)
      throw std::domain_error("polytope is not invariant at vertex " +
                              std::to_string(i));
    result.infinite = true;
    return result;
  }
  result.epsilon = tau;
  result.gammas.reserve(l - 1);
  for (std::size_t j = 0; j < l; ++j)
    if (j != i) result.gammas.push_back(outcome.solution[j] / tau);
  return result;
}

EulerThresholdReport euler_threshold(const LinearSystem& sys, const Polytope& p) {
  check_polytope(p);
  EulerThresholdReport report;
  bool finite = false;
  Rational tau;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    report.per_vertex.push_back(vertex_epsilon(sys, p, i));
    const VertexEpsilon& ve = report.per_vertex.back();
    if (ve.infinite) continue;
    if (!finite || ve.epsilon < tau) {
      finite = true;
      tau = ve.epsilon;
    }
  }
  if (finite) {
    report.tau.kind = ThresholdResult::Kind::Finite;
    report.tau.value = tau;
    report.tau.certificate_note = "min over vertices of epsilon^i (exact)";
  } else {
    report.tau.kind = ThresholdResult::Kind::Infinite;
    report.tau.certificate_note = "A_c vanishes at every vertex";
  }
  return report;
}

bool polytope_member(const Polytope& p, const Vector& x) {
  check_polytope(p);
  const std::size_t l = p.vertices.size();
  const std::size_t n = p.vertices.front().size();
  if (x.size() != n) throw std::invalid_argument("point dimension mismatch");

  LinearProgram lp;
  lp.objective = Vector(l);
  lp.nonneg.assign(l, true);
  Matrix eq(n + 1, l);
  Vector eq_rhs(n + 1);
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t j = 0; j < l; ++j) eq(row, j) = p.vertices[j][row];
    eq_rhs[row] = x[row];
  }
  for (std::size_t j = 0; j < l; ++j) eq(n, j) = 1;
  eq_rhs[n] = 1;
  lp.eq_lhs = eq;
  lp.eq_rhs = eq_rhs;
  return feasibility(lp).status == LpStatus::Optimal;
}

}  // namespace invstep
