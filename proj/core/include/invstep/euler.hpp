#pragma once

#include <vector>

#include "invstep/invariance.hpp"
#include "invstep/taylor.hpp"

namespace invstep {

/// P = conv{x^1, ..., x^l}; callers supply true vertices.
struct Polytope {
  std::vector<Vector> vertices;
};

struct VertexEpsilon {
  std::size_t vertex_index = 0;
  bool infinite = false;   // A_c x^i = 0: no restriction at this vertex
  Rational epsilon;        // valid when finite
  std::vector<Rational> gammas;  // multipliers gamma_j, j != i (index order skips i)
};

struct EulerThresholdReport {
  ThresholdResult tau;
  std::vector<VertexEpsilon> per_vertex;
};

/// y in cone{ x^j - x^i : j != i }, decided by an exact feasibility LP.
bool tangent_cone_member(const Polytope& p, std::size_t i, const Vector& y);

/// min sum gamma_j s.t. sum gamma_j (x^j - x^i) = A_c x^i, gamma >= 0;
/// epsilon^i is the reciprocal of the optimal sum. Throws when infeasible
/// (the polytope is not invariant).
VertexEpsilon vertex_epsilon(const LinearSystem& sys, const Polytope& p,
                             std::size_t i);

/// The equivalent maximization: max tau s.t. sum u_j x^j = x^i + tau A_c x^i,
/// sum u_j = 1, u >= 0. Cross-check oracle for vertex_epsilon.
VertexEpsilon vertex_epsilon_alt(const LinearSystem& sys, const Polytope& p,
                                 std::size_t i);

/// tau = min_i epsilon^i: the largest invariance-preserving steplength for
/// the forward Euler method on P.
EulerThresholdReport euler_threshold(const LinearSystem& sys, const Polytope& p);

/// Membership x in conv{vertices} via an exact feasibility LP.
bool polytope_member(const Polytope& p, const Vector& x);

}  // namespace invstep
