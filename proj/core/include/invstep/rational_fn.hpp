#pragma once

#include <vector>

#include "invstep/invariance.hpp"
#include "invstep/poly.hpp"
#include "invstep/taylor.hpp"

namespace invstep {

/// r(t) = g(t) / h(t); threshold operations require r(0) = 1.
struct RationalFunction {
  Polynomial g;
  Polynomial h;
};

struct RhoResult {
  enum class Kind { Finite, Infinite };
  Kind kind = Kind::Infinite;
  Rational rho;          // valid when Finite
  unsigned checked_order = 0;  // highest derivative order verified
  // Per-order first negative constraint, as the mirrored search result.
  std::vector<std::pair<unsigned, FirstZeroResult>> per_order;
  int binding_order = -1;  // order whose constraint attains rho; -2 for pole
};

/// r(M) = (h(M))^-1 g(M). Throws when h(M) is singular.
Matrix eval_matrix(const RationalFunction& r, const Matrix& m);

/// Numerator N_i of r^(i) over h^(i+1): N_0 = g, N_{i+1} = N_i' h - (i+1) N_i h'.
Polynomial derivative_numerator(const RationalFunction& r, unsigned i);

/// Radius of absolute monotonicity, verified for derivative orders 0..N
/// and capped strictly below the first pole on the negative real axis.
RhoResult radius_abs_monotonicity(const RationalFunction& r, unsigned max_order,
                                  const Rational& eps);

/// tau = rho / gamma*; infinite when gamma* <= 0 or rho is unbounded.
ThresholdResult rational_threshold(const LinearSystem& sys, const Polyhedron& p,
                                   const RationalFunction& r, unsigned max_order,
                                   const Rational& eps);

/// 2 (deg g + deg h) + 2, the default verification depth.
unsigned default_max_order(const RationalFunction& r);

}  // namespace invstep
