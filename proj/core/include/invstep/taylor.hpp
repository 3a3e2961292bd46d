#pragma once

#include <string>
#include <vector>

#include "invstep/invariance.hpp"
#include "invstep/poly.hpp"

namespace invstep {

/// A_d(dt) = sum_{i=0}^p sigma_i A_c^i dt^i; sigma_0 = 1 so dt = 0 is the
/// identity map. The Taylor family has sigma_i = 1/i!.
struct PolynomialScheme {
  unsigned order = 1;
  std::vector<Rational> sigmas;  // sigma_0 .. sigma_p

  static PolynomialScheme taylor(unsigned p);
};

struct ThresholdResult {
  enum class Kind { Finite, Infinite };
  Kind kind = Kind::Infinite;
  Rational value;  // > 0 when Finite
  std::string certificate_note;
};

struct TaylorThresholdReport {
  ThresholdResult tau;
  Rational gamma;
  std::vector<Polynomial> f_polys;               // f_0 .. f_p in dt
  std::vector<FirstZeroResult> crossings;        // production path (odd multiplicity)
  std::vector<FirstZeroResult> first_zeros;      // literal bisection algorithm
};

Matrix discrete_matrix(const LinearSystem& sys, const PolynomialScheme& scheme,
                       const Rational& dt);

/// f_i(dt) = sum_{k=i}^p (-1)^(k-i) sigma_k C(k,i) gamma^(k-i) dt^k;
/// satisfies sum_i gamma^i f_i(dt) = 1 identically.
std::vector<Polynomial> f_coefficient_polys(const PolynomialScheme& scheme,
                                            const Rational& gamma);

/// H~(dt) = sum sigma_i H^i dt^i, the discrete certificate predicted for
/// a continuous certificate H.
Matrix discrete_H_matrix(const Matrix& h, const PolynomialScheme& scheme,
                         const Rational& dt);

/// Threshold via gamma* from min_gamma and the first sign crossings of the
/// f_i. Throws when P is not invariant for the continuous system.
TaylorThresholdReport taylor_threshold(const LinearSystem& sys,
                                       const Polyhedron& p,
                                       const PolynomialScheme& scheme,
                                       const Rational& eps);

}  // namespace invstep
