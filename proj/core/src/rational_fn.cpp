#include "invstep/rational_fn.hpp"

#include <stdexcept>

namespace invstep {

namespace {

Matrix eval_poly_matrix(const Polynomial& p, const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix acc(n, n);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = mat_mul(acc, m);
    if (*it != 0) acc = acc + *it * Matrix::identity(n);
  }
  return acc;
}

void check_unit_at_zero(const RationalFunction& r) {
  if (r.h.is_zero() || r.h.eval(0) == 0)
    throw std::invalid_argument("rational function denominator vanishes at 0");
  if (r.g.eval(0) != r.h.eval(0))
    throw std::invalid_argument("rational function must satisfy r(0) = 1");
}

// Sign-normalized copy with h(0) > 0 so numerator signs match r's signs
// near the origin.
RationalFunction normalized(const RationalFunction& r) {
  check_unit_at_zero(r);
  if (r.h.eval(0) > 0) return r;
  return RationalFunction{Rational(-1) * r.g, Rational(-1) * r.h};
}

}  // namespace

unsigned default_max_order(const RationalFunction& r) {
  int dg = r.g.is_zero() ? 0 : r.g.degree();
  int dh = r.h.is_zero() ? 0 : r.h.degree();
  return 2 * static_cast<unsigned>(dg + dh) + 2;
}

Matrix eval_matrix(const RationalFunction& r, const Matrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("eval_matrix requires a square matrix");
  if (r.h.is_zero())
    throw std::invalid_argument("rational function with zero denominator");
  Matrix gm = eval_poly_matrix(r.g, m);
  Matrix hm = eval_poly_matrix(r.h, m);
  return solve_linear(hm, gm);  // throws on singular h(M)
}

Polynomial derivative_numerator(const RationalFunction& r, unsigned i) {
  if (r.h.is_zero())
    throw std::invalid_argument("rational function with zero denominator");
  Polynomial n = r.g;
  Polynomial hp = derivative(r.h);
  for (unsigned k = 0; k < i; ++k)
    n = derivative(n) * r.h - Rational(static_cast<int>(k + 1)) * n * hp;
  return n;
}

RhoResult radius_abs_monotonicity(const RationalFunction& r, unsigned max_order,
                                  const Rational& eps) {
  RationalFunction rn = normalized(r);
  RhoResult result;
  result.checked_order = max_order;

  bool finite = false;
  Rational rho;
  auto consider = [&](const Rational& barrier, int order) {
    if (!finite || barrier < rho) {
      finite = true;
      rho = barrier;
      result.binding_order = order;
    }
  };

  // Pole barrier: r must be defined on [-rho, 0], so rho stays strictly
  // below the first negative real zero of h.
  if (rn.h.degree() >= 1) {
    auto poles = isolate_positive_roots(mirror(rn.h), eps);
    if (!poles.empty()) {
      const RootBracket& first = poles.front();
      Rational cap = first.exact
                         ? first.value - (eps < first.value / 2 ? eps : first.value / 2)
                         : first.lo;
      consider(cap, -2);
    }
  }

  for (unsigned i = 0; i <= max_order; ++i) {
    Polynomial ni = derivative_numerator(rn, i);
    if (ni.is_zero()) {
      result.per_order.emplace_back(i, FirstZeroResult{});
      continue;
    }
    // Need N_i >= 0 on [-kappa, 0]; mirror to the positive axis.
    Polynomial m = strip_zero_root(mirror(ni));
    if (m.eval(0) < 0) {
      // Derivative already negative at (or arbitrarily near) 0.
      FirstZeroResult at_zero;
      at_zero.kind = FirstZeroResult::Kind::ExactZero;
      at_zero.value = 0;
      result.per_order.emplace_back(i, at_zero);
      consider(0, static_cast<int>(i));
      continue;
    }
    FirstZeroResult crossing = first_sign_crossing(m, eps);
    result.per_order.emplace_back(i, crossing);
    if (crossing.kind != FirstZeroResult::Kind::NoPositiveZero)
      consider(crossing.safe_value(), static_cast<int>(i));
  }

  if (!finite) return result;  // Infinite up to the checked order
  result.kind = RhoResult::Kind::Finite;
  result.rho = rho;

  // Safety re-check: every verified numerator is nonnegative at -rho.
  for (unsigned i = 0; i <= max_order; ++i)
    if (derivative_numerator(rn, i).eval(-rho) < 0)
      throw std::logic_error("radius_abs_monotonicity produced an invalid rho");
  return result;
}

ThresholdResult rational_threshold(const LinearSystem& sys, const Polyhedron& p,
                                   const RationalFunction& r, unsigned max_order,
                                   const Rational& eps) {
  check_unit_at_zero(r);
  auto gamma_res = min_gamma(sys, p);
  if (!gamma_res)
    throw std::domain_error("polyhedron is not invariant for the continuous system");

  ThresholdResult out;
  if (gamma_res->unbounded || gamma_res->gamma_star <= 0) {
    out.kind = ThresholdResult::Kind::Infinite;
    out.certificate_note = "gamma* <= 0: threshold infinite for every dt";
    return out;
  }

  RhoResult rho = radius_abs_monotonicity(r, max_order, eps);
  if (rho.kind == RhoResult::Kind::Infinite) {
    out.kind = ThresholdResult::Kind::Infinite;
    out.certificate_note = "absolutely monotone up to checked order: rho unbounded";
    return out;
  }
  out.kind = ThresholdResult::Kind::Finite;
  out.value = rho.rho / gamma_res->gamma_star;
  out.certificate_note = "tau = rho / gamma*";
  return out;
}

}  // namespace invstep
