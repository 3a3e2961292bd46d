#include "invstep/taylor.hpp"

#include <stdexcept>

namespace invstep {

namespace {

Rational binomial(unsigned n, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

void check_scheme(const PolynomialScheme& scheme) {
  if (scheme.sigmas.size() != scheme.order + 1)
    throw std::invalid_argument("scheme must supply sigma_0..sigma_p");
  if (scheme.sigmas.empty() || scheme.sigmas[0] != 1)
    throw std::invalid_argument("scheme requires sigma_0 = 1");
}

}  // namespace

PolynomialScheme PolynomialScheme::taylor(unsigned p) {
  PolynomialScheme s;
  s.order = p;
  s.sigmas.resize(p + 1);
  Rational fact = 1;
  for (unsigned i = 0; i <= p; ++i) {
    if (i > 0) fact *= i;
    s.sigmas[i] = 1 / fact;
  }
  return s;
}

Matrix discrete_matrix(const LinearSystem& sys, const PolynomialScheme& scheme,
                       const Rational& dt) {
  check_scheme(scheme);
  if (dt < 0) throw std::invalid_argument("discrete_matrix requires dt >= 0");
  const std::size_t n = sys.A_c.rows();
  Matrix acc = Matrix::identity(n);
  Matrix power = Matrix::identity(n);
  Rational dt_pow = 1;
  for (unsigned i = 1; i <= scheme.order; ++i) {
    power = mat_mul(power, sys.A_c);
    dt_pow *= dt;
    acc = acc + (scheme.sigmas[i] * dt_pow) * power;
  }
  return acc;
}

Matrix discrete_H_matrix(const Matrix& h, const PolynomialScheme& scheme,
                         const Rational& dt) {
  check_scheme(scheme);
  if (h.rows() != h.cols())
    throw std::invalid_argument("discrete_H_matrix requires a square H");
  return discrete_matrix(LinearSystem{h}, scheme, dt);
}

std::vector<Polynomial> f_coefficient_polys(const PolynomialScheme& scheme,
                                            const Rational& gamma) {
  check_scheme(scheme);
  if (gamma <= 0)
    throw std::invalid_argument("f_coefficient_polys requires gamma > 0");
  const unsigned p = scheme.order;
  std::vector<Polynomial> fs;
  fs.reserve(p + 1);
  for (unsigned i = 0; i <= p; ++i) {
    std::vector<Rational> c(p + 1);
    for (unsigned k = i; k <= p; ++k) {
      Rational term =
          scheme.sigmas[k] * binomial(k, i) * pow_rational(gamma, k - i);
      if ((k - i) % 2 == 1) term = -term;
      c[k] = term;
    }
    fs.emplace_back(std::move(c));
  }
  return fs;
}

TaylorThresholdReport taylor_threshold(const LinearSystem& sys,
                                       const Polyhedron& p,
                                       const PolynomialScheme& scheme,
                                       const Rational& eps) {
  check_scheme(scheme);
  for (const auto& s : scheme.sigmas)
    if (s < 0)
      throw std::invalid_argument(
          "threshold computation requires nonnegative scheme coefficients");

  auto gamma_res = min_gamma(sys, p);
  if (!gamma_res)
    throw std::domain_error("polyhedron is not invariant for the continuous system");

  TaylorThresholdReport report;
  report.gamma = gamma_res->gamma_star;
  if (gamma_res->unbounded || gamma_res->gamma_star <= 0) {
    report.tau.kind = ThresholdResult::Kind::Infinite;
    report.tau.certificate_note = "gamma* <= 0: threshold infinite for every dt";
    return report;
  }

  const Rational gamma = gamma_res->gamma_star;
  report.f_polys = f_coefficient_polys(scheme, gamma);

  bool finite = false;
  Rational tau;
  for (const auto& f : report.f_polys) {
    // f_i = dt^i (sigma_i + O(dt)); positive zeros live in the cofactor.
    Polynomial reduced = strip_zero_root(f);
    if (reduced.is_zero()) {
      report.crossings.emplace_back();
      report.first_zeros.emplace_back();
      continue;
    }
    if (reduced.eval(0) < 0)
      throw std::domain_error(
          "scheme has a vanishing sigma_i whose f_i turns negative at 0+; "
          "no positive threshold exists");
    report.crossings.push_back(first_sign_crossing(reduced, eps));
    report.first_zeros.push_back(first_positive_zero(reduced, eps));
    const FirstZeroResult& cross = report.crossings.back();
    if (cross.kind == FirstZeroResult::Kind::NoPositiveZero) continue;
    Rational tau_i = cross.safe_value();
    if (!finite || tau_i < tau) {
      finite = true;
      tau = tau_i;
    }
  }

  if (finite) {
    report.tau.kind = ThresholdResult::Kind::Finite;
    report.tau.value = tau;
    report.tau.certificate_note =
        "min over i of the first sign crossing of f_i at gamma*";
  } else {
    report.tau.kind = ThresholdResult::Kind::Infinite;
    report.tau.certificate_note = "every f_i is nonnegative on [0, inf)";
  }
  return report;
}

}  // namespace invstep
