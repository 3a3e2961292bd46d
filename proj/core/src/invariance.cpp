#include "invstep/invariance.hpp"

#include <stdexcept>

namespace invstep {

namespace {

void check_shapes(const LinearSystem& sys, const Polyhedron& p) {
  if (sys.A_c.rows() != sys.A_c.cols())
    throw std::invalid_argument("A_c must be square");
  if (p.G.cols() != sys.A_c.rows())
    throw std::invalid_argument("G column count must match the system dimension");
  if (p.b.size() != p.G.rows())
    throw std::invalid_argument("b length must match the row count of G");
  if (p.G.rows() == 0 || p.G.cols() == 0)
    throw std::invalid_argument("polyhedron must have at least one row and column");
}

Matrix unpack_square(const Vector& x, std::size_t m, std::size_t offset = 0) {
  Matrix h(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) h(i, j) = x[offset + i * m + j];
  return h;
}

// Rows of (H G = G A) and (H b <= rhs_b) as constraints over the m^2
// entries of H laid out row-major, with room for extra trailing variables.
void append_invariance_rows(const Polyhedron& p, const Matrix& a,
                            std::size_t extra_vars, LinearProgram& lp) {
  const std::size_t m = p.G.rows(), n = p.G.cols();
  const std::size_t nvars = m * m + extra_vars;
  Matrix ga = mat_mul(p.G, a);

  Matrix eq(m * n, nvars);
  Vector eq_rhs(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t row = i * n + j;
      for (std::size_t k = 0; k < m; ++k) eq(row, i * m + k) = p.G(k, j);
      eq_rhs[row] = ga(i, j);
    }

  Matrix ineq(m, nvars);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) ineq(i, i * m + k) = p.b[k];

  lp.eq_lhs = eq;
  lp.eq_rhs = eq_rhs;
  lp.ineq_lhs = ineq;
  lp.ineq_rhs = Vector(m);
}

}  // namespace

bool check_continuous_certificate(const LinearSystem& sys, const Polyhedron& p,
                                  const ContinuousCertificate& cert) {
  const Matrix& h = cert.H;
  if (h.rows() != p.G.rows() || h.cols() != p.G.rows()) return false;
  if (!is_offdiag_nonnegative(h)) return false;
  if (mat_mul(h, p.G) != mat_mul(p.G, sys.A_c)) return false;
  Vector hb = mat_vec(h, p.b);
  for (const auto& v : hb)
    if (v > 0) return false;
  return true;
}

bool check_discrete_certificate(const Polyhedron& p,
                                const DiscreteCertificate& cert) {
  const Matrix& h = cert.H_tilde;
  if (h.rows() != p.G.rows() || h.cols() != p.G.rows()) return false;
  if (!is_nonnegative(h)) return false;
  if (mat_mul(h, p.G) != mat_mul(p.G, cert.A_d)) return false;
  Vector hb = mat_vec(h, p.b);
  for (std::size_t i = 0; i < hb.size(); ++i)
    if (hb[i] > p.b[i]) return false;
  return true;
}

std::optional<ContinuousCertificate> verify_continuous(const LinearSystem& sys,
                                                       const Polyhedron& p) {
  check_shapes(sys, p);
  const std::size_t m = p.G.rows();

  LinearProgram lp;
  lp.objective = Vector(m * m);
  append_invariance_rows(p, sys.A_c, 0, lp);
  // Diagonal entries free, off-diagonal entries nonnegative.
  lp.nonneg.assign(m * m, true);
  for (std::size_t i = 0; i < m; ++i) lp.nonneg[i * m + i] = false;

  LpOutcome outcome = feasibility(lp);
  if (outcome.status != LpStatus::Optimal) return std::nullopt;
  ContinuousCertificate cert{unpack_square(outcome.solution, m)};
  if (!check_continuous_certificate(sys, p, cert))
    throw std::logic_error("LP returned an invalid continuous certificate");
  return cert;
}

std::optional<DiscreteCertificate> verify_discrete(const Matrix& a_d,
                                                   const Polyhedron& p) {
  check_shapes(LinearSystem{a_d}, p);
  const std::size_t m = p.G.rows();

  LinearProgram lp;
  lp.objective = Vector(m * m);
  append_invariance_rows(p, a_d, 0, lp);
  lp.ineq_rhs = p.b;  // H~ b <= b
  lp.nonneg.assign(m * m, true);

  LpOutcome outcome = feasibility(lp);
  if (outcome.status != LpStatus::Optimal) return std::nullopt;
  DiscreteCertificate cert{unpack_square(outcome.solution, m), a_d};
  if (!check_discrete_certificate(p, cert))
    throw std::logic_error("LP returned an invalid discrete certificate");
  return cert;
}

std::optional<GammaResult> min_gamma(const LinearSystem& sys,
                                     const Polyhedron& p) {
  check_shapes(sys, p);
  const std::size_t m = p.G.rows();
  const std::size_t nvars = m * m + 1;  // H entries then gamma

  LinearProgram lp;
  lp.objective = Vector(nvars);
  lp.objective[m * m] = 1;  // min gamma
  append_invariance_rows(p, sys.A_c, 1, lp);

  // H + gamma I >= 0, i.e. -h_ij - gamma [i = j] <= 0.
  Matrix ineq(lp.ineq_lhs.rows() + m * m, nvars);
  Vector ineq_rhs(lp.ineq_lhs.rows() + m * m);
  for (std::size_t i = 0; i < lp.ineq_lhs.rows(); ++i) {
    for (std::size_t j = 0; j < nvars; ++j) ineq(i, j) = lp.ineq_lhs(i, j);
    ineq_rhs[i] = lp.ineq_rhs[i];
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t row = lp.ineq_lhs.rows() + i * m + j;
      ineq(row, i * m + j) = -1;
      if (i == j) ineq(row, m * m) = -1;
    }
  lp.ineq_lhs = ineq;
  lp.ineq_rhs = ineq_rhs;
  lp.nonneg.assign(nvars, false);

  LpOutcome outcome = solve(lp);
  if (outcome.status == LpStatus::Infeasible) return std::nullopt;
  if (outcome.status == LpStatus::Unbounded) {
    // Only the sign of gamma* matters downstream; pin any feasible point.
    LpOutcome feas = feasibility(lp);
    if (feas.status != LpStatus::Optimal)
      throw std::logic_error("unbounded min_gamma LP with no feasible point");
    return GammaResult{feas.solution[m * m], unpack_square(feas.solution, m),
                       true};
  }
  GammaResult res{outcome.solution[m * m], unpack_square(outcome.solution, m),
                  false};
  // Re-validate by direct substitution.
  Matrix shifted = res.H + res.gamma_star * Matrix::identity(m);
  if (!is_nonnegative(shifted) ||
      mat_mul(res.H, p.G) != mat_mul(p.G, sys.A_c))
    throw std::logic_error("LP returned an invalid gamma certificate");
  for (const auto& v : mat_vec(res.H, p.b))
    if (v > 0) throw std::logic_error("LP returned an invalid gamma certificate");
  return res;
}

bool euler_map_inclusion(const LinearSystem& sys, const Polyhedron& p,
                         const Rational& gamma) {
  if (gamma <= 0) throw std::invalid_argument("euler_map_inclusion requires gamma > 0");
  check_shapes(sys, p);
  Matrix a_d = Matrix::identity(sys.A_c.rows()) + (1 / gamma) * sys.A_c;
  return verify_discrete(a_d, p).has_value();
}

}  // namespace invstep
