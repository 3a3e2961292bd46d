#include "invstep/lp.hpp"

#include <stdexcept>

namespace invstep {

namespace {

// Full-tableau simplex state in standard form: min c.y, Ay = b, y >= 0.
struct Tableau {
  std::size_t nrows = 0, ncols = 0;      // constraint rows, structural+artificial cols
  std::vector<std::vector<Rational>> t;  // nrows x (ncols+1), last col = rhs
  std::vector<Rational> obj;             // reduced-cost row, size ncols+1
  std::vector<std::size_t> basis;        // basis[i] = column basic in row i
  std::size_t first_artificial = 0;      // columns >= this are artificial

  void pivot(std::size_t row, std::size_t col) {
    Rational inv = 1 / t[row][col];
    for (auto& v : t[row]) v *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rational f = t[i][col];
      for (std::size_t j = 0; j <= ncols; ++j) t[i][j] -= f * t[row][j];
    }
    if (obj[col] != 0) {
      Rational f = obj[col];
      for (std::size_t j = 0; j <= ncols; ++j) obj[j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  void set_objective(const std::vector<Rational>& cost) {
    obj.assign(ncols + 1, Rational(0));
    for (std::size_t j = 0; j < cost.size(); ++j) obj[j] = cost[j];
    for (std::size_t i = 0; i < nrows; ++i) {
      Rational cb = basis[i] < cost.size() ? cost[basis[i]] : Rational(0);
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= ncols; ++j) obj[j] -= cb * t[i][j];
    }
  }

  // Bland's rule throughout: smallest eligible entering index, smallest
  // basic index on ratio ties. Returns false on unboundedness.
  bool run(std::size_t col_limit) {
    for (;;) {
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < col_limit; ++j)
        if (obj[j] < 0) { enter = j; break; }
      if (enter == ncols) return true;

      std::size_t leave = nrows;
      Rational best;
      for (std::size_t i = 0; i < nrows; ++i) {
        if (t[i][enter] <= 0) continue;
        Rational ratio = t[i][ncols] / t[i][enter];
        if (leave == nrows || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == nrows) return false;
      pivot(leave, enter);
    }
  }
};

struct StandardForm {
  Tableau tab;
  std::size_t nvars = 0;                 // original variable count
  std::vector<bool> is_free;             // split into a nonnegative pair when set
  std::vector<std::size_t> pos_col, neg_col;
  std::vector<Rational> cost;            // phase-II cost over structural columns
};

void check_dimensions(const LinearProgram& lp) {
  std::size_t n = lp.objective.size();
  if (lp.nonneg.size() != n)
    throw std::invalid_argument("lp: nonneg mask length mismatch");
  if (lp.eq_lhs.rows() > 0 && lp.eq_lhs.cols() != n)
    throw std::invalid_argument("lp: eq_lhs column count mismatch");
  if (lp.eq_rhs.size() != lp.eq_lhs.rows())
    throw std::invalid_argument("lp: eq_rhs length mismatch");
  if (lp.ineq_lhs.rows() > 0 && lp.ineq_lhs.cols() != n)
    throw std::invalid_argument("lp: ineq_lhs column count mismatch");
  if (lp.ineq_rhs.size() != lp.ineq_lhs.rows())
    throw std::invalid_argument("lp: ineq_rhs length mismatch");
}

StandardForm build(const LinearProgram& lp) {
  check_dimensions(lp);
  StandardForm sf;
  sf.nvars = lp.objective.size();
  sf.pos_col.resize(sf.nvars);
  sf.neg_col.assign(sf.nvars, 0);
  sf.is_free.resize(sf.nvars);
  for (std::size_t j = 0; j < sf.nvars; ++j) sf.is_free[j] = !lp.nonneg[j];

  std::size_t col = 0;
  for (std::size_t j = 0; j < sf.nvars; ++j) {
    sf.pos_col[j] = col++;
    if (!lp.nonneg[j]) sf.neg_col[j] = col++;
  }
  std::size_t n_slack = lp.ineq_lhs.rows();
  std::size_t slack0 = col;
  col += n_slack;
  std::size_t n_struct = col;

  std::size_t m = lp.eq_lhs.rows() + lp.ineq_lhs.rows();
  Tableau& tb = sf.tab;
  tb.nrows = m;
  tb.ncols = n_struct + m;  // one artificial per row
  tb.first_artificial = n_struct;
  tb.t.assign(m, std::vector<Rational>(tb.ncols + 1, Rational(0)));
  tb.basis.resize(m);

  auto fill_row = [&](std::size_t row, const Matrix& a, std::size_t src,
                      const Rational& rhs) {
    for (std::size_t j = 0; j < sf.nvars; ++j) {
      const Rational& v = a(src, j);
      if (v == 0) continue;
      tb.t[row][sf.pos_col[j]] = v;
      if (!lp.nonneg[j]) tb.t[row][sf.neg_col[j]] = -v;
    }
    tb.t[row][tb.ncols] = rhs;
  };

  std::size_t row = 0;
  for (std::size_t i = 0; i < lp.eq_lhs.rows(); ++i, ++row)
    fill_row(row, lp.eq_lhs, i, lp.eq_rhs[i]);
  for (std::size_t i = 0; i < lp.ineq_lhs.rows(); ++i, ++row) {
    fill_row(row, lp.ineq_lhs, i, lp.ineq_rhs[i]);
    tb.t[row][slack0 + i] = 1;
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (tb.t[i][tb.ncols] < 0)
      for (auto& v : tb.t[i]) v = -v;
    tb.t[i][n_struct + i] = 1;
    tb.basis[i] = n_struct + i;
  }

  sf.cost.assign(n_struct, Rational(0));
  for (std::size_t j = 0; j < sf.nvars; ++j) {
    sf.cost[sf.pos_col[j]] = lp.objective[j];
    if (!lp.nonneg[j]) sf.cost[sf.neg_col[j]] = -lp.objective[j];
  }
  return sf;
}

// Minimizes the artificial sum. Returns false when the LP is infeasible;
// on success all artificials are nonbasic or their rows were redundant
// and have been dropped.
bool phase_one(Tableau& tb) {
  std::vector<Rational> cost(tb.ncols, Rational(0));
  for (std::size_t j = tb.first_artificial; j < tb.ncols; ++j) cost[j] = 1;
  tb.set_objective(cost);
  tb.run(tb.ncols);
  if (-tb.obj[tb.ncols] != 0) return false;

  // Drive basic artificials out; drop rows that are redundant.
  for (std::size_t i = 0; i < tb.nrows;) {
    if (tb.basis[i] < tb.first_artificial) { ++i; continue; }
    std::size_t piv = tb.ncols;
    for (std::size_t j = 0; j < tb.first_artificial; ++j)
      if (tb.t[i][j] != 0) { piv = j; break; }
    if (piv != tb.ncols) {
      tb.pivot(i, piv);
      ++i;
    } else {
      tb.t.erase(tb.t.begin() + static_cast<std::ptrdiff_t>(i));
      tb.basis.erase(tb.basis.begin() + static_cast<std::ptrdiff_t>(i));
      --tb.nrows;
    }
  }
  return true;
}

Vector extract_solution(const StandardForm& sf) {
  std::vector<Rational> y(sf.tab.first_artificial, Rational(0));
  for (std::size_t i = 0; i < sf.tab.nrows; ++i)
    if (sf.tab.basis[i] < y.size()) y[sf.tab.basis[i]] = sf.tab.t[i][sf.tab.ncols];
  Vector x(sf.nvars);
  for (std::size_t j = 0; j < sf.nvars; ++j) {
    x[j] = y[sf.pos_col[j]];
    if (sf.is_free[j]) x[j] -= y[sf.neg_col[j]];
  }
  return x;
}

}  // namespace

LpOutcome solve(const LinearProgram& lp) {
  StandardForm sf = build(lp);
  LpOutcome out;
  if (!phase_one(sf.tab)) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  sf.tab.set_objective(sf.cost);
  if (!sf.tab.run(sf.tab.first_artificial)) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.solution = extract_solution(sf);
  out.objective_value = 0;
  for (std::size_t j = 0; j < sf.nvars; ++j)
    out.objective_value += lp.objective[j] * out.solution[j];
  return out;
}

LpOutcome feasibility(const LinearProgram& lp) {
  StandardForm sf = build(lp);
  LpOutcome out;
  if (!phase_one(sf.tab)) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.solution = extract_solution(sf);
  out.objective_value = 0;
  return out;
}

bool satisfies(const LinearProgram& lp, const Vector& x) {
  if (x.size() != lp.objective.size()) return false;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (lp.nonneg[j] && x[j] < 0) return false;
  for (std::size_t i = 0; i < lp.eq_lhs.rows(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j) acc += lp.eq_lhs(i, j) * x[j];
    if (acc != lp.eq_rhs[i]) return false;
  }
  for (std::size_t i = 0; i < lp.ineq_lhs.rows(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j) acc += lp.ineq_lhs(i, j) * x[j];
    if (acc > lp.ineq_rhs[i]) return false;
  }
  return true;
}

}  // namespace invstep
