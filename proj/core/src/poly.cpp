#include "invstep/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace invstep {

namespace {

std::vector<Rational> trimmed(std::vector<Rational> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

Polynomial monic(const Polynomial& f) {
  if (f.is_zero()) return f;
  return (1 / f.leading()) * f;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs)
    : coeffs_(trimmed(std::move(coeffs))) {}

Polynomial Polynomial::constant(const Rational& c) {
  return Polynomial(std::vector<Rational>{c});
}

Rational Polynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational Polynomial::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * t + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> c = p.coeffs();
  for (auto& v : c) v *= s;
  return Polynomial(std::move(c));
}

Polynomial derivative(const Polynomial& f) {
  if (f.degree() < 1) return Polynomial();
  std::vector<Rational> c(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i)
    c[i - 1] = Rational(static_cast<int>(i)) * f.coeffs()[i];
  return Polynomial(std::move(c));
}

namespace {

// Long division: a = q*b + r with deg r < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                         const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  Rational lead_inv = 1 / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational c = rem[static_cast<std::size_t>(k + db)] * lead_inv;
    quot[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k + j)] -= c * b.coeff(static_cast<std::size_t>(j));
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

}  // namespace

Polynomial poly_rem(const Polynomial& a, const Polynomial& b) {
  return divmod(a, b).second;
}

Polynomial poly_div_exact(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = poly_rem(x, y);
    x = std::move(y);
    y = monic(r);  // normalization keeps coefficient growth in check
  }
  return monic(x);
}

Polynomial mirror(const Polynomial& f) {
  std::vector<Rational> c = f.coeffs();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Polynomial(std::move(c));
}

Polynomial strip_zero_root(const Polynomial& f, unsigned* multiplicity) {
  std::size_t k = 0;
  while (k < f.coeffs().size() && f.coeffs()[k] == 0) ++k;
  if (multiplicity) *multiplicity = static_cast<unsigned>(k);
  if (k == 0) return f;
  std::vector<Rational> c(f.coeffs().begin() + static_cast<std::ptrdiff_t>(k),
                          f.coeffs().end());
  return Polynomial(std::move(c));
}

SturmChain sturm_chain(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
  SturmChain chain;
  chain.sequence.push_back(f);
  Polynomial d = derivative(f);
  if (d.is_zero()) return chain;
  chain.sequence.push_back(d);
  for (;;) {
    const auto n = chain.sequence.size();
    Polynomial r = poly_rem(chain.sequence[n - 2], chain.sequence[n - 1]);
    if (r.is_zero()) break;
    chain.sequence.push_back(Rational(-1) * r);
  }
  return chain;
}

std::size_t sign_changes(const std::vector<Rational>& values) {
  std::size_t changes = 0;
  int prev = 0;
  for (const auto& v : values) {
    int s = sign(v);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

std::size_t sign_changes(const SturmChain& chain, const Rational& at) {
  std::vector<Rational> values;
  values.reserve(chain.sequence.size());
  for (const auto& p : chain.sequence) values.push_back(p.eval(at));
  return sign_changes(values);
}

std::size_t count_zeros(const Polynomial& f, const Rational& lo,
                        const Rational& hi) {
  if (f.is_zero()) throw std::domain_error("count_zeros of the zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("count_zeros requires lo < hi");
  Polynomial g = f;
  std::size_t endpoint_roots = 0;
  // Sturm's theorem needs nonzero endpoint values; exact rational roots at
  // the endpoints are divided out and counted directly.
  auto strip_endpoint = [&](const Rational& at) {
    bool was_root = false;
    while (!g.is_zero() && g.degree() >= 1 && g.eval(at) == 0) {
      g = poly_div_exact(g, Polynomial({-at, Rational(1)}));
      was_root = true;
    }
    if (was_root) ++endpoint_roots;
  };
  strip_endpoint(lo);
  strip_endpoint(hi);
  if (g.degree() < 1) return endpoint_roots;
  SturmChain chain = sturm_chain(g);
  std::size_t a = sign_changes(chain, lo);
  std::size_t b = sign_changes(chain, hi);
  return (a > b ? a - b : b - a) + endpoint_roots;
}

Rational no_zero_bound(const Polynomial& f) {
  if (f.degree() < 1 || f.coeff(0) != 1)
    throw std::invalid_argument("no_zero_bound requires f(0) = 1 and degree >= 1");
  if (f.leading() <= 0)
    throw std::invalid_argument("no_zero_bound requires a positive leading coefficient");
  Rational alpha_star = 1;
  for (int i = 1; i < f.degree(); ++i) {
    Rational a = abs(f.coeff(static_cast<std::size_t>(i)));
    if (a > alpha_star) alpha_star = a;
  }
  return alpha_star / f.leading() + 1;
}

Rational cauchy_bound(const Polynomial& f) {
  if (f.degree() < 1)
    throw std::invalid_argument("cauchy_bound requires a non-constant polynomial");
  Rational lead = abs(f.leading());
  Rational mx = 0;
  for (int i = 0; i < f.degree(); ++i) {
    Rational a = abs(f.coeff(static_cast<std::size_t>(i)));
    if (a > mx) mx = a;
  }
  return 1 + mx / lead;
}

FirstZeroResult first_positive_zero(const Polynomial& f, const Rational& eps) {
  if (f.is_zero() || f.eval(0) <= 0)
    throw std::invalid_argument("first_positive_zero requires f(0) > 0");
  if (eps <= 0) throw std::invalid_argument("first_positive_zero requires eps > 0");
  FirstZeroResult result;
  Polynomial g = (1 / f.eval(0)) * f;  // normalized so g(0) = 1
  if (g.degree() < 1) return result;   // positive constant

  // Step 0: shrink from 1 until the count on [0, t0] is zero.
  Rational t0 = 1;
  while (count_zeros(g, 0, t0) != 0) t0 /= 2;

  // Step 1: bracket. The no-zero bound applies only when the polynomial
  // eventually dominates positively; otherwise a crossing exists below
  // the Cauchy root bound.
  bool lead_positive = g.leading() > 0;
  Rational t_l = t0;
  Rational t_r = lead_positive ? no_zero_bound(g) : cauchy_bound(g);

  std::size_t n_right = count_zeros(g, 0, t_r);
  if (n_right == 0) {
    if (lead_positive) return result;  // Step 2: no positive zero at all
    t_r = 2 * t_r;                     // unreachable for exact Cauchy bounds
  }
  if (n_right == 1 && g.eval(t_r) == 0) {  // Step 3
    result.kind = FirstZeroResult::Kind::ExactZero;
    result.value = t_r;
    return result;
  }

  // Step 4: bisection, keeping the invariant count on [0, t_l] = 0.
  while (t_r - t_l >= eps) {
    Rational t_m = (t_l + t_r) / 2;
    std::size_t n = count_zeros(g, 0, t_m);
    if (n == 0) {
      t_l = t_m;
    } else if (n == 1 && g.eval(t_m) == 0) {
      result.kind = FirstZeroResult::Kind::ExactZero;
      result.value = t_m;
      return result;
    } else {
      t_r = t_m;
    }
  }

  result.kind = FirstZeroResult::Kind::Bracketed;  // Step 5
  result.lo = t_l;
  result.hi = t_r;
  return result;
}

Polynomial square_free(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("square_free of the zero polynomial");
  Polynomial g = poly_gcd(f, derivative(f));
  return monic(poly_div_exact(f, g));
}

namespace {

// Refine a single sign-changing root of sf in (lo, hi) down to width < eps.
RootBracket refine_root(const Polynomial& sf, Rational lo, Rational hi,
                        const Rational& eps) {
  int lo_sign = sign(sf.eval(lo));
  while (hi - lo >= eps) {
    Rational mid = (lo + hi) / 2;
    Rational v = sf.eval(mid);
    if (v == 0) return RootBracket{true, mid, 0, 0};
    if (sign(v) == lo_sign) lo = mid; else hi = mid;
  }
  return RootBracket{false, 0, lo, hi};
}

void collect_roots(const Polynomial& sf, const Rational& lo, const Rational& hi,
                   const Rational& eps, std::vector<RootBracket>& out) {
  std::size_t n = count_zeros(sf, lo, hi);
  if (n == 0) return;
  if (n == 1) {
    out.push_back(refine_root(sf, lo, hi, eps));
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (sf.eval(mid) != 0) {
    collect_roots(sf, lo, mid, eps, out);
    collect_roots(sf, mid, hi, eps, out);
    return;
  }
  out.push_back(RootBracket{true, mid, 0, 0});
  // Carve an interval around the exact root containing no other root.
  Rational delta = (hi - lo) / 4;
  while (sf.eval(mid - delta) == 0 || sf.eval(mid + delta) == 0 ||
         count_zeros(sf, mid - delta, mid + delta) != 1)
    delta /= 2;
  collect_roots(sf, lo, mid - delta, eps, out);
  collect_roots(sf, mid + delta, hi, eps, out);
}

}  // namespace

std::vector<RootBracket> isolate_positive_roots(const Polynomial& f,
                                                const Rational& eps) {
  if (f.is_zero()) throw std::domain_error("root isolation of the zero polynomial");
  if (eps <= 0) throw std::invalid_argument("root isolation requires eps > 0");
  Polynomial sf = strip_zero_root(square_free(f));
  std::vector<RootBracket> out;
  if (sf.degree() < 1) return out;

  if (sf.degree() == 1) {
    Rational root = -sf.coeff(0) / sf.coeff(1);
    if (root > 0) out.push_back(RootBracket{true, root, 0, 0});
    return out;
  }
  if (sf.degree() == 2) {
    const Rational a = sf.coeff(2), b = sf.coeff(1), c = sf.coeff(0);
    Rational disc = b * b - 4 * a * c;
    if (disc < 0) return out;
    Rational s;
    if (rational_sqrt(disc, s)) {
      Rational r1 = (-b - s) / (2 * a), r2 = (-b + s) / (2 * a);
      if (r1 > r2) std::swap(r1, r2);
      if (r1 > 0) out.push_back(RootBracket{true, r1, 0, 0});
      if (r2 > 0 && r2 != r1) out.push_back(RootBracket{true, r2, 0, 0});
      return out;
    }
    // Irrational pair: fall through to bisection isolation.
  }

  Rational bound = cauchy_bound(sf);
  collect_roots(sf, 0, bound, eps, out);
  std::sort(out.begin(), out.end(), [](const RootBracket& a, const RootBracket& b) {
    return a.lower() < b.lower();
  });
  return out;
}

FirstZeroResult first_sign_crossing(const Polynomial& f, const Rational& eps) {
  if (f.is_zero() || f.eval(0) <= 0)
    throw std::invalid_argument("first_sign_crossing requires f(0) > 0");
  FirstZeroResult result;
  if (f.degree() < 1) return result;
  std::vector<RootBracket> roots = isolate_positive_roots(f, eps);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    // Sample strictly between this root and the next; the sign there is the
    // sign of f just past the root, which decides multiplicity parity.
    Rational sample = (k + 1 < roots.size())
                          ? (roots[k].upper() + roots[k + 1].lower()) / 2
                          : roots[k].upper() + 1;
    if (f.eval(sample) < 0) {
      if (roots[k].exact) {
        result.kind = FirstZeroResult::Kind::ExactZero;
        result.value = roots[k].value;
      } else {
        result.kind = FirstZeroResult::Kind::Bracketed;
        result.lo = roots[k].lo;
        result.hi = roots[k].hi;
      }
      return result;
    }
  }
  return result;
}

}  // namespace invstep
