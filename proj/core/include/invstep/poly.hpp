#pragma once

#include <vector>

#include "invstep/rational.hpp"

namespace invstep {

/// Univariate polynomial over the rationals; coeffs[i] multiplies t^i.
/// The highest-index coefficient is nonzero unless the polynomial is zero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }
  Rational leading() const;

  Rational eval(const Rational& t) const;

  bool operator==(const Polynomial& other) const = default;

 private:
  std::vector<Rational> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& s, const Polynomial& p);

Polynomial derivative(const Polynomial& f);

/// Remainder of a on division by b (b nonzero), deg rem < deg b.
Polynomial poly_rem(const Polynomial& a, const Polynomial& b);
/// Exact quotient; throws when the division is not exact.
Polynomial poly_div_exact(const Polynomial& a, const Polynomial& b);
/// Monic gcd (a constant 1 for coprime inputs).
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// f with the substitution t -> -t.
Polynomial mirror(const Polynomial& f);
/// f / t^k where k is the multiplicity of the root at 0.
Polynomial strip_zero_root(const Polynomial& f, unsigned* multiplicity = nullptr);

struct SturmChain {
  std::vector<Polynomial> sequence;  // s0 = f, s1 = f', si = -rem(s_{i-2}, s_{i-1})
};

SturmChain sturm_chain(const Polynomial& f);

/// Sign changes of the chain values at `at`, zeros dropped.
std::size_t sign_changes(const SturmChain& chain, const Rational& at);
std::size_t sign_changes(const std::vector<Rational>& values);

/// Distinct real zeros of f in the closed interval [lo, hi]. Exact rational
/// roots at the endpoints are divided out before applying the Sturm count.
std::size_t count_zeros(const Polynomial& f, const Rational& lo,
                        const Rational& hi);

/// For f with f(0) = 1 and positive leading coefficient: a t* such that
/// no zero in [0, t*] certifies f > 0 on all of (0, inf).
Rational no_zero_bound(const Polynomial& f);

/// 1 + max_i |c_i| / |c_q|; every real root lies in [-bound, bound].
Rational cauchy_bound(const Polynomial& f);

struct FirstZeroResult {
  enum class Kind { NoPositiveZero, ExactZero, Bracketed };
  Kind kind = Kind::NoPositiveZero;
  Rational value;    // ExactZero
  Rational lo, hi;   // Bracketed, hi - lo < eps, zero count on [0, lo] certified 0

  Rational safe_value() const { return kind == Kind::ExactZero ? value : lo; }
};

/// The bisection search for the first positive zero of f (f(0) > 0),
/// literal Steps 0-5: halve from 1 until the count on [0, t] is zero,
/// bracket by no_zero_bound / cauchy_bound, then bisect to width eps.
FirstZeroResult first_positive_zero(const Polynomial& f, const Rational& eps);

/// f / gcd(f, f'), monic: the same distinct roots, all simple.
Polynomial square_free(const Polynomial& f);

/// One isolated distinct positive root: either exact, or a bracket of
/// width < eps on which square_free(f) changes sign.
struct RootBracket {
  bool exact = false;
  Rational value;
  Rational lo, hi;
  Rational upper() const { return exact ? value : hi; }
  Rational lower() const { return exact ? value : lo; }
};

/// All distinct positive roots of f in increasing order, pairwise disjoint.
std::vector<RootBracket> isolate_positive_roots(const Polynomial& f,
                                                const Rational& eps);

/// First positive point where f crosses from + to - (odd multiplicity),
/// skipping roots where f only touches the axis; f(0) > 0 required.
FirstZeroResult first_sign_crossing(const Polynomial& f, const Rational& eps);

}  // namespace invstep
