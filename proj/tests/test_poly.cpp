#include <doctest.h>

#include <algorithm>
#include <set>

#include "invstep/poly.hpp"
#include "support/oracles.hpp"

using namespace invstep;
using invstep::testing::poly_from_roots;
using invstep::testing::RationalGen;

namespace {

Polynomial P(std::vector<Rational> c) { return Polynomial(std::move(c)); }

const Rational kEps = pow_rational(Rational(1, 2), 30);

}  // namespace

TEST_CASE("derivative") {
  CHECK(derivative(P({1})) == Polynomial());
  CHECK(derivative(P({1, Rational(-4, 3), Rational(1, 3)})) ==
        P({Rational(-4, 3), Rational(2, 3)}));
  CHECK(derivative(P({0, 0, 0, 0, 0, 1})) == P({0, 0, 0, 0, 5}));
}

TEST_CASE("poly_rem") {
  CHECK(poly_rem(P({-1, 0, 1}), P({-1, 1})) == Polynomial());
  CHECK(poly_rem(P({0, 0, 1}), P({0, 1})) == Polynomial());
  // (t^3 + 1) / (t^2 + 1): remainder -t + 1 by long division.
  CHECK(poly_rem(P({1, 0, 0, 1}), P({1, 0, 1})) == P({1, -1}));
}

TEST_CASE("sturm_chain") {
  SturmChain chain = sturm_chain(P({-1, 0, 1}));
  REQUIRE(chain.sequence.size() == 3);
  CHECK(chain.sequence[0] == P({-1, 0, 1}));
  CHECK(chain.sequence[1] == P({0, 2}));
  CHECK(chain.sequence[2] == P({1}));

  chain = sturm_chain(P({0, 1}));
  REQUIRE(chain.sequence.size() == 2);
  CHECK(chain.sequence[0] == P({0, 1}));
  CHECK(chain.sequence[1] == P({1}));

  chain = sturm_chain(P({7}));
  REQUIRE(chain.sequence.size() == 1);
  CHECK(chain.sequence[0] == P({7}));
}

TEST_CASE("sign_changes") {
  CHECK(sign_changes({1, 0, 3, -2, 0, 2, -1, 0, -3}) == 3);
  CHECK(sign_changes({2, 5, Rational(1, 3)}) == 0);
  CHECK(sign_changes(sturm_chain(P({-1, 0, 1})), 0) == 1);
}

TEST_CASE("count_zeros") {
  CHECK(count_zeros(P({-1, 0, 1}), 0, 2) == 1);
  CHECK(count_zeros(P({1, 0, 1}), -10, 10) == 0);
  CHECK(count_zeros(poly_from_roots({1, 2, 3}), 0, 10) == 3);
}

TEST_CASE("count_zeros with endpoint roots") {
  Polynomial f = poly_from_roots({1, 2, 3});
  CHECK(count_zeros(f, 1, 3) == 3);
  CHECK(count_zeros(f, 1, Rational(5, 2)) == 2);
  CHECK(count_zeros(f, 0, 1) == 1);
}

TEST_CASE("no_zero_bound") {
  CHECK(no_zero_bound(P({1, 0, 1})) == 2);
  CHECK(no_zero_bound(P({1, -3, 1})) == 4);
  CHECK(no_zero_bound(P({1, 5, Rational(1, 2)})) == 11);
}

TEST_CASE("cauchy_bound") {
  CHECK(cauchy_bound(P({-2, 1})) == 3);
  CHECK(cauchy_bound(P({1, 0, -1})) == 2);
  CHECK(cauchy_bound(P({1, 4, -1})) == 5);
}

TEST_CASE("first_positive_zero examples") {
  // Roots 1 and 3; the first positive zero is 1.
  auto r = first_positive_zero(P({1, Rational(-4, 3), Rational(1, 3)}), kEps);
  REQUIRE(r.kind != FirstZeroResult::Kind::NoPositiveZero);
  if (r.kind == FirstZeroResult::Kind::ExactZero) {
    CHECK(r.value == 1);
  } else {
    CHECK(r.lo <= 1);
    CHECK(1 <= r.hi);
    CHECK(r.hi - r.lo < kEps);
  }

  CHECK(first_positive_zero(P({1, 1, 1}), kEps).kind ==
        FirstZeroResult::Kind::NoPositiveZero);

  auto lin = first_positive_zero(P({1, -1}), kEps);
  REQUIRE(lin.kind != FirstZeroResult::Kind::NoPositiveZero);
  if (lin.kind == FirstZeroResult::Kind::ExactZero)
    CHECK(lin.value == 1);
  else
    CHECK((lin.lo <= 1 && 1 <= lin.hi));
}

TEST_CASE("square_free") {
  Polynomial d1 = square_free(poly_from_roots({1, 1}));
  CHECK(poly_rem(d1, P({-1, 1})) == Polynomial());
  CHECK(d1.degree() == 1);

  CHECK(square_free(P({-1, 0, 1})).degree() == 2);

  Polynomial d2 = square_free(poly_from_roots({1, 1, 2}));
  CHECK(d2.degree() == 2);
  CHECK(d2.eval(1) == 0);
  CHECK(d2.eval(2) == 0);
}

TEST_CASE("first_sign_crossing examples") {
  // (t-1)^2 (t-2)^2 only touches the axis: no crossing.
  Polynomial touch = poly_from_roots({1, 1, 2, 2});
  CHECK(touch.eval(0) == 4);
  CHECK(first_sign_crossing(touch, kEps).kind ==
        FirstZeroResult::Kind::NoPositiveZero);

  // (t-1)^2 (2-t) / 2 crosses at 2, not 1.
  Polynomial f = Rational(-1, 2) * poly_from_roots({1, 1, 2});
  CHECK(f.eval(0) == 1);
  auto r = first_sign_crossing(f, kEps);
  REQUIRE(r.kind != FirstZeroResult::Kind::NoPositiveZero);
  CHECK(r.safe_value() > Rational(3, 2));
  if (r.kind == FirstZeroResult::Kind::ExactZero)
    CHECK(r.value == 2);
  else
    CHECK((r.lo <= 2 && 2 <= r.hi));

  auto lin = first_sign_crossing(P({1, -1}), kEps);
  REQUIRE(lin.kind == FirstZeroResult::Kind::ExactZero);
  CHECK(lin.value == 1);
}

TEST_CASE("isolate_positive_roots finds constructed roots") {
  RationalGen gen(301);
  for (int trial = 0; trial < 40; ++trial) {
    std::set<Rational> pos;
    std::vector<Rational> roots;
    int k = gen.pick(1, 4);
    for (int i = 0; i < k; ++i) {
      Rational r = gen.small(8, 3);
      roots.push_back(r);
      if (gen.pick(0, 2) == 0) roots.push_back(r);  // occasional multiplicity
      if (r > 0) pos.insert(r);
    }
    Polynomial f = poly_from_roots(roots);
    auto found = isolate_positive_roots(f, kEps);
    REQUIRE(found.size() == pos.size());
    std::size_t idx = 0;
    for (const auto& r : pos) {
      CHECK(found[idx].lower() <= r);
      CHECK(r <= found[idx].upper());
      ++idx;
    }
  }
}

TEST_CASE("count_zeros matches constructed distinct-root counts") {
  RationalGen gen(302);
  for (int trial = 0; trial < 150; ++trial) {
    int k = gen.pick(1, 8);
    std::vector<Rational> roots;
    std::set<Rational> distinct;
    for (int i = 0; i < k; ++i) {
      Rational r = gen.small(6, 3);
      roots.push_back(r);
      distinct.insert(r);
    }
    Polynomial f = poly_from_roots(roots, gen.small_positive());
    for (int probe = 0; probe < 10; ++probe) {
      Rational lo = gen.small(9, 2);
      Rational hi = gen.small(9, 2);
      if (lo > hi) std::swap(lo, hi);
      if (lo == hi) continue;
      std::size_t expected = 0;
      for (const auto& r : distinct)
        if (lo <= r && r <= hi) ++expected;
      CHECK(count_zeros(f, lo, hi) == expected);
    }
  }
}

TEST_CASE("first_positive_zero certifies the left end") {
  RationalGen gen(303);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> roots;
    Rational smallest_pos = 0;
    int k = gen.pick(1, 5);
    for (int i = 0; i < k; ++i) {
      Rational r = gen.small(8, 3);
      if (r == 0) r = Rational(1, 7);
      roots.push_back(r);
      if (r > 0 && (smallest_pos == 0 || r < smallest_pos)) smallest_pos = r;
    }
    Polynomial f = poly_from_roots(roots);
    if (f.eval(0) <= 0) f = Rational(-1) * f;
    auto r = first_positive_zero(f, kEps);
    if (smallest_pos == 0) {
      CHECK(r.kind == FirstZeroResult::Kind::NoPositiveZero);
      continue;
    }
    REQUIRE(r.kind != FirstZeroResult::Kind::NoPositiveZero);
    if (r.kind == FirstZeroResult::Kind::ExactZero) {
      CHECK(r.value == smallest_pos);
    } else {
      CHECK(r.lo <= smallest_pos);
      CHECK(smallest_pos <= r.hi);
      CHECK(count_zeros(f, 0, r.lo) == 0);
      // Dense rational sample of [0, lo]: f stays positive.
      for (int s = 0; s <= 16; ++s) {
        Rational t = r.lo * Rational(s, 16);
        CHECK(f.eval(t) > 0);
      }
    }
    // Skipping touch-points can only move the crossing right.
    auto cross = first_sign_crossing(f, kEps);
    if (cross.kind != FirstZeroResult::Kind::NoPositiveZero)
      CHECK(cross.safe_value() >= r.safe_value() - kEps);
  }
}

TEST_CASE("square_free output is coprime with its derivative") {
  RationalGen gen(304);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> roots;
    int k = gen.pick(1, 4);
    for (int i = 0; i < k; ++i) {
      Rational r = gen.small(5, 2);
      int mult = gen.pick(1, 3);
      for (int m = 0; m < mult; ++m) roots.push_back(r);
    }
    Polynomial sf = square_free(poly_from_roots(roots));
    CHECK(poly_gcd(sf, derivative(sf)).degree() == 0);
  }
}

TEST_CASE("no_zero_bound guarantee") {
  RationalGen gen(305);
  int verified = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int deg = gen.pick(1, 5);
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
    c[0] = 1;
    for (int i = 1; i < deg; ++i) c[static_cast<std::size_t>(i)] = gen.small(4, 3);
    c[static_cast<std::size_t>(deg)] = gen.small_positive(4, 3);
    Polynomial f(std::move(c));
    Rational t_star = no_zero_bound(f);
    if (count_zeros(f, 0, t_star) != 0) continue;
    ++verified;
    for (int s = 0; s < 100; ++s) {
      Rational t = t_star + Rational(9 * s + 1, 100) * t_star;  // (t*, 10 t*)
      CHECK(f.eval(t) > 0);
    }
  }
  CHECK(verified > 100);
}
