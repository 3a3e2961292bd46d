#include <doctest.h>

#include "invstep/problem.hpp"
#include "support/oracles.hpp"

using namespace invstep;
using nlohmann::json;

TEST_CASE("parse_rational accepts fractions, integers, and decimals") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("-3.25") == Rational(-13, 4));
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK_THROWS(parse_rational(""));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("fraction_string round-trips") {
  for (const Rational& x :
       {Rational(3, 4), Rational(-13, 7), Rational(5), Rational(0)}) {
    CHECK(parse_rational(fraction_string(x)) == x);
  }
}

TEST_CASE("decimal_string rendering") {
  CHECK(decimal_string(Rational(1, 2)) == "0.5");
  CHECK(decimal_string(Rational(2)) == "2");
  CHECK(decimal_string(Rational(-13, 4)) == "-3.25");
}

TEST_CASE("parse_problem halfspace form") {
  const char* text = R"({
    "system": [["-1", "0"], ["0", "-1"]],
    "set": {"kind": "halfspace",
            "G": [["1","0"],["0","1"],["-1","0"],["0","-1"]],
            "b": ["1","1","1","1"]},
    "scheme": {"kind": "taylor", "p": 2},
    "options": {"eps": "1/1024"}
  })";
  ProblemFile pf = parse_problem_text(text);
  CHECK(pf.system == Rational(-1) * Matrix::identity(2));
  CHECK(pf.set_kind == ProblemFile::SetKind::Halfspace);
  CHECK(pf.halfspace.G.rows() == 4);
  CHECK(pf.halfspace.b == Vector{1, 1, 1, 1});
  CHECK(pf.scheme_kind == ProblemFile::SchemeKind::Taylor);
  CHECK(pf.scheme.order == 2);
  CHECK(pf.scheme.sigmas == Vector{1, 1, Rational(1, 2)});
  CHECK(pf.eps == Rational(1, 1024));
  CHECK_FALSE(pf.max_order.has_value());
}

TEST_CASE("parse_problem vertex and rational forms") {
  const char* text = R"({
    "system": [["-1"]],
    "set": {"kind": "vertices", "points": [["0"], ["1"]]},
    "scheme": {"kind": "euler"}
  })";
  ProblemFile pf = parse_problem_text(text);
  CHECK(pf.set_kind == ProblemFile::SetKind::Vertices);
  REQUIRE(pf.polytope.vertices.size() == 2);
  CHECK(pf.polytope.vertices[1] == Vector{1});
  CHECK(pf.scheme_kind == ProblemFile::SchemeKind::Euler);
  CHECK(pf.eps == pow_rational(Rational(1, 2), 40));  // default

  const char* rat = R"({
    "system": [["-1"]],
    "set": {"kind": "halfspace", "G": [["1"],["-1"]], "b": ["1","1"]},
    "scheme": {"kind": "rational", "numerator": ["1"], "denominator": ["1","-1"]},
    "options": {"max_order": 12}
  })";
  ProblemFile rf = parse_problem_text(rat);
  CHECK(rf.scheme_kind == ProblemFile::SchemeKind::RationalFn);
  CHECK(rf.rational.g == Polynomial::constant(1));
  CHECK(rf.rational.h == Polynomial({1, -1}));
  REQUIRE(rf.max_order.has_value());
  CHECK(*rf.max_order == 12);
}

TEST_CASE("parse_problem diagnostics") {
  CHECK_THROWS_WITH_AS(parse_problem_text(R"({"set": {"kind": "halfspace"}})"),
                       doctest::Contains("system"), std::invalid_argument);
  CHECK_THROWS_AS(parse_problem_text("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_problem_text(R"({
    "system": [["1","0"],["0","1"],["0","0"]],
    "set": {"kind": "halfspace", "G": [["1","0"]], "b": ["1"]}
  })"),
                  std::invalid_argument);  // non-square system
  CHECK_THROWS_AS(parse_problem_text(R"({
    "system": [["1"]],
    "set": {"kind": "circle"}
  })"),
                  std::invalid_argument);
}

TEST_CASE("result documents round-trip") {
  ResultDocument doc;
  doc.threshold_finite = true;
  doc.threshold = Rational(7, 3);
  doc.gamma_star = Rational(1, 2);
  doc.provenance = "taylor";
  doc.certificates = json{{"note", "example"}};
  CHECK(parse_result(serialize_result(doc)) == doc);

  ResultDocument inf;
  inf.provenance = "rational";
  CHECK(parse_result(serialize_result(inf)) == inf);

  json j = serialize_result(doc);
  CHECK(j["threshold"]["kind"] == "finite");
  CHECK(j["threshold"]["rational"] == "7/3");
  j = serialize_result(inf);
  CHECK(j["threshold"]["kind"] == "infinity");
}

TEST_CASE("matrix and vector json helpers round-trip") {
  Matrix m(2, 3, {1, Rational(1, 2), -3, 0, Rational(-2, 7), 5});
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  Vector v{Rational(9, 4), -1, 0};
  CHECK(vector_from_json(vector_to_json(v)) == v);
  CHECK_THROWS(matrix_from_json(json::array()));
  CHECK_THROWS(matrix_from_json(json::parse(R"([["1","2"],["3"]])")));
}
