#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "invstep/euler.hpp"
#include "invstep/invariance.hpp"
#include "invstep/rational_fn.hpp"
#include "invstep/taylor.hpp"

namespace invstep {

/// Parsed problem file. Numbers in the JSON are exact "p/q" or decimal
/// strings (plain JSON integers are also accepted).
struct ProblemFile {
  Matrix system;  // A_c

  enum class SetKind { Halfspace, Vertices };
  SetKind set_kind = SetKind::Halfspace;
  Polyhedron halfspace;  // valid for Halfspace
  Polytope polytope;     // valid for Vertices

  enum class SchemeKind { None, Taylor, Polynomial, RationalFn, Euler };
  SchemeKind scheme_kind = SchemeKind::None;
  PolynomialScheme scheme;     // Taylor / Polynomial
  RationalFunction rational;   // RationalFn

  Rational eps;                    // bisection precision, default 2^-40
  std::optional<unsigned> max_order;  // rho verification depth override
};

ProblemFile parse_problem(const nlohmann::json& j);
ProblemFile parse_problem_text(const std::string& text);

/// Machine-readable result: threshold, gamma*, certificates, provenance.
struct ResultDocument {
  bool threshold_finite = false;
  Rational threshold;  // when finite
  std::optional<Rational> gamma_star;
  std::string provenance;
  nlohmann::json certificates = nlohmann::json::object();

  bool operator==(const ResultDocument& other) const = default;
};

nlohmann::json serialize_result(const ResultDocument& doc);
ResultDocument parse_result(const nlohmann::json& j);

// JSON helpers shared with the CLI.
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const Rational& x);
Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& m);
Vector vector_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const Vector& v);

}  // namespace invstep
