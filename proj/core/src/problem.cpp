#include "invstep/problem.hpp"

#include <stdexcept>

namespace invstep {

using nlohmann::json;

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("expected a rational string or integer, got " +
                              j.dump());
}

json rational_to_json(const Rational& x) { return fraction_string(x); }

Vector vector_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  Vector v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(rational_from_json(e));
  return v;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(rational_to_json(e));
  return out;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("expected a nonempty array of matrix rows");
  std::size_t cols = 0;
  std::vector<Rational> entries;
  for (const auto& row : j) {
    Vector r = vector_from_json(row);
    if (cols == 0)
      cols = r.size();
    else if (r.size() != cols)
      throw std::invalid_argument("ragged matrix rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  if (cols == 0) throw std::invalid_argument("matrix rows must be nonempty");
  return Matrix(j.size(), cols, std::move(entries));
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(rational_to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

namespace {

Polynomial polynomial_from_json(const json& j) {
  return Polynomial(vector_from_json(j));
}

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw std::invalid_argument(std::string("missing required key \"") + key +
                                "\"");
  return *it;
}

}  // namespace

ProblemFile parse_problem(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("problem file must be a JSON object");
  ProblemFile pf;
  pf.system = matrix_from_json(require(j, "system"));
  if (pf.system.rows() != pf.system.cols())
    throw std::invalid_argument("\"system\" must be a square matrix");

  const json& set = require(j, "set");
  std::string kind = require(set, "kind").get<std::string>();
  if (kind == "halfspace") {
    pf.set_kind = ProblemFile::SetKind::Halfspace;
    pf.halfspace.G = matrix_from_json(require(set, "G"));
    pf.halfspace.b = vector_from_json(require(set, "b"));
    if (pf.halfspace.G.cols() != pf.system.rows())
      throw std::invalid_argument("G column count must match the system dimension");
    if (pf.halfspace.b.size() != pf.halfspace.G.rows())
      throw std::invalid_argument("b length must match the row count of G");
  } else if (kind == "vertices") {
    pf.set_kind = ProblemFile::SetKind::Vertices;
    const json& pts = require(set, "points");
    if (!pts.is_array() || pts.empty())
      throw std::invalid_argument("\"points\" must be a nonempty array");
    for (const auto& pt : pts) {
      Vector v = vector_from_json(pt);
      if (v.size() != pf.system.rows())
        throw std::invalid_argument("vertex dimension must match the system");
      pf.polytope.vertices.push_back(std::move(v));
    }
  } else {
    throw std::invalid_argument("set kind must be \"halfspace\" or \"vertices\"");
  }

  if (j.contains("scheme")) {
    const json& sch = j.at("scheme");
    std::string sk = require(sch, "kind").get<std::string>();
    if (sk == "taylor") {
      pf.scheme_kind = ProblemFile::SchemeKind::Taylor;
      pf.scheme = PolynomialScheme::taylor(require(sch, "p").get<unsigned>());
    } else if (sk == "polynomial") {
      pf.scheme_kind = ProblemFile::SchemeKind::Polynomial;
      pf.scheme.sigmas = vector_from_json(require(sch, "sigmas"));
      if (pf.scheme.sigmas.empty())
        throw std::invalid_argument("\"sigmas\" must be nonempty");
      pf.scheme.order = static_cast<unsigned>(pf.scheme.sigmas.size() - 1);
    } else if (sk == "rational") {
      pf.scheme_kind = ProblemFile::SchemeKind::RationalFn;
      pf.rational.g = polynomial_from_json(require(sch, "numerator"));
      pf.rational.h = polynomial_from_json(require(sch, "denominator"));
    } else if (sk == "euler") {
      pf.scheme_kind = ProblemFile::SchemeKind::Euler;
    } else {
      throw std::invalid_argument("unknown scheme kind \"" + sk + "\"");
    }
  }

  pf.eps = pow_rational(Rational(1, 2), 40);
  if (j.contains("options")) {
    const json& opt = j.at("options");
    if (opt.contains("eps")) {
      pf.eps = rational_from_json(opt.at("eps"));
      if (pf.eps <= 0) throw std::invalid_argument("options.eps must be > 0");
    }
    if (opt.contains("max_order"))
      pf.max_order = opt.at("max_order").get<unsigned>();
  }
  return pf;
}

ProblemFile parse_problem_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
  return parse_problem(j);
}

json serialize_result(const ResultDocument& doc) {
  json j;
  if (doc.threshold_finite) {
    j["threshold"] = {{"kind", "finite"},
                      {"rational", fraction_string(doc.threshold)},
                      {"decimal", decimal_string(doc.threshold)}};
  } else {
    j["threshold"] = {{"kind", "infinity"}};
  }
  if (doc.gamma_star) j["gamma_star"] = fraction_string(*doc.gamma_star);
  j["provenance"] = doc.provenance;
  j["certificates"] = doc.certificates;
  return j;
}

ResultDocument parse_result(const json& j) {
  ResultDocument doc;
  const json& th = require(j, "threshold");
  std::string kind = require(th, "kind").get<std::string>();
  if (kind == "finite") {
    doc.threshold_finite = true;
    doc.threshold = parse_rational(require(th, "rational").get<std::string>());
  } else if (kind != "infinity") {
    throw std::invalid_argument("threshold kind must be finite or infinity");
  }
  if (j.contains("gamma_star"))
    doc.gamma_star = parse_rational(j.at("gamma_star").get<std::string>());
  doc.provenance = require(j, "provenance").get<std::string>();
  if (j.contains("certificates")) doc.certificates = j.at("certificates");
  return doc;
}

}  // namespace invstep
