// invstep: invariance-preserving steplength thresholds for linear systems
// on polyhedra, with machine-checkable certificates.

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "invstep/euler.hpp"
#include "invstep/invariance.hpp"
#include "invstep/problem.hpp"
#include "invstep/rational_fn.hpp"
#include "invstep/taylor.hpp"

namespace {

using namespace invstep;
using nlohmann::json;

constexpr int kExitInvariant = 0;
constexpr int kExitNotInvariant = 1;
constexpr int kExitInputError = 2;

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open problem file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

json first_zero_to_json(const FirstZeroResult& r) {
  switch (r.kind) {
    case FirstZeroResult::Kind::NoPositiveZero:
      return {{"kind", "none"}};
    case FirstZeroResult::Kind::ExactZero:
      return {{"kind", "exact"}, {"value", fraction_string(r.value)}};
    case FirstZeroResult::Kind::Bracketed:
      return {{"kind", "bracket"},
              {"lo", fraction_string(r.lo)},
              {"hi", fraction_string(r.hi)}};
  }
  return {};
}

void print_threshold(const ThresholdResult& tau) {
  if (tau.kind == ThresholdResult::Kind::Infinite) {
    std::cout << "threshold: infinity\n";
  } else {
    std::cout << "threshold: " << fraction_string(tau.value) << " ("
              << decimal_string(tau.value) << ")\n";
  }
}

int cmd_verify(const std::string& path, bool as_json) {
  ProblemFile pf = load_problem(path);
  LinearSystem sys{pf.system};
  json cert = json::object();
  bool invariant = false;

  if (pf.set_kind == ProblemFile::SetKind::Halfspace) {
    auto res = verify_continuous(sys, pf.halfspace);
    invariant = res.has_value();
    if (res) cert["H"] = matrix_to_json(res->H);
  } else {
    invariant = true;
    for (std::size_t i = 0; i < pf.polytope.vertices.size(); ++i) {
      Vector dir = mat_vec(sys.A_c, pf.polytope.vertices[i]);
      if (!tangent_cone_member(pf.polytope, i, dir)) {
        invariant = false;
        cert["violating_vertex"] = i;
        break;
      }
    }
  }

  if (as_json) {
    json out = {{"invariant", invariant}, {"certificates", cert}};
    std::cout << out.dump(2) << "\n";
  } else if (invariant) {
    std::cout << "invariant: yes\n";
    if (cert.contains("H")) std::cout << "H = " << cert["H"].dump() << "\n";
  } else {
    std::cout << "invariant: no\n";
    if (cert.contains("violating_vertex"))
      std::cout << "A_c x^i leaves the tangent cone at vertex "
                << cert["violating_vertex"] << "\n";
  }
  return invariant ? kExitInvariant : kExitNotInvariant;
}

ResultDocument run_threshold(const ProblemFile& pf, bool want_certificate,
                             bool check) {
  LinearSystem sys{pf.system};
  ResultDocument doc;

  if (pf.scheme_kind == ProblemFile::SchemeKind::Euler) {
    if (pf.set_kind != ProblemFile::SetKind::Vertices)
      throw std::invalid_argument("euler scheme requires the vertex set form");
    EulerThresholdReport report = euler_threshold(sys, pf.polytope);
    doc.provenance = "euler";
    doc.threshold_finite = report.tau.kind == ThresholdResult::Kind::Finite;
    if (doc.threshold_finite) doc.threshold = report.tau.value;
    if (want_certificate) {
      json pv = json::array();
      for (const auto& ve : report.per_vertex) {
        json e = {{"vertex", ve.vertex_index}};
        if (ve.infinite) {
          e["epsilon"] = "infinity";
        } else {
          e["epsilon"] = fraction_string(ve.epsilon);
          e["gammas"] = vector_to_json(ve.gammas);
        }
        pv.push_back(e);
      }
      doc.certificates["per_vertex"] = pv;
    }
    if (check && doc.threshold_finite) {
      for (const auto& v : pf.polytope.vertices) {
        Vector img = v;
        Vector dir = mat_vec(sys.A_c, v);
        for (std::size_t k = 0; k < img.size(); ++k)
          img[k] += doc.threshold * dir[k];
        if (!polytope_member(pf.polytope, img))
          throw std::logic_error("certificate check failed: vertex image at tau");
      }
    }
    return doc;
  }

  if (pf.set_kind != ProblemFile::SetKind::Halfspace)
    throw std::invalid_argument(
        "taylor/polynomial/rational schemes require the halfspace set form");
  const Polyhedron& poly = pf.halfspace;

  if (pf.scheme_kind == ProblemFile::SchemeKind::Taylor ||
      pf.scheme_kind == ProblemFile::SchemeKind::Polynomial) {
    TaylorThresholdReport report =
        taylor_threshold(sys, poly, pf.scheme, pf.eps);
    doc.provenance =
        pf.scheme_kind == ProblemFile::SchemeKind::Taylor ? "taylor" : "polynomial";
    doc.gamma_star = report.gamma;
    doc.threshold_finite = report.tau.kind == ThresholdResult::Kind::Finite;
    if (doc.threshold_finite) doc.threshold = report.tau.value;
    if (want_certificate) {
      json fp = json::array();
      for (const auto& f : report.f_polys) fp.push_back(vector_to_json(f.coeffs()));
      doc.certificates["f_polys"] = fp;
      json cz = json::array();
      for (const auto& c : report.crossings) cz.push_back(first_zero_to_json(c));
      doc.certificates["crossings"] = cz;
      json fz = json::array();
      for (const auto& z : report.first_zeros) fz.push_back(first_zero_to_json(z));
      doc.certificates["first_positive_zeros"] = fz;
      if (auto g = min_gamma(sys, poly)) doc.certificates["H"] = matrix_to_json(g->H);
    }
    if (check && doc.threshold_finite) {
      Matrix a_d = discrete_matrix(sys, pf.scheme, doc.threshold);
      if (!verify_discrete(a_d, poly))
        throw std::logic_error("certificate check failed: A_d(tau) not invariant");
    }
    return doc;
  }

  if (pf.scheme_kind == ProblemFile::SchemeKind::RationalFn) {
    unsigned n = pf.max_order.value_or(default_max_order(pf.rational));
    ThresholdResult tau = rational_threshold(sys, poly, pf.rational, n, pf.eps);
    doc.provenance = "rational";
    if (auto g = min_gamma(sys, poly)) {
      doc.gamma_star = g->unbounded ? Rational(0) : g->gamma_star;
      if (want_certificate) doc.certificates["H"] = matrix_to_json(g->H);
    }
    doc.threshold_finite = tau.kind == ThresholdResult::Kind::Finite;
    if (doc.threshold_finite) doc.threshold = tau.value;
    if (want_certificate) {
      RhoResult rho = radius_abs_monotonicity(pf.rational, n, pf.eps);
      json rj = {{"checked_order", rho.checked_order}};
      if (rho.kind == RhoResult::Kind::Finite) {
        rj["rho"] = fraction_string(rho.rho);
        rj["binding_order"] = rho.binding_order;
      } else {
        rj["rho"] = "infinity";
      }
      json po = json::array();
      for (const auto& [order, fz] : rho.per_order)
        po.push_back({{"order", order}, {"constraint", first_zero_to_json(fz)}});
      rj["per_order"] = po;
      doc.certificates["rho"] = rj;
    }
    if (check && doc.threshold_finite) {
      Matrix a_d = eval_matrix(pf.rational, doc.threshold * sys.A_c);
      if (!verify_discrete(a_d, poly))
        throw std::logic_error("certificate check failed: r(A_c tau) not invariant");
    }
    return doc;
  }

  throw std::invalid_argument("problem file has no scheme; threshold needs one");
}

int cmd_threshold(const std::string& path, bool want_certificate, bool check,
                  const std::string& eps_override, int max_order_override,
                  bool as_json) {
  ProblemFile pf = load_problem(path);
  if (!eps_override.empty()) {
    pf.eps = parse_rational(eps_override);
    if (pf.eps <= 0) throw std::invalid_argument("--eps must be > 0");
  }
  if (max_order_override >= 0)
    pf.max_order = static_cast<unsigned>(max_order_override);

  ResultDocument doc = run_threshold(pf, want_certificate, check);
  if (as_json) {
    std::cout << serialize_result(doc).dump(2) << "\n";
  } else {
    if (doc.threshold_finite) {
      std::cout << "threshold: " << fraction_string(doc.threshold) << " ("
                << decimal_string(doc.threshold) << ")\n";
    } else {
      std::cout << "threshold: infinity\n";
    }
    if (doc.gamma_star)
      std::cout << "gamma*: " << fraction_string(*doc.gamma_star) << "\n";
    std::cout << "provenance: " << doc.provenance << "\n";
    if (want_certificate)
      std::cout << "certificates: " << doc.certificates.dump(2) << "\n";
  }
  return kExitInvariant;
}

int cmd_roots(const std::string& coeffs, const std::string& eps_str) {
  std::istringstream in(coeffs);
  std::vector<Rational> c;
  std::string tok;
  while (in >> tok) c.push_back(parse_rational(tok));
  Polynomial f(std::move(c));
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  Rational eps = eps_str.empty() ? pow_rational(Rational(1, 2), 40)
                                 : parse_rational(eps_str);

  SturmChain chain = sturm_chain(f);
  std::cout << "sturm chain degrees:";
  for (const auto& s : chain.sequence) std::cout << " " << s.degree();
  std::cout << "\n";

  if (f.degree() >= 1) {
    Rational bound = cauchy_bound(f);
    std::cout << "zeros in [0, " << fraction_string(bound)
              << "]: " << count_zeros(f, 0, bound) << "\n";
  }

  if (f.eval(0) <= 0)
    throw std::invalid_argument("first-zero search requires f(0) > 0");
  auto describe = [](const FirstZeroResult& r) -> std::string {
    switch (r.kind) {
      case FirstZeroResult::Kind::NoPositiveZero:
        return "none";
      case FirstZeroResult::Kind::ExactZero:
        return fraction_string(r.value) + " (exact)";
      case FirstZeroResult::Kind::Bracketed:
        return "[" + fraction_string(r.lo) + ", " + fraction_string(r.hi) +
               "] ~ " + decimal_string(r.lo);
    }
    return "";
  };
  std::cout << "first positive zero: " << describe(first_positive_zero(f, eps))
            << "\n";
  std::cout << "first sign crossing: " << describe(first_sign_crossing(f, eps))
            << "\n";
  return kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariance-preserving steplength thresholds on polyhedra"};
  app.require_subcommand(1);

  std::string verify_file;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify",
      "check whether the set is invariant for the continuous system");
  verify->add_option("file", verify_file, "problem JSON file")->required();
  verify->add_flag("--json", verify_json, "emit JSON output");

  std::string threshold_file, eps_override;
  int max_order_override = -1;
  bool want_certificate = false, check = false, threshold_json = false;
  auto* threshold = app.add_subcommand("threshold",
      "compute the invariance-preserving steplength threshold");
  threshold->add_option("file", threshold_file, "problem JSON file")->required();
  threshold->add_flag("--certificate", want_certificate,
                      "include full certificate data in the output");
  threshold->add_flag("--check", check,
                      "re-validate the certificates by direct substitution");
  threshold->add_option("--eps", eps_override,
                        "bisection precision (rational, default 2^-40)");
  threshold->add_option("--max-order", max_order_override,
                        "derivative orders checked for rho");
  threshold->add_flag("--json", threshold_json, "emit JSON output");

  std::string coeffs, roots_eps;
  auto* roots = app.add_subcommand("roots",
      "Sturm-chain report and first-zero search for a polynomial");
  roots->add_option("--coeffs", coeffs, "coefficients c0 c1 ... (lowest first)")
      ->required();
  roots->add_option("--eps", roots_eps, "bisection precision");

  try {
    app.parse(argc, argv);
    if (verify->parsed()) return cmd_verify(verify_file, verify_json);
    if (threshold->parsed())
      return cmd_threshold(threshold_file, want_certificate, check,
                           eps_override, max_order_override, threshold_json);
    if (roots->parsed()) return cmd_roots(coeffs, roots_eps);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitInvariant : kExitInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
