#pragma once

#include <optional>

#include "invstep/linalg.hpp"
#include "invstep/lp.hpp"

namespace invstep {

/// P = { x | G x <= b }.
struct Polyhedron {
  Matrix G;
  Vector b;
};

/// dx/dt = A_c x.
struct LinearSystem {
  Matrix A_c;
};

struct ContinuousCertificate {
  Matrix H;  // H >=_o 0, HG = G A_c, Hb <= 0
};

struct DiscreteCertificate {
  Matrix H_tilde;  // H~ >= 0, H~ G = G A_d, H~ b <= b
  Matrix A_d;
};

struct GammaResult {
  Rational gamma_star;
  Matrix H;
  bool unbounded = false;  // gamma unbounded below; sign is all that matters
};

bool check_continuous_certificate(const LinearSystem& sys, const Polyhedron& p,
                                  const ContinuousCertificate& cert);
bool check_discrete_certificate(const Polyhedron& p,
                                const DiscreteCertificate& cert);

/// Feasibility of (H >=_o 0, HG = G A_c, Hb <= 0) over the entries of H.
/// Empty result means P is not invariant for the continuous system.
std::optional<ContinuousCertificate> verify_continuous(const LinearSystem& sys,
                                                       const Polyhedron& p);

/// Feasibility of (H~ >= 0, H~ G = G A_d, H~ b <= b).
std::optional<DiscreteCertificate> verify_discrete(const Matrix& a_d,
                                                   const Polyhedron& p);

/// min { gamma | H + gamma I >= 0, HG = G A_c, Hb <= 0 }. Empty result
/// means infeasible; gamma_star <= 0 makes downstream thresholds infinite.
std::optional<GammaResult> min_gamma(const LinearSystem& sys,
                                     const Polyhedron& p);

/// Whether (I + gamma^-1 A_c) P is contained in P; gamma must be > 0.
bool euler_map_inclusion(const LinearSystem& sys, const Polyhedron& p,
                         const Rational& gamma);

}  // namespace invstep
