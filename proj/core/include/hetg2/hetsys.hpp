#pragma once

#include "hetg2/g2.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hetg2 {

/// Curvature data of a torus-bundle connection: closed 2-forms F^1..F^k with
/// pairing coefficients eps_1..eps_k (the diagonal of <.,.>_k).  k = 0 means
/// a flat bundle.
struct GaugeField {
  std::vector<Form> F;
  std::vector<Rational> eps;

  GaugeField() = default;
  GaugeField(std::vector<Form> F_, std::vector<Rational> eps_);
  std::size_t k() const { return F.size(); }
};

/// Counts of positive/negative pairing coefficients.
std::pair<int, int> signature(const GaugeField& g);

/// All curvature coefficients integral in the given coframe.
bool integrality_check(const GaugeField& g);

struct CheckEntry {
  std::string name;
  enum class State { Pass, Fail, NotApplicable } state;
  Form residual{7, 0};

  bool passed() const { return state == State::Pass; }
};

/// Per-equation record of the invariant heterotic G2-system
///   tau2 = 0,  dF^r = 0,  F^r ∧ psi = 0,  dH = sum eps_r F^r ∧ F^r.
struct VerificationReport {
  std::vector<CheckEntry> checks;
  Rational lambda;
  std::pair<int, int> sig{0, 0};
  bool tau1_zero = false;           // asserted: invariant solutions are coclosed
  bool bianchi_applicable = false;  // false when tau2 != 0
  std::optional<Rational> scal_residual;  // the scalar identity residual

  bool pass() const;
  /// Machine-readable rendering, one CHECK line per entry.
  std::string to_lines() const;
  std::string to_human() const;
};

/// Checks the invariant heterotic G2-system for the standard phi on alg.
VerificationReport verify(const LieAlgebra& alg, const GaugeField& g);

/// Residual of Scal - (1/2)|H|^2 + |F|^2_k - 8 d*tau1 - 16|tau1|^2 - 4 lambda^2,
/// with the scalar curvature from the Koszul oracle.  Requires tau2 = 0.
Rational scal_identity_check(const LieAlgebra& alg, const GaugeField& g);

}  // namespace hetg2
