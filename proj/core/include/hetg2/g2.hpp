#pragma once

#include "hetg2/nilalg.hpp"

namespace hetg2 {

/// The standard G2 3-form e127+e347+e567+e135-e245-e146-e236 and its Hodge
/// dual, in the orthonormal coframe of the algebra.
Form standard_phi();
Form standard_psi();

/// Standard SU(3) data on the first six coframe directions:
/// omega = e12+e34+e56, Omega+ = e135-e245-e146-e236, Omega- = *6 Omega+.
Form su3_omega();
Form su3_omega_plus();
Form su3_omega_minus();

/// Intrinsic torsion of the standard G2-structure:
///   dphi = tau0 psi + 3 tau1 ∧ phi + *tau3,
///   dpsi = 4 tau1 ∧ psi - *tau2,
/// with tau2 in Omega^2_14 and tau3 in Omega^3_27.
struct TorsionForms {
  Rational tau0;
  Form tau1{7, 1};
  Form tau2{7, 2};
  Form tau3{7, 3};
  Rational lambda;  // (7/12) tau0
  bool residuals_ok = true;
};

/// Extracts the torsion forms; throws if the module-membership residuals
/// fail (that would be an implementation bug, not an input error).
TorsionForms torsion(const LieAlgebra& alg);

struct G2Class {
  bool torsion_free = false;
  bool coclosed = false;
  bool g2t = false;  // tau2 = 0
};

G2Class classify(const LieAlgebra& alg);

/// Torsion 3-form of the characteristic connection,
/// H = (1/6) tau0 phi - tau1 ⌟ psi - tau3; requires tau2 = 0.
Form torsion_H(const LieAlgebra& alg);

/// Codifferential of tau1 with the convention delta = -*d* on 1-forms.
/// Vanishes on every unimodular algebra; computed, not assumed.
Rational codifferential_tau1(const LieAlgebra& alg);

}  // namespace hetg2
