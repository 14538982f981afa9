#pragma once

#include "hetg2/hetsys.hpp"

#include <array>
#include <vector>

namespace hetg2 {

/// Standard SU(2) triple on the first four coframe directions:
/// w1 = e13-e24, w2 = -e14-e23, w3 = e12+e34 (self-dual, wi∧wj = 2 dij vol4).
Form su2_omega(int i);

/// The induced hypercomplex action on 1-forms, (J_i eta)(X) = -eta(J_i X).
Form j_cov(int i, const Form& eta);

/// a_ij = <w_i, alpha_j>; column 3 vanishes when dim n' = 2.
using AMatrix = std::array<std::array<Rational, 3>, 3>;

/// Structure forms alpha_i = dz^i restricted to dimension 4 (z^i = e^{4+i}).
std::array<Form, 3> su2_alphas(const LieAlgebra& alg);

AMatrix a_matrix(const LieAlgebra& alg);
Rational lambda_of(const LieAlgebra& alg);  // (a11+a22+a33)/6
bool is_g2t_su2(const LieAlgebra& alg);     // symmetry of the a-matrix

/// Closed form of dH when tau2 = 0:
/// -4 lambda (a1∧z23 + a2∧z31 + a3∧z12) + (12 lambda^2 - sum |a_i|^2) vol4.
Form dH_closed_form(const LieAlgebra& alg);

/// One curvature 2-form in components: F = F0 + v1∧z1 + v2∧z2 + v3∧z3
/// (the z∧z coefficients vanish for closed instantons).
struct SU2Gauge {
  Form F0{4, 2};
  std::array<Form, 3> v{Form(4, 1), Form(4, 1), Form(4, 1)};
};

/// Component form of an instanton; fails unless dF = 0 and F ∧ psi = 0.
/// Also certifies v3 = -J2 v1 + J1 v2.
SU2Gauge su2_instanton_normal_form(const LieAlgebra& alg, const Form& F);

/// Ambient 2-form from components.
Form su2_ambient(const SU2Gauge& g);

struct SU2SystemReport {
  bool g2t = false;             // a-matrix symmetric
  bool lambda_consistent = false;
  std::array<bool, 8> eq{};     // equations (1)..(8)
  std::array<std::string, 8> residual{};
  bool matches_ambient = false; // cross-validation against hetsys::verify
  bool pass() const;
};

/// Checks equations (1)-(8) of the component system exactly, together with
/// the G2T premise, and cross-validates the aggregate verdict against the
/// ambient heterotic system on the reassembled data.
SU2SystemReport su2_system_check(const LieAlgebra& alg, const std::vector<SU2Gauge>& comps,
                                 const std::vector<Rational>& eps, const Rational& lambda);

/// Self-dual / anti-self-dual split of a 2-form on dimension 4.
std::pair<Form, Form> sd_asd(const Form& a);

/// phi restricted to the derived algebra <e5,e6,e7> has unit volume; only
/// defined when dim n' = 3.
bool calibration_check(const LieAlgebra& alg);

/// Builds the algebra (0,0,0,0,a1,a2,a3) and gauge field from components;
/// inputs must be integral and the system must hold (the result is verified).
std::pair<LieAlgebra, GaugeField> su2_assemble(const std::array<Form, 3>& alphas,
                                               const std::vector<SU2Gauge>& comps,
                                               const std::vector<Rational>& eps);

}  // namespace hetg2
