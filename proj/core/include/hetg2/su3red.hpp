#pragma once

#include "hetg2/hetsys.hpp"

#include <array>
#include <vector>

namespace hetg2 {

/// Moves a form between the 7-dimensional algebra and the 6-dimensional
/// orthogonal complement of the derived line <e7>.  restrict_form requires
/// its input not to touch e7.
Form restrict_form(const Form& a, int dim);
Form extend_form(const Form& a, int dim);

/// J-conjugate of a 2-form on the standard complex structure of its span:
/// (J.a)(X,Y) = a(JX, JY) with J e_{2i-1} = e_{2i}.
Form j_conjugate2(const Form& a);
/// J on 1-forms, (J.eta)(X) = -eta(JX).
Form j_covector(const Form& eta);

/// SU(3) data induced by the standard G2-structure when dim n' = 1:
/// phi = omega ∧ z♭ + Omega+ with z = e7, and alpha = dz♭ = b omega + alpha0.
struct SU3Split {
  Form omega{6, 2}, omega_plus{6, 3}, omega_minus{6, 3};
  Form alpha{6, 2};
  Rational b;
  Form alpha0{6, 2};
};

SU3Split su3_split(const LieAlgebra& alg);

/// Splitting of a 2-form on the complex structure:
/// a = b omega + beta + sigma with beta of type (2,0)+(0,2) and sigma
/// primitive of type (1,1).
struct TypeDecomp2 {
  Rational b;
  Form beta{6, 2};
  Form sigma{6, 2};
};

TypeDecomp2 decompose2(const Form& a);

bool is_primitive11(const Form& a);

/// Pointwise identities of the standard SU(3)-structure:
///   *(sigma∧sigma∧omega) = -|sigma|^2 on primitive (1,1)-forms,
///   (*(eta∧Omega+))^2 = 2 *(eta ∧ J eta),
///   |*(eta∧Omega+)|^2 = 2 |eta|^2.
struct SU3IdentityReport {
  bool ok = true;
  std::vector<std::string> failures;
};

SU3IdentityReport su3_identities_check();

/// Trace-free symmetric endomorphism commuting with J, stored as the block
/// pair (X, Y) of the matrix (X, -Y; Y, X) over the pairing
/// (e1,e3,e5 | e2,e4,e6): X symmetric trace-free, Y skew.
struct JEndo {
  std::array<std::array<Rational, 3>, 3> X{};
  std::array<std::array<Rational, 3>, 3> Y{};

  static JEndo diag(const Rational& a, const Rational& b, const Rational& c);
  void check() const;  // symmetry, trace 0, skewness
  bool is_zero() const;
  /// 6x6 matrix entries <L e_j, e_i> in the standard basis.
  std::array<std::array<Rational, 6>, 6> matrix6() const;

  friend bool operator==(const JEndo&, const JEndo&) = default;
};

JEndo mul(const JEndo& a, const JEndo& b);  // composition (stays in the class for squares)
/// sigma(.,.) = <L J ., .> between primitive (1,1) 2-forms and JEndos.
Form form_of_endo(const JEndo& l);
JEndo endo_of_form(const Form& sigma);

/// Decomposition of an instanton 2-form when dim n' = 1:
/// F = (1/2) *(eta∧Omega+) + sigma + eta ∧ z♭ with eta ∧ alpha = 0 and
/// sigma primitive (1,1).  Fails unless dF = 0 and F ∧ psi = 0.
struct SU3Instanton {
  Form eta{6, 1};
  Form sigma{6, 2};
};

SU3Instanton su3_instanton_normal_form(const LieAlgebra& alg, const Form& F);

/// The reduced Bianchi equation
///   alpha0∧alpha0 - 4 lambda^2 omega∧omega = sum_r eps_r sigma^r∧sigma^r,
/// checked both as 4-forms and through the endomorphism dictionary
///   L0^2 - sum_r eps_r L_r^2 = -8 lambda^2 Id.
/// The two verdicts must agree; disagreement throws.
bool reduced_equation_check(const Form& alpha0, const Rational& lambda,
                            const std::vector<std::pair<Form, Rational>>& sigmas);

struct ReducedSystemReport {
  bool eta_alpha = false;       // eta^r ∧ alpha = 0 for all r
  bool mixed_term = false;      // sum eps_r *(eta^r∧Omega+) ∧ sigma^r = 0
  bool eta_square = false;      // sum eps_r (*(eta^r∧Omega+))^2 = 0
  bool main_equation = false;   // the reduced Bianchi equation
  bool z_component = false;     // sum eps_r (*(eta^r∧Omega+)∧eta^r + 2 sigma^r∧eta^r) = 0
  bool matches_ambient = false; // cross-validation against hetsys::verify
  bool pass() const { return eta_alpha && mixed_term && eta_square && main_equation && z_component; }
};

/// Full reduced instanton+Bianchi system for gauge data (eta^r, sigma^r, eps_r)
/// on the algebra with dz♭ = 2 lambda omega + alpha0.
ReducedSystemReport full_reduced_system_check(
    const Form& alpha0, const Rational& lambda,
    const std::vector<std::tuple<Form, Form, Rational>>& gauge);

/// Builds the algebra dz♭ = 2 lambda omega + alpha0 and the gauge field
/// F^r = sigma^r; inputs must be integral, the reduced equation must hold,
/// and the result must verify (checked).
std::pair<LieAlgebra, GaugeField> su3_assemble(
    const Rational& lambda, const Form& alpha0,
    const std::vector<std::pair<Form, Rational>>& sigmas);

}  // namespace hetg2
