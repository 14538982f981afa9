#pragma once

#include "hetg2/nilalg.hpp"

#include <array>
#include <string>
#include <vector>

namespace hetg2 {

/// Element log(gamma) of the 2-step group, as coordinates over e_1..e_7.
/// Lattice points carry integer coordinates with the base (closed) directions
/// in multiples of 6 and the derived directions unconstrained integers.
struct LatticeVector {
  std::array<Rational, 7> c{};

  bool integral() const;
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  std::string to_string() const;
};

/// Base (closed) and derived coframe indices of the algebra, ascending.
std::vector<int> base_indices(const LieAlgebra& alg);

/// The lattice generators 6 e_i (base) followed by z_j (derived).
std::vector<LatticeVector> lattice_generators(const LieAlgebra& alg);
/// Same with unit base directions; used for divisibility-margin reporting.
std::vector<LatticeVector> unit_generators(const LieAlgebra& alg);

/// exp(A) exp(B) = exp(A + B + [A,B]/2) in a 2-step group.
LatticeVector bch_compose(const LieAlgebra& alg, const LatticeVector& a, const LatticeVector& b);

/// A closed integral 2-form split as F = F1 + F2 with F1 on the base and
/// F2 = sum Ftilde_ir e^i ∧ z^r; the z∧z part of a closed form vanishes.
struct SplitGauge {
  Form F1{7, 2};
  std::array<std::array<Rational, 3>, 7> ftilde{};  // [base index - 1][derived slot]
  std::vector<int> derived;                          // coframe indices of z^1..z^{n'}

  /// c_ijk = sum_r Ftilde_ir alpha_r(e_j, e_k) (integers, skew in j,k).
  Rational cijk(const LieAlgebra& alg, int i, int j, int k) const;
  Form f2_form() const;
};

SplitGauge split_gauge(const LieAlgebra& alg, const Form& F);

/// Cocycle constant c_{gamma1 gamma2} from the closed formula
///   sum F_rs e^r(C1) e^s(C2) + sum e^i(C1) eta^i(C2)
///   - (1/6) sum c_ijk e^j(C1) e^i(C2) e^k(C2)
///   - (1/3) sum c_ijk e^i(C1) e^j(C1) e^k(C2).
Rational cocycle_c(const LieAlgebra& alg, const SplitGauge& sg, const LatticeVector& c1,
                   const LatticeVector& c2);

/// Independent route: composes the potential functions f_gamma symbolically
/// as polynomials in the coordinate functions u_{e^i}, u_{z^r} and reads off
/// the constant of f_{gamma2} + gamma2*.f_{gamma1} - f_{gamma1 gamma2};
/// throws if the non-constant terms fail to cancel.
Rational cocycle_u_oracle(const LieAlgebra& alg, const SplitGauge& sg, const LatticeVector& c1,
                          const LatticeVector& c2);

/// c_ijk + c_jki + c_kij = 0 for all base triples; cross-checked against
/// dF2 = 0 through the Chevalley-Eilenberg differential.
bool cocycle_condition_check(const LieAlgebra& alg, const Form& f2);

struct IntegralityReport {
  bool all_integer = true;
  std::uint64_t pairs_checked = 0;
  std::vector<std::string> failures;       // rendered failing pairs
  Integer margin = 1;                      // lcm of denominators on the unit lattice
};

/// Checks c in Z over all generator pairs and a deterministic sample of
/// BCH words up to length 3, and reports the denominator margin the
/// factor-6 convention has to clear.
IntegralityReport integrality_scan(const LieAlgebra& alg, const SplitGauge& sg,
                                   const std::vector<LatticeVector>& generators);

}  // namespace hetg2
