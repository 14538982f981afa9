#pragma once

#include "hetg2/exterior.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hetg2 {

/// Diagnostics from LieAlgebra::validate.  Failures are reported, not thrown.
struct Diagnostics {
  bool normal_form = false;   // every de^i supported on lower closed indices
  bool d2_zero = false;       // d(de^i) = 0 for all i (automatic in normal form)
  bool independent = false;   // nonzero structure forms linearly independent
  bool integer_constants = false;
  bool two_step = false;      // derived dimension >= 1
  int derived_dim = 0;
  std::vector<std::string> messages;

  /// Valid normal-form input for downstream modules (abelian allowed).
  bool ok() const { return normal_form && d2_zero && independent; }
};

/// 7-dimensional 2-step nilpotent Lie algebra in coframe normal form:
/// de^i is either zero or a 2-form supported on lower closed indices.
/// Bracket sign convention: dα(X,Y) = -α([X,Y]).  The paper never fixes the
/// global sign and no quantity computed here depends on it.
class LieAlgebra {
 public:
  static constexpr int kDim = 7;

  LieAlgebra();
  explicit LieAlgebra(std::array<Form, kDim> diffs, std::string name = "");

  const Form& d(int i) const { return diffs_[i - 1]; }  // de^i, i = 1..7
  const std::array<Form, kDim>& diffs() const { return diffs_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  /// Indices i with de^i != 0, ascending.
  std::vector<int> derived_indices() const;
  /// dim span{de^i} (= dim of the derived algebra in normal form).
  int derived_dim() const;
  bool is_abelian() const { return derived_dim() == 0; }

  Diagnostics validate() const;

  /// Only de^7 nonzero, supported on 1..6 (the SU(3) frame of the dim-1 case).
  bool su3_frame() const;
  /// All nonzero differentials at positions 5..7, supported on 1..4, and for
  /// derived dimension 2 the closed slot is de^7 (the SU(2) frame).
  bool su2_frame() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.diffs_ == b.diffs_;
  }

 private:
  std::array<Form, kDim> diffs_;
  std::string name_;
};

/// Chevalley-Eilenberg differential: the anti-derivation extending de^i.
Form ce_differential(const LieAlgebra& alg, const Form& a);

/// Rank of a 2-form as a bilinear form (2k where a^k != 0, a^{k+1} = 0).
int rank2form(const Form& a);

/// Pragmatic isomorphism separator for the catalog; invariant in the sense
/// that equal algebras give equal fingerprints.  The wedge Gram data (rank
/// and unordered signature of S_ij = alpha_i ∧ alpha_j against a reference
/// volume) is populated when all pairwise wedges are proportional.
struct Fingerprint {
  int derived_dim = 0;
  int rank_alpha = 0;                 // rank of the single alpha when n' = 1
  std::vector<int> alpha_ranks;       // sorted multiset of rank(alpha_r)
  int wedge_span_dim = 0;             // dim span{alpha_i ∧ alpha_j : i <= j}
  bool all_wedges_vanish = false;
  int support_dim = 0;                // dim of the joint support of the alphas
  int gram_rank = -1;                 // -1 when not scalar-valued
  std::pair<int, int> gram_signature{0, 0};  // unordered {plus, minus}

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  std::string to_string() const;
};

Fingerprint fingerprint(const LieAlgebra& alg);

struct CatalogEntry {
  std::string name;
  LieAlgebra algebra;
  int derived_dim;
  std::string display;  // Salamon tuple as printed in the classification
};

/// The sixteen real 7-dimensional 2-step nilpotent Lie algebras, grouped
/// 3/6/7 by derived dimension.
const std::vector<CatalogEntry>& catalog();

/// Catalog entry by name; throws if unknown.
const CatalogEntry& catalog_entry(const std::string& name);

/// Scalar curvature of the left-invariant metric making the coframe
/// orthonormal, assembled from the Koszul formula 2<∇_X Y, Z> =
/// <[X,Y],Z> - <[Y,Z],X> + <[Z,X],Y>.
Rational scalar_curvature(const LieAlgebra& alg);

/// Left-invariant Levi-Civita connection coefficients <∇_{e_i}e_j, e_k>
/// (0-based indices); exposed for the curvature oracle tests.
std::array<std::array<std::array<Rational, 7>, 7>, 7> koszul_connection(const LieAlgebra& alg);

}  // namespace hetg2
