#pragma once

#include "hetg2/rational.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hetg2 {

using Mask = std::uint64_t;

/// Basis monomial e^{i1...ip} over an orthonormal coframe, as a bitmask.
/// Bit (i-1) set means index i is present, indices run 1..dim.
struct Blade {
  int dim = 7;
  Mask mask = 0;

  int degree() const;
  std::vector<int> indices() const;
};

int popcount(Mask m);

/// Sign of e^A wedge e^B as a multiple of e^{A|B}; 0 if the index sets meet.
int wedge_sign(Mask a, Mask b);

/// Sparse exterior form with exact rational coefficients.
/// Invariants: no zero coefficients stored; all stored blades have the
/// declared degree; terms iterate in ascending bitmask order.
class Form {
 public:
  Form() = default;
  Form(int dim, int degree) : dim_(dim), degree_(degree) { check_shape(); }

  static Form blade(int dim, Mask mask, const Rational& c = Rational(1));
  /// Blade from explicit 1-based indices, e.g. {1,3,5}.
  static Form blade_idx(int dim, std::initializer_list<int> idx, const Rational& c = Rational(1));
  static Form scalar(int dim, const Rational& c);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const std::map<Mask, Rational>& terms() const { return terms_; }
  Rational coeff(Mask m) const;
  void set(Mask m, const Rational& c);
  void add(Mask m, const Rational& c);

  /// All coefficients are integers.
  bool is_integral() const;

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Rational& c);
  Form operator-() const;

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const Rational& c) { return a *= c; }
  friend Form operator*(const Rational& c, Form a) { return a *= c; }

  /// Equality of dimension and coefficient maps.
  friend bool operator==(const Form& a, const Form& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

  /// Total order for deterministic containers and canonical-least picking.
  friend bool operator<(const Form& a, const Form& b);

 private:
  void check_shape() const;

  int dim_ = 7;
  int degree_ = 0;
  std::map<Mask, Rational> terms_;
};

struct exterior_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Graded-commutative product; requires equal dimensions.
Form wedge(const Form& a, const Form& b);

/// Hodge star for the orthonormal coframe and orientation e^{1...n},
/// fixed by a ∧ *b = <a,b> e^{1...n}.
Form hodge(const Form& a);

/// Orthonormal-monomial pairing; 0 for mismatched degree or dimension.
Rational inner(const Form& a, const Form& b);
Rational norm2(const Form& a);

/// Left contraction a ⌟ b, adjoint of wedging: <a⌟b, c> = <b, a∧c>.
Form contract(const Form& a, const Form& b);

/// Volume form e^{1...n}.
Form volume(int dim);

/// Dual Lefschetz operator on 4-forms of a 6-dimensional space,
/// Λ = (1/2) Σ Je_i ⌟ e_i ⌟ with J(e_{2i-1}) = e_{2i}.  Λ(ω∧ω) = 4ω.
Form lefschetz_dual(const Form& a);

/// Canonical rendering: terms in ascending blade-bitmask order, coefficients
/// as p/q with unit magnitudes omitted, e.g. "e12 + e34 + e56", "-1/2 e56".
std::string render_form(const Form& f);

}  // namespace hetg2
