#include "hetg2/exterior.hpp"

#include <bit>
#include <sstream>

namespace hetg2 {

std::string render_rational(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

int popcount(Mask m) { return std::popcount(m); }

int Blade::degree() const { return popcount(mask); }

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  for (int i = 0; i < dim; ++i)
    if (mask & (Mask(1) << i)) out.push_back(i + 1);
  return out;
}

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Inversions between the sorted index lists of a and b: for every index
  // in b, count the indices of a above it.
  int inv = 0;
  Mask bb = b;
  while (bb) {
    int i = std::countr_zero(bb);
    bb &= bb - 1;
    inv += popcount(a >> (i + 1));
  }
  return (inv & 1) ? -1 : 1;
}

void Form::check_shape() const {
  if (dim_ < 0 || dim_ > 63) throw exterior_error("form dimension out of range");
  if (degree_ < 0 || degree_ > dim_) throw exterior_error("form degree out of range");
}

Form Form::blade(int dim, Mask mask, const Rational& c) {
  Form f(dim, popcount(mask));
  if (mask >> dim) throw exterior_error("blade index above dimension");
  if (c != 0) f.terms_[mask] = c;
  return f;
}

Form Form::blade_idx(int dim, std::initializer_list<int> idx, const Rational& c) {
  Mask m = 0;
  for (int i : idx) {
    if (i < 1 || i > dim) throw exterior_error("blade index above dimension");
    Mask bit = Mask(1) << (i - 1);
    if (m & bit) throw exterior_error("repeated blade index");
    m |= bit;
  }
  return blade(dim, m, c);
}

Form Form::scalar(int dim, const Rational& c) { return blade(dim, 0, c); }

Rational Form::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Form::set(Mask m, const Rational& c) {
  if (popcount(m) != degree_) throw exterior_error("blade degree mismatch");
  if (m >> dim_) throw exterior_error("blade index above dimension");
  if (c == 0)
    terms_.erase(m);
  else
    terms_[m] = c;
}

void Form::add(Mask m, const Rational& c) {
  if (c == 0) return;
  if (popcount(m) != degree_) throw exterior_error("blade degree mismatch");
  if (m >> dim_) throw exterior_error("blade index above dimension");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Form::is_integral() const {
  for (const auto& [m, c] : terms_)
    if (!is_integer(c)) return false;
  return true;
}

Form& Form::operator+=(const Form& o) {
  if (dim_ != o.dim_) throw exterior_error("dimension mismatch");
  if (!o.terms_.empty() && !terms_.empty() && degree_ != o.degree_)
    throw exterior_error("degree mismatch in sum");
  if (terms_.empty()) degree_ = o.degree_;
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  if (dim_ != o.dim_) throw exterior_error("dimension mismatch");
  if (!o.terms_.empty() && !terms_.empty() && degree_ != o.degree_)
    throw exterior_error("degree mismatch in sum");
  if (terms_.empty()) degree_ = o.degree_;
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Form& Form::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Form Form::operator-() const {
  Form f = *this;
  for (auto& [m, v] : f.terms_) v = -v;
  return f;
}

bool operator<(const Form& a, const Form& b) {
  if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ib != b.terms_.end();
}

Form wedge(const Form& a, const Form& b) {
  if (a.dim() != b.dim()) throw exterior_error("dimension mismatch");
  int deg = a.degree() + b.degree();
  if (deg > a.dim()) return Form(a.dim(), 0);
  Form out(a.dim(), deg);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      Rational prod = ca * cb;
      out.add(ma | mb, s > 0 ? prod : Rational(-prod));
    }
  return out;
}

Form hodge(const Form& a) {
  Mask full = (Mask(1) << a.dim()) - 1;
  Form out(a.dim(), a.dim() - a.degree());
  for (const auto& [m, c] : a.terms()) {
    Mask comp = full & ~m;
    int s = wedge_sign(m, comp);
    out.add(comp, s > 0 ? c : -c);
  }
  return out;
}

Rational inner(const Form& a, const Form& b) {
  if (a.dim() != b.dim() || a.degree() != b.degree()) return Rational(0);
  Rational r(0);
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  for (const auto& [m, c] : small.terms()) r += c * large.coeff(m);
  return r;
}

Rational norm2(const Form& a) { return inner(a, a); }

Form contract(const Form& a, const Form& b) {
  if (a.dim() != b.dim()) throw exterior_error("dimension mismatch");
  if (a.degree() > b.degree()) throw exterior_error("contraction degree mismatch");
  Form out(a.dim(), b.degree() - a.degree());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if ((ma & mb) != ma) continue;
      Mask rest = mb & ~ma;
      int s = wedge_sign(ma, rest);
      Rational prod = ca * cb;
      out.add(rest, s > 0 ? prod : Rational(-prod));
    }
  return out;
}

Form volume(int dim) { return Form::blade(dim, (Mask(1) << dim) - 1); }

Form lefschetz_dual(const Form& a) {
  if (a.dim() != 6 || a.degree() != 4)
    throw exterior_error("lefschetz_dual expects a 4-form on dimension 6");
  // J e_{2i-1} = e_{2i}, J e_{2i} = -e_{2i-1}.
  Form out(6, 2);
  for (int i = 1; i <= 6; ++i) {
    int ji = (i % 2 == 1) ? i + 1 : i - 1;
    int jsign = (i % 2 == 1) ? 1 : -1;
    Form ei = Form::blade_idx(6, {i});
    Form jei = Form::blade_idx(6, {ji}, Rational(jsign));
    out += contract(jei, contract(ei, a)) * Rational(1, 2);
  }
  return out;
}

std::string render_form(const Form& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (m == 0) {
      os << render_rational(mag);
      continue;
    }
    if (mag != 1) os << render_rational(mag) << ' ';
    os << 'e';
    Blade b{f.dim(), m};
    for (int i : b.indices()) os << i;
  }
  return os.str();
}

}  // namespace hetg2
