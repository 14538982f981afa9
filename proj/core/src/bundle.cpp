#include "hetg2/bundle.hpp"

#include <map>
#include <sstream>

namespace hetg2 {

namespace {

// Evaluation of a 2-form on coordinate vectors.
Rational eval2(const Form& f, const std::array<Rational, 7>& a, const std::array<Rational, 7>& b) {
  Rational out(0);
  for (const auto& [m, c] : f.terms()) {
    auto idx = Blade{7, m}.indices();
    int i = idx[0] - 1, j = idx[1] - 1;
    out += c * (a[i] * b[j] - a[j] * b[i]);
  }
  return out;
}

// Tiny multivariate polynomial over Q; variable ids: i for u_{e^i} (1-based
// coframe index), 100+r for u_{z^r} (derived slot r, 1-based).
using Monomial = std::map<int, int>;
using Poly = std::map<Monomial, Rational>;

void padd(Poly& p, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = p.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

Poly pconst(const Rational& c) {
  Poly p;
  padd(p, {}, c);
  return p;
}

Poly pvar(int id) {
  Poly p;
  padd(p, {{id, 1}}, Rational(1));
  return p;
}

Poly pmul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m = ma;
      for (const auto& [v, e] : mb) m[v] += e;
      padd(out, m, ca * cb);
    }
  return out;
}

Poly pscale(Poly p, const Rational& c) {
  if (c == 0) return {};
  for (auto& [m, v] : p) v *= c;
  return p;
}

void pacc(Poly& a, const Poly& b) {
  for (const auto& [m, c] : b) padd(a, m, c);
}

Poly psubst(const Poly& p, const std::map<int, Poly>& subst) {
  Poly out;
  for (const auto& [m, c] : p) {
    Poly term = pconst(c);
    for (const auto& [v, e] : m) {
      auto it = subst.find(v);
      const Poly& repl = it != subst.end() ? it->second : pvar(v);
      for (int k = 0; k < e; ++k) term = pmul(term, repl);
    }
    pacc(out, term);
  }
  return out;
}

int derived_slot(const std::vector<int>& derived, int coframe_index) {
  for (std::size_t r = 0; r < derived.size(); ++r)
    if (derived[r] == coframe_index) return static_cast<int>(r);
  return -1;
}

}  // namespace

bool LatticeVector::integral() const {
  for (const auto& x : c)
    if (!is_integer(x)) return false;
  return true;
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < 7; ++i) os << (i ? "," : "") << render_rational(c[i]);
  os << ')';
  return os.str();
}

std::vector<int> base_indices(const LieAlgebra& alg) {
  std::vector<int> out;
  for (int i = 1; i <= 7; ++i)
    if (alg.d(i).is_zero()) out.push_back(i);
  return out;
}

std::vector<LatticeVector> lattice_generators(const LieAlgebra& alg) {
  std::vector<LatticeVector> gens;
  for (int i : base_indices(alg)) {
    LatticeVector v;
    v.c[i - 1] = 6;
    gens.push_back(v);
  }
  for (int i : alg.derived_indices()) {
    LatticeVector v;
    v.c[i - 1] = 1;
    gens.push_back(v);
  }
  return gens;
}

std::vector<LatticeVector> unit_generators(const LieAlgebra& alg) {
  auto gens = lattice_generators(alg);
  for (auto& g : gens)
    for (auto& x : g.c)
      if (x == 6) x = 1;
  return gens;
}

LatticeVector bch_compose(const LieAlgebra& alg, const LatticeVector& a, const LatticeVector& b) {
  LatticeVector out;
  for (int i = 0; i < 7; ++i) out.c[i] = a.c[i] + b.c[i];
  // [A,B] = -sum_k (de^k)(A,B) e_k
  for (int k = 1; k <= 7; ++k) {
    if (alg.d(k).is_zero()) continue;
    out.c[k - 1] -= eval2(alg.d(k), a.c, b.c) / 2;
  }
  return out;
}

Rational SplitGauge::cijk(const LieAlgebra& alg, int i, int j, int k) const {
  Rational out(0);
  for (std::size_t r = 0; r < derived.size(); ++r) {
    const Rational& f = ftilde[i - 1][r];
    if (f == 0) continue;
    const Form& alpha = alg.d(derived[r]);
    if (j == k) continue;
    Mask m = (Mask(1) << (j - 1)) | (Mask(1) << (k - 1));
    Rational c = alpha.coeff(m);
    out += f * ((j < k) ? c : Rational(-c));
  }
  return out;
}

Form SplitGauge::f2_form() const {
  Form out(7, 2);
  for (int i = 1; i <= 7; ++i)
    for (std::size_t r = 0; r < derived.size(); ++r) {
      const Rational& f = ftilde[i - 1][r];
      if (f == 0) continue;
      int d = derived[r];
      Mask m = (Mask(1) << (i - 1)) | (Mask(1) << (d - 1));
      out.add(m, (i < d) ? f : Rational(-f));
    }
  return out;
}

SplitGauge split_gauge(const LieAlgebra& alg, const Form& F) {
  if (F.dim() != 7 || (!F.is_zero() && F.degree() != 2))
    throw exterior_error("split_gauge expects a 2-form on dimension 7");
  if (!F.is_integral()) throw exterior_error("split_gauge needs integer coefficients");
  Form dF = ce_differential(alg, F);
  if (!dF.is_zero()) throw exterior_error("not closed: dF = " + render_form(dF));

  SplitGauge sg;
  sg.derived = alg.derived_indices();
  for (const auto& [m, c] : F.terms()) {
    auto idx = Blade{7, m}.indices();
    int i = idx[0], j = idx[1];
    int si = derived_slot(sg.derived, i), sj = derived_slot(sg.derived, j);
    if (si < 0 && sj < 0) {
      sg.F1.add(m, c);
    } else if (si < 0) {
      sg.ftilde[i - 1][sj] = c;  // e^i ∧ z^r with i < derived index
    } else if (sj < 0) {
      sg.ftilde[j - 1][si] = -c;  // z^r ∧ e^j = -e^j ∧ z^r
    } else {
      throw exterior_error("not closed: nonzero center-center component " + render_form(F));
    }
  }
  return sg;
}

Rational cocycle_c(const LieAlgebra& alg, const SplitGauge& sg, const LatticeVector& c1,
                   const LatticeVector& c2) {
  Rational out(0);
  // F1 block: sum_{r<s} F_rs e^r(C1) e^s(C2)
  for (const auto& [m, f] : sg.F1.terms()) {
    auto idx = Blade{7, m}.indices();
    out += f * c1.c[idx[0] - 1] * c2.c[idx[1] - 1];
  }
  // eta block: sum_i e^i(C1) eta^i(C2)
  for (int i = 1; i <= 7; ++i)
    for (std::size_t r = 0; r < sg.derived.size(); ++r)
      out += sg.ftilde[i - 1][r] * c1.c[i - 1] * c2.c[sg.derived[r] - 1];
  // cubic blocks over c_ijk: iterate the support of the alphas.
  for (int i = 1; i <= 7; ++i)
    for (std::size_t r = 0; r < sg.derived.size(); ++r) {
      const Rational& f = sg.ftilde[i - 1][r];
      if (f == 0) continue;
      for (const auto& [m, a] : alg.d(sg.derived[r]).terms()) {
        auto idx = Blade{7, m}.indices();
        int j = idx[0], k = idx[1];
        Rational cijk = f * a;  // c_ijk with j < k; c_ikj = -c_ijk
        // -(1/6) c_ijk e^j(C1) e^i(C2) e^k(C2), both orientations of (j,k)
        out -= cijk * (c1.c[j - 1] * c2.c[i - 1] * c2.c[k - 1] -
                       c1.c[k - 1] * c2.c[i - 1] * c2.c[j - 1]) /
               6;
        // -(1/3) c_ijk e^i(C1) e^j(C1) e^k(C2)
        out -= cijk * (c1.c[i - 1] * c1.c[j - 1] * c2.c[k - 1] -
                       c1.c[i - 1] * c1.c[k - 1] * c2.c[j - 1]) /
               3;
      }
    }
  return out;
}

Rational cocycle_u_oracle(const LieAlgebra& alg, const SplitGauge& sg, const LatticeVector& c1,
                          const LatticeVector& c2) {
  // f_gamma as a polynomial in u_{e^i} (vars i) and u_{z^r} (vars 100+r).
  auto f_gamma = [&](const LatticeVector& C) {
    Poly f;
    for (const auto& [m, coef] : sg.F1.terms()) {
      auto idx = Blade{7, m}.indices();
      pacc(f, pscale(pvar(idx[1]), coef * C.c[idx[0] - 1]));
    }
    for (int i = 1; i <= 7; ++i) {
      // e^i(C) u_{eta^i} with u_{eta^i} = sum_r Ftilde_ir u_{z^r}
      for (std::size_t r = 0; r < sg.derived.size(); ++r)
        pacc(f, pscale(pvar(100 + static_cast<int>(r) + 1),
                       sg.ftilde[i - 1][r] * C.c[i - 1]));
      for (std::size_t r = 0; r < sg.derived.size(); ++r) {
        const Rational& ftil = sg.ftilde[i - 1][r];
        if (ftil == 0) continue;
        for (const auto& [m, a] : alg.d(sg.derived[r]).terms()) {
          auto idx = Blade{7, m}.indices();
          int j = idx[0], k = idx[1];
          Rational cijk = ftil * a;
          // -(1/6) c_ijk e^j(C) u_{e^i} u_{e^k}  (both orientations)
          pacc(f, pscale(pmul(pvar(i), pvar(k)), -cijk * C.c[j - 1] / 6));
          pacc(f, pscale(pmul(pvar(i), pvar(j)), cijk * C.c[k - 1] / 6));
          // -(1/3) c_ijk e^i(C) e^j(C) u_{e^k}
          pacc(f, pscale(pvar(k), -cijk * C.c[i - 1] * C.c[j - 1] / 3));
          pacc(f, pscale(pvar(j), cijk * C.c[i - 1] * C.c[k - 1] / 3));
        }
      }
    }
    return f;
  };

  // gamma^* substitution: u_{e^i} -> u_{e^i} + e^i(C),
  // u_{z^r} -> u_{z^r} + z^r(C) - (1/2) sum (alpha_r)_{jk} e^j(C) u_{e^k}.
  auto pullback = [&](const Poly& p, const LatticeVector& C) {
    std::map<int, Poly> subst;
    for (int i = 1; i <= 7; ++i) {
      Poly s = pvar(i);
      pacc(s, pconst(C.c[i - 1]));
      subst[i] = s;
    }
    for (std::size_t r = 0; r < sg.derived.size(); ++r) {
      int var = 100 + static_cast<int>(r) + 1;
      Poly s = pvar(var);
      pacc(s, pconst(C.c[sg.derived[r] - 1]));
      for (const auto& [m, a] : alg.d(sg.derived[r]).terms()) {
        auto idx = Blade{7, m}.indices();
        int j = idx[0], k = idx[1];
        pacc(s, pscale(pvar(k), -a * C.c[j - 1] / 2));
        pacc(s, pscale(pvar(j), a * C.c[k - 1] / 2));
      }
      subst[var] = s;
    }
    return psubst(p, subst);
  };

  Poly total = f_gamma(c2);
  pacc(total, pullback(f_gamma(c1), c2));
  Poly f12 = f_gamma(bch_compose(alg, c1, c2));
  for (auto& [m, c] : f12) padd(total, m, -c);

  Rational constant(0);
  for (const auto& [m, c] : total) {
    if (m.empty())
      constant = c;
    else
      throw exterior_error("u-function cocycle is not constant");
  }
  return constant;
}

bool cocycle_condition_check(const LieAlgebra& alg, const Form& f2) {
  SplitGauge sg;
  sg.derived = alg.derived_indices();
  for (const auto& [m, c] : f2.terms()) {
    auto idx = Blade{7, m}.indices();
    int i = idx[0], j = idx[1];
    int si = derived_slot(sg.derived, i), sj = derived_slot(sg.derived, j);
    if (si < 0 && sj >= 0)
      sg.ftilde[i - 1][sj] = c;
    else if (si >= 0 && sj < 0)
      sg.ftilde[j - 1][si] = -c;
    else
      throw exterior_error("expected a form in v* ⊗ (n')*");
  }
  bool cyclic = true;
  auto bases = base_indices(alg);
  for (int i : bases)
    for (int j : bases)
      for (int k : bases)
        if (sg.cijk(alg, i, j, k) + sg.cijk(alg, j, k, i) + sg.cijk(alg, k, i, j) != 0)
          cyclic = false;
  bool closed = ce_differential(alg, f2).is_zero();
  if (cyclic != closed)
    throw exterior_error("cocycle condition disagrees with dF2 = 0");
  return cyclic;
}

IntegralityReport integrality_scan(const LieAlgebra& alg, const SplitGauge& sg,
                                   const std::vector<LatticeVector>& generators) {
  IntegralityReport rep;
  std::vector<LatticeVector> sample = generators;
  const std::size_t n = generators.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) sample.push_back(bch_compose(alg, generators[i], generators[j]));
  std::size_t len2_end = sample.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = n; j < len2_end; ++j)
      sample.push_back(bch_compose(alg, sample[j], generators[i]));

  // Pairs: all generator pairs, plus every longer word against each generator.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pairs.emplace_back(i, j);
  for (std::size_t w = n; w < sample.size(); ++w)
    for (std::size_t i = 0; i < n; ++i) {
      pairs.emplace_back(w, i);
      pairs.emplace_back(i, w);
    }

  for (auto [i, j] : pairs) {
    Rational c = cocycle_c(alg, sg, sample[i], sample[j]);
    ++rep.pairs_checked;
    if (!is_integer(c)) {
      rep.all_integer = false;
      rep.failures.push_back(sample[i].to_string() + " x " + sample[j].to_string() + " -> " +
                             render_rational(c));
    }
  }

  // Divisibility margin: same scan over the unit lattice, keeping track of
  // the denominators the factor-6 convention has to clear.
  auto unit = unit_generators(alg);
  std::vector<LatticeVector> usample = unit;
  for (std::size_t i = 0; i < unit.size(); ++i)
    for (std::size_t j = 0; j < unit.size(); ++j)
      if (i != j) usample.push_back(bch_compose(alg, unit[i], unit[j]));
  Integer margin = 1;
  for (std::size_t i = 0; i < usample.size(); ++i)
    for (std::size_t j = 0; j < unit.size(); ++j) {
      Rational c1 = cocycle_c(alg, sg, usample[i], usample[j]);
      Rational c2 = cocycle_c(alg, sg, usample[j], usample[i]);
      Integer d = lcm(denominator(c1), denominator(c2));
      margin = lcm(margin, d);
    }
  rep.margin = margin;
  return rep;
}

}  // namespace hetg2
