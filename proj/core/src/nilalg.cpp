#include "hetg2/nilalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hetg2 {

namespace {

// Rank over Q by Gaussian elimination; rows are modified in place.
int rank_rows(std::vector<std::vector<Rational>>& rows) {
  int rank = 0;
  std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[pivot_row]);
    for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rational f = rows[r][col] / rows[pivot_row][col];
      for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[pivot_row][c];
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

std::vector<Rational> dense_vector(const Form& f, const std::vector<Mask>& basis) {
  std::vector<Rational> v(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) v[i] = f.coeff(basis[i]);
  return v;
}

std::vector<Mask> blade_union(const std::vector<Form>& forms) {
  std::set<Mask> blades;
  for (const auto& f : forms)
    for (const auto& [m, c] : f.terms()) blades.insert(m);
  return {blades.begin(), blades.end()};
}

int rank_forms(const std::vector<Form>& forms) {
  auto basis = blade_union(forms);
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : forms) rows.push_back(dense_vector(f, basis));
  return rank_rows(rows);
}

// Signature of a symmetric rational matrix by congruence diagonalization.
std::pair<int, int> symmetric_signature(std::vector<std::vector<Rational>> s) {
  const std::size_t n = s.size();
  int plus = 0, minus = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (s[k][k] == 0) {
      // Find a usable pivot: a later nonzero diagonal, or create one.
      std::size_t swap_with = k;
      for (std::size_t j = k + 1; j < n; ++j)
        if (s[j][j] != 0) {
          swap_with = j;
          break;
        }
      if (swap_with != k) {
        std::swap(s[k], s[swap_with]);
        for (auto& row : s) std::swap(row[k], row[swap_with]);
      } else {
        std::size_t j = k + 1;
        while (j < n && s[k][j] == 0) ++j;
        if (j == n) continue;  // zero row and column
        for (std::size_t c = 0; c < n; ++c) s[k][c] += s[j][c];
        for (std::size_t r = 0; r < n; ++r) s[r][k] += s[r][j];
      }
    }
    if (s[k][k] == 0) continue;
    if (s[k][k] > 0)
      ++plus;
    else
      ++minus;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (s[r][k] == 0) continue;
      Rational f = s[r][k] / s[k][k];
      for (std::size_t c = 0; c < n; ++c) s[r][c] -= f * s[k][c];
      for (std::size_t c = 0; c < n; ++c) s[c][r] = s[r][c];
    }
  }
  return {plus, minus};
}

Form f2(std::initializer_list<std::pair<std::initializer_list<int>, int>> t) {
  Form f(7, 2);
  for (const auto& [idx, c] : t) f += Form::blade_idx(7, idx, Rational(c));
  return f;
}

std::string render_tuple(const LieAlgebra& alg) {
  std::ostringstream os;
  os << '(';
  for (int i = 1; i <= LieAlgebra::kDim; ++i) {
    if (i > 1) os << ',';
    os << render_form(alg.d(i));
  }
  os << ')';
  return os.str();
}

}  // namespace

LieAlgebra::LieAlgebra() {
  for (auto& f : diffs_) f = Form(kDim, 2);
}

LieAlgebra::LieAlgebra(std::array<Form, kDim> diffs, std::string name)
    : diffs_(std::move(diffs)), name_(std::move(name)) {
  for (const auto& f : diffs_) {
    if (f.dim() != kDim) throw exterior_error("structure form dimension mismatch");
    if (!f.is_zero() && f.degree() != 2) throw exterior_error("structure form must be a 2-form");
  }
}

std::vector<int> LieAlgebra::derived_indices() const {
  std::vector<int> out;
  for (int i = 1; i <= kDim; ++i)
    if (!d(i).is_zero()) out.push_back(i);
  return out;
}

int LieAlgebra::derived_dim() const {
  std::vector<Form> alphas;
  for (int i : derived_indices()) alphas.push_back(d(i));
  return rank_forms(alphas);
}

Diagnostics LieAlgebra::validate() const {
  Diagnostics diag;
  diag.normal_form = true;
  for (int i = 1; i <= kDim; ++i) {
    if (d(i).is_zero()) continue;
    for (const auto& [m, c] : d(i).terms()) {
      Blade b{kDim, m};
      for (int j : b.indices()) {
        if (j >= i) {
          diag.normal_form = false;
          diag.messages.push_back("de" + std::to_string(i) + " touches index " +
                                  std::to_string(j) + ": not normal form");
        } else if (!d(j).is_zero()) {
          diag.normal_form = false;
          diag.messages.push_back("de" + std::to_string(i) + " supported on non-closed e" +
                                  std::to_string(j));
        }
      }
    }
  }

  diag.d2_zero = true;
  for (int i = 1; i <= kDim; ++i) {
    if (!ce_differential(*this, d(i)).is_zero()) {
      diag.d2_zero = false;
      diag.messages.push_back("d^2 e" + std::to_string(i) + " != 0");
    }
  }

  std::vector<Form> alphas;
  for (int i : derived_indices()) alphas.push_back(d(i));
  diag.derived_dim = rank_forms(alphas);
  diag.independent = diag.derived_dim == static_cast<int>(alphas.size());
  if (!diag.independent) diag.messages.push_back("dependent structure forms");
  diag.two_step = diag.derived_dim >= 1;
  if (!diag.two_step) diag.messages.push_back("abelian: derived algebra is zero");

  diag.integer_constants = true;
  for (const auto& f : diffs_)
    if (!f.is_integral()) {
      diag.integer_constants = false;
      diag.messages.push_back("non-integer structure constants");
      break;
    }
  return diag;
}

bool LieAlgebra::su3_frame() const {
  auto ds = derived_indices();
  return ds.size() == 1 && ds[0] == 7;
}

bool LieAlgebra::su2_frame() const {
  auto ds = derived_indices();
  if (ds.empty() || ds.size() > 3) return false;
  for (int i : ds) {
    if (i < 5) return false;
    for (const auto& [m, c] : d(i).terms())
      if (m >> 4) return false;  // structure forms must live on e1..e4
  }
  if (ds.size() == 2 && !(ds[0] == 5 && ds[1] == 6)) return false;
  if (ds.size() == 3 && !(ds[0] == 5 && ds[1] == 6 && ds[2] == 7)) return false;
  return ds.size() >= 2;
}

Form ce_differential(const LieAlgebra& alg, const Form& a) {
  if (a.dim() != LieAlgebra::kDim) throw exterior_error("dimension mismatch");
  Form out(a.dim(), a.degree() + 1);
  for (const auto& [m, c] : a.terms()) {
    int pos = 0;
    Mask mm = m;
    while (mm) {
      int bit = std::countr_zero(mm);
      mm &= mm - 1;
      const Form& di = alg.d(bit + 1);
      if (!di.is_zero()) {
        Form rest = Form::blade(a.dim(), m & ~(Mask(1) << bit), (pos % 2 == 0) ? c : -c);
        out += wedge(di, rest);
      }
      ++pos;
    }
  }
  return out;
}

int rank2form(const Form& a) {
  if (a.is_zero()) return 0;
  int k = 1;
  Form p = a;
  while (true) {
    p = wedge(p, a);
    if (p.is_zero()) return 2 * k;
    ++k;
  }
}

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << "n'=" << derived_dim;
  if (derived_dim == 1) os << " rank=" << rank_alpha;
  os << " ranks={";
  for (std::size_t i = 0; i < alpha_ranks.size(); ++i) os << (i ? "," : "") << alpha_ranks[i];
  os << "} wedge_span=" << wedge_span_dim << " all_wedges_vanish=" << (all_wedges_vanish ? 1 : 0)
     << " support=" << support_dim;
  if (gram_rank >= 0)
    os << " gram_rank=" << gram_rank << " gram_sig={" << gram_signature.first << ","
       << gram_signature.second << "}";
  return os.str();
}

Fingerprint fingerprint(const LieAlgebra& alg) {
  Fingerprint fp;
  std::vector<Form> alphas;
  for (int i : alg.derived_indices()) alphas.push_back(alg.d(i));
  fp.derived_dim = rank_forms(alphas);
  if (fp.derived_dim == 1) fp.rank_alpha = rank2form(alphas[0]);

  for (const auto& a : alphas) fp.alpha_ranks.push_back(rank2form(a));
  std::sort(fp.alpha_ranks.begin(), fp.alpha_ranks.end());

  const std::size_t n = alphas.size();
  std::vector<Form> wedges;
  std::vector<std::vector<Form>> gram(n, std::vector<Form>(n, Form(7, 4)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      gram[i][j] = gram[j][i] = wedge(alphas[i], alphas[j]);
      wedges.push_back(gram[i][j]);
    }
  fp.wedge_span_dim = rank_forms(wedges);
  fp.all_wedges_vanish = true;
  for (const auto& w : wedges)
    if (!w.is_zero()) fp.all_wedges_vanish = false;

  // Joint support: sum of the images of the alphas as skew maps.
  {
    std::vector<std::vector<Rational>> rows;
    for (const auto& a : alphas)
      for (int i = 1; i <= 7; ++i) {
        std::vector<Rational> row(7);
        for (int j = 1; j <= 7; ++j) {
          if (i == j) continue;
          Mask m = (Mask(1) << (i - 1)) | (Mask(1) << (j - 1));
          Rational c = a.coeff(m);
          row[j - 1] = (i < j) ? c : -c;
        }
        rows.push_back(std::move(row));
      }
    fp.support_dim = rank_rows(rows);
  }

  // Wedge Gram form relative to a single reference 4-form, when proportional.
  if (fp.wedge_span_dim <= 1) {
    Form ref(7, 4);
    for (const auto& w : wedges)
      if (!w.is_zero()) {
        ref = w;
        break;
      }
    if (ref.is_zero()) {
      fp.gram_rank = 0;
    } else {
      Rational ref2 = norm2(ref);
      std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s[i][j] = inner(gram[i][j], ref) / ref2;
      auto sig = symmetric_signature(s);
      fp.gram_rank = sig.first + sig.second;
      fp.gram_signature = {std::max(sig.first, sig.second), std::min(sig.first, sig.second)};
    }
  }
  return fp;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    auto make = [](const std::string& name, std::map<int, Form> dz) {
      std::array<Form, 7> diffs;
      for (auto& f : diffs) f = Form(7, 2);
      for (auto& [i, f] : dz) diffs[i - 1] = f;
      LieAlgebra alg(diffs, name);
      return CatalogEntry{name, alg, alg.derived_dim(), render_tuple(alg)};
    };
    std::vector<CatalogEntry> v;
    // dim n' = 1
    v.push_back(make("h3_R4", {{7, f2({{{1, 2}, 1}})}}));
    v.push_back(make("h5_R2", {{7, f2({{{1, 2}, 1}, {{3, 4}, 1}})}}));
    v.push_back(make("h7", {{7, f2({{{1, 2}, 1}, {{3, 4}, 1}, {{5, 6}, 1}})}}));
    // dim n' = 2
    v.push_back(make("n52_R2", {{5, f2({{{1, 2}, 1}})}, {6, f2({{{1, 3}, 1}})}}));
    v.push_back(make("h3_h3_R", {{5, f2({{{1, 2}, 1}})}, {6, f2({{{3, 4}, 1}})}}));
    v.push_back(make("h3C_R", {{5, f2({{{1, 3}, 1}, {{2, 4}, -1}})}, {6, f2({{{1, 4}, 1}, {{2, 3}, 1}})}}));
    v.push_back(make("n62_R", {{5, f2({{{1, 2}, 1}})}, {6, f2({{{1, 4}, 1}, {{2, 3}, 1}})}}));
    v.push_back(make("n72A", {{6, f2({{{1, 2}, 1}})}, {7, f2({{{1, 4}, 1}, {{3, 5}, 1}})}}));
    v.push_back(make("n72B", {{6, f2({{{1, 2}, 1}, {{3, 4}, 1}})}, {7, f2({{{1, 5}, 1}, {{2, 3}, 1}})}}));
    // dim n' = 3
    v.push_back(make("n63_R", {{5, f2({{{1, 2}, 1}})}, {6, f2({{{1, 3}, 1}})}, {7, f2({{{2, 3}, 1}})}}));
    v.push_back(make("n73A", {{5, f2({{{1, 2}, 1}})}, {6, f2({{{2, 3}, 1}})}, {7, f2({{{2, 4}, 1}})}}));
    v.push_back(make("n73B", {{5, f2({{{1, 2}, 1}})}, {6, f2({{{2, 3}, 1}})}, {7, f2({{{3, 4}, 1}})}}));
    v.push_back(make("n73B1", {{5, f2({{{1, 2}, 1}, {{3, 4}, -1}})},
                               {6, f2({{{1, 3}, 1}, {{2, 4}, 1}})},
                               {7, f2({{{1, 4}, 1}})}}));
    v.push_back(make("n73C", {{5, f2({{{1, 2}, 1}, {{3, 4}, 1}})},
                              {6, f2({{{2, 3}, 1}})},
                              {7, f2({{{2, 4}, 1}})}}));
    v.push_back(make("n73D", {{5, f2({{{1, 2}, 1}, {{3, 4}, 1}})},
                              {6, f2({{{1, 3}, 1}})},
                              {7, f2({{{2, 4}, 1}})}}));
    v.push_back(make("n73D1", {{5, f2({{{1, 2}, 1}, {{3, 4}, -1}})},
                               {6, f2({{{1, 3}, 1}, {{2, 4}, 1}})},
                               {7, f2({{{1, 4}, 1}, {{2, 3}, -1}})}}));
    return v;
  }();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw exterior_error("unknown catalog entry: " + name);
}

std::array<std::array<std::array<Rational, 7>, 7>, 7> koszul_connection(const LieAlgebra& alg) {
  // <[e_i,e_j], e_k> = -(de^k)(e_i, e_j)
  auto br = [&](int i, int j, int k) -> Rational {
    if (i == j) return Rational(0);
    Mask m = (Mask(1) << i) | (Mask(1) << j);
    Rational c = alg.d(k + 1).coeff(m);
    return (i < j) ? -c : c;
  };
  std::array<std::array<std::array<Rational, 7>, 7>, 7> gamma{};
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k)
        gamma[i][j][k] = (br(i, j, k) - br(j, k, i) + br(k, i, j)) / 2;
  return gamma;
}

Rational scalar_curvature(const LieAlgebra& alg) {
  auto gamma = koszul_connection(alg);
  auto br = [&](int i, int j, int k) -> Rational {
    if (i == j) return Rational(0);
    Mask m = (Mask(1) << i) | (Mask(1) << j);
    Rational c = alg.d(k + 1).coeff(m);
    return (i < j) ? -c : c;
  };
  // <R(e_i,e_j)e_j, e_i> = <∇_i ∇_j e_j - ∇_j ∇_i e_j - ∇_[e_i,e_j] e_j, e_i>
  Rational scal(0);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      if (i == j) continue;
      Rational term(0);
      for (int m = 0; m < 7; ++m) {
        term += gamma[j][j][m] * gamma[i][m][i];
        term -= gamma[i][j][m] * gamma[j][m][i];
        term -= br(i, j, m) * gamma[m][j][i];
      }
      scal += term;
    }
  return scal;
}

}  // namespace hetg2
