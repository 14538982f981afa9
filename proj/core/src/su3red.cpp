#include "hetg2/su3red.hpp"

namespace hetg2 {

namespace {

constexpr Mask kE7 = Mask(1) << 6;

Form z_flat() { return Form::blade_idx(7, {7}); }

}  // namespace

Form restrict_form(const Form& a, int dim) {
  Form out(dim, a.degree());
  for (const auto& [m, c] : a.terms()) {
    if (m >> dim) throw exterior_error("form does not restrict: touches index above target");
    out.add(m, c);
  }
  return out;
}

Form extend_form(const Form& a, int dim) {
  Form out(dim, a.degree());
  for (const auto& [m, c] : a.terms()) out.add(m, c);
  return out;
}

Form j_conjugate2(const Form& a) {
  if (a.degree() != 2) throw exterior_error("j_conjugate2 expects a 2-form");
  // e^{2k-1} ∘ J = -e^{2k},  e^{2k} ∘ J = e^{2k-1}.
  Form out(a.dim(), 2);
  for (const auto& [m, c] : a.terms()) {
    Blade b{a.dim(), m};
    auto idx = b.indices();
    int i = idx[0], j = idx[1];
    int ji = (i % 2 == 1) ? i + 1 : i - 1;
    int jj = (j % 2 == 1) ? j + 1 : j - 1;
    int sign = ((i % 2 == 1) ? -1 : 1) * ((j % 2 == 1) ? -1 : 1);
    if (ji > jj) {
      std::swap(ji, jj);
      sign = -sign;
    }
    Mask mm = (Mask(1) << (ji - 1)) | (Mask(1) << (jj - 1));
    out.add(mm, sign > 0 ? c : Rational(-c));
  }
  return out;
}

Form j_covector(const Form& eta) {
  if (eta.degree() != 1) throw exterior_error("j_covector expects a 1-form");
  Form out(eta.dim(), 1);
  for (const auto& [m, c] : eta.terms()) {
    Blade b{eta.dim(), m};
    int i = b.indices()[0];
    int ji = (i % 2 == 1) ? i + 1 : i - 1;
    int sign = (i % 2 == 1) ? 1 : -1;
    // (J e^{2k-1})(.) = -e^{2k-1}(J .):  J e^{2k-1} = e^{2k}, J e^{2k} = -e^{2k-1}.
    out.add(Mask(1) << (ji - 1), sign > 0 ? c : Rational(-c));
  }
  return out;
}

SU3Split su3_split(const LieAlgebra& alg) {
  if (!alg.su3_frame())
    throw exterior_error("algebra is not in the SU(3) frame (need dz = de7 only)");
  SU3Split s;
  s.omega = su3_omega();
  s.omega_plus = su3_omega_plus();
  s.omega_minus = su3_omega_minus();
  s.alpha = restrict_form(alg.d(7), 6);
  s.b = inner(s.alpha, s.omega) / 3;
  s.alpha0 = s.alpha - s.omega * s.b;
  return s;
}

TypeDecomp2 decompose2(const Form& a) {
  if (a.dim() != 6 || (!a.is_zero() && a.degree() != 2))
    throw exterior_error("decompose2 expects a 2-form on dimension 6");
  TypeDecomp2 d;
  const Form omega = su3_omega();
  d.b = inner(a, omega) / 3;
  Form rest = a - omega * d.b;
  Form jrest = j_conjugate2(rest);
  d.beta = (rest - jrest) * Rational(1, 2);
  d.sigma = (rest + jrest) * Rational(1, 2);
  return d;
}

bool is_primitive11(const Form& a) {
  if (a.dim() != 6) return false;
  if (a.is_zero()) return true;
  if (a.degree() != 2) return false;
  return inner(a, su3_omega()) == 0 && j_conjugate2(a) == a;
}

SU3IdentityReport su3_identities_check() {
  SU3IdentityReport rep;
  const Form omega = su3_omega();
  const Form op = su3_omega_plus();
  auto fail = [&rep](const std::string& msg) {
    rep.ok = false;
    rep.failures.push_back(msg);
  };

  // Basis of the 8-dimensional primitive (1,1) space.
  std::vector<Form> basis;
  basis.push_back(Form::blade_idx(6, {1, 2}) - Form::blade_idx(6, {3, 4}));
  basis.push_back(Form::blade_idx(6, {3, 4}) - Form::blade_idx(6, {5, 6}));
  for (auto [i, j] : {std::pair{1, 3}, {1, 5}, {3, 5}}) {
    // e_{i,j} + e_{i+1,j+1} and e_{i,j+1} - e_{i+1,j} are (1,1)-primitive.
    basis.push_back(Form::blade_idx(6, {i, j}) + Form::blade_idx(6, {i + 1, j + 1}));
    basis.push_back(Form::blade_idx(6, {i, j + 1}) - Form::blade_idx(6, {i + 1, j}));
  }
  for (const auto& sigma : basis) {
    if (!is_primitive11(sigma)) fail("basis element not primitive (1,1): " + render_form(sigma));
    Rational lhs = hodge(wedge(wedge(sigma, sigma), omega)).coeff(0);
    if (lhs != -norm2(sigma))
      fail("*(s∧s∧w) != -|s|^2 for s = " + render_form(sigma));
  }
  for (int i = 1; i <= 6; ++i) {
    Form eta = Form::blade_idx(6, {i});
    Form dual = hodge(wedge(eta, op));
    if (wedge(dual, dual) != hodge(wedge(eta, j_covector(eta))) * Rational(2))
      fail("(*(n∧W+))^2 != 2*(n∧Jn) for n = e" + std::to_string(i));
    if (norm2(dual) != 2 * norm2(eta))
      fail("|*(n∧W+)|^2 != 2|n|^2 for n = e" + std::to_string(i));
  }
  return rep;
}

JEndo JEndo::diag(const Rational& a, const Rational& b, const Rational& c) {
  JEndo l;
  l.X[0][0] = a;
  l.X[1][1] = b;
  l.X[2][2] = c;
  l.check();
  return l;
}

void JEndo::check() const {
  Rational tr = X[0][0] + X[1][1] + X[2][2];
  if (tr != 0) throw exterior_error("JEndo must be trace-free");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (X[i][j] != X[j][i]) throw exterior_error("JEndo X block must be symmetric");
      if (Y[i][j] != -Y[j][i]) throw exterior_error("JEndo Y block must be skew");
    }
}

bool JEndo::is_zero() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (X[i][j] != 0 || Y[i][j] != 0) return false;
  return true;
}

std::array<std::array<Rational, 6>, 6> JEndo::matrix6() const {
  // L e_{2k-1} = sum_m X[m][k-1] e_{2m-1} + Y[m][k-1] e_{2m}
  // L e_{2k}   = sum_m -Y[m][k-1] e_{2m-1} + X[m][k-1] e_{2m}
  std::array<std::array<Rational, 6>, 6> mat{};
  for (int k = 0; k < 3; ++k)
    for (int m = 0; m < 3; ++m) {
      mat[2 * m][2 * k] = X[m][k];
      mat[2 * m + 1][2 * k] = Y[m][k];
      mat[2 * m][2 * k + 1] = -Y[m][k];
      mat[2 * m + 1][2 * k + 1] = X[m][k];
    }
  return mat;
}

JEndo mul(const JEndo& a, const JEndo& b) {
  // (Xa + i Ya)(Xb + i Yb) as complex 3x3 blocks.
  JEndo out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational x(0), y(0);
      for (int m = 0; m < 3; ++m) {
        x += a.X[i][m] * b.X[m][j] - a.Y[i][m] * b.Y[m][j];
        y += a.X[i][m] * b.Y[m][j] + a.Y[i][m] * b.X[m][j];
      }
      out.X[i][j] = x;
      out.Y[i][j] = y;
    }
  return out;
}

Form form_of_endo(const JEndo& l) {
  l.check();
  auto mat = l.matrix6();
  // sigma(e_i, e_j) = <L J e_i, e_j>,  J e_{2k-1} = e_{2k}, J e_{2k} = -e_{2k-1}.
  Form out(6, 2);
  for (int i = 1; i <= 6; ++i) {
    int ji = (i % 2 == 1) ? i : i - 2;  // 0-based column of J e_i
    int jsign = (i % 2 == 1) ? 1 : -1;
    for (int j = i + 1; j <= 6; ++j) {
      Rational c = mat[j - 1][ji] * jsign;
      if (c != 0) out.add((Mask(1) << (i - 1)) | (Mask(1) << (j - 1)), c);
    }
  }
  return out;
}

JEndo endo_of_form(const Form& sigma) {
  if (!is_primitive11(sigma))
    throw exterior_error("endo_of_form expects a primitive (1,1) 2-form, got " +
                         render_form(sigma));
  // A skew with sigma(X,Y) = <A X, Y>, then L = -A J.
  auto a_entry = [&sigma](int i, int j) -> Rational {  // <A e_i, e_j>, 1-based
    if (i == j) return Rational(0);
    Mask m = (Mask(1) << (i - 1)) | (Mask(1) << (j - 1));
    Rational c = sigma.coeff(m);
    return (i < j) ? c : Rational(-c);
  };
  // <L e_j, e_i> = <-A J e_j, e_i>
  std::array<std::array<Rational, 6>, 6> mat{};
  for (int j = 1; j <= 6; ++j) {
    int jj = (j % 2 == 1) ? j + 1 : j - 1;
    int jsign = (j % 2 == 1) ? 1 : -1;
    for (int i = 1; i <= 6; ++i) mat[i - 1][j - 1] = -Rational(jsign) * a_entry(jj, i);
  }
  JEndo l;
  for (int k = 0; k < 3; ++k)
    for (int m = 0; m < 3; ++m) {
      l.X[m][k] = mat[2 * m][2 * k];
      l.Y[m][k] = mat[2 * m + 1][2 * k];
    }
  l.check();
  if (form_of_endo(l) != sigma) throw exterior_error("endo/form dictionary failure");
  return l;
}

SU3Instanton su3_instanton_normal_form(const LieAlgebra& alg, const Form& F) {
  SU3Split s = su3_split(alg);
  if (F.dim() != 7 || (!F.is_zero() && F.degree() != 2))
    throw exterior_error("expected a 2-form on dimension 7");

  Form Fv6(6, 2), eta6(6, 1);
  for (const auto& [m, c] : F.terms()) {
    if (m & kE7)
      eta6.add(m & ~kE7, c);  // F = F_v + eta ∧ z♭, z-last in the blade
    else
      Fv6.add(m, c);
  }
  // sign: e^i ∧ e^7 carries the coefficient of blade {i,7} directly
  // (i < 7, so no reordering sign).

  if (!ce_differential(alg, F).is_zero())
    throw exterior_error("dF != 0: residual " + render_form(ce_differential(alg, F)));
  Form fpsi = wedge(F, standard_psi());
  if (!fpsi.is_zero())
    throw exterior_error("not an instanton: F ∧ psi = " + render_form(fpsi));

  // dF = 0 is equivalent to eta ∧ alpha = 0 in this frame.
  if (!wedge(eta6, s.alpha).is_zero())
    throw exterior_error("dF != 0: eta ∧ alpha = " + render_form(wedge(eta6, s.alpha)));

  Form expected_anti = hodge(wedge(eta6, s.omega_plus)) * Rational(1, 2);
  Form sigma = Fv6 - expected_anti;
  if (!is_primitive11(sigma))
    throw exterior_error("not an instanton: residual type component " +
                         render_form(Fv6 - expected_anti));
  int rank = rank2form(s.alpha);
  if ((rank == 4 || rank == 6) && !eta6.is_zero())
    throw exterior_error("internal: eta must vanish when rank(alpha) is 4 or 6");
  return {eta6, sigma};
}

bool reduced_equation_check(const Form& alpha0, const Rational& lambda,
                            const std::vector<std::pair<Form, Rational>>& sigmas) {
  if (!is_primitive11(alpha0))
    throw exterior_error("alpha0 must be primitive (1,1): " + render_form(alpha0));
  const Form omega = su3_omega();
  Form lhs = wedge(alpha0, alpha0) - wedge(omega, omega) * (4 * lambda * lambda);
  Form rhs(6, 4);
  for (const auto& [sigma, eps] : sigmas) {
    if (!is_primitive11(sigma))
      throw exterior_error("sigma must be primitive (1,1): " + render_form(sigma));
    rhs += wedge(sigma, sigma) * eps;
  }
  bool forms_ok = lhs == rhs;

  // Endomorphism route: L0^2 - sum eps_r L_r^2 = -8 lambda^2 Id.
  JEndo l0 = endo_of_form(alpha0);
  JEndo acc = mul(l0, l0);
  for (const auto& [sigma, eps] : sigmas) {
    JEndo lr = endo_of_form(sigma);
    JEndo sq = mul(lr, lr);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        acc.X[i][j] -= eps * sq.X[i][j];
        acc.Y[i][j] -= eps * sq.Y[i][j];
      }
  }
  bool endo_ok = true;
  Rational target = -8 * lambda * lambda;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (acc.X[i][j] != (i == j ? target : Rational(0))) endo_ok = false;
      if (acc.Y[i][j] != 0) endo_ok = false;
    }
  if (forms_ok != endo_ok)
    throw exterior_error("reduced equation: 4-form and endomorphism verdicts disagree");
  return forms_ok;
}

ReducedSystemReport full_reduced_system_check(
    const Form& alpha0, const Rational& lambda,
    const std::vector<std::tuple<Form, Form, Rational>>& gauge) {
  const Form omega = su3_omega();
  const Form op = su3_omega_plus();
  const Form alpha = omega * (2 * lambda) + alpha0;

  ReducedSystemReport rep;
  rep.eta_alpha = true;
  for (const auto& [eta, sigma, eps] : gauge)
    if (!wedge(eta, alpha).is_zero()) rep.eta_alpha = false;

  Form mixed(6, 5), eta_sq(6, 4), zcomp(6, 3);
  std::vector<std::pair<Form, Rational>> sigmas;
  for (const auto& [eta, sigma, eps] : gauge) {
    Form dual = hodge(wedge(eta, op));
    mixed += wedge(dual, sigma) * eps;
    eta_sq += wedge(dual, dual) * eps;
    zcomp += (wedge(dual, eta) + wedge(sigma, eta) * Rational(2)) * eps;
    sigmas.emplace_back(sigma, eps);
  }
  rep.mixed_term = mixed.is_zero();
  rep.eta_square = eta_sq.is_zero();
  rep.z_component = zcomp.is_zero();
  rep.main_equation = reduced_equation_check(alpha0, lambda, sigmas);

  // Cross-validation: the reduced system is equivalent to the ambient one.
  std::array<Form, 7> diffs;
  for (auto& f : diffs) f = Form(7, 2);
  diffs[6] = extend_form(alpha, 7);
  LieAlgebra alg(diffs);
  std::vector<Form> Fs;
  std::vector<Rational> eps_list;
  for (const auto& [eta, sigma, eps] : gauge) {
    Form fv = hodge(wedge(eta, op)) * Rational(1, 2) + sigma;
    Form f7 = extend_form(fv, 7) + wedge(extend_form(eta, 7), Form::blade_idx(7, {7}));
    Fs.push_back(f7);
    eps_list.push_back(eps);
  }
  bool ambient = verify(alg, GaugeField(Fs, eps_list)).pass();
  rep.matches_ambient = (rep.pass() == ambient);
  if (!rep.matches_ambient)
    throw exterior_error("reduced system disagrees with ambient verification");
  return rep;
}

std::pair<LieAlgebra, GaugeField> su3_assemble(
    const Rational& lambda, const Form& alpha0,
    const std::vector<std::pair<Form, Rational>>& sigmas) {
  const Form omega = su3_omega();
  Form alpha = omega * (2 * lambda) + alpha0;
  if (alpha.is_zero()) throw exterior_error("abelian: 2 lambda omega + alpha0 = 0");
  if (!alpha.is_integral()) throw exterior_error("2 lambda omega + alpha0 is not integral");
  for (const auto& [sigma, eps] : sigmas)
    if (!sigma.is_integral()) throw exterior_error("sigma is not integral: " + render_form(sigma));
  if (!reduced_equation_check(alpha0, lambda, sigmas))
    throw exterior_error("reduced equation does not hold");

  std::array<Form, 7> diffs;
  for (auto& f : diffs) f = Form(7, 2);
  diffs[6] = extend_form(alpha, 7);
  LieAlgebra alg(diffs);
  std::vector<Form> Fs;
  std::vector<Rational> eps_list;
  for (const auto& [sigma, eps] : sigmas) {
    Fs.push_back(extend_form(sigma, 7));
    eps_list.push_back(eps);
  }
  GaugeField g(Fs, eps_list);
  VerificationReport rep = verify(alg, g);
  if (!rep.pass()) throw exterior_error("assembled data fails verification:\n" + rep.to_lines());
  return {alg, g};
}

}  // namespace hetg2
