#include "hetg2/hetsys.hpp"

#include <sstream>

namespace hetg2 {

GaugeField::GaugeField(std::vector<Form> F_, std::vector<Rational> eps_)
    : F(std::move(F_)), eps(std::move(eps_)) {
  if (F.size() != eps.size()) throw exterior_error("gauge field needs one eps per F");
  for (const auto& e : eps)
    if (e == 0) throw exterior_error("pairing coefficient eps must be nonzero");
  for (const auto& f : F) {
    if (f.dim() != 7) throw exterior_error("curvature form must live on dimension 7");
    if (!f.is_zero() && f.degree() != 2) throw exterior_error("curvature form must be a 2-form");
  }
}

std::pair<int, int> signature(const GaugeField& g) {
  int plus = 0, minus = 0;
  for (const auto& e : g.eps) (e > 0 ? plus : minus)++;
  return {plus, minus};
}

bool integrality_check(const GaugeField& g) {
  for (const auto& f : g.F)
    if (!f.is_integral()) return false;
  return true;
}

bool VerificationReport::pass() const {
  if (!bianchi_applicable) return false;
  for (const auto& c : checks)
    if (c.state != CheckEntry::State::Pass) return false;
  return true;
}

std::string VerificationReport::to_lines() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << "CHECK " << c.name << ' ';
    switch (c.state) {
      case CheckEntry::State::Pass:
        os << "PASS";
        break;
      case CheckEntry::State::Fail:
        os << "FAIL residual=" << render_form(c.residual);
        break;
      case CheckEntry::State::NotApplicable:
        os << "NA";
        break;
    }
    os << '\n';
  }
  os << "LAMBDA " << render_rational(lambda) << '\n';
  os << "SIGNATURE " << sig.first << ' ' << sig.second << '\n';
  if (scal_residual) os << "SCAL_RESIDUAL " << render_rational(*scal_residual) << '\n';
  os << "RESULT " << (pass() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string VerificationReport::to_human() const {
  std::ostringstream os;
  os << "heterotic G2-system verification\n";
  for (const auto& c : checks) {
    os << "  " << c.name << ": ";
    switch (c.state) {
      case CheckEntry::State::Pass:
        os << "pass";
        break;
      case CheckEntry::State::Fail:
        os << "FAIL, residual " << render_form(c.residual);
        break;
      case CheckEntry::State::NotApplicable:
        os << "not applicable";
        break;
    }
    os << '\n';
  }
  os << "  lambda = " << render_rational(lambda) << ", signature (" << sig.first << ","
     << sig.second << ")\n";
  if (scal_residual) os << "  scalar identity residual = " << render_rational(*scal_residual) << '\n';
  os << "  => " << (pass() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

VerificationReport verify(const LieAlgebra& alg, const GaugeField& g) {
  Diagnostics diag = alg.validate();
  if (!diag.ok()) {
    std::string what = "invalid algebra:";
    for (const auto& m : diag.messages) what += ' ' + m + ';';
    throw exterior_error(what);
  }

  VerificationReport rep;
  TorsionForms t = torsion(alg);
  rep.lambda = t.lambda;
  rep.sig = signature(g);
  rep.tau1_zero = t.tau1.is_zero();

  auto push = [&rep](const std::string& name, const Form& residual) {
    CheckEntry e{name, residual.is_zero() ? CheckEntry::State::Pass : CheckEntry::State::Fail,
                 residual};
    rep.checks.push_back(std::move(e));
  };

  push("tau2", t.tau2);
  const Form psi = standard_psi();
  for (std::size_t r = 0; r < g.k(); ++r)
    push("dF" + std::to_string(r + 1), ce_differential(alg, g.F[r]));
  for (std::size_t r = 0; r < g.k(); ++r)
    push("instanton" + std::to_string(r + 1), wedge(g.F[r], psi));

  rep.bianchi_applicable = t.tau2.is_zero();
  if (rep.bianchi_applicable) {
    Form rhs(7, 4);
    for (std::size_t r = 0; r < g.k(); ++r) rhs += wedge(g.F[r], g.F[r]) * g.eps[r];
    Form residual = ce_differential(alg, torsion_H(alg)) - rhs;
    push("bianchi", residual);
    rep.scal_residual = scal_identity_check(alg, g);
  } else {
    rep.checks.push_back({"bianchi", CheckEntry::State::NotApplicable, Form(7, 4)});
  }
  return rep;
}

Rational scal_identity_check(const LieAlgebra& alg, const GaugeField& g) {
  TorsionForms t = torsion(alg);
  if (!t.tau2.is_zero())
    throw exterior_error("scalar identity needs tau2 = 0, got " + render_form(t.tau2));
  Rational f2(0);
  for (std::size_t r = 0; r < g.k(); ++r) f2 += g.eps[r] * norm2(g.F[r]);
  Rational scal = scalar_curvature(alg);
  Rational h2 = norm2(torsion_H(alg));
  Rational dstar = codifferential_tau1(alg);
  return scal - h2 / 2 + f2 - 8 * dstar - 16 * norm2(t.tau1) - 4 * t.lambda * t.lambda;
}

}  // namespace hetg2
