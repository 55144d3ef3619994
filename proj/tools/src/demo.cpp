#include <ostream>

#include "cli.hpp"
#include "vcbent/bentlab.hpp"
#include "vcbent/generator.hpp"
#include "vcbent/genperm.hpp"
#include "vcbent/perm_expr.hpp"
#include "vcbent/vctransform.hpp"

namespace vcbent::cli {

namespace {

struct Printer {
  std::ostream& out;
  std::string sym;

  std::string cyc(const CycInt& a) const { return to_root_string(a, sym); }
  std::string vec(const std::vector<CycInt>& v) const {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + cyc(v[i]);
    return s;
  }
  std::string yes(bool b) const { return b ? "yes" : "no"; }
};

std::vector<CycInt> diagonal(const GenPerm& d) {
  std::vector<CycInt> out;
  for (const auto& r : d.rows()) out.push_back(r.scalar.to_cyc(d.radix()));
  return out;
}

int case1(const Printer& pr) {
  const MvFunction f = class_seed(1);
  const SignVector F = sign_of(f);
  const Spectrum S = circular_spectrum(f);
  pr.out << "case 1: find g with S_g = (S_f)*\n";
  pr.out << "f: " << f.digits() << '\n';
  pr.out << "F: " << pr.vec(F.entries) << '\n';
  pr.out << "S_f: " << pr.vec(S.entries) << '\n';
  const GenPerm P = *diag_from_flat_spectrum(S);
  pr.out << "P(2) = 3^-1 diag(S_f): diag(" << pr.vec(diagonal(P)) << ")\n";
  pr.out << "P(2) == blockdiag(I, Zc, Z): "
         << pr.yes(P == block_diag({gamma("I"), pauli_z(3, true), pauli_z(3, false)})) << '\n';
  std::vector<CycInt> conj_s;
  for (const auto& e : S.entries) conj_s.push_back(e.conj());
  pr.out << "P(2) S_f == (S_f)*: " << pr.yes(vcbent::apply(P, S).entries == conj_s) << '\n';
  std::vector<CycInt> conj_f;
  for (const auto& e : F.entries) conj_f.push_back(e.conj());
  const auto G = vcbent::apply(kron(gamma("P12"), gamma("P12")), conj_f);
  pr.out << "G = P12(2) F*: " << pr.vec(G) << '\n';
  const auto WF = vcbent::apply(as_dense(conjugate_by_c(P)), F.entries);
  pr.out << "W(2) F == G: " << pr.yes(WF && *WF == G) << '\n';
  auto g = spectrum_is_bent(Spectrum{3, 2, conj_s});
  pr.out << "inverse of (S_f)* agrees: " << pr.yes(g && sign_of(*g).entries == G) << '\n';
  pr.out << "g: " << (g ? g->digits() : "none") << '\n';
  return g ? 0 : 1;
}

int case2(const Printer& pr) {
  const MvFunction f = class_seed(1);
  const SignVector F = sign_of(f);
  const Spectrum S = circular_spectrum(f);
  const GenPerm N2 = kron(gamma("N"), gamma("N"));
  const Spectrum Sg = vcbent::apply(N2, S);
  const GenPerm W1 = std::get<GenPerm>(conjugate_by_c(gamma("N")));
  const GenPerm W2 = kron(W1, W1);
  const auto G = vcbent::apply(W2, F.entries);
  auto g = spectrum_is_bent(Sg);
  pr.out << "case 2: find g with S_g = N(2) S_f\n";
  pr.out << "W(1) = 3^-1 C(1) N(1) C*(1):\n" << render(to_dense(W1), pr.sym);
  pr.out << "f\tF\tS_f\tS_g\tW(n)F\tg\n";
  for (std::size_t i = 0; i < F.entries.size(); ++i) {
    pr.out << f[i] << '\t' << pr.cyc(F.entries[i]) << '\t' << pr.cyc(S.entries[i]) << '\t' << pr.cyc(Sg.entries[i])
           << '\t' << pr.cyc(G[i]) << '\t' << (g ? std::to_string((*g)[i]) : "?") << '\n';
  }
  pr.out << "W(2) F == G: " << pr.yes(g && sign_of(*g).entries == G) << '\n';
  pr.out << "g: " << (g ? g->digits() : "none") << '\n';
  return g ? 0 : 1;
}

int case3(const Printer& pr) {
  const MvFunction f = class_seed(1);
  const SignVector F = sign_of(f);
  const Spectrum S = circular_spectrum(f);
  const PermExprPtr diag_expr = parse_perm_expr("diag(w^2,1,w,1,1,1,w,1,w^2)");
  const GenPerm P = evaluate(*diag_expr);
  pr.out << "case 3: P(2) = " << render(*diag_expr) << '\n';
  const WMatrix W = conjugate_by_c(P);
  const ScaledMatrix Wd = as_dense(W);
  pr.out << "W(2) denominator: " << Wd.denominator << '\n';
  pr.out << "3 W(2) = C(2) P(2) C*(2) / 3:\n" << render(Wd.numerators, pr.sym);
  pr.out << "W(2) is a generalized permutation: " << pr.yes(std::holds_alternative<GenPerm>(W)) << '\n';
  const auto G = vcbent::apply(Wd, F.entries).value_or(std::vector<CycInt>{});
  pr.out << "G = W(2) F: " << pr.vec(G) << '\n';
  auto g = try_from_sign(3, 2, G);
  auto g_spec = spectrum_is_bent(vcbent::apply(P, S));
  pr.out << "inverse of P(2) S_f agrees: " << pr.yes(g && g_spec && *g == *g_spec) << '\n';

  const GenPerm Pb = block_diag({scale(pauli_z(3), {1, 2}), gamma("I"), scale(pauli_z(3, true), {1, 1})});
  pr.out << "blockdiag(w^2 Z, I, w Zc) == P(2): " << pr.yes(Pb == P) << '\n';
  pr.out << "additive Kronecker decomposition == W(2): "
         << pr.yes(conjugate_blockdiag({scale(pauli_z(3), {1, 2}), gamma("I"), scale(pauli_z(3, true), {1, 1})}) == Wd)
         << '\n';

  const PermExprPtr p2 = parse_perm_expr("kron(w^1*P12,compose(compose(P01,N),Z))");
  const PermExprPtr w2 = parse_perm_expr("kron(w^1*P12,compose(Zc,XT))");
  const GenPerm Ppp = evaluate(*p2);
  const GenPerm Wpp = evaluate(*w2);
  pr.out << "P''(2) = " << render(*p2) << '\n';
  pr.out << "P''(2) S_f == P(2) S_f: " << pr.yes(vcbent::apply(Ppp, S) == vcbent::apply(P, S)) << '\n';
  pr.out << "W''(2) = " << render(*w2) << '\n' << render(to_dense(Wpp), pr.sym);
  pr.out << "W''(2) == 3^-2 C P''(2) C*: " << pr.yes(as_dense(conjugate_by_c(Ppp)) == ScaledMatrix{to_dense(Wpp), 1}) << '\n';
  const auto G2 = vcbent::apply(Wpp, F.entries);
  pr.out << "W''(2) F: " << pr.vec(G2) << '\n';
  pr.out << "W''(2) F == G: " << pr.yes(G2 == G) << '\n';
  pr.out << "g: " << (g ? g->digits() : "none") << '\n';
  return g && G2 == G ? 0 : 1;
}

int case4(const Printer& pr) {
  const MvFunction f1 = MvFunction::from_digits(3, 2, "000012021");
  const MvFunction f2 = MvFunction::from_digits(3, 2, "021201111");
  const Spectrum S1 = circular_spectrum(f1);
  const Spectrum S2 = circular_spectrum(f2);
  const GenPerm P = *diag_from_flat_spectrum(S1);
  const Spectrum Sg = vcbent::apply(P, S2);
  pr.out << "case 4: S_g = (1/3) diag(S_f1) S_f2\n";
  pr.out << "f1\tf2\tS_f1\tS_f2\tdiag P(2)\tS_g\n";
  for (std::size_t i = 0; i < Sg.entries.size(); ++i)
    pr.out << f1[i] << '\t' << f2[i] << '\t' << pr.cyc(S1.entries[i]) << '\t' << pr.cyc(S2.entries[i]) << '\t'
           << pr.cyc(P.rows()[i].scalar.to_cyc(3)) << '\t' << pr.cyc(Sg.entries[i]) << '\n';
  pr.out << "S_g flat: " << pr.yes(is_flat(Sg)) << '\n';
  auto F = inverse(Sg);
  if (!F) {
    pr.out << "inverse: not divisible at index " << F.error().index << '\n';
    return 1;
  }
  pr.out << "3^-2 C(2) S_g: " << pr.vec(*F) << '\n';
  auto g = try_from_sign(3, 2, *F);
  if (g) {
    pr.out << "g: " << g->digits() << '\n';
    return 0;
  }
  // Report the entry carrying the mass; the zeros are offending too.
  std::size_t idx = g.error().index;
  for (std::size_t i = 0; i < F->size(); ++i)
    if (!(*F)[i].is_zero() && !as_root_scalar((*F)[i])) idx = i;
  pr.out << "NotASign: index " << idx << " value " << pr.cyc((*F)[idx]) << '\n';
  return 1;
}

int theorem4(const Printer& pr, int only_p) {
  int rc = 0;
  for (int p : {3, 4, 5, 6}) {
    if (only_p && p != only_p) continue;
    std::vector<std::uint8_t> v;
    for (int k = 0; k < p; ++k) v.push_back(static_cast<std::uint8_t>(k));
    const MvFunction f(p, 1, v);
    auto g = negate_classify(f);
    pr.out << "p=" << p << " f=" << f.digits() << ": ";
    if (g) {
      pr.out << "-F is the sign of g=" << g->digits() << " (f shifted by " << p / 2 << ")\n";
    } else {
      pr.out << "NotAFunction: -F(0) = " << pr.cyc(g.error().witness.value) << " is not a power of " << pr.sym << '\n';
      if (p % 2 == 0) rc = 1;
    }
  }
  return rc;
}

}  // namespace

int run_demo(const DemoOptions& opt, std::ostream& out) {
  const Printer pr{out, opt.pretty ? "ξ" : "w"};
  if (opt.which == "1") return case1(pr);
  if (opt.which == "2") return case2(pr);
  if (opt.which == "3") return case3(pr);
  if (opt.which == "4") return case4(pr);
  return theorem4(pr, opt.p);
}

}  // namespace vcbent::cli
