#include "ldiip/proof.hpp"

namespace ldiip {

namespace {

// f_imp(X, Y) in the two-connective core is ~(~~X & ~Y); recover X, Y.
std::optional<std::pair<Formula, Formula>> split_imp(const Formula& f) {
  if (f.kind() != Formula::Kind::Not) return std::nullopt;
  const Formula& a = f.child();
  if (a.kind() != Formula::Kind::And) return std::nullopt;
  const Formula& l = a.lhs();
  const Formula& r = a.rhs();
  if (l.kind() != Formula::Kind::Not || r.kind() != Formula::Kind::Not)
    return std::nullopt;
  if (l.child().kind() != Formula::Kind::Not) return std::nullopt;
  return std::pair{l.child().child(), r.child()};
}

// Appends checkable lines; every propositional step is realized as a
// tautology-instance line plus modus-ponens peels, verified on the spot.
class Builder {
 public:
  explicit Builder(std::string name) { d_.name = std::move(name); }

  Derivation take() && { return std::move(d_); }

  const Formula& at(int i) const { return d_.lines[static_cast<std::size_t>(i)].formula; }

  int add_premise(Formula f) {
    d_.premises.push_back(std::move(f));
    return static_cast<int>(d_.premises.size()) - 1;
  }

  int taut(Formula f) {
    if (!is_tautology_instance(f))
      throw std::logic_error("corpus: not a tautology instance: " + render(f));
    return push(std::move(f), {Justification::Kind::Taut, "", -1, -1, std::nullopt, ""});
  }

  int ax(const std::string& name, Formula f) {
    return push(std::move(f), {Justification::Kind::Axiom, name, -1, -1, std::nullopt, ""});
  }

  int prem(int k) {
    return push(d_.premises[static_cast<std::size_t>(k)],
                {Justification::Kind::Premise, "", k, -1, std::nullopt, ""});
  }

  int mp(int ant, int imp) {
    auto concl = destruct_imp(at(imp), at(ant));
    if (!concl) throw std::logic_error("corpus: bad modus ponens");
    return push(std::move(*concl),
                {Justification::Kind::MP, "", ant, imp, std::nullopt, ""});
  }

  int nec(int i, const MessageTerm& m, const std::string& agent) {
    return push(Formula::proves(m, agent, at(i)),
                {Justification::Kind::Nec, "", i, -1, m, agent});
  }

  // dep_1 -> (dep_2 -> ... -> concl) as a tautology instance, then peel
  int pl(const std::vector<int>& deps, Formula concl) {
    Formula chain = concl;
    for (auto it = deps.rbegin(); it != deps.rend(); ++it)
      chain = f_imp(at(*it), chain);
    int line = taut(std::move(chain));
    for (int dep : deps) line = mp(dep, line);
    return line;
  }

  // from line i (X -> Y), derive ([m]agent X) -> [m]agent Y
  int reg(int i, const MessageTerm& m, const std::string& agent) {
    auto parts = split_imp(at(i));
    if (!parts) throw std::logic_error("corpus: regularity needs an implication");
    int boxed = nec(i, m, agent);
    Formula dx = Formula::proves(m, agent, parts->first);
    Formula dy = Formula::proves(m, agent, parts->second);
    int k = ax("K", f_imp(at(boxed), f_imp(dx, dy)));
    return mp(boxed, k);
  }

  // from line i (X <-> Y), derive ([m]agent X) <-> [m]agent Y
  int bireg(int i, const MessageTerm& m, const std::string& agent) {
    const Formula& iff = at(i);
    if (iff.kind() != Formula::Kind::And)
      throw std::logic_error("corpus: biregularity needs a biconditional");
    auto parts = split_imp(iff.lhs());
    if (!parts) throw std::logic_error("corpus: biregularity needs a biconditional");
    const auto& [x, y] = *parts;
    int fwd = reg(pl({i}, f_imp(x, y)), m, agent);
    int bwd = reg(pl({i}, f_imp(y, x)), m, agent);
    Formula dx = Formula::proves(m, agent, x);
    Formula dy = Formula::proves(m, agent, y);
    return pl({fwd, bwd}, f_iff(dx, dy));
  }

 private:
  int push(Formula f, Justification j) {
    d_.lines.push_back({std::move(f), std::move(j)});
    return static_cast<int>(d_.lines.size()) - 1;
  }
  Derivation d_;
};

const std::string kFalseAgent = "a";

Formula box(const MessageTerm& m, const std::string& ag, Formula f) {
  return Formula::proves(m, ag, std::move(f));
}

// ~([m]ag false) <-> (([m]ag phi) -> ~([m]ag ~phi))
int fact22_lines(Builder& b, const Formula& phi, const MessageTerm& m,
                 const std::string& ag) {
  Formula truth = f_true(kFalseAgent);
  Formula falsum = f_false(kFalseAgent);
  Formula nphi = Formula::f_not(phi);
  Formula contr = Formula::f_and(phi, nphi);
  int t = b.ax("SelfKnowledge", truth);
  int to_false = b.reg(b.taut(f_imp(contr, falsum)), m, ag);
  int build = b.reg(b.taut(f_imp(phi, f_imp(nphi, contr))), m, ag);
  int k = b.ax("K", f_imp(box(m, ag, f_imp(nphi, contr)),
                          f_imp(box(m, ag, nphi), box(m, ag, contr))));
  int chain = b.pl({build, k},
                   f_imp(box(m, ag, phi), f_imp(box(m, ag, nphi), box(m, ag, contr))));
  int fwd = b.pl({to_false, chain},
                 f_imp(Formula::f_not(box(m, ag, falsum)),
                       f_imp(box(m, ag, phi), Formula::f_not(box(m, ag, nphi)))));
  int ex_phi = b.reg(b.pl({t}, f_imp(falsum, phi)), m, ag);
  int ex_nphi = b.reg(b.pl({t}, f_imp(falsum, nphi)), m, ag);
  int bwd = b.pl({ex_phi, ex_nphi},
                 f_imp(f_imp(box(m, ag, phi), Formula::f_not(box(m, ag, nphi))),
                       Formula::f_not(box(m, ag, falsum))));
  return b.pl({fwd, bwd},
              f_iff(Formula::f_not(box(m, ag, falsum)),
                    f_imp(box(m, ag, phi), Formula::f_not(box(m, ag, nphi)))));
}

// ([m]ag ~phi) <-> ~([m]ag phi)   (maximal consistency)
int thm21_lines(Builder& b, const Formula& phi, const MessageTerm& m,
                const std::string& ag) {
  Formula falsum = f_false(kFalseAgent);
  Formula nphi = Formula::f_not(phi);
  Formula dp = box(m, ag, phi);
  Formula dn = box(m, ag, nphi);
  int pc = b.ax("ProofConsistency", Formula::f_not(box(m, ag, falsum)));
  int iff = fact22_lines(b, phi, m, ag);
  int fwd = b.pl({pc, iff}, f_imp(dp, Formula::f_not(dn)));
  int contra = b.pl({fwd}, f_imp(dn, Formula::f_not(dp)));
  int nc = b.ax("NegationCompleteness", f_or(dp, dn));
  int bwd = b.pl({nc}, f_imp(Formula::f_not(dp), dn));
  return b.pl({contra, bwd}, f_iff(dn, Formula::f_not(dp)));
}

// ([m]ag (phi & psi)) <-> (([m]ag phi) & [m]ag psi)
int thm22_lines(Builder& b, const Formula& phi, const Formula& psi, const MessageTerm& m,
                const std::string& ag) {
  Formula conj = Formula::f_and(phi, psi);
  Formula dp = box(m, ag, phi);
  Formula dq = box(m, ag, psi);
  Formula dc = box(m, ag, conj);
  int build = b.reg(b.taut(f_imp(phi, f_imp(psi, conj))), m, ag);
  int k = b.ax("K", f_imp(box(m, ag, f_imp(psi, conj)), f_imp(dq, dc)));
  int chain = b.pl({build, k}, f_imp(dp, f_imp(dq, dc)));
  int fwd = b.pl({chain}, f_imp(Formula::f_and(dp, dq), dc));
  int left = b.reg(b.taut(f_imp(conj, phi)), m, ag);
  int right = b.reg(b.taut(f_imp(conj, psi)), m, ag);
  int bwd = b.pl({left, right}, f_imp(dc, Formula::f_and(dp, dq)));
  return b.pl({fwd, bwd}, f_iff(dc, Formula::f_and(dp, dq)));
}

// ([m]ag (phi | psi)) <-> (([m]ag phi) | [m]ag psi)
int thm23_lines(Builder& b, const Formula& phi, const Formula& psi, const MessageTerm& m,
                const std::string& ag) {
  Formula nphi = Formula::f_not(phi);
  Formula npsi = Formula::f_not(psi);
  Formula chi = Formula::f_and(nphi, npsi);  // phi | psi == ~chi
  int outer = thm21_lines(b, chi, m, ag);    // [m]~chi <-> ~[m]chi
  int split = thm22_lines(b, nphi, npsi, m, ag);
  int left = thm21_lines(b, phi, m, ag);
  int right = thm21_lines(b, psi, m, ag);
  return b.pl({outer, split, left, right},
              f_iff(box(m, ag, f_or(phi, psi)),
                    f_or(box(m, ag, phi), box(m, ag, psi))));
}

// ([m]ag (phi -> psi)) <-> (([m]ag phi) -> [m]ag psi)
int thm24_lines(Builder& b, const Formula& phi, const Formula& psi, const MessageTerm& m,
                const std::string& ag) {
  int disj = thm23_lines(b, Formula::f_not(phi), psi, m, ag);
  int neg = thm21_lines(b, phi, m, ag);
  return b.pl({disj, neg},
              f_iff(box(m, ag, f_imp(phi, psi)),
                    f_imp(box(m, ag, phi), box(m, ag, psi))));
}

// [m]ag (([m]ag phi) -> phi)   (self-proof of truthfulness)
int lemma11_lines(Builder& b, const Formula& phi, const MessageTerm& m,
                  const std::string& ag) {
  Formula dp = box(m, ag, phi);
  Formula kam = Formula::knows(ag, m);
  int et = b.ax("EpistemicTruthfulness", f_imp(dp, f_imp(kam, phi)));
  int swapped = b.pl({et}, f_imp(kam, f_imp(dp, phi)));
  int reg = b.reg(swapped, m, ag);
  int sk = b.ax("SelfKnowledge", box(m, ag, kam));
  return b.mp(sk, reg);
}

// ([m]ag [m]ag phi) -> [m]ag phi   (proof density)
int lemma12_lines(Builder& b, const Formula& phi, const MessageTerm& m,
                  const std::string& ag) {
  Formula dp = box(m, ag, phi);
  int self = lemma11_lines(b, phi, m, ag);
  int k = b.ax("K", f_imp(box(m, ag, f_imp(dp, phi)), f_imp(box(m, ag, dp), dp)));
  return b.mp(self, k);
}

// ([m]ag [m]ag phi) <-> [m]ag phi   (modal idempotency)
int thm26_lines(Builder& b, const Formula& phi, const MessageTerm& m,
                const std::string& ag) {
  Formula nphi = Formula::f_not(phi);
  Formula dp = box(m, ag, phi);
  Formula dn = box(m, ag, nphi);
  Formula ddp = box(m, ag, dp);
  int density = lemma12_lines(b, phi, m, ag);
  int density_n = lemma12_lines(b, nphi, m, ag);
  int contra = b.pl({density_n},
                    f_imp(Formula::f_not(dn), Formula::f_not(box(m, ag, dn))));
  int mc = thm21_lines(b, phi, m, ag);  // dn <-> ~dp
  int flip = b.pl({mc}, f_iff(Formula::f_not(dn), dp));
  int step = b.pl({contra, flip}, f_imp(dp, Formula::f_not(box(m, ag, dn))));
  int boxed = b.bireg(mc, m, ag);  // [m]dn <-> [m]~dp
  int boxed_neg =
      b.pl({boxed}, f_iff(Formula::f_not(box(m, ag, dn)),
                          Formula::f_not(box(m, ag, Formula::f_not(dp)))));
  int step2 = b.pl({step, boxed_neg},
                   f_imp(dp, Formula::f_not(box(m, ag, Formula::f_not(dp)))));
  int mc_dp = thm21_lines(b, dp, m, ag);  // [m]~dp <-> ~[m]dp
  int flip2 = b.pl({mc_dp},
                   f_iff(Formula::f_not(box(m, ag, Formula::f_not(dp))), ddp));
  int transitivity = b.pl({step2, flip2}, f_imp(dp, ddp));
  return b.pl({density, transitivity}, f_iff(ddp, dp));
}

Derivation make_fact21() {
  Derivation d = derive_regularity(Formula::prop("P"), Formula::prop("Q"),
                                   MessageTerm::atom("m"), "a");
  d.name = "Fact2.1-regularity";
  return d;
}

Derivation make_fact22() {
  Builder b("Fact2.2-consistency-iff");
  fact22_lines(b, Formula::prop("P"), MessageTerm::atom("m"), "a");
  return std::move(b).take();
}

Derivation make_fact23() {
  Builder b("Fact2.3-neg-as-imp-false");
  Formula p = Formula::prop("P");
  int t = b.ax("SelfKnowledge", f_true(kFalseAgent));
  int taut = b.pl({t}, f_iff(Formula::f_not(p), f_imp(p, f_false(kFalseAgent))));
  b.bireg(taut, MessageTerm::atom("m"), "a");
  return std::move(b).take();
}

Derivation make_lemma11() {
  Builder b("Lemma1.1-self-proof-of-truthfulness");
  lemma11_lines(b, Formula::prop("P"), MessageTerm::atom("m"), "a");
  return std::move(b).take();
}

Derivation make_lemma12() {
  Builder b("Lemma1.2-proof-density");
  lemma12_lines(b, Formula::prop("P"), MessageTerm::atom("m"), "a");
  return std::move(b).take();
}

Derivation make_thm21() {
  Builder b("Thm2.1-maximal-consistency");
  thm21_lines(b, Formula::prop("P"), MessageTerm::atom("m"), "a");
  return std::move(b).take();
}

Derivation make_thm22() {
  Builder b("Thm2.2-proof-conjunctions-bis");
  thm22_lines(b, Formula::prop("P"), Formula::prop("Q"), MessageTerm::atom("m"), "a");
  return std::move(b).take();
}

Derivation make_thm23() {
  Builder b("Thm2.3-IDP-bis");
  thm23_lines(b, Formula::prop("P"), Formula::prop("Q"), MessageTerm::atom("m"), "a");
  return std::move(b).take();
}

Derivation make_thm24() {
  Builder b("Thm2.4-K-bis");
  thm24_lines(b, Formula::prop("P"), Formula::prop("Q"), MessageTerm::atom("m"), "a");
  return std::move(b).take();
}

Derivation make_thm25() {
  Builder b("Thm2.5-Bi-K");
  Formula p = Formula::prop("P");
  Formula q = Formula::prop("Q");
  MessageTerm m = MessageTerm::atom("m");
  int split = thm22_lines(b, f_imp(p, q), f_imp(q, p), m, "a");
  int fwd = thm24_lines(b, p, q, m, "a");
  int bwd = thm24_lines(b, q, p, m, "a");
  b.pl({split, fwd, bwd},
       f_iff(box(m, "a", f_iff(p, q)), f_iff(box(m, "a", p), box(m, "a", q))));
  return std::move(b).take();
}

Derivation make_thm26() {
  Builder b("Thm2.6-modal-idempotency");
  thm26_lines(b, Formula::prop("P"), MessageTerm::atom("m"), "a");
  return std::move(b).take();
}

Derivation make_thm27() {
  Builder b("Thm2.7-modal-idempotency-bis");
  Formula p = Formula::prop("P");
  MessageTerm m = MessageTerm::atom("m");
  Formula da = box(m, "a", p);                      // [m]a P
  Formula da_n = box(m, "a", Formula::f_not(p));    // [m]a ~P
  Formula kbm = Formula::knows("b", m);
  int et = b.ax("EpistemicTruthfulness", f_imp(box(m, "b", da), f_imp(kbm, da)));
  int fwd = b.pl({et}, f_imp(kbm, f_imp(box(m, "b", da), da)));
  int et_n = b.ax("EpistemicTruthfulness", f_imp(box(m, "b", da_n), f_imp(kbm, da_n)));
  int fwd_n = b.pl({et_n}, f_imp(kbm, f_imp(box(m, "b", da_n), da_n)));
  int contra = b.pl({fwd_n},
                    f_imp(kbm, f_imp(Formula::f_not(da_n),
                                     Formula::f_not(box(m, "b", da_n)))));
  int mc = thm21_lines(b, p, m, "a");  // da_n <-> ~da
  int flip = b.pl({mc}, f_iff(Formula::f_not(da_n), da));
  int step = b.pl({contra, flip},
                  f_imp(kbm, f_imp(da, Formula::f_not(box(m, "b", da_n)))));
  int boxed = b.bireg(mc, m, "b");  // [m]b da_n <-> [m]b ~da
  int boxed_neg =
      b.pl({boxed}, f_iff(Formula::f_not(box(m, "b", da_n)),
                          Formula::f_not(box(m, "b", Formula::f_not(da)))));
  int step2 = b.pl({step, boxed_neg},
                   f_imp(kbm, f_imp(da, Formula::f_not(box(m, "b", Formula::f_not(da))))));
  int mc_b = thm21_lines(b, da, m, "b");  // [m]b ~da <-> ~[m]b da
  int flip2 = b.pl({mc_b}, f_iff(Formula::f_not(box(m, "b", Formula::f_not(da))),
                                 box(m, "b", da)));
  int bwd = b.pl({step2, flip2}, f_imp(kbm, f_imp(da, box(m, "b", da))));
  b.pl({fwd, bwd}, f_imp(kbm, f_iff(box(m, "b", da), da)));
  return std::move(b).take();
}

Derivation make_cor1_five() {
  Builder b("Cor1-five-law");
  Formula p = Formula::prop("P");
  MessageTerm m = MessageTerm::atom("m");
  Formula dp = box(m, "a", p);
  Formula dn = box(m, "a", Formula::f_not(p));
  int mc = thm21_lines(b, p, m, "a");
  int l1 = b.pl({mc}, f_imp(Formula::f_not(dp), dn));
  int idem = thm26_lines(b, Formula::f_not(p), m, "a");
  int l2 = b.pl({idem}, f_imp(dn, box(m, "a", dn)));
  int l3 = b.pl({l1, l2}, f_imp(Formula::f_not(dp), box(m, "a", dn)));
  int l4 = b.pl({mc}, f_imp(dn, Formula::f_not(dp)));
  int l5 = b.reg(l4, m, "a");
  b.pl({l3, l5}, f_imp(Formula::f_not(dp), box(m, "a", Formula::f_not(dp))));
  return std::move(b).take();
}

Derivation make_cor1_t() {
  Builder b("Cor1-T-law");
  Formula p = Formula::prop("P");
  MessageTerm m = MessageTerm::atom("m");
  Formula dp = box(m, "a", p);
  Formula kam = Formula::knows("a", m);
  int et = b.ax("EpistemicTruthfulness", f_imp(dp, f_imp(kam, p)));
  b.pl({et}, f_imp(kam, f_imp(dp, p)));
  return std::move(b).take();
}

Derivation make_nc_from_idp() {
  Builder b("S1.1.1-NC-from-IDP");
  Formula p = Formula::prop("P");
  MessageTerm m = MessageTerm::atom("m");
  Formula excl = f_or(p, Formula::f_not(p));
  Formula idp = f_imp(box(m, "a", excl),
                      f_or(box(m, "a", p), box(m, "a", Formula::f_not(p))));
  b.add_premise(idp);
  int premise = b.prem(0);
  int taut = b.taut(excl);
  int boxed = b.nec(taut, m, "a");
  b.mp(boxed, premise);
  return std::move(b).take();
}

}  // namespace

const AgentUniverse& corpus_universe() {
  static const AgentUniverse u({"a", "b", "m"});
  return u;
}

std::vector<Derivation> corpus() {
  return {make_fact21(),   make_fact22(), make_fact23(),    make_lemma11(),
          make_lemma12(),  make_thm21(),  make_thm22(),     make_thm23(),
          make_thm24(),    make_thm25(),  make_thm26(),     make_thm27(),
          make_cor1_five(), make_cor1_t(), make_nc_from_idp()};
}

}  // namespace ldiip
