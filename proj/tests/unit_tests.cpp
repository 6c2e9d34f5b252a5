#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ldiip/concrete.hpp"
#include "ldiip/decide.hpp"
#include "ldiip/model.hpp"
#include "ldiip/proof.hpp"
#include "testutil.hpp"

using namespace ldiip;

namespace {

const AgentUniverse kAB({"a", "b"});
const AgentUniverse kABM({"a", "b", "m"});
const AgentUniverse kAM({"a", "m"});
const AgentUniverse kA({"a"});

MessageTerm atom(const std::string& n) { return MessageTerm::atom(n); }

}  // namespace

// ---------------------------------------------------------------------------
// syntax

TEST_CASE("parse produces core AST with macros expanded") {
  Formula f = parse_formula("[m]a (a knows m)", kAM);
  CHECK(f == Formula::proves(atom("m"), "a", Formula::knows("a", atom("m"))));

  Formula imp = parse_formula("P -> P", kAB);
  Formula p = Formula::prop("P");
  CHECK(imp == Formula::f_not(Formula::f_and(Formula::f_not(Formula::f_not(p)),
                                             Formula::f_not(p))));

  Formula fls = parse_formula("false", kA);
  CHECK(fls == Formula::f_not(Formula::proves(atom("a"), "a",
                                              Formula::knows("a", atom("a")))));
  CHECK(parse_formula("true@b", kAB) == f_true("b"));
}

TEST_CASE("precedence and associativity") {
  CHECK(parse_formula("~P & Q", kAB) ==
        Formula::f_and(Formula::f_not(Formula::prop("P")), Formula::prop("Q")));
  // -> is right-associative: P -> Q -> R == P -> (Q -> R)
  CHECK(parse_formula("P -> Q -> R", kAB) ==
        parse_formula("P -> (Q -> R)", kAB));
  CHECK(parse_formula("P | Q -> R", kAB) == parse_formula("(P | Q) -> R", kAB));
  CHECK(parse_formula("P <-> Q", kAB) ==
        f_iff(Formula::prop("P"), Formula::prop("Q")));
}

TEST_CASE("render round-trips through parse") {
  std::vector<std::string> inputs = {
      "[m]a P", "a knows (m, b)", "~(P & Q)", "[sig(m, b)]a ~(b knows m)",
      "((P -> Q) <-> ~R) | true"};
  for (const auto& text : inputs) {
    Formula f = parse_formula(text, kABM);
    CHECK(parse_formula(render(f), kABM) == f);
  }
}

TEST_CASE("parse errors carry 1-based positions") {
  CHECK_THROWS_AS(parse_formula("[m]a", kAM), ParseError);
  CHECK_THROWS_AS(parse_formula("P &", kAB), ParseError);
  CHECK_THROWS_AS(parse_formula("c knows a", kAB), ParseError);  // unknown agent
  try {
    parse_formula("[m]a", kAM);
  } catch (const ParseError& e) {
    CHECK(e.column == 5);
  }
}

TEST_CASE("subformula closure") {
  Formula p = Formula::prop("P");
  CHECK(subformula_closure(p) == std::set<Formula>{p});

  Formula f = Formula::f_and(p, Formula::f_not(p));
  CHECK(subformula_closure(f) ==
        std::set<Formula>{f, p, Formula::f_not(p)});

  Formula m = Formula::proves(atom("m"), "a", p);
  CHECK(subformula_closure(m) == std::set<Formula>{m, p});
  CHECK(static_cast<int>(subformula_closure(m).size()) <= m.size());
}

TEST_CASE("schema matching recognizes instances and respects sorts") {
  AxiomCatalog cat;
  const auto& core = cat.core();
  auto find = [&](const std::string& name) -> const Schema& {
    for (const auto& ns : core)
      if (ns.name == name) return ns.schema;
    throw std::logic_error("missing schema");
  };

  Formula k = parse_formula("[m]a (P -> Q) -> (([m]a P) -> [m]a Q)", kAM);
  auto theta = match_schema(find("K"), k);
  REQUIRE(theta);
  CHECK(instantiate(find("K"), *theta) == k);

  // agent metavariable must match both positions
  Formula wrong = parse_formula("[m]a (b knows m)", kABM);
  CHECK(!match_schema(find("SelfKnowledge"), wrong));
  Formula right = parse_formula("[m]a (a knows m)", kAM);
  CHECK(match_schema(find("SelfKnowledge"), right));

  Formula nc = parse_formula("([m]a P) | [m]a ~P", kAM);
  CHECK(match_schema(find("NegationCompleteness"), nc));
}

// ---------------------------------------------------------------------------
// knowledge

TEST_CASE("analyze saturates unpairing and signature analysis") {
  DataBase d{MessageTerm::sig(atom("m"), "b")};
  DataBase out = analyze("a", d);
  for (const auto& want :
       {MessageTerm::sig(atom("m"), "b"), MessageTerm::pair(atom("m"), atom("b")),
        atom("m"), atom("b"), atom("a")})
    CHECK(out.count(want) == 1);

  CHECK(analyze("a", {}) == DataBase{atom("a")});

  DataBase pair_d{MessageTerm::pair(atom("m"), atom("n"))};
  DataBase pair_out = analyze("a", pair_d);
  CHECK(pair_out.count(atom("m")) == 1);
  CHECK(pair_out.count(atom("n")) == 1);
}

TEST_CASE("derivable: pairing, personal signature only") {
  CHECK(derivable("a", {}, atom("a")));
  CHECK(derivable("a", {atom("m"), atom("n")},
                  MessageTerm::pair(atom("m"), atom("n"))));
  CHECK(!derivable("a", {atom("m")}, MessageTerm::sig(atom("m"), "b")));
  CHECK(derivable("a", {}, MessageTerm::sig(atom("a"), "a")));
  // analysis of a foreign signature still yields its parts
  CHECK(derivable("a", {MessageTerm::sig(atom("m"), "b")}, atom("m")));
}

TEST_CASE("no signature forgery") {
  testutil::Rng rng(7);
  std::vector<std::string> atoms = {"a", "b", "m", "n"};
  for (int trial = 0; trial < 50; ++trial) {
    DataBase d;
    for (int i = 0; i < 3; ++i) {
      MessageTerm t = testutil::random_message(rng, atoms, 2);
      // drop every term containing a b-signature
      std::set<MessageTerm> subs;
      t.collect_subterms(subs);
      bool has_b_sig = std::any_of(subs.begin(), subs.end(), [](const MessageTerm& s) {
        return s.kind() == MessageTerm::Kind::Sig && s.agent() == "b";
      });
      if (!has_b_sig) d.insert(t);
    }
    MessageTerm body = testutil::random_message(rng, atoms, 1);
    CHECK(!derivable("a", d, MessageTerm::sig(body, "b")));
  }
}

TEST_CASE("closure operator laws on random bases") {
  testutil::Rng rng(11);
  std::vector<std::string> atoms = {"a", "b", "m"};
  for (int trial = 0; trial < 30; ++trial) {
    DataBase d, d2;
    for (int i = 0; i < 2; ++i) d.insert(testutil::random_message(rng, atoms, 2));
    d2 = d;
    d2.insert(testutil::random_message(rng, atoms, 2));
    for (const auto& m : d) CHECK(derivable("a", d, m));  // extensive
    for (const auto& m : closure_members("a", d, 3))
      CHECK(derivable("a", d2, m));  // monotone
    // idempotent: closing the analyzed base adds nothing
    for (const auto& m : closure_members("a", analyze("a", d), 3))
      CHECK(derivable("a", d, m));
  }
}

TEST_CASE("closure_members matches derivable by brute force") {
  CHECK(closure_members("a", {}, 1) == std::set<MessageTerm>{atom("a")});
  CHECK(closure_members("a", {atom("b")}, 1) ==
        std::set<MessageTerm>{atom("a"), atom("b")});
}

TEST_CASE("identity strategy disables mining") {
  DataBase d{MessageTerm::pair(atom("m"), atom("n"))};
  CHECK(!derivable("a", d, atom("m"), ClosureStrategy::Identity));
  CHECK(derivable("a", d, MessageTerm::pair(atom("m"), atom("n")),
                  ClosureStrategy::Identity));
  CHECK(derivable("a", d, atom("a"), ClosureStrategy::Identity));
}

// ---------------------------------------------------------------------------
// concrete semantics

TEST_CASE("msgs extracts per-agent raw data") {
  ConcreteState zero = ConcreteState::zero();
  CHECK(msgs("a", zero).empty());
  ConcreteState s = ConcreteState::recv("a", atom("m"), zero);
  CHECK(msgs("a", s) == DataBase{atom("m")});
  CHECK(msgs("b", s).empty());
}

TEST_CASE("step stays put exactly when derivable") {
  ConcreteState zero = ConcreteState::zero();
  CHECK(step("a", atom("a"), zero) == zero);
  ConcreteState got = step("a", atom("m"), zero);
  CHECK(got == ConcreteState::recv("a", atom("m"), zero));
  CHECK(step("a", atom("m"), got) == got);  // idempotence
}

TEST_CASE("accessible is the graph of step") {
  ConcreteState zero = ConcreteState::zero();
  CHECK(accessible("a", atom("a"), zero, zero));
  CHECK(accessible("a", atom("m"), zero, ConcreteState::recv("a", atom("m"), zero)));
  CHECK(!accessible("a", atom("m"), zero, ConcreteState::recv("b", atom("m"), zero)));
}

TEST_CASE("concrete evaluator validates the axioms pointwise") {
  std::vector<ConcreteState> states = {
      ConcreteState::zero(),
      ConcreteState::recv("a", atom("m"), ConcreteState::zero()),
      ConcreteState::recv("b", MessageTerm::pair(atom("a"), atom("m")),
                          ConcreteState::recv("a", atom("b"), ConcreteState::zero()))};
  Formula self_knowledge = parse_formula("[m]a (a knows m)", kAM);
  Formula proof_consistency = parse_formula("~([m]a false)", kAM);
  for (const auto& s : states) {
    CHECK(eval_concrete(self_knowledge, s));
    CHECK(eval_concrete(proof_consistency, s));
  }
  CHECK(!eval_concrete(parse_formula("a knows b", kAB), ConcreteState::zero()));
}

TEST_CASE("concrete modal clause distributes over ~ and &") {
  testutil::Rng rng(13);
  testutil::FormulaVocab v{{"a", "b"}, {"P"}, {atom("a"), atom("b")}};
  ConcreteAssignment assign = ConcreteAssignment::constant({{"P", true}});
  for (int trial = 0; trial < 40; ++trial) {
    Formula f = testutil::random_formula(rng, v, 2);
    ConcreteState s = ConcreteState::zero();
    MessageTerm m = testutil::random_message(rng, {"a", "b"}, 1);
    CHECK(eval_concrete(Formula::proves(m, "a", Formula::f_not(f)), s, assign) ==
          !eval_concrete(Formula::proves(m, "a", f), s, assign));
  }
}

TEST_CASE("concrete state serialization round-trips") {
  ConcreteState s = ConcreteState::recv(
      "b", MessageTerm::sig(atom("m"), "a"),
      ConcreteState::recv("a", atom("m"), ConcreteState::zero()));
  CHECK(parse_concrete_state(render(s), kABM) == s);
  CHECK(parse_concrete_state("0", kABM) == ConcreteState::zero());
}

TEST_CASE("concrete interface holds at small depth") {
  auto report = check_concrete_interface(1, kAB, {atom("a"), atom("b")});
  CHECK(report.ok());
  CHECK(report.states_checked > 0);
}

// ---------------------------------------------------------------------------
// abstract model

namespace {

// Two-state model: agent a knows m only at s1; trans(m,a): s0 -> s1 -> s1.
FiniteModel two_state_model() {
  FiniteModel m;
  m.num_states = 2;
  m.default_names();
  m.bases["a"] = {DataBase{}, DataBase{atom("m")}};
  m.bases["b"] = {DataBase{}, DataBase{}};
  m.trans[{atom("m"), "a"}] = {{1}, {1}};
  m.prop_val["P"] = {false, true};
  return m;
}

}  // namespace

TEST_CASE("eval derives knowledge from bases") {
  FiniteModel m = two_state_model();
  Formula k = parse_formula("a knows m", kAM);
  CHECK(!eval(m, 0, k));
  CHECK(eval(m, 1, k));
  // [m]a P at s0: successor s1 where P holds
  CHECK(eval(m, 0, parse_formula("[m]a P", kAM)));
  CHECK(!global_truth(m, Formula::prop("P")));
  CHECK(eval(m, 1, Formula::prop("P")));
  CHECK_THROWS_AS(eval(m, 0, Formula::prop("Q")), EvalError);
  CHECK_THROWS_AS(eval(m, 0, parse_formula("[(m, m)]a P", kAM)), EvalError);
}

TEST_CASE("validate_interface reports each violation kind") {
  std::set<ModalKey> sig{{atom("m"), "a"}};

  FiniteModel serial = two_state_model();
  serial.trans[{atom("m"), "a"}][0] = {};
  auto r1 = validate_interface(serial, sig);
  CHECK(!r1.ok());

  FiniteModel refl = two_state_model();
  refl.trans[{atom("m"), "a"}][1] = {0};  // knowing state must loop
  CHECK(!validate_interface(refl, sig).ok());

  FiniteModel image = two_state_model();
  image.trans[{atom("m"), "a"}][0] = {0};  // successor must know m
  CHECK(!validate_interface(image, sig).ok());

  FiniteModel fun = two_state_model();
  fun.trans[{atom("m"), "a"}][0] = {0, 1};
  CHECK(!validate_interface(fun, sig).ok());

  CHECK(validate_interface(two_state_model(), sig).ok());
}

TEST_CASE("model serialization is canonical and bit-exact") {
  FiniteModel m = two_state_model();
  std::string text = write_model(m);
  FiniteModel back = parse_model(text, kABM);
  CHECK(write_model(back) == text);
  CHECK(back.num_states == 2);
  CHECK(back.bases["a"][1] == DataBase{atom("m")});
  CHECK(back.trans[{atom("m"), "a"}] == m.trans[{atom("m"), "a"}]);
  CHECK(back.prop_val["P"] == std::vector<bool>{false, true});
  CHECK_THROWS(parse_model("STATES\ns0\nTRANS\nm a : s0 -> s9\n", kAM));
}

TEST_CASE("filtration collapses agreeing states and preserves truth") {
  // s0 and s2 agree on everything the formula observes.
  FiniteModel m;
  m.num_states = 3;
  m.default_names();
  m.bases["a"] = {DataBase{}, DataBase{atom("m")}, DataBase{}};
  m.bases["b"] = {DataBase{}, DataBase{}, DataBase{}};
  m.trans[{atom("m"), "a"}] = {{1}, {1}, {1}};
  m.prop_val["P"] = {false, true, false};

  Formula f = parse_formula("[m]a P", kAM);
  Filtration fil = filtrate(m, f);
  CHECK(fil.model.num_states == 2);
  CHECK(fil.state_map[0] == fil.state_map[2]);
  CHECK(fil.state_map[0] != fil.state_map[1]);
  for (const auto& g : subformula_closure(f))
    for (int s = 0; s < m.num_states; ++s)
      CHECK(eval(m, s, g) == eval(fil.model, fil.state_map[s], g));
  CHECK(validate_interface(fil.model, modal_signature(f)).ok());
}

TEST_CASE("enumerator yields exactly the interface-valid models") {
  // 1 state, no modalities, 1 prop: two models (bases collapse).
  EnumSpec spec;
  spec.agents = {"a"};
  spec.props = {"P"};
  spec.msg_universe = {atom("a")};
  spec.max_states = 1;
  ModelEnumerator e(spec);
  CHECK(e.count_models() == 2);
  int seen = 0;
  e.for_each([&](const FiniteModel&) {
    ++seen;
    return true;
  });
  CHECK(seen == 2);

  Formula f = parse_formula("[m]a P", kAM);
  EnumSpec spec2 = make_enum_spec(f, kAM, 2);
  ModelEnumerator e2(spec2);
  long long n = 0;
  e2.for_each([&](const FiniteModel& model) {
    ++n;
    CHECK(validate_interface(model, spec2.signature).ok());
    // conditional reflexivity is built in
    for (int s = 0; s < model.num_states; ++s)
      if (model.knows_at("a", s, atom("m")))
        CHECK(model.trans.at({atom("m"), "a"})[s] == std::vector<int>{s});
    return true;
  });
  CHECK(n == e2.count_models());
}

TEST_CASE("parallel find_first returns the order-minimal witness") {
  Formula f = parse_formula("[m]a P & ~P", kAM);
  EnumSpec spec = make_enum_spec(f, kAM, 3);
  ModelEnumerator e(spec);
  auto pred = [&](const FiniteModel& m) {
    for (int s = 0; s < m.num_states; ++s)
      if (eval(m, s, f)) return true;
    return false;
  };
  auto serial = e.find_first(pred, false);
  auto parallel = e.find_first(pred, true);
  REQUIRE(serial);
  REQUIRE(parallel);
  CHECK(write_model(*serial) == write_model(*parallel));
}

// ---------------------------------------------------------------------------
// proof system

TEST_CASE("tautology instances by propositional skeleton") {
  CHECK(is_tautology_instance(parse_formula("P -> P", kAB)));
  CHECK(is_tautology_instance(parse_formula("([m]a P) | ~([m]a P)", kAM)));
  CHECK(!is_tautology_instance(parse_formula("([m]a P) | [m]a ~P", kAM)));
  CHECK(is_tautology_instance(parse_formula("(P & ~P) -> Q", kAB)));
}

TEST_CASE("axiom recognition") {
  AxiomCatalog cat;
  auto name = [&](const std::string& text, const AgentUniverse& u) {
    auto r = is_axiom(parse_formula(text, u), cat);
    return r ? *r : std::string("none");
  };
  CHECK(name("[m]a (a knows m)", kAM) == "SelfKnowledge");
  CHECK(name("([m]a P) -> (a knows m -> P)", kAM) == "EpistemicTruthfulness");
  CHECK(name("([m]a P) | [m]a ~P", kAM) == "NegationCompleteness");
  CHECK(name("~([m]a false@b)", kABM) == "ProofConsistency");
  CHECK(name("[m]a (P -> Q) -> (([m]a P) -> [m]a Q)", kAM) == "K");
  CHECK(name("P | ~P", kAB) == "Taut");
  CHECK(name("a knows m", kAM) == "none");

  AxiomCatalog with_g1;
  with_g1.add_gamma1("KnowSelf", parse_schema("$x knows $x", kAB));
  CHECK(is_axiom(parse_formula("b knows b", kAB), with_g1) == std::string("KnowSelf"));
}

TEST_CASE("derivation checking accepts valid proofs and localizes failures") {
  AxiomCatalog cat;
  Formula p = Formula::prop("P");
  Formula q = Formula::prop("Q");

  Derivation reg = derive_regularity(p, q, atom("m"), "a");
  CHECK(check_derivation(reg, cat).ok);
  CHECK(reg.conclusion() ==
        f_imp(Formula::proves(atom("m"), "a", p), Formula::proves(atom("m"), "a", q)));

  // {P} |- [m]a P by necessitation on the premise
  Derivation nec_prem;
  nec_prem.premises = {p};
  nec_prem.lines.push_back({p, {Justification::Kind::Premise, "", 0}});
  Justification n{Justification::Kind::Nec, "", 0, -1, atom("m"), "a"};
  nec_prem.lines.push_back({Formula::proves(atom("m"), "a", p), n});
  CHECK(check_derivation(nec_prem, cat).ok);

  // forged MP: cite lines in the wrong order
  Derivation bad = derive_regularity(p, q, atom("m"), "a");
  std::swap(bad.lines.back().just.i, bad.lines.back().just.j);
  auto verdict = check_derivation(bad, cat);
  CHECK(!verdict.ok);
  CHECK(verdict.line == static_cast<int>(bad.lines.size()));

  Derivation not_taut;
  not_taut.lines.push_back({p, {Justification::Kind::Taut}});
  auto v2 = check_derivation(not_taut, cat);
  CHECK(!v2.ok);
  CHECK(v2.line == 1);
}

TEST_CASE("corpus derivations all check") {
  AxiomCatalog cat;
  auto all = corpus();
  CHECK(all.size() == 15);
  for (const auto& d : all) {
    CAPTURE(d.name);
    auto r = check_derivation(d, cat);
    CAPTURE(r.line);
    CAPTURE(r.reason);
    CHECK(r.ok);
  }
  auto has = [&](const std::string& n) {
    return std::any_of(all.begin(), all.end(),
                       [&](const Derivation& d) { return d.name == n; });
  };
  CHECK(has("Thm2.1-maximal-consistency"));
  CHECK(has("Cor1-five-law"));
  CHECK(has("S1.1.1-NC-from-IDP"));
}

TEST_CASE("corpus spot-check conclusions") {
  std::map<std::string, Formula> want;
  const AgentUniverse& u = corpus_universe();
  want.emplace("Thm2.1-maximal-consistency",
               parse_formula("([m]a ~P) <-> ~([m]a P)", u));
  want.emplace("Cor1-five-law",
               parse_formula("~([m]a P) -> [m]a ~([m]a P)", u));
  want.emplace("Cor1-T-law", parse_formula("a knows m -> (([m]a P) -> P)", u));
  want.emplace("Thm2.6-modal-idempotency",
               parse_formula("([m]a [m]a P) <-> [m]a P", u));
  want.emplace("S1.1.1-NC-from-IDP", parse_formula("([m]a P) | [m]a ~P", u));
  for (const auto& d : corpus()) {
    auto it = want.find(d.name);
    if (it != want.end()) {
      CAPTURE(d.name);
      CHECK(d.conclusion() == it->second);
    }
  }
}

TEST_CASE("derivation serialization round-trips") {
  AxiomCatalog cat;
  for (const auto& d : corpus()) {
    CAPTURE(d.name);
    Derivation back = parse_derivation(write_derivation(d), corpus_universe());
    CHECK(back.lines.size() == d.lines.size());
    CHECK(back.conclusion() == d.conclusion());
    CHECK(check_derivation(back, cat).ok);
    CHECK(write_derivation(back) == write_derivation(d));
  }
}

// ---------------------------------------------------------------------------
// decide

TEST_CASE("satisfiable finds and misses as expected") {
  DecideOptions opts;
  auto hit = satisfiable(Formula::prop("P"), kAB, 1, opts);
  REQUIRE(hit);
  CHECK(hit->model.num_states == 1);
  CHECK(eval(hit->model, hit->state, Formula::prop("P")));

  CHECK(!satisfiable(parse_formula("~(([m]a P) | [m]a ~P)", kAM), kAM, 4, opts));
  CHECK(!satisfiable(parse_formula("P & ~P", kAB), kAB, 4, opts));
}

TEST_CASE("decide verdicts") {
  DecideOptions opts;
  CHECK(decide(parse_formula("true", kAB), kAB, opts).kind ==
        DecideResult::Kind::Valid);
  CHECK(decide(parse_formula("([m]a P) | [m]a ~P", kAM), kAM, opts).kind ==
        DecideResult::Kind::Valid);

  DecideOptions bounded;
  bounded.max_states = 4;
  auto t_gap = decide(parse_formula("([m]a P) -> P", kAM), kAM, bounded);
  REQUIRE(t_gap.kind == DecideResult::Kind::CounterModel);
  CHECK(validate_interface(t_gap.counter->model, {{atom("m"), "a"}}).ok());

  auto mono =
      decide(parse_formula("([m]a P) -> [(m, m2)]a P", AgentUniverse({"a", "m", "m2"})),
             AgentUniverse({"a", "m", "m2"}), bounded);
  CHECK(mono.kind == DecideResult::Kind::CounterModel);

  auto t_law = decide(parse_formula("a knows m -> (([m]a P) -> P)", kAM), kAM, bounded);
  CHECK(t_law.kind == DecideResult::Kind::ValidUpTo);
  CHECK(t_law.bound == 4);

  auto ka = decide(parse_formula("a knows m", kAM), kAM, opts);
  CHECK(ka.kind == DecideResult::Kind::CounterModel);

  DecideOptions strict;
  strict.ceiling = 4;
  // non-theorem past the ceiling: refused with guidance
  CHECK_THROWS(decide(parse_formula("(P -> Q) -> (Q -> P)", kAB), kAB, strict));
  // axiom instance past the ceiling: Valid via recognition, no scan
  auto nc = decide(parse_formula("([m]a P) | [m]a ~P", kAM), kAM, strict);
  CHECK(nc.kind == DecideResult::Kind::Valid);
  CHECK(nc.bound == 0);
}

TEST_CASE("compile_singleton normal forms") {
  AgentUniverse one({"a"});
  auto c = [&](const std::string& text) {
    return compile_singleton(parse_formula(text, one), one);
  };
  CHECK(c("[a]a ~P") == parse_formula("~([a]a P)", one));
  CHECK(c("[a]a (P & Q)") == parse_formula("([a]a P) & [a]a Q", one));
  CHECK(c("[a]a [a]a P") == parse_formula("[a]a P", one));
  CHECK(c("[a]a [(a, a)]a P") == parse_formula("[a]a [(a, a)]a P", one));
  CHECK_THROWS(compile_singleton(Formula::prop("P"), kAB));
}

TEST_CASE("decide agrees with its compilation oracle") {
  AgentUniverse one({"a"});
  DecideOptions opts;
  opts.max_states = 3;
  for (const std::string& text :
       {"[a]a ~(P & [a]a Q)", "([a]a P) | [a]a ~P", "[a]a P -> P", "~[a]a (P | ~P)"}) {
    Formula f = parse_formula(text, one);
    CAPTURE(text);
    CHECK(decide(f, one, opts).kind == decide_via_compilation(f, one, opts).kind);
  }
}

TEST_CASE("decide_consequence handles premises") {
  DecideOptions opts;
  opts.max_states = 4;
  // {P -> Q} |/- via models: premise globally true forces the conclusion
  Formula prem = parse_formula("P", kAB);
  Formula concl = parse_formula("[b]a P", kAB);
  // necessitation semantically: P globally true => [b]a P globally true
  auto r = decide_consequence({prem}, concl, kAB, opts);
  CHECK(r.kind != DecideResult::Kind::CounterModel);

  auto r2 = decide_consequence({parse_formula("P", kAB)}, parse_formula("Q", kAB),
                               kAB, opts);
  CHECK(r2.kind == DecideResult::Kind::CounterModel);
}
