#include "ldiip/decide.hpp"

#include <stdexcept>

#include "ldiip/proof.hpp"

namespace ldiip {

long long exhaustive_bound(const Formula& f) {
  std::size_t n = subformula_closure(Formula::f_not(f)).size();
  if (n >= 62) return (1LL << 62);
  return 1LL << n;
}

std::optional<CounterExample> satisfiable(const Formula& f, const AgentUniverse& universe,
                                          int max_states, const DecideOptions& opts) {
  EnumSpec spec = make_enum_spec(f, universe, max_states, opts.strategy);
  ModelEnumerator enumerator(spec);
  auto pred = [&](const FiniteModel& m) {
    for (int s = 0; s < m.num_states; ++s)
      if (eval(m, s, f)) return true;
    return false;
  };
  auto hit = enumerator.find_first(pred, opts.parallel);
  if (!hit) return std::nullopt;
  for (int s = 0; s < hit->num_states; ++s)
    if (eval(*hit, s, f)) return CounterExample{std::move(*hit), s};
  throw std::logic_error("satisfiable: witness lost");
}

namespace {

// Returns the state bound to search, or -1 when the exhaustive bound
// exceeds the configured ceiling and no explicit bound was supplied.
int resolve_bound(const Formula& nf, const DecideOptions& opts, bool& definitive) {
  std::size_t n = subformula_closure(nf).size();
  long long exhaustive = n >= 62 ? (1LL << 62) : (1LL << n);
  if (opts.max_states) {
    definitive = *opts.max_states >= exhaustive;
    return *opts.max_states;
  }
  if (exhaustive > opts.ceiling) return -1;
  definitive = true;
  return static_cast<int>(exhaustive);
}

[[noreturn]] void throw_ceiling(const Formula& nf, const DecideOptions& opts) {
  std::size_t n = subformula_closure(nf).size();
  long long exhaustive = n >= 62 ? (1LL << 62) : (1LL << n);
  throw std::runtime_error(
      "exhaustive bound " + std::to_string(exhaustive) + " exceeds ceiling " +
      std::to_string(opts.ceiling) + "; supply an explicit state bound");
}

void verify_counter(const CounterExample& ce, const Formula& nf) {
  auto report = validate_interface(ce.model, modal_signature(nf));
  if (!report.ok())
    throw std::logic_error("decide: counter-model fails the semantic interface");
  if (!eval(ce.model, ce.state, nf))
    throw std::logic_error("decide: counter-model does not satisfy the negation");
}

}  // namespace

DecideResult decide(const Formula& f, const AgentUniverse& universe,
                    const DecideOptions& opts) {
  Formula nf = Formula::f_not(f);
  bool definitive = false;
  int bound = resolve_bound(nf, opts, definitive);
  if (bound < 0) {
    // Sound shortcut before refusing: recognized axiom and tautology
    // instances are valid on every interface-valid model.
    static const AxiomCatalog kCoreCatalog;
    if (is_axiom(f, kCoreCatalog)) {
      DecideResult result;
      result.kind = DecideResult::Kind::Valid;
      result.bound = 0;
      return result;
    }
    throw_ceiling(nf, opts);
  }
  DecideResult result;
  result.bound = bound;
  if (auto ce = satisfiable(nf, universe, bound, opts)) {
    verify_counter(*ce, nf);
    result.kind = DecideResult::Kind::CounterModel;
    result.counter = std::move(ce);
    return result;
  }
  result.kind = definitive ? DecideResult::Kind::Valid : DecideResult::Kind::ValidUpTo;
  return result;
}

DecideResult decide_consequence(const std::vector<Formula>& premises, const Formula& f,
                                const AgentUniverse& universe, const DecideOptions& opts) {
  if (premises.empty()) return decide(f, universe, opts);
  Formula all = premises.front();
  for (std::size_t i = 1; i < premises.size(); ++i) all = Formula::f_and(all, premises[i]);
  Formula nf = Formula::f_not(f);
  Formula shape = Formula::f_and(all, nf);  // fixes signature, atoms, bases
  bool definitive = false;
  int bound = resolve_bound(shape, opts, definitive);
  if (bound < 0) {
    static const AxiomCatalog kCoreCatalog;
    if (is_axiom(f, kCoreCatalog)) {
      DecideResult result;
      result.kind = DecideResult::Kind::Valid;
      result.bound = 0;
      return result;
    }
    throw_ceiling(shape, opts);
  }

  EnumSpec spec = make_enum_spec(shape, universe, bound, opts.strategy);
  ModelEnumerator enumerator(spec);
  auto pred = [&](const FiniteModel& m) {
    for (const auto& p : premises)
      if (!global_truth(m, p)) return false;
    for (int s = 0; s < m.num_states; ++s)
      if (eval(m, s, nf)) return true;
    return false;
  };
  DecideResult result;
  result.bound = bound;
  if (auto hit = enumerator.find_first(pred, opts.parallel)) {
    for (int s = 0; s < hit->num_states; ++s)
      if (eval(*hit, s, nf)) {
        CounterExample ce{std::move(*hit), s};
        verify_counter(ce, nf);
        result.kind = DecideResult::Kind::CounterModel;
        result.counter = std::move(ce);
        return result;
      }
    throw std::logic_error("decide_consequence: witness lost");
  }
  result.kind = definitive ? DecideResult::Kind::Valid : DecideResult::Kind::ValidUpTo;
  return result;
}

namespace {

// [m]ag applied to an already-compiled body
Formula push_modality(const MessageTerm& m, const std::string& ag, const Formula& body) {
  switch (body.kind()) {
    case Formula::Kind::Not:
      return Formula::f_not(push_modality(m, ag, body.child()));
    case Formula::Kind::And:
      return Formula::f_and(push_modality(m, ag, body.lhs()),
                            push_modality(m, ag, body.rhs()));
    case Formula::Kind::Proves:
      if (body.msg() == m && body.agent() == ag) return body;  // idempotency
      return Formula::proves(m, ag, body);
    default:
      return Formula::proves(m, ag, body);
  }
}

Formula compile_rec(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Prop:
    case Formula::Kind::Knows:
      return f;
    case Formula::Kind::Not:
      return Formula::f_not(compile_rec(f.child()));
    case Formula::Kind::And:
      return Formula::f_and(compile_rec(f.lhs()), compile_rec(f.rhs()));
    case Formula::Kind::Proves:
      return push_modality(f.msg(), f.agent(), compile_rec(f.child()));
  }
  return f;
}

}  // namespace

Formula compile_singleton(const Formula& f, const AgentUniverse& universe) {
  if (universe.size() != 1)
    throw std::invalid_argument("modality compilation requires a single-agent universe");
  return compile_rec(f);
}

DecideResult decide_via_compilation(const Formula& f, const AgentUniverse& universe,
                                    const DecideOptions& opts) {
  return decide(compile_singleton(f, universe), universe, opts);
}

}  // namespace ldiip
