#ifndef LDIIP_DECIDE_HPP
#define LDIIP_DECIDE_HPP

#include <optional>

#include "ldiip/enumerate.hpp"

namespace ldiip {

struct DecideOptions {
  std::optional<int> max_states;  // sub-exhaustive bound when supplied
  int ceiling = 16;               // largest exhaustive bound decide will attempt
  ClosureStrategy strategy = ClosureStrategy::Table1;
  bool parallel = false;
};

struct CounterExample {
  FiniteModel model;
  int state = 0;
};

struct DecideResult {
  enum class Kind { Valid, ValidUpTo, CounterModel };
  Kind kind = Kind::Valid;
  int bound = 0;  // number of states searched up to
  std::optional<CounterExample> counter;
};

// Exhaustive bound for definitive verdicts: 2^|subformula closure of ~f|.
long long exhaustive_bound(const Formula& f);

// First enumerated model/state satisfying f, up to max_states states.
std::optional<CounterExample> satisfiable(const Formula& f, const AgentUniverse& universe,
                                          int max_states,
                                          const DecideOptions& opts = {});

// Searches for a model of ~f. Without max_states the exhaustive bound is
// used and the verdict is definitive (Valid / CounterModel); a smaller
// explicit bound downgrades "no counter-model" to ValidUpTo. Counter-models
// are re-verified (interface + evaluation) before being returned.
DecideResult decide(const Formula& f, const AgentUniverse& universe,
                    const DecideOptions& opts = {});

// Global consequence: no model makes every premise globally true while
// falsifying f somewhere.
DecideResult decide_consequence(const std::vector<Formula>& premises, const Formula& f,
                                const AgentUniverse& universe,
                                const DecideOptions& opts = {});

// Single-agent normal form: modalities distribute through ~ and &, nested
// same-message modalities collapse; every remaining modality directly
// dominates an atom or a distinct-message modality chain over an atom.
Formula compile_singleton(const Formula& f, const AgentUniverse& universe);

// Independent oracle: decide on the compiled normal form.
DecideResult decide_via_compilation(const Formula& f, const AgentUniverse& universe,
                                    const DecideOptions& opts = {});

}  // namespace ldiip

#endif
