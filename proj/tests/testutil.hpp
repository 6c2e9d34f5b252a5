#ifndef LDIIP_TESTUTIL_HPP
#define LDIIP_TESTUTIL_HPP

#include <random>
#include <vector>

#include "ldiip/model.hpp"

namespace ldiip::testutil {

using Rng = std::mt19937;

inline int pick(Rng& rng, int n) {
  return std::uniform_int_distribution<int>(0, n - 1)(rng);
}

inline bool coin(Rng& rng) { return pick(rng, 2) == 0; }

// Random message term over the given atom names; depth bounds the tree height.
inline MessageTerm random_message(Rng& rng, const std::vector<std::string>& atoms,
                                  int depth) {
  if (depth <= 0 || pick(rng, 3) == 0)
    return MessageTerm::atom(atoms[pick(rng, static_cast<int>(atoms.size()))]);
  if (coin(rng))
    return MessageTerm::pair(random_message(rng, atoms, depth - 1),
                             random_message(rng, atoms, depth - 1));
  return MessageTerm::sig(random_message(rng, atoms, depth - 1),
                          atoms[pick(rng, static_cast<int>(atoms.size()))]);
}

struct FormulaVocab {
  std::vector<std::string> agents;
  std::vector<std::string> props;
  std::vector<MessageTerm> messages;
};

// Random core formula of the given connective depth.
inline Formula random_formula(Rng& rng, const FormulaVocab& v, int depth) {
  int atom_kinds = v.props.empty() ? 1 : 2;
  if (depth <= 0) {
    if (!v.props.empty() && pick(rng, atom_kinds) == 0)
      return Formula::prop(v.props[pick(rng, static_cast<int>(v.props.size()))]);
    return Formula::knows(v.agents[pick(rng, static_cast<int>(v.agents.size()))],
                          v.messages[pick(rng, static_cast<int>(v.messages.size()))]);
  }
  switch (pick(rng, 4)) {
    case 0:
      return Formula::f_not(random_formula(rng, v, depth - 1));
    case 1:
      return Formula::f_and(random_formula(rng, v, depth - 1),
                            random_formula(rng, v, depth - 1));
    case 2:
      return Formula::proves(v.messages[pick(rng, static_cast<int>(v.messages.size()))],
                             v.agents[pick(rng, static_cast<int>(v.agents.size()))],
                             random_formula(rng, v, depth - 1));
    default:
      return random_formula(rng, v, 0);
  }
}

// Random interface-valid model: random bases (repaired so every signature
// message is known somewhere), transitions forced by conditional reflexivity
// and drawn from knowing states elsewhere, random prop valuation. This is an
// independent construction path from ModelEnumerator.
inline FiniteModel random_valid_model(Rng& rng, int num_states,
                                      const std::vector<std::string>& agents,
                                      const std::vector<MessageTerm>& msg_universe,
                                      const std::vector<std::string>& props,
                                      const std::set<ModalKey>& signature,
                                      ClosureStrategy strategy = ClosureStrategy::Table1) {
  FiniteModel m;
  m.num_states = num_states;
  m.strategy = strategy;
  m.default_names();
  for (const auto& ag : agents) {
    auto& per_state = m.bases[ag];
    per_state.resize(num_states);
    for (int s = 0; s < num_states; ++s)
      for (const auto& msg : msg_universe)
        if (coin(rng)) per_state[s].insert(msg);
  }
  // Seriality needs a knowing state as transition target for every
  // signature key; plant the message in one random base when absent.
  for (const auto& [msg, ag] : signature) {
    bool known = false;
    for (int s = 0; s < num_states && !known; ++s) known = m.knows_at(ag, s, msg);
    if (!known) m.bases[ag][pick(rng, num_states)].insert(msg);
  }
  for (const auto& key : signature) {
    const auto& [msg, ag] = key;
    std::vector<int> knowing;
    for (int s = 0; s < num_states; ++s)
      if (m.knows_at(ag, s, msg)) knowing.push_back(s);
    auto& rel = m.trans[key];
    rel.resize(num_states);
    for (int s = 0; s < num_states; ++s) {
      if (m.knows_at(ag, s, msg))
        rel[s] = {s};  // conditional reflexivity
      else
        rel[s] = {knowing[pick(rng, static_cast<int>(knowing.size()))]};
    }
  }
  for (const auto& p : props) {
    auto& val = m.prop_val[p];
    val.resize(num_states);
    for (int s = 0; s < num_states; ++s) val[s] = coin(rng);
  }
  return m;
}

}  // namespace ldiip::testutil

#endif
