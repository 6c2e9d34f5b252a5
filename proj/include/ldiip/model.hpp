#ifndef LDIIP_MODEL_HPP
#define LDIIP_MODEL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ldiip/knowledge.hpp"
#include "ldiip/syntax.hpp"

namespace ldiip {

using ModalKey = std::pair<MessageTerm, std::string>;

// Finite Kripke model. Knowledge atoms are never stored: the valuation of
// "a knows m" at state s is always derivable(a, bases[a][s], m).
struct FiniteModel {
  int num_states = 0;
  std::vector<std::string> state_names;                 // defaults to s0, s1, ...
  std::map<ModalKey, std::vector<std::vector<int>>> trans;  // per-state successor lists
  std::map<std::string, std::vector<DataBase>> bases;   // agent -> per-state base
  std::map<std::string, std::vector<bool>> prop_val;    // prop -> per-state truth
  ClosureStrategy strategy = ClosureStrategy::Table1;

  const DataBase& base(const std::string& agent, int s) const;
  bool knows_at(const std::string& agent, int s, const MessageTerm& m) const;
  int state_index(const std::string& name) const;  // -1 if unknown
  void default_names();
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool eval(const FiniteModel& m, int s, const Formula& f);
bool global_truth(const FiniteModel& m, const Formula& f);

struct InterfaceReport {
  long checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the four accessibility properties for every (message, agent) pair
// in the signature, at every state.
InterfaceReport validate_interface(const FiniteModel& m,
                                   const std::set<ModalKey>& signature);

struct Filtration {
  FiniteModel model;
  std::vector<int> state_map;  // original state -> class index
};

// Quotient by agreement on the subformula closure of f, augmented with the
// knowledge atom of every modality message in f (the augmentation keeps the
// quotient functional and preserves the epistemic-image property). Truth of
// every subformula of f is preserved at the class of each state.
Filtration filtrate(const FiniteModel& m, const Formula& f);

// Structured-text serialization; write_model output is canonical and
// round-trips bit-exactly through parse_model.
std::string write_model(const FiniteModel& m);
FiniteModel parse_model(const std::string& text, const AgentUniverse& universe,
                        ClosureStrategy strategy = ClosureStrategy::Table1);

}  // namespace ldiip

#endif
