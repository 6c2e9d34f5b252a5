#ifndef LDIIP_ENUMERATE_HPP
#define LDIIP_ENUMERATE_HPP

#include <functional>
#include <optional>

#include "ldiip/model.hpp"

namespace ldiip {

// What the bounded model search ranges over, extracted from a goal formula:
// per-state knowledge bases are subsets of msg_universe (deduplicated by the
// knowledge valuation they induce on the watched messages), transitions cover
// the modal signature, valuations cover the props.
struct EnumSpec {
  std::vector<std::string> agents;
  std::set<ModalKey> signature;
  std::map<std::string, std::vector<MessageTerm>> watched;  // observable knowledge atoms
  std::vector<std::string> props;
  std::vector<MessageTerm> msg_universe;
  ClosureStrategy strategy = ClosureStrategy::Table1;
  int max_states = 1;
};

EnumSpec make_enum_spec(const Formula& f, const AgentUniverse& universe, int max_states,
                        ClosureStrategy strategy = ClosureStrategy::Table1);

// Streams every interface-valid model up to max_states states, smallest
// first, in a fixed deterministic order. Models are built constructively:
// bases first, then the transitions they admit (conditional reflexivity and
// epistemic image force or restrict every slot), then prop valuations.
class ModelEnumerator {
 public:
  explicit ModelEnumerator(EnumSpec spec);

  // visit returns false to stop early
  void for_each(const std::function<bool(const FiniteModel&)>& visit) const;

  // First model (in for_each order) satisfying pred; the parallel variant
  // splits the base-assignment space across OpenMP threads and still returns
  // the order-minimal witness.
  std::optional<FiniteModel> find_first(const std::function<bool(const FiniteModel&)>& pred,
                                        bool parallel = false) const;

  // Number of models streamed, computed arithmetically (no construction).
  long long count_models() const;

 private:
  struct BaseClass {
    DataBase base;
    std::vector<bool> knows_watched;
  };

  long long assignments_for(int n) const;
  void decode_assignment(int n, long long index, std::vector<int>& digits) const;
  // enumerate all models of one base assignment; returns false if stopped
  bool walk_assignment(int n, const std::vector<int>& digits,
                       const std::function<bool(const FiniteModel&)>& visit) const;
  long long models_in_assignment(int n, const std::vector<int>& digits) const;

  EnumSpec spec_;
  std::map<std::string, std::vector<BaseClass>> classes_;  // per agent, deterministic order
};

}  // namespace ldiip

#endif
