#ifndef LDIIP_CONCRETE_HPP
#define LDIIP_CONCRETE_HPP

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ldiip/knowledge.hpp"
#include "ldiip/syntax.hpp"

namespace ldiip {

// Inductive state space 0 | recv_a^M(s). Immutable, structurally compared.
class ConcreteState {
 public:
  static ConcreteState zero();
  static ConcreteState recv(std::string agent, MessageTerm msg, ConcreteState prev);

  bool is_zero() const { return node_ == nullptr; }
  const std::string& agent() const { return node_->agent; }
  const MessageTerm& msg() const { return node_->msg; }
  ConcreteState prev() const;
  int depth() const { return node_ ? node_->depth : 0; }

  int compare(const ConcreteState& o) const;
  bool operator==(const ConcreteState& o) const { return compare(o) == 0; }
  bool operator!=(const ConcreteState& o) const { return compare(o) != 0; }
  bool operator<(const ConcreteState& o) const { return compare(o) < 0; }

 private:
  struct Node {
    std::string agent;
    MessageTerm msg;
    std::shared_ptr<const Node> prev;
    int depth;
  };
  std::shared_ptr<const Node> node_;  // null = zero
};

// Raw-data extractor msgs_a.
DataBase msgs(const std::string& agent, const ConcreteState& s);

// Oracle step σ_a^M: stay put when M is already derivable, receive it otherwise.
ConcreteState step(const std::string& agent, const MessageTerm& m, const ConcreteState& s,
                   ClosureStrategy strategy = ClosureStrategy::Table1);

bool accessible(const std::string& agent, const MessageTerm& m, const ConcreteState& s,
                const ConcreteState& t, ClosureStrategy strategy = ClosureStrategy::Table1);

// Valuation of ordinary propositional atoms on concrete states; knowledge
// atoms are always derived and never assigned. Unassigned atoms are false.
struct ConcreteAssignment {
  std::map<std::string, std::function<bool(const ConcreteState&)>> preds;

  static ConcreteAssignment constant(const std::map<std::string, bool>& values);
  bool value(const std::string& prop, const ConcreteState& s) const;
};

bool eval_concrete(const Formula& f, const ConcreteState& s,
                   const ConcreteAssignment& assignment = {},
                   ClosureStrategy strategy = ClosureStrategy::Table1);

std::string render(const ConcreteState& s);
ConcreteState parse_concrete_state(const std::string& text, const AgentUniverse& universe);

// Exhaustive check of the four accessibility properties over all states up to
// depth_bound built from the given agents and message alphabet.
struct ConcreteInterfaceReport {
  long states_checked = 0;
  long checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ConcreteInterfaceReport check_concrete_interface(int depth_bound,
                                                 const AgentUniverse& universe,
                                                 const std::vector<MessageTerm>& alphabet,
                                                 ClosureStrategy strategy = ClosureStrategy::Table1);

}  // namespace ldiip

#endif
