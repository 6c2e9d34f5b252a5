#ifndef LDIIP_SYNTAX_HPP
#define LDIIP_SYNTAX_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ldiip {

// Finite universe of agent names. Names are [a-z][a-z0-9_]*.
class AgentUniverse {
 public:
  explicit AgentUniverse(std::vector<std::string> agents);
  static AgentUniverse parse(const std::string& comma_list);

  bool contains(const std::string& name) const;
  const std::string& first() const { return agents_.front(); }
  const std::vector<std::string>& agents() const { return agents_; }
  std::size_t size() const { return agents_.size(); }

 private:
  std::vector<std::string> agents_;  // sorted, unique, nonempty
};

// Immutable message term: agent atom, pair, or signature.
class MessageTerm {
 public:
  enum class Kind { Atom, Pair, Sig };

  static MessageTerm atom(std::string agent);
  static MessageTerm pair(MessageTerm left, MessageTerm right);
  static MessageTerm sig(MessageTerm body, std::string signer);

  Kind kind() const { return node_->kind; }
  const std::string& agent() const { return node_->agent; }  // Atom name / Sig signer
  const MessageTerm& left() const;
  const MessageTerm& right() const;
  const MessageTerm& body() const;

  int size() const { return node_->size; }  // node count
  int compare(const MessageTerm& other) const;
  bool operator==(const MessageTerm& o) const { return compare(o) == 0; }
  bool operator!=(const MessageTerm& o) const { return compare(o) != 0; }
  bool operator<(const MessageTerm& o) const { return compare(o) < 0; }

  // Immediate and transitive subterms, this term included.
  void collect_subterms(std::set<MessageTerm>& out) const;
  void collect_agents(std::set<std::string>& out) const;

 private:
  struct Node {
    Kind kind;
    std::string agent;
    std::shared_ptr<const Node> a, b;
    int size;
  };
  explicit MessageTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static MessageTerm wrap(Node n);
  std::shared_ptr<const Node> node_;
};

// Immutable formula over the two-connective core: ~, &, plus the atoms
// Prop and Knows and the proof modality [M]a.
class Formula {
 public:
  enum class Kind { Prop, Knows, Not, And, Proves };

  static Formula prop(std::string name);
  static Formula knows(std::string agent, MessageTerm msg);
  static Formula f_not(Formula f);
  static Formula f_and(Formula l, Formula r);
  static Formula proves(MessageTerm msg, std::string agent, Formula body);

  Kind kind() const { return node_->kind; }
  const std::string& prop_name() const { return node_->name; }
  const std::string& agent() const { return node_->name; }  // Knows/Proves checker
  const MessageTerm& msg() const { return *node_->msg; }
  const Formula& child() const;  // Not / Proves body
  const Formula& lhs() const;
  const Formula& rhs() const;

  int size() const { return node_->size; }
  int compare(const Formula& other) const;
  bool operator==(const Formula& o) const { return compare(o) == 0; }
  bool operator!=(const Formula& o) const { return compare(o) != 0; }
  bool operator<(const Formula& o) const { return compare(o) < 0; }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::optional<MessageTerm> msg;
    std::shared_ptr<const Node> a, b;
    int size;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula wrap(Node n);
  std::shared_ptr<const Node> node_;
};

// Surface-macro builders; every call expands to the core immediately.
Formula f_or(Formula l, Formula r);    // ~(~l & ~r)
Formula f_imp(Formula l, Formula r);   // ~l | r
Formula f_iff(Formula l, Formula r);   // (l->r) & (r->l)
Formula f_true(const std::string& agent);   // [a]a (a knows a)
Formula f_false(const std::string& agent);  // ~true@a

// If f is structurally f_imp(antecedent, X), returns X.
std::optional<Formula> destruct_imp(const Formula& f, const Formula& antecedent);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t column, const std::string& what);
  std::size_t column;  // 1-based
};

Formula parse_formula(const std::string& text, const AgentUniverse& universe);
MessageTerm parse_message(const std::string& text, const AgentUniverse& universe);

// Core-syntax printer; round-trips through parse_formula.
std::string render(const Formula& f);
std::string render(const MessageTerm& m);

std::set<Formula> subformula_closure(const Formula& f);

// Syntactic inventories used by the decision procedure.
std::set<std::pair<MessageTerm, std::string>> modal_signature(const Formula& f);
std::set<std::pair<std::string, MessageTerm>> knowledge_atoms(const Formula& f);
std::set<std::string> prop_names(const Formula& f);

// ---------------------------------------------------------------------------
// Schemas: formula skeletons over sorted metavariables, for axiom recognition.

struct AgentRef {
  bool is_var = false;
  std::string name;  // concrete agent name or metavariable name
  static AgentRef concrete(std::string n) { return {false, std::move(n)}; }
  static AgentRef var(std::string n) { return {true, std::move(n)}; }
};

class SchemaMsg {
 public:
  enum class Kind { Atom, Pair, Sig, Var };
  static SchemaMsg atom(AgentRef a);
  static SchemaMsg pair(SchemaMsg l, SchemaMsg r);
  static SchemaMsg sig(SchemaMsg body, AgentRef signer);
  static SchemaMsg var(std::string name);

  Kind kind() const { return node_->kind; }
  const AgentRef& agent() const { return node_->agent; }
  const std::string& var_name() const { return node_->agent.name; }
  const SchemaMsg& left() const { return *node_->a; }
  const SchemaMsg& right() const { return *node_->b; }
  const SchemaMsg& body() const { return *node_->a; }

 private:
  struct Node {
    Kind kind;
    AgentRef agent;
    std::shared_ptr<const SchemaMsg> a, b;
  };
  std::shared_ptr<const Node> node_;
};

class Schema {
 public:
  enum class Kind { Prop, Knows, Not, And, Proves, FVar };
  static Schema prop(std::string name);
  static Schema knows(AgentRef agent, SchemaMsg msg);
  static Schema s_not(Schema f);
  static Schema s_and(Schema l, Schema r);
  static Schema proves(SchemaMsg msg, AgentRef agent, Schema body);
  static Schema fvar(std::string name);

  // Macro combinators, expanded like the formula-level ones.
  static Schema s_or(Schema l, Schema r);
  static Schema s_imp(Schema l, Schema r);
  static Schema s_iff(Schema l, Schema r);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const AgentRef& agent() const { return node_->agent; }
  const SchemaMsg& msg() const { return *node_->msg; }
  const Schema& child() const { return *node_->a; }
  const Schema& lhs() const { return *node_->a; }
  const Schema& rhs() const { return *node_->b; }

 private:
  struct Node {
    Kind kind;
    std::string name;
    AgentRef agent;
    std::optional<SchemaMsg> msg;
    std::shared_ptr<const Schema> a, b;
  };
  std::shared_ptr<const Node> node_;
};

struct Substitution {
  std::map<std::string, Formula> formulas;
  std::map<std::string, MessageTerm> messages;
  std::map<std::string, std::string> agents;
};

// Deterministic leftmost-outermost first-order matching.
std::optional<Substitution> match_schema(const Schema& s, const Formula& f);
Formula instantiate(const Schema& s, const Substitution& theta);

// Schema grammar = formula grammar plus metavariables $name (sort inferred
// from position: formula, message, or agent slot).
Schema parse_schema(const std::string& text, const AgentUniverse& universe);

}  // namespace ldiip

#endif
