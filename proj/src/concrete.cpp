#include "ldiip/concrete.hpp"

namespace ldiip {

ConcreteState ConcreteState::zero() { return ConcreteState{}; }

ConcreteState ConcreteState::recv(std::string agent, MessageTerm msg, ConcreteState prev) {
  ConcreteState s;
  s.node_ = std::make_shared<const Node>(
      Node{std::move(agent), std::move(msg), prev.node_, prev.depth() + 1});
  return s;
}

ConcreteState ConcreteState::prev() const {
  ConcreteState s;
  s.node_ = node_->prev;
  return s;
}

int ConcreteState::compare(const ConcreteState& o) const {
  if (node_ == o.node_) return 0;
  if (!node_) return -1;
  if (!o.node_) return 1;
  if (int c = node_->agent.compare(o.node_->agent)) return c;
  if (int c = node_->msg.compare(o.node_->msg)) return c;
  return prev().compare(o.prev());
}

DataBase msgs(const std::string& agent, const ConcreteState& s) {
  DataBase out;
  for (ConcreteState cur = s; !cur.is_zero(); cur = cur.prev())
    if (cur.agent() == agent) out.insert(cur.msg());
  return out;
}

ConcreteState step(const std::string& agent, const MessageTerm& m, const ConcreteState& s,
                   ClosureStrategy strategy) {
  if (derivable(agent, msgs(agent, s), m, strategy)) return s;
  return ConcreteState::recv(agent, m, s);
}

bool accessible(const std::string& agent, const MessageTerm& m, const ConcreteState& s,
                const ConcreteState& t, ClosureStrategy strategy) {
  return t == step(agent, m, s, strategy);
}

ConcreteAssignment ConcreteAssignment::constant(const std::map<std::string, bool>& values) {
  ConcreteAssignment a;
  for (const auto& [name, v] : values)
    a.preds[name] = [v](const ConcreteState&) { return v; };
  return a;
}

bool ConcreteAssignment::value(const std::string& prop, const ConcreteState& s) const {
  auto it = preds.find(prop);
  return it != preds.end() && it->second(s);
}

bool eval_concrete(const Formula& f, const ConcreteState& s,
                   const ConcreteAssignment& assignment, ClosureStrategy strategy) {
  switch (f.kind()) {
    case Formula::Kind::Prop:
      return assignment.value(f.prop_name(), s);
    case Formula::Kind::Knows:
      return derivable(f.agent(), msgs(f.agent(), s), f.msg(), strategy);
    case Formula::Kind::Not:
      return !eval_concrete(f.child(), s, assignment, strategy);
    case Formula::Kind::And:
      return eval_concrete(f.lhs(), s, assignment, strategy) &&
             eval_concrete(f.rhs(), s, assignment, strategy);
    case Formula::Kind::Proves:
      // accessibility is functional and total; the unique successor is σ(s)
      return eval_concrete(f.child(), step(f.agent(), f.msg(), s, strategy), assignment,
                           strategy);
  }
  return false;
}

std::string render(const ConcreteState& s) {
  if (s.is_zero()) return "0";
  return "recv(" + s.agent() + ", " + render(s.msg()) + ", " + render(s.prev()) + ")";
}

namespace {

// Grammar: state := '0' | 'recv' '(' agent ',' msg ',' state ')'
ConcreteState parse_state_at(const std::string& text, std::size_t& pos,
                             const AgentUniverse& universe);

void skip_ws(const std::string& text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) pos++;
}

void expect_char(const std::string& text, std::size_t& pos, char c) {
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != c)
    throw ParseError(pos + 1, std::string("expected '") + c + "'");
  pos++;
}

std::string read_ident(const std::string& text, std::size_t& pos) {
  skip_ws(text, pos);
  std::size_t start = pos;
  while (pos < text.size() &&
         (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
    pos++;
  if (pos == start) throw ParseError(start + 1, "expected identifier");
  return text.substr(start, pos - start);
}

// Balanced-scan for the message slot; messages may themselves contain commas
// inside parentheses, so reuse the main message parser on the spanned text.
MessageTerm parse_msg_slot(const std::string& text, std::size_t& pos,
                           const AgentUniverse& universe) {
  skip_ws(text, pos);
  std::size_t start = pos;
  int depth = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (c == '(') depth++;
    else if (c == ')') {
      if (depth == 0) break;
      depth--;
    } else if (c == ',' && depth == 0) break;
    pos++;
  }
  return parse_message(text.substr(start, pos - start), universe);
}

ConcreteState parse_state_at(const std::string& text, std::size_t& pos,
                             const AgentUniverse& universe) {
  skip_ws(text, pos);
  if (pos < text.size() && text[pos] == '0') {
    pos++;
    return ConcreteState::zero();
  }
  std::string kw = read_ident(text, pos);
  if (kw != "recv") throw ParseError(pos + 1, "expected '0' or 'recv'");
  expect_char(text, pos, '(');
  std::string agent = read_ident(text, pos);
  if (!universe.contains(agent)) throw ParseError(pos + 1, "unknown agent '" + agent + "'");
  expect_char(text, pos, ',');
  MessageTerm m = parse_msg_slot(text, pos, universe);
  expect_char(text, pos, ',');
  ConcreteState prev = parse_state_at(text, pos, universe);
  expect_char(text, pos, ')');
  return ConcreteState::recv(std::move(agent), std::move(m), std::move(prev));
}

}  // namespace

ConcreteState parse_concrete_state(const std::string& text, const AgentUniverse& universe) {
  std::size_t pos = 0;
  ConcreteState s = parse_state_at(text, pos, universe);
  skip_ws(text, pos);
  if (pos != text.size()) throw ParseError(pos + 1, "trailing input");
  return s;
}

ConcreteInterfaceReport check_concrete_interface(int depth_bound,
                                                 const AgentUniverse& universe,
                                                 const std::vector<MessageTerm>& alphabet,
                                                 ClosureStrategy strategy) {
  ConcreteInterfaceReport report;
  std::vector<ConcreteState> frontier{ConcreteState::zero()};
  std::vector<ConcreteState> all = frontier;
  for (int d = 0; d < depth_bound; ++d) {
    std::vector<ConcreteState> next;
    for (const auto& s : frontier)
      for (const auto& a : universe.agents())
        for (const auto& m : alphabet)
          next.push_back(ConcreteState::recv(a, m, s));
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  report.states_checked = static_cast<long>(all.size());

  for (const auto& s : all) {
    for (const auto& a : universe.agents()) {
      for (const auto& m : alphabet) {
        report.checks++;
        ConcreteState succ = step(a, m, s, strategy);
        ConcreteState succ2 = step(a, m, s, strategy);
        auto note = [&](const std::string& property) {
          report.violations.push_back(property + " violated at agent " + a + ", message " +
                                      render(m) + ", state " + render(s));
        };
        // seriality/totality: the successor exists and is accessible
        if (!accessible(a, m, s, succ, strategy)) note("seriality/totality");
        // determinism/functionality: σ is a function of its arguments
        if (succ != succ2) note("determinism/functionality");
        // conditional reflexivity
        if (derivable(a, msgs(a, s), m, strategy) && succ != s) note("conditional reflexivity");
        // epistemic image
        if (!derivable(a, msgs(a, succ), m, strategy)) note("epistemic image");
      }
    }
  }
  return report;
}

}  // namespace ldiip
