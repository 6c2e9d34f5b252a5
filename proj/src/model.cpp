#include "ldiip/model.hpp"

#include <algorithm>
#include <sstream>

namespace ldiip {

const DataBase& FiniteModel::base(const std::string& agent, int s) const {
  static const DataBase empty;
  auto it = bases.find(agent);
  if (it == bases.end()) return empty;
  return it->second.at(static_cast<std::size_t>(s));
}

bool FiniteModel::knows_at(const std::string& agent, int s, const MessageTerm& m) const {
  return derivable(agent, base(agent, s), m, strategy);
}

int FiniteModel::state_index(const std::string& name) const {
  for (std::size_t i = 0; i < state_names.size(); ++i)
    if (state_names[i] == name) return static_cast<int>(i);
  return -1;
}

void FiniteModel::default_names() {
  state_names.clear();
  for (int i = 0; i < num_states; ++i) state_names.push_back("s" + std::to_string(i));
}

bool eval(const FiniteModel& m, int s, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Prop: {
      auto it = m.prop_val.find(f.prop_name());
      if (it == m.prop_val.end())
        throw EvalError("no valuation entry for atom " + f.prop_name());
      return it->second.at(static_cast<std::size_t>(s));
    }
    case Formula::Kind::Knows:
      return m.knows_at(f.agent(), s, f.msg());
    case Formula::Kind::Not:
      return !eval(m, s, f.child());
    case Formula::Kind::And:
      return eval(m, s, f.lhs()) && eval(m, s, f.rhs());
    case Formula::Kind::Proves: {
      auto it = m.trans.find({f.msg(), f.agent()});
      if (it == m.trans.end())
        throw EvalError("no transition entry for [" + render(f.msg()) + "]" + f.agent());
      for (int t : it->second.at(static_cast<std::size_t>(s)))
        if (!eval(m, t, f.child())) return false;
      return true;
    }
  }
  return false;
}

bool global_truth(const FiniteModel& m, const Formula& f) {
  for (int s = 0; s < m.num_states; ++s)
    if (!eval(m, s, f)) return false;
  return true;
}

InterfaceReport validate_interface(const FiniteModel& m,
                                   const std::set<ModalKey>& signature) {
  InterfaceReport report;
  auto name = [&](int s) {
    return s < static_cast<int>(m.state_names.size()) ? m.state_names[s]
                                                      : "s" + std::to_string(s);
  };
  for (const auto& key : signature) {
    const auto& [msg, agent] = key;
    auto it = m.trans.find(key);
    std::string label = "[" + render(msg) + "]" + agent;
    if (it == m.trans.end()) {
      report.violations.push_back("seriality/totality: no relation for " + label);
      continue;
    }
    for (int s = 0; s < m.num_states; ++s) {
      report.checks++;
      const auto& succ = it->second.at(static_cast<std::size_t>(s));
      if (succ.empty())
        report.violations.push_back("seriality/totality: " + label + " has no successor of " +
                                    name(s));
      if (succ.size() > 1)
        report.violations.push_back("determinism/functionality: " + label + " has " +
                                    std::to_string(succ.size()) + " successors of " + name(s));
      if (m.knows_at(agent, s, msg) &&
          std::find(succ.begin(), succ.end(), s) == succ.end())
        report.violations.push_back("conditional reflexivity: " + label +
                                    " does not loop at " + name(s));
      for (int t : succ)
        if (!m.knows_at(agent, t, msg))
          report.violations.push_back("epistemic image: " + render(msg) +
                                      " not derivable by " + agent + " at " + name(t) +
                                      ", successor of " + name(s));
    }
  }
  return report;
}

Filtration filtrate(const FiniteModel& m, const Formula& f) {
  auto signature = modal_signature(f);
  std::vector<Formula> gamma;
  for (const auto& g : subformula_closure(f)) gamma.push_back(g);
  for (const auto& [msg, agent] : signature)
    gamma.push_back(Formula::knows(agent, msg));

  // class = first state exhibiting a given truth vector over gamma
  std::vector<int> state_map(static_cast<std::size_t>(m.num_states), -1);
  std::vector<int> reps;
  std::map<std::vector<bool>, int> seen;
  for (int s = 0; s < m.num_states; ++s) {
    std::vector<bool> profile;
    for (const auto& g : gamma) profile.push_back(eval(m, s, g));
    auto [it, fresh] = seen.emplace(std::move(profile), static_cast<int>(reps.size()));
    if (fresh) reps.push_back(s);
    state_map[static_cast<std::size_t>(s)] = it->second;
  }

  Filtration out;
  out.state_map = state_map;
  FiniteModel& q = out.model;
  q.num_states = static_cast<int>(reps.size());
  q.strategy = m.strategy;
  q.default_names();

  for (const auto& [agent, per_state] : m.bases) {
    auto& v = q.bases[agent];
    for (int rep : reps) v.push_back(per_state.at(static_cast<std::size_t>(rep)));
  }
  for (const auto& [prop, per_state] : m.prop_val) {
    std::vector<bool> v(reps.size(), false);
    for (int s = 0; s < m.num_states; ++s)
      if (per_state.at(static_cast<std::size_t>(s)))
        v[static_cast<std::size_t>(state_map[static_cast<std::size_t>(s)])] = true;
    q.prop_val[prop] = std::move(v);
  }
  for (const auto& [key, rel] : m.trans) {
    std::vector<std::vector<int>> qrel(reps.size());
    if (signature.count({key.first, key.second})) {
      // functional quotient through the class representative
      for (std::size_t c = 0; c < reps.size(); ++c) {
        const auto& succ = rel.at(static_cast<std::size_t>(reps[c]));
        if (succ.size() != 1)
          throw EvalError("filtrate: input not interface-valid for [" +
                          render(key.first) + "]" + key.second);
        qrel[c] = {state_map[static_cast<std::size_t>(succ[0])]};
      }
    } else {
      for (int s = 0; s < m.num_states; ++s)
        for (int t : rel.at(static_cast<std::size_t>(s))) {
          auto& v = qrel[static_cast<std::size_t>(state_map[static_cast<std::size_t>(s)])];
          int ct = state_map[static_cast<std::size_t>(t)];
          if (std::find(v.begin(), v.end(), ct) == v.end()) v.push_back(ct);
        }
      for (auto& v : qrel) std::sort(v.begin(), v.end());
    }
    q.trans[key] = std::move(qrel);
  }
  return out;
}

std::string write_model(const FiniteModel& m) {
  std::ostringstream out;
  out << "STATES\n";
  for (int s = 0; s < m.num_states; ++s) {
    if (s) out << ' ';
    out << (s < static_cast<int>(m.state_names.size()) ? m.state_names[s]
                                                       : "s" + std::to_string(s));
  }
  out << "\nTRANS\n";
  auto name = [&](int s) {
    return s < static_cast<int>(m.state_names.size()) ? m.state_names[s]
                                                      : "s" + std::to_string(s);
  };
  for (const auto& [key, rel] : m.trans)
    for (int s = 0; s < m.num_states; ++s) {
      auto succ = rel.at(static_cast<std::size_t>(s));
      std::sort(succ.begin(), succ.end());
      succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
      for (int t : succ)
        out << render(key.first) << ' ' << key.second << " : " << name(s) << " -> "
            << name(t) << '\n';
    }
  out << "BASES\n";
  for (const auto& [agent, per_state] : m.bases)
    for (int s = 0; s < m.num_states; ++s) {
      out << agent << " @ " << name(s) << " :";
      bool first = true;
      for (const auto& msg : per_state.at(static_cast<std::size_t>(s))) {
        out << (first ? " " : ", ") << render(msg);
        first = false;
      }
      out << '\n';
    }
  out << "VAL\n";
  for (const auto& [prop, per_state] : m.prop_val) {
    out << prop << " :";
    for (int s = 0; s < m.num_states; ++s)
      if (per_state.at(static_cast<std::size_t>(s))) out << ' ' << name(s);
    out << '\n';
  }
  return out.str();
}

namespace {

class ModelError : public std::runtime_error {
 public:
  ModelError(int line, const std::string& what)
      : std::runtime_error("model line " + std::to_string(line) + ": " + what) {}
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

// split on commas at parenthesis depth 0
std::vector<std::string> split_top_commas(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') depth++;
    if (c == ')') depth--;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

}  // namespace

FiniteModel parse_model(const std::string& text, const AgentUniverse& universe,
                        ClosureStrategy strategy) {
  FiniteModel m;
  m.strategy = strategy;
  enum Section { None, States, Trans, Bases, Val } section = None;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  auto state_of = [&](const std::string& n) {
    int s = m.state_index(n);
    if (s < 0) throw ModelError(lineno, "unknown state " + n);
    return s;
  };
  while (std::getline(in, raw)) {
    lineno++;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line == "STATES") { section = States; continue; }
    if (line == "TRANS") { section = Trans; continue; }
    if (line == "BASES") { section = Bases; continue; }
    if (line == "VAL") { section = Val; continue; }
    switch (section) {
      case None:
        throw ModelError(lineno, "content before STATES section");
      case States: {
        for (const auto& n : split_ws(line)) {
          if (m.state_index(n) >= 0) throw ModelError(lineno, "duplicate state " + n);
          m.state_names.push_back(n);
        }
        m.num_states = static_cast<int>(m.state_names.size());
        break;
      }
      case Trans: {
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ModelError(lineno, "expected ':'");
        std::string head = trim(line.substr(0, colon));
        std::string tail = trim(line.substr(colon + 1));
        auto sp = head.find_last_of(" \t");
        if (sp == std::string::npos) throw ModelError(lineno, "expected '<msg> <agent> :'");
        std::string agent = trim(head.substr(sp + 1));
        if (!universe.contains(agent)) throw ModelError(lineno, "unknown agent " + agent);
        MessageTerm msg = parse_message(trim(head.substr(0, sp)), universe);
        auto arrow = tail.find("->");
        if (arrow == std::string::npos) throw ModelError(lineno, "expected '->'");
        int s = state_of(trim(tail.substr(0, arrow)));
        int t = state_of(trim(tail.substr(arrow + 2)));
        auto& rel = m.trans[{msg, agent}];
        rel.resize(static_cast<std::size_t>(m.num_states));
        auto& succ = rel[static_cast<std::size_t>(s)];
        if (std::find(succ.begin(), succ.end(), t) == succ.end()) succ.push_back(t);
        break;
      }
      case Bases: {
        auto at = line.find('@');
        auto colon = line.find(':', at == std::string::npos ? 0 : at);
        if (at == std::string::npos || colon == std::string::npos)
          throw ModelError(lineno, "expected '<agent> @ <state> : <msgs>'");
        std::string agent = trim(line.substr(0, at));
        if (!universe.contains(agent)) throw ModelError(lineno, "unknown agent " + agent);
        int s = state_of(trim(line.substr(at + 1, colon - at - 1)));
        auto& per_state = m.bases[agent];
        per_state.resize(static_cast<std::size_t>(m.num_states));
        for (const auto& part : split_top_commas(line.substr(colon + 1)))
          per_state[static_cast<std::size_t>(s)].insert(parse_message(part, universe));
        break;
      }
      case Val: {
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ModelError(lineno, "expected ':'");
        std::string prop = trim(line.substr(0, colon));
        auto& per_state = m.prop_val[prop];
        per_state.assign(static_cast<std::size_t>(m.num_states), false);
        for (const auto& n : split_ws(line.substr(colon + 1)))
          per_state[static_cast<std::size_t>(state_of(n))] = true;
        break;
      }
    }
  }
  if (m.num_states == 0) throw ModelError(lineno, "no states declared");
  for (auto& [key, rel] : m.trans) {
    rel.resize(static_cast<std::size_t>(m.num_states));
    for (auto& succ : rel) std::sort(succ.begin(), succ.end());
  }
  for (auto& [agent, per_state] : m.bases)
    per_state.resize(static_cast<std::size_t>(m.num_states));
  return m;
}

}  // namespace ldiip
