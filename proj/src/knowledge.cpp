#include "ldiip/knowledge.hpp"

#include <vector>

namespace ldiip {

DataBase analyze(const std::string& agent, const DataBase& d, ClosureStrategy strategy) {
  DataBase out = d;
  out.insert(MessageTerm::atom(agent));
  if (strategy == ClosureStrategy::Identity) return out;

  std::vector<MessageTerm> work(out.begin(), out.end());
  auto add = [&](MessageTerm m) {
    if (out.insert(m).second) work.push_back(std::move(m));
  };
  while (!work.empty()) {
    MessageTerm m = work.back();
    work.pop_back();
    switch (m.kind()) {
      case MessageTerm::Kind::Atom:
        break;
      case MessageTerm::Kind::Pair:
        add(m.left());
        add(m.right());
        break;
      case MessageTerm::Kind::Sig:
        // universal signature analysis yields the pair; unpairing does the rest
        add(MessageTerm::pair(m.body(), MessageTerm::atom(m.agent())));
        break;
    }
  }
  return out;
}

namespace {

bool synthesizable(const std::string& agent, const DataBase& analyzed, const MessageTerm& m) {
  if (analyzed.count(m)) return true;
  switch (m.kind()) {
    case MessageTerm::Kind::Atom:
      return false;
    case MessageTerm::Kind::Pair:
      return synthesizable(agent, analyzed, m.left()) &&
             synthesizable(agent, analyzed, m.right());
    case MessageTerm::Kind::Sig:
      // personal signature synthesis only
      return m.agent() == agent && synthesizable(agent, analyzed, m.body());
  }
  return false;
}

}  // namespace

bool derivable(const std::string& agent, const DataBase& d, const MessageTerm& m,
               ClosureStrategy strategy) {
  if (strategy == ClosureStrategy::Identity)
    return d.count(m) || m == MessageTerm::atom(agent);
  return synthesizable(agent, analyze(agent, d, strategy), m);
}

std::set<MessageTerm> enumerate_terms(const std::set<std::string>& atoms, int size_bound) {
  // terms_by_size[k] holds all terms of node count exactly k
  std::vector<std::vector<MessageTerm>> by_size(static_cast<std::size_t>(size_bound) + 1);
  std::set<MessageTerm> all;
  if (size_bound < 1) return all;
  for (const auto& a : atoms) by_size[1].push_back(MessageTerm::atom(a));
  for (int k = 2; k <= size_bound; ++k) {
    for (const auto& body : by_size[k - 1])
      for (const auto& signer : atoms)
        by_size[k].push_back(MessageTerm::sig(body, signer));
    for (int l = 1; l <= k - 2; ++l)
      for (const auto& left : by_size[l])
        for (const auto& right : by_size[k - 1 - l])
          by_size[k].push_back(MessageTerm::pair(left, right));
  }
  for (const auto& level : by_size) all.insert(level.begin(), level.end());
  return all;
}

std::set<MessageTerm> closure_members(const std::string& agent, const DataBase& d,
                                      int size_bound, ClosureStrategy strategy) {
  if (size_bound < 1) throw std::invalid_argument("size_bound must be >= 1");
  std::set<std::string> atoms{agent};
  for (const auto& m : d) m.collect_agents(atoms);
  std::set<MessageTerm> out;
  for (const auto& m : enumerate_terms(atoms, size_bound))
    if (derivable(agent, d, m, strategy)) out.insert(m);
  return out;
}

}  // namespace ldiip
