#ifndef LDIIP_KNOWLEDGE_HPP
#define LDIIP_KNOWLEDGE_HPP

#include <set>
#include <string>

#include "ldiip/syntax.hpp"

namespace ldiip {

using DataBase = std::set<MessageTerm>;

// Which data-mining closure backs the knowledge valuation. Table1 is the
// pairing/unpairing/signature closure; Identity does no mining at all
// (membership in {a} ∪ D only).
enum class ClosureStrategy { Table1, Identity };

// Analysis fixpoint: d ∪ {a} closed under unpairing and signature analysis
// (sig(M,b) contributes the pair (M,b)).
DataBase analyze(const std::string& agent, const DataBase& d,
                 ClosureStrategy strategy = ClosureStrategy::Table1);

// Decides m ∈ cl_a(d): top-down synthesis (pairing, own-signature) over the
// analyzed base.
bool derivable(const std::string& agent, const DataBase& d, const MessageTerm& m,
               ClosureStrategy strategy = ClosureStrategy::Table1);

// Exhaustive-enumeration oracle for derivable: all closure members of node
// count <= size_bound, over the atoms of d plus the agent itself.
std::set<MessageTerm> closure_members(const std::string& agent, const DataBase& d,
                                      int size_bound,
                                      ClosureStrategy strategy = ClosureStrategy::Table1);

// All message terms of node count <= size_bound over the given atom names
// (signers drawn from the same set).
std::set<MessageTerm> enumerate_terms(const std::set<std::string>& atoms, int size_bound);

}  // namespace ldiip

#endif
