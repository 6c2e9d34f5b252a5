#ifndef LDIIP_PROOF_HPP
#define LDIIP_PROOF_HPP

#include <optional>
#include <string>
#include <vector>

#include "ldiip/syntax.hpp"

namespace ldiip {

// True iff the propositional skeleton of f is a truth-table tautology.
// Maximal non-propositional subformulas (props, knowledge atoms, modal
// formulas) are abstracted to letters; identical subformulas share a letter.
bool is_tautology_instance(const Formula& f);

struct NamedSchema {
  std::string name;
  Schema schema;
};

// The five core axiom schemas plus any configured knowledge-atom schemas.
class AxiomCatalog {
 public:
  AxiomCatalog();
  void add_gamma1(std::string name, Schema schema);

  const std::vector<NamedSchema>& core() const { return core_; }
  const std::vector<NamedSchema>& gamma1() const { return gamma1_; }
  std::optional<std::string> find_core(const Formula& f) const;
  std::optional<std::string> find_gamma1(const Formula& f) const;

 private:
  std::vector<NamedSchema> core_;
  std::vector<NamedSchema> gamma1_;
};

// First matching core schema name, then gamma1 name, then "Taut" for
// tautology instances; nullopt otherwise.
std::optional<std::string> is_axiom(const Formula& f, const AxiomCatalog& catalog);

struct Justification {
  enum class Kind { Taut, Axiom, Gamma1, Premise, MP, Nec };
  Kind kind = Kind::Taut;
  std::string name;                // Axiom / Gamma1
  int i = -1;                      // Premise: premise index; MP: antecedent line; Nec: source line
  int j = -1;                      // MP: implication line
  std::optional<MessageTerm> msg;  // Nec
  std::string agent;               // Nec
};

struct DerivationLine {
  Formula formula;
  Justification just;
};

struct Derivation {
  std::string name;
  std::vector<Formula> premises;
  std::vector<DerivationLine> lines;

  const Formula& conclusion() const { return lines.back().formula; }
};

struct CheckResult {
  bool ok = true;
  int line = 0;  // 1-based first failing line
  std::string reason;
};

CheckResult check_derivation(const Derivation& d, const AxiomCatalog& catalog);

// {f -> g} |- ([m]a f) -> [m]a g, as a four-line checkable derivation
// (premise, necessitation, K instance, modus ponens).
Derivation derive_regularity(const Formula& f, const Formula& g, const MessageTerm& m,
                             const std::string& agent);

// Every derivation shipped with the library, fully expanded to checkable
// lines. Uses the three-agent universe {a, b, m} (m doubles as message atom).
std::vector<Derivation> corpus();
const AgentUniverse& corpus_universe();

// File format: optional "name:" line, optional "premises:" block (one formula
// per line), then numbered lines "n. <formula> ; <justification>" with
// justifications taut | ax:NAME | g1:NAME | prem:k | mp:i,j | nec:i,[m]a.
Derivation parse_derivation(const std::string& text, const AgentUniverse& universe);
std::string write_derivation(const Derivation& d);

}  // namespace ldiip

#endif
