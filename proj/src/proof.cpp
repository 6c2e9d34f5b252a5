#include "ldiip/proof.hpp"

#include <map>
#include <sstream>

namespace ldiip {

namespace {

// skeleton abstraction: collect the letters of f (maximal subformulas that
// are not ~ or &)
void collect_letters(const Formula& f, std::map<Formula, int>& letters) {
  switch (f.kind()) {
    case Formula::Kind::Not:
      collect_letters(f.child(), letters);
      return;
    case Formula::Kind::And:
      collect_letters(f.lhs(), letters);
      collect_letters(f.rhs(), letters);
      return;
    default:
      letters.emplace(f, static_cast<int>(letters.size()));
  }
}

bool eval_skeleton(const Formula& f, const std::map<Formula, int>& letters,
                   unsigned long assignment) {
  switch (f.kind()) {
    case Formula::Kind::Not:
      return !eval_skeleton(f.child(), letters, assignment);
    case Formula::Kind::And:
      return eval_skeleton(f.lhs(), letters, assignment) &&
             eval_skeleton(f.rhs(), letters, assignment);
    default:
      return (assignment >> letters.at(f)) & 1;
  }
}

}  // namespace

bool is_tautology_instance(const Formula& f) {
  std::map<Formula, int> letters;
  collect_letters(f, letters);
  if (letters.size() > 24)
    throw std::runtime_error("tautology check: too many distinct subformulas");
  for (unsigned long v = 0; v < (1UL << letters.size()); ++v)
    if (!eval_skeleton(f, letters, v)) return false;
  return true;
}

AxiomCatalog::AxiomCatalog() {
  auto M = SchemaMsg::var("M");
  auto a = AgentRef::var("a");
  auto phi = Schema::fvar("phi");
  auto psi = Schema::fvar("psi");
  auto knows_self = [](AgentRef ag) {
    return Schema::knows(ag, SchemaMsg::atom(ag));
  };
  // false (at agent b) = ~[b]b (b knows b)
  auto b = AgentRef::var("b");
  Schema falsum = Schema::s_not(
      Schema::proves(SchemaMsg::atom(b), b, knows_self(b)));

  core_.push_back({"SelfKnowledge",
                   Schema::proves(M, a, Schema::knows(a, M))});
  core_.push_back(
      {"K", Schema::s_imp(Schema::proves(M, a, Schema::s_imp(phi, psi)),
                          Schema::s_imp(Schema::proves(M, a, phi),
                                        Schema::proves(M, a, psi)))});
  core_.push_back(
      {"EpistemicTruthfulness",
       Schema::s_imp(Schema::proves(M, a, phi),
                     Schema::s_imp(Schema::knows(a, M), phi))});
  core_.push_back({"ProofConsistency",
                   Schema::s_not(Schema::proves(M, a, falsum))});
  core_.push_back(
      {"NegationCompleteness",
       Schema::s_or(Schema::proves(M, a, phi),
                    Schema::proves(M, a, Schema::s_not(phi)))});
}

void AxiomCatalog::add_gamma1(std::string name, Schema schema) {
  gamma1_.push_back({std::move(name), std::move(schema)});
}

std::optional<std::string> AxiomCatalog::find_core(const Formula& f) const {
  for (const auto& [name, schema] : core_)
    if (match_schema(schema, f)) return name;
  return std::nullopt;
}

std::optional<std::string> AxiomCatalog::find_gamma1(const Formula& f) const {
  for (const auto& [name, schema] : gamma1_)
    if (match_schema(schema, f)) return name;
  return std::nullopt;
}

std::optional<std::string> is_axiom(const Formula& f, const AxiomCatalog& catalog) {
  if (auto name = catalog.find_core(f)) return name;
  if (auto name = catalog.find_gamma1(f)) return name;
  if (is_tautology_instance(f)) return "Taut";
  return std::nullopt;
}

CheckResult check_derivation(const Derivation& d, const AxiomCatalog& catalog) {
  auto fail = [](int line, std::string reason) {
    return CheckResult{false, line + 1, std::move(reason)};
  };
  for (std::size_t idx = 0; idx < d.lines.size(); ++idx) {
    const auto& [f, just] = d.lines[idx];
    int n = static_cast<int>(idx);
    switch (just.kind) {
      case Justification::Kind::Taut:
        if (!is_tautology_instance(f)) return fail(n, "not a tautology instance");
        break;
      case Justification::Kind::Axiom: {
        bool found = false;
        for (const auto& [name, schema] : catalog.core())
          if (name == just.name) {
            found = true;
            if (!match_schema(schema, f))
              return fail(n, "not an instance of axiom " + just.name);
          }
        if (!found) return fail(n, "unknown axiom " + just.name);
        break;
      }
      case Justification::Kind::Gamma1: {
        bool found = false;
        for (const auto& [name, schema] : catalog.gamma1())
          if (name == just.name) {
            found = true;
            if (!match_schema(schema, f))
              return fail(n, "not an instance of schema " + just.name);
          }
        if (!found) return fail(n, "unknown schema " + just.name);
        break;
      }
      case Justification::Kind::Premise:
        if (just.i < 0 || just.i >= static_cast<int>(d.premises.size()))
          return fail(n, "premise index out of range");
        if (f != d.premises[static_cast<std::size_t>(just.i)])
          return fail(n, "line does not equal the cited premise");
        break;
      case Justification::Kind::MP: {
        if (just.i < 0 || just.i >= n || just.j < 0 || just.j >= n)
          return fail(n, "modus ponens must cite earlier lines");
        const Formula& ant = d.lines[static_cast<std::size_t>(just.i)].formula;
        const Formula& imp = d.lines[static_cast<std::size_t>(just.j)].formula;
        if (imp != f_imp(ant, f))
          return fail(n, "cited implication does not yield this line");
        break;
      }
      case Justification::Kind::Nec: {
        if (just.i < 0 || just.i >= n)
          return fail(n, "necessitation must cite an earlier line");
        if (!just.msg) return fail(n, "necessitation lacks a message");
        const Formula& src = d.lines[static_cast<std::size_t>(just.i)].formula;
        if (f != Formula::proves(*just.msg, just.agent, src))
          return fail(n, "line is not the boxed form of the cited line");
        break;
      }
    }
  }
  if (d.lines.empty()) return {false, 0, "empty derivation"};
  return {};
}

Derivation derive_regularity(const Formula& f, const Formula& g, const MessageTerm& m,
                             const std::string& agent) {
  Derivation d;
  d.name = "regularity";
  Formula imp = f_imp(f, g);
  d.premises.push_back(imp);
  Formula boxed = Formula::proves(m, agent, imp);
  Formula k = f_imp(boxed, f_imp(Formula::proves(m, agent, f),
                                 Formula::proves(m, agent, g)));
  Justification prem{Justification::Kind::Premise, "", 0, -1, std::nullopt, ""};
  Justification nec{Justification::Kind::Nec, "", 0, -1, m, agent};
  Justification ax{Justification::Kind::Axiom, "K", -1, -1, std::nullopt, ""};
  Justification mp{Justification::Kind::MP, "", 1, 2, std::nullopt, ""};
  d.lines.push_back({imp, prem});
  d.lines.push_back({boxed, nec});
  d.lines.push_back({k, ax});
  d.lines.push_back({f_imp(Formula::proves(m, agent, f), Formula::proves(m, agent, g)), mp});
  return d;
}

// --- derivation file io -----------------------------------------------------

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Justification parse_justification(const std::string& text, const AgentUniverse& universe) {
  Justification j;
  std::string t = trim(text);
  if (t == "taut") {
    j.kind = Justification::Kind::Taut;
    return j;
  }
  auto colon = t.find(':');
  if (colon == std::string::npos)
    throw std::runtime_error("bad justification '" + t + "'");
  std::string head = t.substr(0, colon);
  std::string rest = trim(t.substr(colon + 1));
  if (head == "ax") {
    j.kind = Justification::Kind::Axiom;
    j.name = rest;
  } else if (head == "g1") {
    j.kind = Justification::Kind::Gamma1;
    j.name = rest;
  } else if (head == "prem") {
    j.kind = Justification::Kind::Premise;
    j.i = std::stoi(rest) - 1;
  } else if (head == "mp") {
    j.kind = Justification::Kind::MP;
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw std::runtime_error("mp needs two lines");
    j.i = std::stoi(trim(rest.substr(0, comma))) - 1;
    j.j = std::stoi(trim(rest.substr(comma + 1))) - 1;
  } else if (head == "nec") {
    j.kind = Justification::Kind::Nec;
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw std::runtime_error("nec needs a line and [m]a");
    j.i = std::stoi(trim(rest.substr(0, comma))) - 1;
    std::string box = trim(rest.substr(comma + 1));
    if (box.empty() || box.front() != '[')
      throw std::runtime_error("nec needs a [m]a annotation");
    auto close = box.rfind(']');
    if (close == std::string::npos) throw std::runtime_error("nec: missing ']'");
    j.msg = parse_message(box.substr(1, close - 1), universe);
    j.agent = trim(box.substr(close + 1));
    if (!universe.contains(j.agent))
      throw std::runtime_error("nec: unknown agent " + j.agent);
  } else {
    throw std::runtime_error("bad justification '" + t + "'");
  }
  return j;
}

std::string render_justification(const Justification& j) {
  switch (j.kind) {
    case Justification::Kind::Taut:
      return "taut";
    case Justification::Kind::Axiom:
      return "ax:" + j.name;
    case Justification::Kind::Gamma1:
      return "g1:" + j.name;
    case Justification::Kind::Premise:
      return "prem:" + std::to_string(j.i + 1);
    case Justification::Kind::MP:
      return "mp:" + std::to_string(j.i + 1) + "," + std::to_string(j.j + 1);
    case Justification::Kind::Nec:
      return "nec:" + std::to_string(j.i + 1) + ",[" + render(*j.msg) + "]" + j.agent;
  }
  return "";
}

}  // namespace

Derivation parse_derivation(const std::string& text, const AgentUniverse& universe) {
  Derivation d;
  std::istringstream in(text);
  std::string raw;
  bool in_premises = false;
  int lineno = 0;
  while (std::getline(in, raw)) {
    lineno++;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    try {
      if (line.rfind("name:", 0) == 0) {
        d.name = trim(line.substr(5));
        continue;
      }
      if (line == "premises:") {
        in_premises = true;
        continue;
      }
      auto dot = line.find('.');
      bool numbered = dot != std::string::npos &&
                      dot > 0 && line.find_first_not_of("0123456789") == dot;
      if (!numbered) {
        if (!in_premises)
          throw std::runtime_error("expected a numbered line");
        d.premises.push_back(parse_formula(line, universe));
        continue;
      }
      in_premises = false;
      int n = std::stoi(line.substr(0, dot));
      if (n != static_cast<int>(d.lines.size()) + 1)
        throw std::runtime_error("line numbered " + std::to_string(n) +
                                 ", expected " + std::to_string(d.lines.size() + 1));
      auto semi = line.find(';', dot);
      if (semi == std::string::npos) throw std::runtime_error("expected ';'");
      Formula f = parse_formula(trim(line.substr(dot + 1, semi - dot - 1)), universe);
      d.lines.push_back({f, parse_justification(line.substr(semi + 1), universe)});
    } catch (const std::exception& e) {
      throw std::runtime_error("derivation line " + std::to_string(lineno) + ": " +
                               e.what());
    }
  }
  if (d.lines.empty()) throw std::runtime_error("derivation has no lines");
  return d;
}

std::string write_derivation(const Derivation& d) {
  std::ostringstream out;
  if (!d.name.empty()) out << "name: " << d.name << '\n';
  if (!d.premises.empty()) {
    out << "premises:\n";
    for (const auto& p : d.premises) out << render(p) << '\n';
  }
  for (std::size_t i = 0; i < d.lines.size(); ++i)
    out << (i + 1) << ". " << render(d.lines[i].formula) << " ; "
        << render_justification(d.lines[i].just) << '\n';
  return out.str();
}

}  // namespace ldiip
