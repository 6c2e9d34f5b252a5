// Command-line surface: parse / eval / decide / check / demo-accountability.
//
// Exit codes: 0 ok or valid, 1 syntax or usage error, 2 invalid model,
// 3 counter-model found, 4 derivation check failure.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ldiip/concrete.hpp"
#include "ldiip/decide.hpp"
#include "ldiip/model.hpp"
#include "ldiip/proof.hpp"

using namespace ldiip;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSyntax = 1;
constexpr int kExitInvalidModel = 2;
constexpr int kExitCounterModel = 3;
constexpr int kExitDerivation = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct GlobalConfig {
  std::string agents = "a,b";
  std::string closure = "table1";
  int ceiling = 16;
  std::string gamma1_file;

  AgentUniverse universe() const { return AgentUniverse::parse(agents); }
  ClosureStrategy strategy() const {
    if (closure == "table1") return ClosureStrategy::Table1;
    if (closure == "identity") return ClosureStrategy::Identity;
    throw std::runtime_error("unknown closure strategy: " + closure);
  }
  AxiomCatalog catalog() const {
    AxiomCatalog cat;
    if (!gamma1_file.empty()) {
      AgentUniverse u = universe();
      std::istringstream in(read_file(gamma1_file));
      std::string line;
      int lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        std::size_t colon = line.find(':', start);
        if (colon == std::string::npos)
          throw std::runtime_error(gamma1_file + " line " + std::to_string(lineno) +
                                   ": expected NAME: schema");
        std::string name = line.substr(start, colon - start);
        while (!name.empty() && (name.back() == ' ' || name.back() == '\t'))
          name.pop_back();
        cat.add_gamma1(name, parse_schema(line.substr(colon + 1), u));
      }
    }
    return cat;
  }
};

// Plain key=value file; later command-line flags override these values.
void apply_config_file(const std::string& path, GlobalConfig& cfg) {
  std::istringstream in(read_file(path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    std::size_t eq = line.find('=', start);
    if (eq == std::string::npos)
      throw std::runtime_error(path + " line " + std::to_string(lineno) +
                               ": expected key=value");
    std::string key = line.substr(start, eq - start);
    std::string value = line.substr(eq + 1);
    auto trim = [](std::string& s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
    };
    trim(key);
    trim(value);
    if (key == "agents")
      cfg.agents = value;
    else if (key == "closure")
      cfg.closure = value;
    else if (key == "ceiling")
      cfg.ceiling = std::stoi(value);
    else if (key == "gamma1")
      cfg.gamma1_file = value;
    else
      throw std::runtime_error(path + " line " + std::to_string(lineno) +
                               ": unknown key " + key);
  }
}

void print_tree(const Formula& f, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  switch (f.kind()) {
    case Formula::Kind::Prop:
      std::cout << pad << "Prop " << f.prop_name() << "\n";
      break;
    case Formula::Kind::Knows:
      std::cout << pad << "Knows " << f.agent() << " " << render(f.msg()) << "\n";
      break;
    case Formula::Kind::Not:
      std::cout << pad << "Not\n";
      print_tree(f.child(), indent + 1);
      break;
    case Formula::Kind::And:
      std::cout << pad << "And\n";
      print_tree(f.lhs(), indent + 1);
      print_tree(f.rhs(), indent + 1);
      break;
    case Formula::Kind::Proves:
      std::cout << pad << "Proves [" << render(f.msg()) << "]" << f.agent() << "\n";
      print_tree(f.child(), indent + 1);
      break;
  }
}

int cmd_parse(const GlobalConfig& cfg, const std::string& text) {
  AgentUniverse u = cfg.universe();
  Formula f = parse_formula(text, u);
  std::cout << "core: " << render(f) << "\n";
  print_tree(f, 0);
  return kExitOk;
}

int cmd_eval(const GlobalConfig& cfg, const std::string& text,
             const std::string& model_file, const std::string& state_name,
             const std::string& concrete_text) {
  AgentUniverse u = cfg.universe();
  Formula f = parse_formula(text, u);
  bool verdict = false;
  if (!concrete_text.empty()) {
    ConcreteState s = parse_concrete_state(concrete_text, u);
    verdict = eval_concrete(f, s, {}, cfg.strategy());
  } else if (!model_file.empty()) {
    FiniteModel m;
    try {
      m = parse_model(read_file(model_file), u, cfg.strategy());
    } catch (const std::exception& e) {
      std::cerr << "invalid model: " << e.what() << "\n";
      return kExitInvalidModel;
    }
    auto report = validate_interface(m, modal_signature(f));
    if (!report.ok()) {
      std::cerr << "model violates the semantic interface:\n";
      for (const auto& v : report.violations) std::cerr << "  " << v << "\n";
      return kExitInvalidModel;
    }
    int s = m.state_index(state_name);
    if (s < 0) {
      std::cerr << "invalid model: unknown state " << state_name << "\n";
      return kExitInvalidModel;
    }
    try {
      verdict = eval(m, s, f);
    } catch (const EvalError& e) {
      std::cerr << "invalid model: " << e.what() << "\n";
      return kExitInvalidModel;
    }
  } else {
    std::cerr << "eval: supply --model FILE or --concrete STATE\n";
    return kExitSyntax;
  }
  std::cout << (verdict ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_decide(const GlobalConfig& cfg, const std::string& text, int max_states) {
  AgentUniverse u = cfg.universe();
  Formula f = parse_formula(text, u);
  DecideOptions opts;
  opts.ceiling = cfg.ceiling;
  opts.strategy = cfg.strategy();
  if (max_states > 0) opts.max_states = max_states;
  DecideResult r = decide(f, u, opts);
  switch (r.kind) {
    case DecideResult::Kind::Valid:
      std::cout << "Valid\n";
      return kExitOk;
    case DecideResult::Kind::ValidUpTo:
      std::cout << "ValidUpTo(" << r.bound << ")\n";
      return kExitOk;
    case DecideResult::Kind::CounterModel:
      std::cout << "CounterModel at state "
                << r.counter->model.state_names[r.counter->state] << "\n"
                << write_model(r.counter->model);
      return kExitCounterModel;
  }
  return kExitSyntax;
}

int cmd_check(const GlobalConfig& cfg, const std::string& file,
              const std::string& corpus_name, bool list, const std::string& dump) {
  AxiomCatalog cat = cfg.catalog();
  if (list) {
    for (const auto& d : corpus()) std::cout << d.name << "\n";
    return kExitOk;
  }
  auto find_corpus = [](const std::string& name) -> Derivation {
    for (auto& d : corpus())
      if (d.name == name) return d;
    throw std::runtime_error("unknown corpus derivation: " + name);
  };
  if (!dump.empty()) {
    std::cout << write_derivation(find_corpus(dump));
    return kExitOk;
  }
  Derivation d;
  if (!corpus_name.empty())
    d = find_corpus(corpus_name);
  else if (!file.empty())
    d = parse_derivation(read_file(file), cfg.universe());
  else {
    std::cerr << "check: supply FILE, --corpus NAME, --list-corpus or --dump-corpus\n";
    return kExitSyntax;
  }
  CheckResult r = check_derivation(d, cat);
  if (r.ok) {
    std::cout << "OK (" << d.lines.size() << " lines, conclusion "
              << render(d.conclusion()) << ")\n";
    return kExitOk;
  }
  std::cout << "FAIL line " << r.line << ": " << r.reason << "\n";
  return kExitDerivation;
}

int cmd_demo(const GlobalConfig& cfg, const std::string& verifier, bool correct) {
  // Accountability scenario: agent b must log its actions; the signed log
  // term M is checked by a verifier (default a; use --agent c for an
  // independent auditor). The decider formula is an axiom instance, so M
  // decides the conduct atom one way or the other in every state.
  std::vector<std::string> names = {"a", "b", verifier};
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  AgentUniverse u(names);
  (void)cfg;

  MessageTerm log = MessageTerm::sig(
      MessageTerm::pair(MessageTerm::atom("a"), MessageTerm::atom("b")), "b");
  Formula conduct = Formula::prop("Correct");
  Formula box = Formula::proves(log, verifier, conduct);
  Formula nbox = Formula::proves(log, verifier, Formula::f_not(conduct));
  Formula decider = f_or(box, nbox);

  std::cout << "accused agent:   b\n";
  std::cout << "verifier:        " << verifier << "\n";
  std::cout << "log term M:      " << render(log) << "\n";
  std::cout << "decider formula: " << render(decider) << "\n";

  AxiomCatalog cat;
  auto ax = is_axiom(decider, cat);
  if (ax && *ax == "NegationCompleteness") {
    std::cout << "axiom recognition: " << *ax
              << " -> M is an epistemic decider for Correct\n";
  } else {
    std::cout << "axiom recognition failed\n";
    return kExitSyntax;
  }

  ConcreteState run = step(verifier, log, ConcreteState::zero(), cfg.strategy());
  ConcreteAssignment assign = ConcreteAssignment::constant({{"Correct", correct}});
  std::cout << "concrete run:    " << render(run) << "\n";
  std::cout << "valuation:       Correct = " << (correct ? "true" : "false") << "\n";
  bool proves_correct = eval_concrete(box, ConcreteState::zero(), assign, cfg.strategy());
  bool proves_incorrect =
      eval_concrete(nbox, ConcreteState::zero(), assign, cfg.strategy());
  if (proves_correct)
    std::cout << "verdict: M proves Correct -- conduct of b is vindicated\n";
  else if (proves_incorrect)
    std::cout << "verdict: M proves ~Correct -- decisive evidence against b\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LDiiP toolkit: evidence-modality logic engineering"};
  app.require_subcommand(1);

  GlobalConfig cfg;
  std::string config_file;
  app.add_option("--config", config_file, "key=value config file");
  auto* agents_opt = app.add_option("--agents", cfg.agents, "agent universe, comma separated");
  auto* closure_opt = app.add_option("--closure", cfg.closure, "table1|identity");
  auto* ceiling_opt = app.add_option("--ceiling", cfg.ceiling, "exhaustive-bound ceiling");
  auto* gamma1_opt = app.add_option("--gamma1", cfg.gamma1_file, "knowledge-axiom schema file");

  std::string formula_text, model_file, state_name = "s0", concrete_text;
  std::string check_file, corpus_name, dump_name, demo_agent = "a";
  int max_states = 0;
  bool list_corpus = false, demo_correct = true, demo_incorrect = false;

  auto* parse_cmd = app.add_subcommand("parse", "parse a formula and print the core AST");
  parse_cmd->add_option("formula", formula_text)->required();

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula at a state");
  eval_cmd->add_option("formula", formula_text)->required();
  eval_cmd->add_option("--model", model_file, "model file");
  eval_cmd->add_option("--state", state_name, "state name (default s0)");
  eval_cmd->add_option("--concrete", concrete_text, "concrete state, e.g. recv(a, m, 0)");

  auto* decide_cmd = app.add_subcommand("decide", "decide validity by bounded enumeration");
  decide_cmd->add_option("formula", formula_text)->required();
  decide_cmd->add_option("--max-states", max_states, "explicit state bound");

  auto* check_cmd = app.add_subcommand("check", "check a Hilbert derivation");
  check_cmd->add_option("file", check_file);
  check_cmd->add_option("--corpus", corpus_name, "check a shipped derivation by name");
  check_cmd->add_flag("--list-corpus", list_corpus, "list shipped derivation names");
  check_cmd->add_option("--dump-corpus", dump_name, "print a shipped derivation");

  auto* demo_cmd =
      app.add_subcommand("demo-accountability", "signed-log accountability walkthrough");
  demo_cmd->add_option("--agent", demo_agent, "verifying agent (auditor variant: c)");
  demo_cmd->add_flag("--correct", demo_correct, "valuation: b behaved correctly");
  demo_cmd->add_flag("--incorrect", demo_incorrect, "valuation: b misbehaved");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitSyntax;
  }

  try {
    if (!config_file.empty()) {
      GlobalConfig file_cfg = cfg;
      apply_config_file(config_file, file_cfg);
      // explicit flags take precedence over config-file values
      if (agents_opt->count() == 0) cfg.agents = file_cfg.agents;
      if (closure_opt->count() == 0) cfg.closure = file_cfg.closure;
      if (ceiling_opt->count() == 0) cfg.ceiling = file_cfg.ceiling;
      if (gamma1_opt->count() == 0) cfg.gamma1_file = file_cfg.gamma1_file;
    }
    if (parse_cmd->parsed()) return cmd_parse(cfg, formula_text);
    if (eval_cmd->parsed())
      return cmd_eval(cfg, formula_text, model_file, state_name, concrete_text);
    if (decide_cmd->parsed()) return cmd_decide(cfg, formula_text, max_states);
    if (check_cmd->parsed())
      return cmd_check(cfg, check_file, corpus_name, list_corpus, dump_name);
    if (demo_cmd->parsed()) return cmd_demo(cfg, demo_agent, !demo_incorrect);
  } catch (const ParseError& e) {
    std::cerr << "syntax error at column " << e.column << ": " << e.what() << "\n";
    return kExitSyntax;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSyntax;
  }
  return kExitSyntax;
}
