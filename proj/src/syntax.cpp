#include "ldiip/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ldiip {

// --- AgentUniverse ---------------------------------------------------------

static bool valid_agent_name(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::islower(c) || std::isdigit(c) || c == '_';
  });
}

AgentUniverse::AgentUniverse(std::vector<std::string> agents) : agents_(std::move(agents)) {
  if (agents_.empty()) throw std::invalid_argument("agent universe must be nonempty");
  for (const auto& a : agents_)
    if (!valid_agent_name(a)) throw std::invalid_argument("bad agent name: " + a);
  std::sort(agents_.begin(), agents_.end());
  agents_.erase(std::unique(agents_.begin(), agents_.end()), agents_.end());
}

AgentUniverse AgentUniverse::parse(const std::string& comma_list) {
  std::vector<std::string> names;
  std::string cur;
  std::istringstream in(comma_list);
  while (std::getline(in, cur, ',')) {
    cur.erase(std::remove_if(cur.begin(), cur.end(), ::isspace), cur.end());
    if (!cur.empty()) names.push_back(cur);
  }
  return AgentUniverse(names);
}

bool AgentUniverse::contains(const std::string& name) const {
  return std::binary_search(agents_.begin(), agents_.end(), name);
}

// --- MessageTerm -----------------------------------------------------------

MessageTerm MessageTerm::wrap(Node n) {
  return MessageTerm(std::make_shared<const Node>(std::move(n)));
}

MessageTerm MessageTerm::atom(std::string agent) {
  return wrap(Node{Kind::Atom, std::move(agent), nullptr, nullptr, 1});
}

MessageTerm MessageTerm::pair(MessageTerm l, MessageTerm r) {
  int sz = 1 + l.size() + r.size();
  return wrap(Node{Kind::Pair, "", std::move(l.node_), std::move(r.node_), sz});
}

MessageTerm MessageTerm::sig(MessageTerm body, std::string signer) {
  int sz = 1 + body.size();
  return wrap(Node{Kind::Sig, std::move(signer), std::move(body.node_), nullptr, sz});
}

const MessageTerm& MessageTerm::left() const {
  return reinterpret_cast<const MessageTerm&>(node_->a);
}
const MessageTerm& MessageTerm::right() const {
  return reinterpret_cast<const MessageTerm&>(node_->b);
}
const MessageTerm& MessageTerm::body() const {
  return reinterpret_cast<const MessageTerm&>(node_->a);
}

int MessageTerm::compare(const MessageTerm& other) const {
  if (node_ == other.node_) return 0;
  if (node_->kind != other.node_->kind)
    return static_cast<int>(node_->kind) < static_cast<int>(other.node_->kind) ? -1 : 1;
  switch (node_->kind) {
    case Kind::Atom:
      return node_->agent.compare(other.node_->agent);
    case Kind::Pair: {
      int c = left().compare(other.left());
      return c != 0 ? c : right().compare(other.right());
    }
    case Kind::Sig: {
      int c = node_->agent.compare(other.node_->agent);
      return c != 0 ? c : body().compare(other.body());
    }
  }
  return 0;
}

void MessageTerm::collect_subterms(std::set<MessageTerm>& out) const {
  if (!out.insert(*this).second) return;
  switch (kind()) {
    case Kind::Atom: break;
    case Kind::Pair:
      left().collect_subterms(out);
      right().collect_subterms(out);
      break;
    case Kind::Sig:
      body().collect_subterms(out);
      break;
  }
}

void MessageTerm::collect_agents(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::Atom:
      out.insert(agent());
      break;
    case Kind::Pair:
      left().collect_agents(out);
      right().collect_agents(out);
      break;
    case Kind::Sig:
      out.insert(agent());
      body().collect_agents(out);
      break;
  }
}

// --- Formula ---------------------------------------------------------------

Formula Formula::wrap(Node n) {
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::prop(std::string name) {
  return wrap(Node{Kind::Prop, std::move(name), std::nullopt, nullptr, nullptr, 1});
}

Formula Formula::knows(std::string agent, MessageTerm msg) {
  return wrap(Node{Kind::Knows, std::move(agent), std::move(msg), nullptr, nullptr, 1});
}

Formula Formula::f_not(Formula f) {
  int sz = 1 + f.size();
  return wrap(Node{Kind::Not, "", std::nullopt, std::move(f.node_), nullptr, sz});
}

Formula Formula::f_and(Formula l, Formula r) {
  int sz = 1 + l.size() + r.size();
  return wrap(Node{Kind::And, "", std::nullopt, std::move(l.node_), std::move(r.node_), sz});
}

Formula Formula::proves(MessageTerm msg, std::string agent, Formula body) {
  int sz = 1 + body.size();
  return wrap(Node{Kind::Proves, std::move(agent), std::move(msg), std::move(body.node_), nullptr, sz});
}

const Formula& Formula::child() const {
  return reinterpret_cast<const Formula&>(node_->a);
}
const Formula& Formula::lhs() const {
  return reinterpret_cast<const Formula&>(node_->a);
}
const Formula& Formula::rhs() const {
  return reinterpret_cast<const Formula&>(node_->b);
}

int Formula::compare(const Formula& other) const {
  if (node_ == other.node_) return 0;
  if (node_->kind != other.node_->kind)
    return static_cast<int>(node_->kind) < static_cast<int>(other.node_->kind) ? -1 : 1;
  switch (node_->kind) {
    case Kind::Prop:
      return node_->name.compare(other.node_->name);
    case Kind::Knows: {
      int c = node_->name.compare(other.node_->name);
      return c != 0 ? c : node_->msg->compare(*other.node_->msg);
    }
    case Kind::Not:
      return child().compare(other.child());
    case Kind::And: {
      int c = lhs().compare(other.lhs());
      return c != 0 ? c : rhs().compare(other.rhs());
    }
    case Kind::Proves: {
      int c = node_->name.compare(other.node_->name);
      if (c != 0) return c;
      c = node_->msg->compare(*other.node_->msg);
      return c != 0 ? c : child().compare(other.child());
    }
  }
  return 0;
}

Formula f_or(Formula l, Formula r) {
  return Formula::f_not(Formula::f_and(Formula::f_not(std::move(l)), Formula::f_not(std::move(r))));
}

Formula f_imp(Formula l, Formula r) {
  return f_or(Formula::f_not(std::move(l)), std::move(r));
}

Formula f_iff(Formula l, Formula r) {
  return Formula::f_and(f_imp(l, r), f_imp(r, l));
}

Formula f_true(const std::string& agent) {
  MessageTerm a = MessageTerm::atom(agent);
  return Formula::proves(a, agent, Formula::knows(agent, a));
}

Formula f_false(const std::string& agent) {
  return Formula::f_not(f_true(agent));
}

std::optional<Formula> destruct_imp(const Formula& f, const Formula& antecedent) {
  // f_imp(A, B) = ~(~~A & ~B)
  using K = Formula::Kind;
  if (f.kind() != K::Not) return std::nullopt;
  const Formula& conj = f.child();
  if (conj.kind() != K::And) return std::nullopt;
  const Formula& l = conj.lhs();
  const Formula& r = conj.rhs();
  if (l.kind() != K::Not || l.child().kind() != K::Not) return std::nullopt;
  if (r.kind() != K::Not) return std::nullopt;
  if (l.child().child() != antecedent) return std::nullopt;
  return r.child();
}

// --- Parser ----------------------------------------------------------------

ParseError::ParseError(std::size_t col, const std::string& what)
    : std::runtime_error("syntax error at column " + std::to_string(col) + ": " + what),
      column(col) {}

namespace {

struct Token {
  enum class Type {
    LIdent, UIdent, MetaVar,
    Not, And, Or, Imp, Iff,
    LParen, RParen, LBracket, RBracket, Comma, At,
    KwKnows, KwSig, KwTrue, KwFalse,
    End
  };
  Type type;
  std::string text;
  std::size_t col;  // 1-based
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) pos_++;
    std::size_t col = pos_ + 1;
    if (pos_ >= text_.size()) {
      tok_ = {Token::Type::End, "", col};
      return;
    }
    char c = text_[pos_];
    auto sym = [&](Token::Type t, std::size_t len) {
      tok_ = {t, text_.substr(pos_, len), col};
      pos_ += len;
    };
    if (c == '~') return sym(Token::Type::Not, 1);
    if (c == '&') return sym(Token::Type::And, 1);
    if (c == '|') return sym(Token::Type::Or, 1);
    if (c == '(') return sym(Token::Type::LParen, 1);
    if (c == ')') return sym(Token::Type::RParen, 1);
    if (c == '[') return sym(Token::Type::LBracket, 1);
    if (c == ']') return sym(Token::Type::RBracket, 1);
    if (c == ',') return sym(Token::Type::Comma, 1);
    if (c == '@') return sym(Token::Type::At, 1);
    if (c == '<' && text_.compare(pos_, 3, "<->") == 0) return sym(Token::Type::Iff, 3);
    if (c == '-' && text_.compare(pos_, 2, "->") == 0) return sym(Token::Type::Imp, 2);
    if (c == '$') {
      std::size_t end = pos_ + 1;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        end++;
      if (end == pos_ + 1) throw ParseError(col, "empty metavariable");
      tok_ = {Token::Type::MetaVar, text_.substr(pos_ + 1, end - pos_ - 1), col};
      pos_ = end;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        end++;
      std::string word = text_.substr(pos_, end - pos_);
      pos_ = end;
      if (word == "knows") tok_ = {Token::Type::KwKnows, word, col};
      else if (word == "sig") tok_ = {Token::Type::KwSig, word, col};
      else if (word == "true") tok_ = {Token::Type::KwTrue, word, col};
      else if (word == "false") tok_ = {Token::Type::KwFalse, word, col};
      else if (std::islower(static_cast<unsigned char>(word[0])))
        tok_ = {Token::Type::LIdent, word, col};
      else
        tok_ = {Token::Type::UIdent, word, col};
      return;
    }
    throw ParseError(col, std::string("unexpected character '") + c + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  Token tok_;
};

// Single parser producing schemas; plain formulas are the metavariable-free case.
class Parser {
 public:
  Parser(const std::string& text, const AgentUniverse& universe, bool allow_meta)
      : lex_(text), universe_(universe), allow_meta_(allow_meta) {}

  Schema parse_formula_top() {
    Schema f = parse_iff();
    expect_end();
    return f;
  }

  SchemaMsg parse_message_top() {
    SchemaMsg m = parse_msg();
    expect_end();
    return m;
  }

 private:
  void expect_end() {
    if (lex_.peek().type != Token::Type::End)
      throw ParseError(lex_.peek().col, "trailing input '" + lex_.peek().text + "'");
  }

  Token expect(Token::Type t, const char* what) {
    if (lex_.peek().type != t)
      throw ParseError(lex_.peek().col, std::string("expected ") + what);
    return lex_.take();
  }

  AgentRef parse_agent_ref() {
    const Token& t = lex_.peek();
    if (t.type == Token::Type::MetaVar) {
      if (!allow_meta_) throw ParseError(t.col, "metavariables not allowed here");
      return AgentRef::var(lex_.take().text);
    }
    if (t.type != Token::Type::LIdent)
      throw ParseError(t.col, "expected agent name");
    Token tok = lex_.take();
    if (!universe_.contains(tok.text))
      throw ParseError(tok.col, "unknown agent '" + tok.text + "'");
    return AgentRef::concrete(tok.text);
  }

  SchemaMsg parse_msg() {
    const Token& t = lex_.peek();
    switch (t.type) {
      case Token::Type::MetaVar:
        if (!allow_meta_) throw ParseError(t.col, "metavariables not allowed here");
        return SchemaMsg::var(lex_.take().text);
      case Token::Type::LIdent:
        return SchemaMsg::atom(parse_agent_ref());
      case Token::Type::LParen: {
        lex_.take();
        SchemaMsg l = parse_msg();
        expect(Token::Type::Comma, "','");
        SchemaMsg r = parse_msg();
        expect(Token::Type::RParen, "')'");
        return SchemaMsg::pair(std::move(l), std::move(r));
      }
      case Token::Type::KwSig: {
        lex_.take();
        expect(Token::Type::LParen, "'('");
        SchemaMsg body = parse_msg();
        expect(Token::Type::Comma, "','");
        AgentRef signer = parse_agent_ref();
        expect(Token::Type::RParen, "')'");
        return SchemaMsg::sig(std::move(body), std::move(signer));
      }
      default:
        throw ParseError(t.col, "expected message term");
    }
  }

  Schema parse_iff() {
    Schema f = parse_imp();
    while (lex_.peek().type == Token::Type::Iff) {
      lex_.take();
      f = Schema::s_iff(std::move(f), parse_imp());
    }
    return f;
  }

  Schema parse_imp() {
    Schema f = parse_or();
    if (lex_.peek().type == Token::Type::Imp) {
      lex_.take();
      return Schema::s_imp(std::move(f), parse_imp());  // right-assoc
    }
    return f;
  }

  Schema parse_or() {
    Schema f = parse_and();
    while (lex_.peek().type == Token::Type::Or) {
      lex_.take();
      f = Schema::s_or(std::move(f), parse_and());
    }
    return f;
  }

  Schema parse_and() {
    Schema f = parse_unary();
    while (lex_.peek().type == Token::Type::And) {
      lex_.take();
      f = Schema::s_and(std::move(f), parse_unary());
    }
    return f;
  }

  Schema parse_unary() {
    const Token& t = lex_.peek();
    if (t.type == Token::Type::Not) {
      lex_.take();
      return Schema::s_not(parse_unary());
    }
    if (t.type == Token::Type::LBracket) {
      lex_.take();
      SchemaMsg m = parse_msg();
      expect(Token::Type::RBracket, "']'");
      AgentRef a = parse_agent_ref();
      return Schema::proves(std::move(m), std::move(a), parse_unary());
    }
    return parse_primary();
  }

  Schema schema_true(const AgentRef& a) {
    SchemaMsg atom = SchemaMsg::atom(a);
    return Schema::proves(atom, a, Schema::knows(a, atom));
  }

  Schema parse_primary() {
    const Token& t = lex_.peek();
    switch (t.type) {
      case Token::Type::LParen: {
        lex_.take();
        Schema f = parse_iff();
        expect(Token::Type::RParen, "')'");
        return f;
      }
      case Token::Type::KwTrue: {
        lex_.take();
        return schema_true(opt_macro_agent());
      }
      case Token::Type::KwFalse: {
        lex_.take();
        return Schema::s_not(schema_true(opt_macro_agent()));
      }
      case Token::Type::UIdent:
        return Schema::prop(lex_.take().text);
      case Token::Type::MetaVar: {
        if (!allow_meta_) throw ParseError(t.col, "metavariables not allowed here");
        std::string name = lex_.take().text;
        if (lex_.peek().type == Token::Type::KwKnows) {
          lex_.take();
          return Schema::knows(AgentRef::var(name), parse_msg());
        }
        return Schema::fvar(name);
      }
      case Token::Type::LIdent: {
        AgentRef a = parse_agent_ref();
        expect(Token::Type::KwKnows, "'knows'");
        return Schema::knows(std::move(a), parse_msg());
      }
      default:
        throw ParseError(t.col, "expected formula");
    }
  }

  AgentRef opt_macro_agent() {
    if (lex_.peek().type == Token::Type::At) {
      lex_.take();
      return parse_agent_ref();
    }
    return AgentRef::concrete(universe_.first());
  }

  Lexer lex_;
  const AgentUniverse& universe_;
  bool allow_meta_;
};

MessageTerm schema_msg_to_term(const SchemaMsg& m, const Substitution& theta);

std::string resolve_agent(const AgentRef& a, const Substitution& theta) {
  if (!a.is_var) return a.name;
  auto it = theta.agents.find(a.name);
  if (it == theta.agents.end())
    throw std::invalid_argument("unbound agent metavariable $" + a.name);
  return it->second;
}

MessageTerm schema_msg_to_term(const SchemaMsg& m, const Substitution& theta) {
  switch (m.kind()) {
    case SchemaMsg::Kind::Atom:
      return MessageTerm::atom(resolve_agent(m.agent(), theta));
    case SchemaMsg::Kind::Pair:
      return MessageTerm::pair(schema_msg_to_term(m.left(), theta),
                               schema_msg_to_term(m.right(), theta));
    case SchemaMsg::Kind::Sig:
      return MessageTerm::sig(schema_msg_to_term(m.body(), theta),
                              resolve_agent(m.agent(), theta));
    case SchemaMsg::Kind::Var: {
      auto it = theta.messages.find(m.var_name());
      if (it == theta.messages.end())
        throw std::invalid_argument("unbound message metavariable $" + m.var_name());
      return it->second;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Formula instantiate(const Schema& s, const Substitution& theta) {
  switch (s.kind()) {
    case Schema::Kind::Prop:
      return Formula::prop(s.name());
    case Schema::Kind::Knows:
      return Formula::knows(resolve_agent(s.agent(), theta),
                            schema_msg_to_term(s.msg(), theta));
    case Schema::Kind::Not:
      return Formula::f_not(instantiate(s.child(), theta));
    case Schema::Kind::And:
      return Formula::f_and(instantiate(s.lhs(), theta), instantiate(s.rhs(), theta));
    case Schema::Kind::Proves:
      return Formula::proves(schema_msg_to_term(s.msg(), theta),
                             resolve_agent(s.agent(), theta),
                             instantiate(s.child(), theta));
    case Schema::Kind::FVar: {
      auto it = theta.formulas.find(s.name());
      if (it == theta.formulas.end())
        throw std::invalid_argument("unbound formula metavariable $" + s.name());
      return it->second;
    }
  }
  throw std::logic_error("unreachable");
}

Formula parse_formula(const std::string& text, const AgentUniverse& universe) {
  Parser p(text, universe, /*allow_meta=*/false);
  return instantiate(p.parse_formula_top(), Substitution{});
}

MessageTerm parse_message(const std::string& text, const AgentUniverse& universe) {
  Parser p(text, universe, /*allow_meta=*/false);
  return schema_msg_to_term(p.parse_message_top(), Substitution{});
}

Schema parse_schema(const std::string& text, const AgentUniverse& universe) {
  Parser p(text, universe, /*allow_meta=*/true);
  return p.parse_formula_top();
}

// --- Rendering -------------------------------------------------------------

std::string render(const MessageTerm& m) {
  switch (m.kind()) {
    case MessageTerm::Kind::Atom:
      return m.agent();
    case MessageTerm::Kind::Pair:
      return "(" + render(m.left()) + ", " + render(m.right()) + ")";
    case MessageTerm::Kind::Sig:
      return "sig(" + render(m.body()) + ", " + m.agent() + ")";
  }
  return "";
}

namespace {

// Conjunctions are the only construct needing parentheses under ~, [M]a,
// or on the right of another & (left-assoc grammar).
std::string render_sub(const Formula& f, bool parenthesize_and) {
  std::string s = render(f);
  if (parenthesize_and && f.kind() == Formula::Kind::And) return "(" + s + ")";
  return s;
}

}  // namespace

std::string render(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Prop:
      return f.prop_name();
    case Formula::Kind::Knows:
      return f.agent() + " knows " + render(f.msg());
    case Formula::Kind::Not:
      return "~" + render_sub(f.child(), true);
    case Formula::Kind::And:
      return render_sub(f.lhs(), false) + " & " + render_sub(f.rhs(), true);
    case Formula::Kind::Proves:
      return "[" + render(f.msg()) + "]" + f.agent() + " " + render_sub(f.child(), true);
  }
  return "";
}

// --- Inventories -----------------------------------------------------------

std::set<Formula> subformula_closure(const Formula& f) {
  std::set<Formula> out;
  std::vector<Formula> work{f};
  while (!work.empty()) {
    Formula cur = work.back();
    work.pop_back();
    if (!out.insert(cur).second) continue;
    switch (cur.kind()) {
      case Formula::Kind::Prop:
      case Formula::Kind::Knows:
        break;
      case Formula::Kind::Not:
      case Formula::Kind::Proves:
        work.push_back(cur.child());
        break;
      case Formula::Kind::And:
        work.push_back(cur.lhs());
        work.push_back(cur.rhs());
        break;
    }
  }
  return out;
}

std::set<std::pair<MessageTerm, std::string>> modal_signature(const Formula& f) {
  std::set<std::pair<MessageTerm, std::string>> out;
  for (const Formula& g : subformula_closure(f))
    if (g.kind() == Formula::Kind::Proves) out.insert({g.msg(), g.agent()});
  return out;
}

std::set<std::pair<std::string, MessageTerm>> knowledge_atoms(const Formula& f) {
  std::set<std::pair<std::string, MessageTerm>> out;
  for (const Formula& g : subformula_closure(f))
    if (g.kind() == Formula::Kind::Knows) out.insert({g.agent(), g.msg()});
  return out;
}

std::set<std::string> prop_names(const Formula& f) {
  std::set<std::string> out;
  for (const Formula& g : subformula_closure(f))
    if (g.kind() == Formula::Kind::Prop) out.insert(g.prop_name());
  return out;
}

// --- Schema construction ---------------------------------------------------

SchemaMsg SchemaMsg::atom(AgentRef a) {
  SchemaMsg m;
  m.node_ = std::make_shared<const Node>(Node{Kind::Atom, std::move(a), nullptr, nullptr});
  return m;
}
SchemaMsg SchemaMsg::pair(SchemaMsg l, SchemaMsg r) {
  SchemaMsg m;
  m.node_ = std::make_shared<const Node>(
      Node{Kind::Pair, AgentRef{}, std::make_shared<const SchemaMsg>(std::move(l)),
           std::make_shared<const SchemaMsg>(std::move(r))});
  return m;
}
SchemaMsg SchemaMsg::sig(SchemaMsg body, AgentRef signer) {
  SchemaMsg m;
  m.node_ = std::make_shared<const Node>(
      Node{Kind::Sig, std::move(signer), std::make_shared<const SchemaMsg>(std::move(body)), nullptr});
  return m;
}
SchemaMsg SchemaMsg::var(std::string name) {
  SchemaMsg m;
  m.node_ = std::make_shared<const Node>(Node{Kind::Var, AgentRef::var(std::move(name)), nullptr, nullptr});
  return m;
}

Schema Schema::prop(std::string name) {
  Schema s;
  s.node_ = std::make_shared<const Node>(
      Node{Kind::Prop, std::move(name), AgentRef{}, std::nullopt, nullptr, nullptr});
  return s;
}
Schema Schema::knows(AgentRef agent, SchemaMsg msg) {
  Schema s;
  s.node_ = std::make_shared<const Node>(
      Node{Kind::Knows, "", std::move(agent), std::move(msg), nullptr, nullptr});
  return s;
}
Schema Schema::s_not(Schema f) {
  Schema s;
  s.node_ = std::make_shared<const Node>(
      Node{Kind::Not, "", AgentRef{}, std::nullopt,
           std::make_shared<const Schema>(std::move(f)), nullptr});
  return s;
}
Schema Schema::s_and(Schema l, Schema r) {
  Schema s;
  s.node_ = std::make_shared<const Node>(
      Node{Kind::And, "", AgentRef{}, std::nullopt,
           std::make_shared<const Schema>(std::move(l)),
           std::make_shared<const Schema>(std::move(r))});
  return s;
}
Schema Schema::proves(SchemaMsg msg, AgentRef agent, Schema body) {
  Schema s;
  s.node_ = std::make_shared<const Node>(
      Node{Kind::Proves, "", std::move(agent), std::move(msg),
           std::make_shared<const Schema>(std::move(body)), nullptr});
  return s;
}
Schema Schema::fvar(std::string name) {
  Schema s;
  s.node_ = std::make_shared<const Node>(
      Node{Kind::FVar, std::move(name), AgentRef{}, std::nullopt, nullptr, nullptr});
  return s;
}
Schema Schema::s_or(Schema l, Schema r) {
  return s_not(s_and(s_not(std::move(l)), s_not(std::move(r))));
}
Schema Schema::s_imp(Schema l, Schema r) {
  return s_or(s_not(std::move(l)), std::move(r));
}
Schema Schema::s_iff(Schema l, Schema r) {
  return s_and(s_imp(l, r), s_imp(r, l));
}

// --- Schema matching -------------------------------------------------------

namespace {

bool match_agent(const AgentRef& pat, const std::string& agent, Substitution& theta) {
  if (!pat.is_var) return pat.name == agent;
  auto [it, inserted] = theta.agents.emplace(pat.name, agent);
  return inserted || it->second == agent;
}

bool match_msg(const SchemaMsg& pat, const MessageTerm& m, Substitution& theta) {
  switch (pat.kind()) {
    case SchemaMsg::Kind::Var: {
      auto [it, inserted] = theta.messages.emplace(pat.var_name(), m);
      return inserted || it->second == m;
    }
    case SchemaMsg::Kind::Atom:
      return m.kind() == MessageTerm::Kind::Atom && match_agent(pat.agent(), m.agent(), theta);
    case SchemaMsg::Kind::Pair:
      return m.kind() == MessageTerm::Kind::Pair &&
             match_msg(pat.left(), m.left(), theta) &&
             match_msg(pat.right(), m.right(), theta);
    case SchemaMsg::Kind::Sig:
      return m.kind() == MessageTerm::Kind::Sig &&
             match_agent(pat.agent(), m.agent(), theta) &&
             match_msg(pat.body(), m.body(), theta);
  }
  return false;
}

bool match_rec(const Schema& pat, const Formula& f, Substitution& theta) {
  switch (pat.kind()) {
    case Schema::Kind::FVar: {
      auto [it, inserted] = theta.formulas.emplace(pat.name(), f);
      return inserted || it->second == f;
    }
    case Schema::Kind::Prop:
      return f.kind() == Formula::Kind::Prop && f.prop_name() == pat.name();
    case Schema::Kind::Knows:
      return f.kind() == Formula::Kind::Knows &&
             match_agent(pat.agent(), f.agent(), theta) &&
             match_msg(pat.msg(), f.msg(), theta);
    case Schema::Kind::Not:
      return f.kind() == Formula::Kind::Not && match_rec(pat.child(), f.child(), theta);
    case Schema::Kind::And:
      return f.kind() == Formula::Kind::And &&
             match_rec(pat.lhs(), f.lhs(), theta) &&
             match_rec(pat.rhs(), f.rhs(), theta);
    case Schema::Kind::Proves:
      return f.kind() == Formula::Kind::Proves &&
             match_agent(pat.agent(), f.agent(), theta) &&
             match_msg(pat.msg(), f.msg(), theta) &&
             match_rec(pat.child(), f.child(), theta);
  }
  return false;
}

}  // namespace

std::optional<Substitution> match_schema(const Schema& s, const Formula& f) {
  Substitution theta;
  if (match_rec(s, f, theta)) return theta;
  return std::nullopt;
}

}  // namespace ldiip
