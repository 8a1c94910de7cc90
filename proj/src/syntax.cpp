#include "monadic/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

namespace monadic {

std::string_view to_string(Lang lang) { return lang == Lang::Int ? "int" : "mod"; }

Lang parse_lang(std::string_view text) {
  if (text == "int") return Lang::Int;
  if (text == "mod") return Lang::Mod;
  throw std::invalid_argument("unknown language '" + std::string(text) + "' (expected int or mod)");
}

SyntaxError::SyntaxError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

// ---------------------------------------------------------------------------
// Construction

Formula Formula::make(Lang lang, Connective op, std::string name, std::vector<Formula> children) {
  for (const auto& c : children) {
    if (c.lang() != lang) throw std::invalid_argument("formula mixes int and mod subterms");
  }
  if (op == Connective::Box && lang != Lang::Mod) {
    throw std::invalid_argument("box is not a connective of the intuitionistic language");
  }
  if (op == Connective::Exists && lang != Lang::Int) {
    throw std::invalid_argument("primitive E only exists in the intuitionistic language");
  }
  return Formula(std::make_shared<const Node>(Node{lang, op, std::move(name), std::move(children)}));
}

Formula Formula::bot(Lang lang) { return make(lang, Connective::Bot, {}, {}); }

Formula Formula::var(Lang lang, std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  return make(lang, Connective::Var, std::move(name), {});
}

Formula Formula::conj(Formula l, Formula r) {
  const Lang lang = l.lang();
  return make(lang, Connective::And, {}, {std::move(l), std::move(r)});
}

Formula Formula::disj(Formula l, Formula r) {
  const Lang lang = l.lang();
  return make(lang, Connective::Or, {}, {std::move(l), std::move(r)});
}

Formula Formula::imp(Formula l, Formula r) {
  const Lang lang = l.lang();
  return make(lang, Connective::Imp, {}, {std::move(l), std::move(r)});
}

Formula Formula::forall(Formula sub) {
  const Lang lang = sub.lang();
  return make(lang, Connective::Forall, {}, {std::move(sub)});
}

Formula Formula::exists(Formula sub) {
  if (sub.lang() == Lang::Mod) return neg(forall(neg(std::move(sub))));
  return make(Lang::Int, Connective::Exists, {}, {std::move(sub)});
}

Formula Formula::box(Formula sub) {
  const Lang lang = sub.lang();
  return make(lang, Connective::Box, {}, {std::move(sub)});
}

Formula Formula::top(Lang lang) { return imp(bot(lang), bot(lang)); }

Formula Formula::neg(Formula sub) {
  const Lang lang = sub.lang();
  return imp(std::move(sub), bot(lang));
}

Formula Formula::iff(Formula l, Formula r) { return conj(imp(l, r), imp(r, l)); }

Formula Formula::dia(Formula sub) { return neg(box(neg(std::move(sub)))); }

Formula Formula::master(Formula sub) { return box(forall(std::move(sub))); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->lang == b.node_->lang && a.node_->op == b.node_->op &&
         a.node_->name == b.node_->name && a.node_->children == b.node_->children;
}

std::set<std::string> Formula::variables() const {
  std::set<std::string> out;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (f.connective() == Connective::Var) out.insert(f.name());
    for (const auto& c : f.node_->children) walk(c);
  };
  walk(*this);
  return out;
}

std::size_t Formula::depth() const {
  std::size_t d = 0;
  for (const auto& c : node_->children) d = std::max(d, c.depth() + 1);
  return d;
}

Formula Formula::rename(const std::string& from, const std::string& to) const {
  if (connective() == Connective::Var) return name() == from ? var(lang(), to) : *this;
  if (node_->children.empty()) return *this;
  std::vector<Formula> kids;
  kids.reserve(node_->children.size());
  for (const auto& c : node_->children) kids.push_back(c.rename(from, to));
  return make(lang(), connective(), name(), std::move(kids));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { End, Iff, Imp, Or, And, Not, Box, Dia, Forall, Exists, Bot, Top, Ident, LParen, RParen };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (s.substr(i, 3) == "<->") {
      out.push_back({Tok::Iff, "<->", start});
      i += 3;
    } else if (s.substr(i, 2) == "->") {
      out.push_back({Tok::Imp, "->", start});
      i += 2;
    } else if (c == '|') {
      out.push_back({Tok::Or, "|", start});
      ++i;
    } else if (c == '&') {
      out.push_back({Tok::And, "&", start});
      ++i;
    } else if (c == '~') {
      out.push_back({Tok::Not, "~", start});
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::LParen, "(", start});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", start});
      ++i;
    } else if (c == 'A') {
      out.push_back({Tok::Forall, "A", start});
      ++i;
    } else if (c == 'E') {
      out.push_back({Tok::Exists, "E", start});
      ++i;
    } else if (c >= 'a' && c <= 'z') {
      while (i < s.size() && ident_char(s[i])) ++i;
      std::string word(s.substr(start, i - start));
      Tok kind = Tok::Ident;
      if (word == "box") kind = Tok::Box;
      else if (word == "dia") kind = Tok::Dia;
      else if (word == "bot") kind = Tok::Bot;
      else if (word == "top") kind = Tok::Top;
      out.push_back({kind, std::move(word), start});
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, Lang lang) : toks_(tokenize(text)), lang_(lang) {}

  Formula parse() {
    Formula f = parse_iff();
    if (peek().kind != Tok::End) throw SyntaxError("unexpected '" + peek().text + "'", peek().pos);
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (accept(Tok::Iff)) f = Formula::iff(f, parse_imp());
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (accept(Tok::Imp)) return Formula::imp(f, parse_imp());
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept(Tok::Or)) f = Formula::disj(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept(Tok::And)) f = Formula::conj(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Not:
        advance();
        return Formula::neg(parse_unary());
      case Tok::Box:
        advance();
        require_mod(t);
        return Formula::box(parse_unary());
      case Tok::Dia:
        advance();
        require_mod(t);
        return Formula::dia(parse_unary());
      case Tok::Forall:
        advance();
        return Formula::forall(parse_unary());
      case Tok::Exists:
        advance();
        return Formula::exists(parse_unary());
      default:
        return parse_atom();
    }
  }

  Formula parse_atom() {
    const Token& t = advance();
    switch (t.kind) {
      case Tok::Bot:
        return Formula::bot(lang_);
      case Tok::Top:
        return Formula::top(lang_);
      case Tok::Ident:
        return Formula::var(lang_, t.text);
      case Tok::LParen: {
        Formula f = parse_iff();
        if (!accept(Tok::RParen)) throw SyntaxError("expected ')'", peek().pos);
        return f;
      }
      case Tok::End:
        throw SyntaxError("unexpected end of input", t.pos);
      default:
        throw SyntaxError("unexpected '" + t.text + "'", t.pos);
    }
  }

  void require_mod(const Token& t) const {
    if (lang_ != Lang::Mod) {
      throw SyntaxError("'" + t.text + "' is not available in the int language", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Lang lang_;
};

// Printing precedences; higher binds tighter.
constexpr int kImp = 1;
constexpr int kOr = 2;
constexpr int kAnd = 3;
constexpr int kUnary = 4;

bool is_neg(const Formula& f) {
  return f.connective() == Connective::Imp && f.rhs().connective() == Connective::Bot;
}

void print_into(const Formula& f, int context, std::string& out);

void print_unary(const char* op, const Formula& sub, int context, std::string& out) {
  const bool wrap = kUnary < context;
  if (wrap) out += '(';
  out += op;
  print_into(sub, kUnary, out);
  if (wrap) out += ')';
}

void print_binary(const char* op, const Formula& f, int prec, int lprec, int rprec, int context,
                  std::string& out) {
  const bool wrap = prec < context;
  if (wrap) out += '(';
  print_into(f.lhs(), lprec, out);
  out += op;
  print_into(f.rhs(), rprec, out);
  if (wrap) out += ')';
}

void print_into(const Formula& f, int context, std::string& out) {
  switch (f.connective()) {
    case Connective::Bot:
      out += "bot";
      return;
    case Connective::Var:
      out += f.name();
      return;
    case Connective::And:
      print_binary(" & ", f, kAnd, kAnd, kUnary, context, out);
      return;
    case Connective::Or:
      print_binary(" | ", f, kOr, kOr, kAnd, context, out);
      return;
    case Connective::Imp:
      if (is_neg(f)) {
        const Formula& body = f.lhs();
        if (body.connective() == Connective::Bot) {
          out += "top";
          return;
        }
        if (f.lang() == Lang::Mod && (body.connective() == Connective::Forall ||
                                      body.connective() == Connective::Box) &&
            is_neg(body.sub())) {
          const char* op = body.connective() == Connective::Forall ? "E " : "dia ";
          print_unary(op, body.sub().lhs(), context, out);
          return;
        }
        print_unary("~", body, context, out);
        return;
      }
      print_binary(" -> ", f, kImp, kOr, kImp, context, out);
      return;
    case Connective::Forall:
      print_unary("A ", f.sub(), context, out);
      return;
    case Connective::Exists:
      print_unary("E ", f.sub(), context, out);
      return;
    case Connective::Box:
      print_unary("box ", f.sub(), context, out);
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text, Lang lang) { return Parser(text, lang).parse(); }

std::string print(const Formula& f) {
  std::string out;
  print_into(f, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Translation

Formula godel_translate(const Formula& f) {
  if (f.lang() != Lang::Int) throw std::invalid_argument("translation expects an int formula");
  switch (f.connective()) {
    case Connective::Bot:
      return Formula::bot(Lang::Mod);
    case Connective::Var:
      return Formula::box(Formula::var(Lang::Mod, f.name()));
    case Connective::And:
      return Formula::conj(godel_translate(f.lhs()), godel_translate(f.rhs()));
    case Connective::Or:
      return Formula::disj(godel_translate(f.lhs()), godel_translate(f.rhs()));
    case Connective::Imp:
      return Formula::box(
          Formula::disj(Formula::neg(godel_translate(f.lhs())), godel_translate(f.rhs())));
    case Connective::Forall:
      return Formula::master(godel_translate(f.sub()));
    case Connective::Exists:
      return Formula::exists(godel_translate(f.sub()));
    case Connective::Box:
      break;
  }
  throw std::logic_error("int formula contains box");
}

Formula fresh_disjunction(const Formula& f, const Formula& g) {
  if (f.lang() != g.lang()) throw std::invalid_argument("fresh_disjunction: mixed languages");
  const auto left = f.variables();
  std::set<std::string> taken = left;
  const auto right = g.variables();
  taken.insert(right.begin(), right.end());

  // Two-phase rename through placeholders so chains like p -> p' -> p'' cannot collide.
  std::map<std::string, std::string> plan;
  for (const auto& v : right) {
    if (left.count(v) == 0) continue;
    std::string candidate = v + "'";
    while (taken.count(candidate) != 0) candidate += "'";
    taken.insert(candidate);
    plan[v] = candidate;
  }
  Formula renamed = g;
  std::size_t k = 0;
  std::vector<std::pair<std::string, std::string>> second;
  for (const auto& [from, to] : plan) {
    const std::string placeholder = "#" + std::to_string(k++);
    renamed = renamed.rename(from, placeholder);
    second.emplace_back(placeholder, to);
  }
  for (const auto& [placeholder, to] : second) renamed = renamed.rename(placeholder, to);
  return Formula::disj(f, renamed);
}

std::vector<Formula> axiom_corpus(std::string_view name) {
  std::vector<const char*> sources;
  Lang lang = Lang::Int;
  if (name == "mipc") {
    sources = {
        "A(p & q) <-> (A p & A q)", "A p -> p", "A p -> A A p",
        "E(p | q) <-> (E p | E q)", "p -> E p", "E E p -> E p",
        "(E p & E q) -> E(E p & q)",
        "E A p <-> A p", "E p <-> A E p",
    };
  } else if (name == "ms4") {
    lang = Lang::Mod;
    sources = {
        "box(p & q) <-> (box p & box q)", "box p -> p", "box p -> box box p",
        "A(p & q) <-> (A p & A q)", "A p -> p", "A p -> A A p", "~A p -> A ~A p",
        "box A p -> A box p",
    };
  } else if (name == "grz") {
    lang = Lang::Mod;
    sources = {"box(box(p -> box p) -> p) -> p"};
  } else {
    throw std::invalid_argument("unknown axiom corpus '" + std::string(name) + "'");
  }
  std::vector<Formula> out;
  out.reserve(sources.size());
  for (const char* s : sources) out.push_back(parse_formula(s, lang));
  return out;
}

}  // namespace monadic
