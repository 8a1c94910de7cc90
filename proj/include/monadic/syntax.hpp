#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace monadic {

/// Int is the intuitionistic language with quantifier modalities A and E;
/// Mod is the classical bimodal language with box and A.
enum class Lang { Int, Mod };

enum class Connective { Bot, Var, And, Or, Imp, Forall, Exists, Box };

std::string_view to_string(Lang lang);
Lang parse_lang(std::string_view text);

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Immutable formula tree. Negation, top, biconditional, dia, the modal
/// existential and the master modality are expanded into the core
/// connectives when built, so only Connective values appear in the tree.
class Formula {
 public:
  static Formula bot(Lang lang);
  static Formula var(Lang lang, std::string name);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula imp(Formula l, Formula r);
  static Formula forall(Formula sub);
  /// Primitive under Int; expands to ~A~ under Mod.
  static Formula exists(Formula sub);
  static Formula box(Formula sub);

  static Formula top(Lang lang);
  static Formula neg(Formula sub);
  static Formula iff(Formula l, Formula r);
  static Formula dia(Formula sub);
  /// box A, the master modality.
  static Formula master(Formula sub);

  Lang lang() const { return node_->lang; }
  Connective connective() const { return node_->op; }
  const std::string& name() const { return node_->name; }
  const Formula& lhs() const { return node_->children.at(0); }
  const Formula& rhs() const { return node_->children.at(1); }
  const Formula& sub() const { return node_->children.at(0); }
  std::size_t arity() const { return node_->children.size(); }

  std::set<std::string> variables() const;
  std::size_t depth() const;
  Formula rename(const std::string& from, const std::string& to) const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Lang lang;
    Connective op;
    std::string name;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Lang lang, Connective op, std::string name, std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

/// Grammar, loosest to tightest: <->, -> (right-assoc), |, &, unary (~ box dia A E),
/// atoms (bot, top, [a-z][a-zA-Z0-9_']*, parenthesised).
Formula parse_formula(std::string_view text, Lang lang);

/// Prints in the parser's concrete syntax; parse_formula(print(f), f.lang()) == f.
std::string print(const Formula& f);

/// Intuitionistic formula to its modal translation.
Formula godel_translate(const Formula& f);

/// f | g' where g' renames the variables shared with f to fresh primed variants.
Formula fresh_disjunction(const Formula& f, const Formula& g);

/// Axiom lists by name: "mipc", "ms4", "grz".
std::vector<Formula> axiom_corpus(std::string_view name);

}  // namespace monadic
