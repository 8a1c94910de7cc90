#include "monadic/semantics.hpp"

#include <stdexcept>
#include <vector>

namespace monadic {

namespace {

// Postorder program; evaluation runs on a small value stack.
struct Instr {
  Connective op;
  std::size_t slot = 0;  // variable index for Var
};

struct Program {
  std::vector<std::string> variables;  // sorted
  std::vector<Instr> code;
};

void compile_into(const Formula& f, const std::map<std::string, std::size_t>& slots,
                  std::vector<Instr>& code) {
  for (std::size_t i = 0; i < f.arity(); ++i) {
    compile_into(i == 0 ? f.lhs() : f.rhs(), slots, code);
  }
  Instr in{f.connective()};
  if (f.connective() == Connective::Var) in.slot = slots.at(f.name());
  code.push_back(in);
}

Program compile(const Formula& f) {
  Program p;
  std::map<std::string, std::size_t> slots;
  for (const auto& v : f.variables()) {
    slots.emplace(v, p.variables.size());
    p.variables.push_back(v);
  }
  compile_into(f, slots, p.code);
  return p;
}

Elem run(const FiniteMha& a, const Program& p, const std::vector<Elem>& values,
         std::vector<Elem>& stack) {
  stack.clear();
  for (const Instr& in : p.code) {
    switch (in.op) {
      case Connective::Bot: stack.push_back(a.bot()); break;
      case Connective::Var: stack.push_back(values[in.slot]); break;
      case Connective::Forall: stack.back() = a.forall[stack.back()]; break;
      case Connective::Exists: stack.back() = a.exists[stack.back()]; break;
      case Connective::Box: throw std::logic_error("box in an intuitionistic formula");
      default: {
        const Elem r = stack.back();
        stack.pop_back();
        const Elem l = stack.back();
        stack.back() = in.op == Connective::And  ? a.meet(l, r)
                       : in.op == Connective::Or ? a.join(l, r)
                                                 : a.imp(l, r);
      }
    }
  }
  return stack.back();
}

Elem run(const FiniteMs4Algebra& b, const Program& p, const std::vector<Elem>& values,
         std::vector<Elem>& stack) {
  stack.clear();
  for (const Instr& in : p.code) {
    switch (in.op) {
      case Connective::Bot: stack.push_back(b.bot()); break;
      case Connective::Var: stack.push_back(values[in.slot]); break;
      case Connective::Forall: stack.back() = b.forall[stack.back()]; break;
      case Connective::Box: stack.back() = b.box[stack.back()]; break;
      case Connective::Exists: throw std::logic_error("primitive E in a modal formula");
      default: {
        const Elem r = stack.back();
        stack.pop_back();
        const Elem l = stack.back();
        stack.back() = in.op == Connective::And  ? b.meet(l, r)
                       : in.op == Connective::Or ? b.join(l, r)
                                                 : b.imp(l, r);
      }
    }
  }
  return stack.back();
}

void require_lang(const Formula& f, Lang lang) {
  if (f.lang() != lang) {
    throw std::invalid_argument(lang == Lang::Int
                                    ? "monadic Heyting algebras interpret int formulas"
                                    : "MS4-algebras interpret mod formulas");
  }
}

template <class A>
Elem evaluate_impl(const A& a, const Valuation& v, const Formula& f) {
  const Program p = compile(f);
  std::vector<Elem> values;
  for (const auto& name : p.variables) {
    const auto it = v.find(name);
    if (it == v.end()) throw std::invalid_argument("variable '" + name + "' is unassigned");
    if (it->second >= a.n) throw std::invalid_argument("valuation of '" + name + "' out of range");
    values.push_back(it->second);
  }
  std::vector<Elem> stack;
  return run(a, p, values, stack);
}

template <class A>
Validity validates_impl(const A& a, const Formula& f, std::size_t max_vars) {
  const Program p = compile(f);
  const std::size_t k = p.variables.size();
  if (k > max_vars) {
    throw std::invalid_argument("formula has " + std::to_string(k) + " variables; the limit is " +
                                std::to_string(max_vars));
  }
  std::vector<Elem> values(k, 0);
  std::vector<Elem> stack;
  for (;;) {
    if (run(a, p, values, stack) != a.top()) {
      Valuation counter;
      for (std::size_t i = 0; i < k; ++i) counter.emplace(p.variables[i], values[i]);
      return {false, std::move(counter)};
    }
    // Odometer with the last variable fastest.
    std::size_t i = k;
    while (i > 0 && ++values[i - 1] == a.n) values[--i] = 0;
    if (i == 0) break;
  }
  return {true, std::nullopt};
}

}  // namespace

Elem evaluate(const FiniteMha& a, const Valuation& v, const Formula& f) {
  require_lang(f, Lang::Int);
  return evaluate_impl(a, v, f);
}

Elem evaluate(const FiniteMs4Algebra& b, const Valuation& v, const Formula& f) {
  require_lang(f, Lang::Mod);
  return evaluate_impl(b, v, f);
}

Validity validates(const FiniteMha& a, const Formula& f, std::size_t max_vars) {
  require_lang(f, Lang::Int);
  return validates_impl(a, f, max_vars);
}

Validity validates(const FiniteMs4Algebra& b, const Formula& f, std::size_t max_vars) {
  require_lang(f, Lang::Mod);
  return validates_impl(b, f, max_vars);
}

bool translation_equivalence(const FiniteMs4Algebra& b, const Formula& f) {
  const OpenAlgebra open = open_algebra(b);
  return validates(open.algebra, f).valid == validates(b, godel_translate(f)).valid;
}

bool intersection_step(const FiniteMs4Algebra& b, const Formula& g1, const Formula& g2) {
  if (!subdirectly_irreducible(b)) {
    throw std::invalid_argument("intersection_step needs a subdirectly irreducible algebra");
  }
  const Formula joined = fresh_disjunction(Formula::master(g1), Formula::master(g2));
  const bool left = validates(b, joined, 8).valid;
  const bool right = validates(b, g1).valid || validates(b, g2).valid;
  return left == right;
}

Formula random_formula(Lang lang, std::mt19937_64& rng, std::size_t depth, std::size_t vars) {
  static const char* const kNames[] = {"p", "q", "r", "s", "t", "u"};
  if (vars == 0 || vars > 6) throw std::invalid_argument("random_formula: vars must be 1..6");
  auto leaf = [&]() {
    const auto pick = rng() % (vars + 1);
    return pick == vars ? Formula::bot(lang) : Formula::var(lang, kNames[pick]);
  };
  if (depth == 0) return leaf();
  // Bot/Var, And, Or, Imp, Forall, and Exists (Int) or Box (Mod).
  switch (rng() % 6) {
    case 0: return leaf();
    case 1: {
      auto l = random_formula(lang, rng, depth - 1, vars);
      return Formula::conj(std::move(l), random_formula(lang, rng, depth - 1, vars));
    }
    case 2: {
      auto l = random_formula(lang, rng, depth - 1, vars);
      return Formula::disj(std::move(l), random_formula(lang, rng, depth - 1, vars));
    }
    case 3: {
      auto l = random_formula(lang, rng, depth - 1, vars);
      return Formula::imp(std::move(l), random_formula(lang, rng, depth - 1, vars));
    }
    case 4: return Formula::forall(random_formula(lang, rng, depth - 1, vars));
    default: {
      auto sub = random_formula(lang, rng, depth - 1, vars);
      return lang == Lang::Int ? Formula::exists(std::move(sub)) : Formula::box(std::move(sub));
    }
  }
}

}  // namespace monadic
