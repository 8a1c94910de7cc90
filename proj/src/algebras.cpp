#include "monadic/algebras.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

#include "monadic/duality.hpp"
#include "monadic/frames.hpp"

namespace monadic {

bool MonadicFilter::contains(Elem a) const {
  return std::binary_search(elements.begin(), elements.end(), a);
}

namespace {

constexpr Elem kAbsent = std::numeric_limits<Elem>::max();

// Uniform access to the operation tables of both algebra kinds.
template <class A>
struct Ops;

template <>
struct Ops<FiniteMha> {
  static constexpr const char* kBinary[] = {"meet", "join", "imp"};
  static constexpr const char* kUnary[] = {"forall", "exists"};
  static std::vector<const Table*> binary(const FiniteMha& a) { return {&a.meet, &a.join, &a.imp}; }
  static std::vector<Table*> binary(FiniteMha& a) { return {&a.meet, &a.join, &a.imp}; }
  static std::vector<const std::vector<Elem>*> unary(const FiniteMha& a) {
    return {&a.forall, &a.exists};
  }
  static std::vector<std::vector<Elem>*> unary(FiniteMha& a) { return {&a.forall, &a.exists}; }
  // Operators a monadic filter must be closed under.
  static std::vector<Elem> filter_closure(const FiniteMha& a, Elem x) { return {a.forall[x]}; }
  static Elem iff(const FiniteMha& a, Elem x, Elem y) { return a.meet(a.imp(x, y), a.imp(y, x)); }
};

template <>
struct Ops<FiniteMs4Algebra> {
  static constexpr const char* kBinary[] = {"meet", "join"};
  static constexpr const char* kUnary[] = {"neg", "box", "forall"};
  static std::vector<const Table*> binary(const FiniteMs4Algebra& b) { return {&b.meet, &b.join}; }
  static std::vector<Table*> binary(FiniteMs4Algebra& b) { return {&b.meet, &b.join}; }
  static std::vector<const std::vector<Elem>*> unary(const FiniteMs4Algebra& b) {
    return {&b.neg, &b.box, &b.forall};
  }
  static std::vector<std::vector<Elem>*> unary(FiniteMs4Algebra& b) {
    return {&b.neg, &b.box, &b.forall};
  }
  static std::vector<Elem> filter_closure(const FiniteMs4Algebra& b, Elem x) {
    return {b.forall[x], b.box[x]};
  }
  static Elem iff(const FiniteMs4Algebra& b, Elem x, Elem y) {
    return b.meet(b.imp(x, y), b.imp(y, x));
  }
};

template <class A>
void require_tables(const A& a) {
  if (a.n == 0) throw std::invalid_argument("algebra has an empty carrier");
  for (const Table* t : Ops<A>::binary(a)) {
    if (t->size() != a.n) throw std::invalid_argument("operation table is not n x n");
    for (Elem x = 0; x < a.n; ++x) {
      for (Elem y = 0; y < a.n; ++y) {
        if ((*t)(x, y) >= a.n) throw std::invalid_argument("operation table entry out of range");
      }
    }
  }
  for (const auto* u : Ops<A>::unary(a)) {
    if (u->size() != a.n) throw std::invalid_argument("unary operation is not sized n");
    for (Elem v : *u) {
      if (v >= a.n) throw std::invalid_argument("unary operation entry out of range");
    }
  }
  if (!a.labels.empty() && a.labels.size() != a.n) {
    throw std::invalid_argument("labels are not sized n");
  }
}

// Builds the algebra on `carrier` (listed in the desired index order), sending
// each operation result through `canon` before looking it up.
template <class A>
A rebuild(const A& a, const std::vector<Elem>& carrier, const std::function<Elem(Elem)>& canon) {
  std::vector<Elem> index(a.n, kAbsent);
  for (std::size_t i = 0; i < carrier.size(); ++i) index[carrier[i]] = static_cast<Elem>(i);
  auto lookup = [&](Elem x) {
    const Elem i = index[canon(x)];
    if (i == kAbsent) throw std::invalid_argument("element set is not closed under the operations");
    return i;
  };

  A out;
  out.n = carrier.size();
  const auto src_bin = Ops<A>::binary(a);
  const auto dst_bin = Ops<A>::binary(out);
  for (std::size_t k = 0; k < src_bin.size(); ++k) {
    Table t(out.n);
    for (Elem i = 0; i < out.n; ++i) {
      for (Elem j = 0; j < out.n; ++j) t.set(i, j, lookup((*src_bin[k])(carrier[i], carrier[j])));
    }
    *dst_bin[k] = std::move(t);
  }
  const auto src_un = Ops<A>::unary(a);
  const auto dst_un = Ops<A>::unary(out);
  for (std::size_t k = 0; k < src_un.size(); ++k) {
    std::vector<Elem> u(out.n);
    for (Elem i = 0; i < out.n; ++i) u[i] = lookup((*src_un[k])[carrier[i]]);
    *dst_un[k] = std::move(u);
  }
  if (!a.labels.empty()) {
    for (Elem c : carrier) out.labels.push_back(a.labels[c]);
  }
  return out;
}

template <class A>
A normalized_impl(const A& a) {
  require_tables(a);
  std::optional<Elem> bot, top;
  for (Elem x = 0; x < a.n; ++x) {
    bool is_bot = true, is_top = true;
    for (Elem y = 0; y < a.n; ++y) {
      is_bot = is_bot && a.meet(x, y) == x;
      is_top = is_top && a.meet(x, y) == y;
    }
    if (is_bot && !bot) bot = x;
    if (is_top && !top) top = x;
  }
  if (!bot || !top) throw std::invalid_argument("lattice has no bottom or no top");
  std::vector<Elem> carrier{*bot};
  for (Elem x = 0; x < a.n; ++x) {
    if (x != *bot && x != *top) carrier.push_back(x);
  }
  if (*top != *bot) carrier.push_back(*top);
  if (carrier.size() != a.n) throw std::invalid_argument("bottom equals top in a nontrivial algebra");
  return rebuild(a, carrier, [](Elem x) { return x; });
}

// --- identity checks -------------------------------------------------------

template <class Pred>
void check_all1(ValidationReport& r, const char* id, std::size_t n, Pred&& p) {
  for (Elem a = 0; a < n; ++a) {
    if (!p(a)) {
      r.add(id, {a});
      return;
    }
  }
}

template <class Pred>
void check_all2(ValidationReport& r, const char* id, std::size_t n, Pred&& p) {
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (!p(a, b)) {
        r.add(id, {a, b});
        return;
      }
    }
  }
}

template <class Pred>
void check_all3(ValidationReport& r, const char* id, std::size_t n, Pred&& p) {
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (!p(a, b, c)) {
          r.add(id, {a, b, c});
          return;
        }
      }
    }
  }
}

template <class A>
void check_distributive_lattice(const A& x, ValidationReport& r) {
  const auto n = x.n;
  const Elem bot = x.bot();
  const Elem top = x.top();
  const auto& m = x.meet;
  const auto& j = x.join;
  check_all2(r, "meet-commutative", n, [&](Elem a, Elem b) { return m(a, b) == m(b, a); });
  check_all2(r, "join-commutative", n, [&](Elem a, Elem b) { return j(a, b) == j(b, a); });
  check_all1(r, "meet-idempotent", n, [&](Elem a) { return m(a, a) == a; });
  check_all1(r, "join-idempotent", n, [&](Elem a) { return j(a, a) == a; });
  check_all3(r, "meet-associative", n,
             [&](Elem a, Elem b, Elem c) { return m(m(a, b), c) == m(a, m(b, c)); });
  check_all3(r, "join-associative", n,
             [&](Elem a, Elem b, Elem c) { return j(j(a, b), c) == j(a, j(b, c)); });
  check_all2(r, "absorption", n,
             [&](Elem a, Elem b) { return m(a, j(a, b)) == a && j(a, m(a, b)) == a; });
  check_all1(r, "bounds", n, [&](Elem a) { return m(bot, a) == bot && m(top, a) == a; });
  check_all3(r, "distributive", n,
             [&](Elem a, Elem b, Elem c) { return m(a, j(b, c)) == j(m(a, b), m(a, c)); });
}

}  // namespace

ValidationReport validate_algebra(const FiniteMha& x) {
  require_tables(x);
  ValidationReport r;
  check_distributive_lattice(x, r);
  const auto n = x.n;
  const Elem top = x.top();
  const Elem bot = x.bot();
  const auto& m = x.meet;
  const auto& j = x.join;
  const auto& all = x.forall;
  const auto& ex = x.exists;
  auto leq = [&](Elem a, Elem b) { return x.leq(a, b); };

  check_all3(r, "residuation", n, [&](Elem a, Elem b, Elem c) {
    return leq(m(a, b), c) == leq(a, x.imp(b, c));
  });
  check_all2(r, "forall-meet", n, [&](Elem a, Elem b) { return all[m(a, b)] == m(all[a], all[b]); });
  check_all1(r, "forall-deflationary", n, [&](Elem a) { return leq(all[a], a); });
  check_all1(r, "forall-idempotent", n, [&](Elem a) { return leq(all[a], all[all[a]]); });
  check_all1(r, "forall-top", 1, [&](Elem) { return all[top] == top; });
  check_all2(r, "exists-join", n, [&](Elem a, Elem b) { return ex[j(a, b)] == j(ex[a], ex[b]); });
  check_all1(r, "exists-inflationary", n, [&](Elem a) { return leq(a, ex[a]); });
  check_all1(r, "exists-idempotent", n, [&](Elem a) { return leq(ex[ex[a]], ex[a]); });
  check_all2(r, "exists-meet", n,
             [&](Elem a, Elem b) { return leq(m(ex[a], ex[b]), ex[m(ex[a], b)]); });
  check_all1(r, "exists-forall", n, [&](Elem a) { return ex[all[a]] == all[a]; });
  check_all1(r, "forall-exists", n, [&](Elem a) { return ex[a] == all[ex[a]]; });

  // Adjunctions with the inclusion of the fixpoints H0 of forall.
  std::vector<Elem> h0;
  for (Elem a = 0; a < n; ++a) {
    if (all[a] == a) h0.push_back(a);
  }
  check_all1(r, "forall-right-adjoint", n, [&](Elem a) {
    return std::all_of(h0.begin(), h0.end(), [&](Elem h) { return leq(h, a) == leq(h, all[a]); });
  });
  check_all1(r, "exists-left-adjoint", n, [&](Elem a) {
    return std::all_of(h0.begin(), h0.end(), [&](Elem h) { return leq(ex[a], h) == leq(a, h); });
  });
  (void)bot;
  return r;
}

ValidationReport validate_algebra(const FiniteMs4Algebra& x) {
  require_tables(x);
  ValidationReport r;
  check_distributive_lattice(x, r);
  const auto n = x.n;
  const Elem top = x.top();
  const Elem bot = x.bot();
  const auto& m = x.meet;
  const auto& j = x.join;
  const auto& box = x.box;
  const auto& all = x.forall;
  auto leq = [&](Elem a, Elem b) { return x.leq(a, b); };

  check_all1(r, "complement", n,
             [&](Elem a) { return m(a, x.neg[a]) == bot && j(a, x.neg[a]) == top; });
  check_all2(r, "box-meet", n, [&](Elem a, Elem b) { return box[m(a, b)] == m(box[a], box[b]); });
  check_all1(r, "box-top", 1, [&](Elem) { return box[top] == top; });
  check_all1(r, "box-deflationary", n, [&](Elem a) { return leq(box[a], a); });
  check_all1(r, "box-idempotent", n, [&](Elem a) { return leq(box[a], box[box[a]]); });
  check_all2(r, "forall-meet", n, [&](Elem a, Elem b) { return all[m(a, b)] == m(all[a], all[b]); });
  check_all1(r, "forall-top", 1, [&](Elem) { return all[top] == top; });
  check_all1(r, "forall-deflationary", n, [&](Elem a) { return leq(all[a], a); });
  check_all1(r, "forall-idempotent", n, [&](Elem a) { return leq(all[a], all[all[a]]); });
  check_all1(r, "forall-s5", n, [&](Elem a) { return leq(x.neg[all[a]], all[x.neg[all[a]]]); });
  check_all1(r, "left-commutativity", n, [&](Elem a) { return leq(box[all[a]], all[box[a]]); });
  check_all1(r, "master-identities", n, [&](Elem a) {
    const Elem ma = x.master(a);
    return x.master(box[a]) == ma && box[ma] == ma && x.master(all[a]) == ma && all[ma] == ma;
  });
  return r;
}

FiniteMha normalized(const FiniteMha& a) { return normalized_impl(a); }
FiniteMs4Algebra normalized(const FiniteMs4Algebra& b) { return normalized_impl(b); }

OpenAlgebra open_algebra(const FiniteMs4Algebra& b) {
  require_tables(b);
  std::vector<Elem> carrier;
  std::vector<Elem> index(b.n, kAbsent);
  for (Elem a = 0; a < b.n; ++a) {
    if (b.box[a] == a) {
      index[a] = static_cast<Elem>(carrier.size());
      carrier.push_back(a);
    }
  }
  auto open_index = [&](Elem a) {
    if (index[a] == kAbsent) throw std::logic_error("operation leaves the open elements");
    return index[a];
  };

  FiniteMha h;
  h.n = carrier.size();
  h.meet = Table(h.n);
  h.join = Table(h.n);
  h.imp = Table(h.n);
  h.forall.resize(h.n);
  h.exists.resize(h.n);
  for (Elem i = 0; i < h.n; ++i) {
    const Elem x = carrier[i];
    for (Elem k = 0; k < h.n; ++k) {
      const Elem y = carrier[k];
      h.meet.set(i, k, open_index(b.meet(x, y)));
      h.join.set(i, k, open_index(b.join(x, y)));
      h.imp.set(i, k, open_index(b.box[b.imp(x, y)]));
    }
    h.forall[i] = open_index(b.master(x));
    h.exists[i] = open_index(b.exists(x));
    if (!b.labels.empty()) h.labels.push_back(b.labels[x]);
  }
  return {std::move(h), std::move(carrier)};
}

namespace {

std::vector<Elem> sorted_unique(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Elem> image_of(const std::vector<Elem>& op) { return sorted_unique(op); }

std::vector<Elem> fixpoints_of(const std::vector<Elem>& op) {
  std::vector<Elem> out;
  for (Elem a = 0; a < op.size(); ++a) {
    if (op[a] == a) out.push_back(a);
  }
  return out;
}

}  // namespace

std::vector<Elem> fixpoint_subalgebra(const FiniteMha& a) {
  require_tables(a);
  auto h0 = image_of(a.forall);
  if (h0 != fixpoints_of(a.forall) || h0 != fixpoints_of(a.exists) || h0 != image_of(a.exists)) {
    throw std::domain_error("the four descriptions of the fixpoint subalgebra differ");
  }
  return h0;
}

std::vector<Elem> fixpoint_subalgebra(const FiniteMs4Algebra& b) {
  require_tables(b);
  auto b0 = image_of(b.forall);
  std::vector<Elem> ex(b.n);
  for (Elem a = 0; a < b.n; ++a) ex[a] = b.exists(a);
  if (b0 != fixpoints_of(b.forall) || b0 != image_of(ex)) {
    throw std::domain_error("the descriptions of the fixpoint subalgebra differ");
  }
  return b0;
}

namespace {

template <class A>
bool is_monadic_filter_impl(const A& a, const std::vector<Elem>& elements) {
  std::vector<char> in(a.n, 0);
  for (Elem x : elements) {
    if (x >= a.n) return false;
    in[x] = 1;
  }
  if (!in[a.top()]) return false;
  for (Elem x = 0; x < a.n; ++x) {
    if (!in[x]) continue;
    for (Elem y = 0; y < a.n; ++y) {
      if (a.leq(x, y) && !in[y]) return false;
      if (in[y] && !in[a.meet(x, y)]) return false;
    }
    for (Elem c : Ops<A>::filter_closure(a, x)) {
      if (!in[c]) return false;
    }
  }
  return true;
}

template <class A>
std::vector<MonadicFilter> monadic_filters_impl(const A& a) {
  require_tables(a);
  std::vector<MonadicFilter> out;
  for (Elem g = 0; g < a.n; ++g) {
    MonadicFilter f{g, {}};
    for (Elem x = 0; x < a.n; ++x) {
      if (a.leq(g, x)) f.elements.push_back(x);
    }
    if (is_monadic_filter_impl(a, f.elements)) out.push_back(std::move(f));
  }
  return out;
}

template <class A>
Quotient<A> quotient_impl(const A& a, const MonadicFilter& f) {
  require_tables(a);
  if (!is_monadic_filter_impl(a, f.elements)) {
    throw std::invalid_argument("quotient: the given set is not a monadic filter");
  }
  std::vector<char> in(a.n, 0);
  for (Elem x : f.elements) in[x] = 1;

  std::vector<Elem> rep(a.n, kAbsent);
  for (Elem x = 0; x < a.n; ++x) {
    if (rep[x] != kAbsent) continue;
    std::vector<Elem> cls;
    for (Elem y = 0; y < a.n; ++y) {
      if (in[Ops<A>::iff(a, x, y)]) cls.push_back(y);
    }
    Elem least = kAbsent;
    for (Elem c : cls) {
      if (std::all_of(cls.begin(), cls.end(), [&](Elem d) { return a.leq(c, d); })) least = c;
    }
    if (least == kAbsent) throw std::logic_error("congruence class has no least element");
    for (Elem c : cls) rep[c] = least;
  }

  std::vector<Elem> reps = sorted_unique(rep);
  A raw = rebuild(a, reps, [&](Elem x) { return rep[x]; });
  // Bottom is the least representative; top may sit anywhere, so renormalize.
  const Elem top_rep = rep[a.top()];
  std::vector<Elem> order;
  for (Elem x : reps) {
    if (x != top_rep) order.push_back(x);
  }
  order.push_back(top_rep);

  Quotient<A> q;
  q.algebra = rebuild(a, order, [&](Elem x) { return rep[x]; });
  std::vector<Elem> position(a.n, kAbsent);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<Elem>(i);
  q.projection.resize(a.n);
  for (Elem x = 0; x < a.n; ++x) q.projection[x] = position[rep[x]];
  (void)raw;
  return q;
}

template <class A>
std::vector<Elem> generated_impl(const A& a, const std::vector<Elem>& seed) {
  require_tables(a);
  std::vector<char> in(a.n, 0);
  std::vector<Elem> members;
  auto add = [&](Elem x) {
    if (x >= a.n) throw std::invalid_argument("seed element out of range");
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  add(a.bot());
  add(a.top());
  for (Elem s : seed) add(s);

  const auto bin = Ops<A>::binary(a);
  const auto un = Ops<A>::unary(a);
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t before = members.size();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (const auto* u : un) add((*u)[members[i]]);
      for (std::size_t k = 0; k <= i; ++k) {
        for (const Table* t : bin) {
          add((*t)(members[i], members[k]));
          add((*t)(members[k], members[i]));
        }
      }
    }
    changed = members.size() != before;
  }
  return sorted_unique(members);
}

template <class A>
std::vector<Elem> irreducibles(const A& a) {
  std::vector<Elem> out;
  for (Elem x = 0; x < a.n; ++x) {
    if (x == a.bot()) continue;
    Elem below = a.bot();
    for (Elem y = 0; y < a.n; ++y) {
      if (y != x && a.leq(y, x)) below = a.join(below, y);
    }
    if (below != x) out.push_back(x);
  }
  return out;
}

template <class A>
A product_impl(const A& a1, const A& a2) {
  require_tables(a1);
  require_tables(a2);
  A out;
  out.n = a1.n * a2.n;
  const auto n2 = static_cast<Elem>(a2.n);
  auto pair = [&](Elem i, Elem j) { return i * n2 + j; };
  const auto b1 = Ops<A>::binary(a1);
  const auto b2 = Ops<A>::binary(a2);
  const auto bo = Ops<A>::binary(out);
  for (std::size_t k = 0; k < bo.size(); ++k) {
    Table t(out.n);
    for (Elem x = 0; x < out.n; ++x) {
      for (Elem y = 0; y < out.n; ++y) {
        t.set(x, y, pair((*b1[k])(x / n2, y / n2), (*b2[k])(x % n2, y % n2)));
      }
    }
    *bo[k] = std::move(t);
  }
  const auto u1 = Ops<A>::unary(a1);
  const auto u2 = Ops<A>::unary(a2);
  const auto uo = Ops<A>::unary(out);
  for (std::size_t k = 0; k < uo.size(); ++k) {
    std::vector<Elem> u(out.n);
    for (Elem x = 0; x < out.n; ++x) u[x] = pair((*u1[k])[x / n2], (*u2[k])[x % n2]);
    *uo[k] = std::move(u);
  }
  auto label = [](const A& a, Elem i) {
    return a.labels.empty() ? std::to_string(i) : a.labels[i];
  };
  for (Elem x = 0; x < out.n; ++x) {
    out.labels.push_back("(" + label(a1, x / n2) + "," + label(a2, x % n2) + ")");
  }
  return out;
}

template <class A>
bool si_algebraic(const A& a) {
  std::vector<Elem> generators;
  for (const auto& f : monadic_filters_impl(a)) {
    if (f.generator != a.top()) generators.push_back(f.generator);
  }
  // ↑g0 is the least nontrivial filter iff every other generator lies below g0.
  for (Elem g0 : generators) {
    if (std::all_of(generators.begin(), generators.end(), [&](Elem g) { return a.leq(g, g0); })) {
      return true;
    }
  }
  return false;
}

template <class A>
ValidationReport check_homomorphism_impl(const A& src, const A& dst, const std::vector<Elem>& map) {
  if (map.size() != src.n) throw std::invalid_argument("homomorphism map is not total");
  for (Elem v : map) {
    if (v >= dst.n) throw std::invalid_argument("homomorphism map leaves the target");
  }
  ValidationReport r;
  if (map[src.bot()] != dst.bot() || map[src.top()] != dst.top()) r.add("bounds", {});
  const auto sb = Ops<A>::binary(src);
  const auto db = Ops<A>::binary(dst);
  for (std::size_t k = 0; k < sb.size(); ++k) {
    check_all2(r, Ops<A>::kBinary[k], src.n, [&](Elem a, Elem b) {
      return map[(*sb[k])(a, b)] == (*db[k])(map[a], map[b]);
    });
  }
  const auto su = Ops<A>::unary(src);
  const auto du = Ops<A>::unary(dst);
  for (std::size_t k = 0; k < su.size(); ++k) {
    check_all1(r, Ops<A>::kUnary[k], src.n,
               [&](Elem a) { return map[(*su[k])[a]] == (*du[k])[map[a]]; });
  }
  return r;
}

template <class A>
std::optional<std::vector<Elem>> find_isomorphism_impl(const A& a1, const A& a2) {
  if (a1.n != a2.n) return std::nullopt;
  const auto j1 = irreducibles(a1);
  const auto j2 = irreducibles(a2);
  if (j1.size() != j2.size()) return std::nullopt;
  const std::size_t k = j1.size();

  std::vector<std::size_t> sigma(k);
  std::vector<char> used(k, 0);
  std::optional<std::vector<Elem>> found;

  auto extend = [&]() {
    std::vector<Elem> map(a1.n, a2.bot());
    std::vector<char> hit(a2.n, 0);
    for (Elem x = 0; x < a1.n; ++x) {
      Elem image = a2.bot();
      for (std::size_t i = 0; i < k; ++i) {
        if (a1.leq(j1[i], x)) image = a2.join(image, j2[sigma[i]]);
      }
      if (hit[image]) return false;
      hit[image] = 1;
      map[x] = image;
    }
    if (!check_homomorphism_impl(a1, a2, map).ok()) return false;
    found = std::move(map);
    return true;
  };
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) return extend();
    for (std::size_t c = 0; c < k; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t p = 0; p < i && ok; ++p) {
        ok = a1.leq(j1[p], j1[i]) == a2.leq(j2[sigma[p]], j2[c]) &&
             a1.leq(j1[i], j1[p]) == a2.leq(j2[c], j2[sigma[p]]);
      }
      if (!ok) continue;
      sigma[i] = c;
      used[c] = 1;
      if (self(self, i + 1)) return true;
      used[c] = 0;
    }
    return false;
  };
  search(search, 0);
  return found;
}

}  // namespace

bool is_monadic_filter(const FiniteMha& a, const std::vector<Elem>& e) {
  return is_monadic_filter_impl(a, e);
}
bool is_monadic_filter(const FiniteMs4Algebra& b, const std::vector<Elem>& e) {
  return is_monadic_filter_impl(b, e);
}

std::vector<MonadicFilter> monadic_filters(const FiniteMha& a) { return monadic_filters_impl(a); }
std::vector<MonadicFilter> monadic_filters(const FiniteMs4Algebra& b) {
  return monadic_filters_impl(b);
}

Quotient<FiniteMha> quotient(const FiniteMha& a, const MonadicFilter& f) {
  return quotient_impl(a, f);
}
Quotient<FiniteMs4Algebra> quotient(const FiniteMs4Algebra& b, const MonadicFilter& f) {
  return quotient_impl(b, f);
}

std::vector<Elem> generated_subalgebra(const FiniteMha& a, const std::vector<Elem>& seed) {
  return generated_impl(a, seed);
}
std::vector<Elem> generated_subalgebra(const FiniteMs4Algebra& b, const std::vector<Elem>& seed) {
  return generated_impl(b, seed);
}

FiniteMha induced_subalgebra(const FiniteMha& a, const std::vector<Elem>& elements) {
  require_tables(a);
  return rebuild(a, sorted_unique(elements), [](Elem x) { return x; });
}
FiniteMs4Algebra induced_subalgebra(const FiniteMs4Algebra& b, const std::vector<Elem>& elements) {
  require_tables(b);
  return rebuild(b, sorted_unique(elements), [](Elem x) { return x; });
}

std::vector<Elem> atoms(const FiniteMs4Algebra& b) {
  std::vector<Elem> out;
  for (Elem x = 0; x < b.n; ++x) {
    if (x == b.bot()) continue;
    bool atom = true;
    for (Elem y = 0; y < b.n && atom; ++y) {
      atom = !(y != x && y != b.bot() && b.leq(y, x));
    }
    if (atom) out.push_back(x);
  }
  return out;
}

std::vector<Elem> join_irreducibles(const FiniteMha& a) { return irreducibles(a); }

std::vector<std::vector<Elem>> subalgebras(const FiniteMs4Algebra& b) {
  require_tables(b);
  const auto at = atoms(b);
  const std::size_t k = at.size();
  if (k >= 20 || (std::size_t{1} << k) != b.n) {
    throw std::invalid_argument("subalgebras: boolean reduct is not atomic with 2^atoms elements");
  }

  std::vector<std::vector<Elem>> out;
  std::vector<std::size_t> block(k, 0);
  auto emit = [&](std::size_t blocks) {
    std::vector<Elem> block_elem(blocks, b.bot());
    for (std::size_t i = 0; i < k; ++i) block_elem[block[i]] = b.join(block_elem[block[i]], at[i]);
    std::vector<Elem> elems;
    for (std::size_t mask = 0; mask < (std::size_t{1} << blocks); ++mask) {
      Elem e = b.bot();
      for (std::size_t i = 0; i < blocks; ++i) {
        if ((mask >> i) & 1U) e = b.join(e, block_elem[i]);
      }
      elems.push_back(e);
    }
    elems = sorted_unique(std::move(elems));
    std::vector<char> in(b.n, 0);
    for (Elem e : elems) in[e] = 1;
    for (Elem e : elems) {
      if (!in[b.box[e]] || !in[b.forall[e]]) return;
    }
    out.push_back(std::move(elems));
  };
  // Restricted growth strings enumerate each set partition once.
  auto gen = [&](auto&& self, std::size_t i, std::size_t used_blocks) -> void {
    if (i == k) {
      emit(used_blocks);
      return;
    }
    for (std::size_t c = 0; c <= used_blocks; ++c) {
      block[i] = c;
      self(self, i + 1, std::max(used_blocks, c + 1));
    }
  };
  if (k == 0) {
    out.push_back({b.bot()});
  } else {
    gen(gen, 0, 0);
  }
  return out;
}

FiniteMha product(const FiniteMha& a1, const FiniteMha& a2) { return product_impl(a1, a2); }
FiniteMs4Algebra product(const FiniteMs4Algebra& b1, const FiniteMs4Algebra& b2) {
  return product_impl(b1, b2);
}

bool subdirectly_irreducible(const FiniteMha& a) {
  const bool algebraic = si_algebraic(a);
  const bool dual = q_root(dual_frame(a)).has_value();
  if (algebraic != dual) throw std::logic_error("subdirect irreducibility tests disagree");
  return algebraic;
}

bool subdirectly_irreducible(const FiniteMs4Algebra& b) {
  const bool algebraic = si_algebraic(b);
  const bool dual = q_root(dual_frame(b)).has_value();
  if (algebraic != dual) throw std::logic_error("subdirect irreducibility tests disagree");
  return algebraic;
}

ValidationReport check_homomorphism(const FiniteMha& src, const FiniteMha& dst,
                                    const std::vector<Elem>& map) {
  return check_homomorphism_impl(src, dst, map);
}
ValidationReport check_homomorphism(const FiniteMs4Algebra& src, const FiniteMs4Algebra& dst,
                                    const std::vector<Elem>& map) {
  return check_homomorphism_impl(src, dst, map);
}

std::optional<std::vector<Elem>> find_isomorphism(const FiniteMha& a1, const FiniteMha& a2) {
  return find_isomorphism_impl(a1, a2);
}
std::optional<std::vector<Elem>> find_isomorphism(const FiniteMs4Algebra& b1,
                                                  const FiniteMs4Algebra& b2) {
  return find_isomorphism_impl(b1, b2);
}

std::optional<std::pair<Elem, Elem>> quantified_disjunction_witness(const FiniteMha& a) {
  for (Elem x = 0; x < a.n; ++x) {
    for (Elem y = 0; y < a.n; ++y) {
      if (a.join(a.forall[x], a.forall[y]) == a.top() && x != a.top() && y != a.top()) {
        return std::pair{x, y};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Elem, Elem>> quantified_disjunction_witness(const FiniteMs4Algebra& b) {
  for (Elem x = 0; x < b.n; ++x) {
    for (Elem y = 0; y < b.n; ++y) {
      if (b.join(b.master(x), b.master(y)) == b.top() && x != b.top() && y != b.top()) {
        return std::pair{x, y};
      }
    }
  }
  return std::nullopt;
}

}  // namespace monadic
