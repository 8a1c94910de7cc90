#include "monadic/frames.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace monadic {

namespace {

void require_shape(std::size_t n, const Relation& a, const Relation& b) {
  if (n > kMaxPoints) throw std::invalid_argument("frame has more than 64 points");
  if (a.size() != n || b.size() != n) {
    throw std::invalid_argument("relation matrices are not sized to the point list");
  }
}

void check_reflexive(const Relation& rel, const char* id, ValidationReport& report) {
  for (std::size_t x = 0; x < rel.size(); ++x) {
    if (!rel.holds(x, x)) {
      report.add(id, {x});
      return;
    }
  }
}

void check_transitive(const Relation& rel, const char* id, ValidationReport& report) {
  const std::size_t n = rel.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!rel.holds(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (rel.holds(y, z) && !rel.holds(x, z)) {
          report.add(id, {x, y, z});
          return;
        }
      }
    }
  }
}

void check_symmetric(const Relation& rel, const char* id, ValidationReport& report) {
  for (std::size_t x = 0; x < rel.size(); ++x) {
    for (std::size_t y = 0; y < rel.size(); ++y) {
      if (rel.holds(x, y) && !rel.holds(y, x)) {
        report.add(id, {x, y});
        return;
      }
    }
  }
}

void check_antisymmetric(const Relation& rel, const char* id, ValidationReport& report) {
  for (std::size_t x = 0; x < rel.size(); ++x) {
    for (std::size_t y = x + 1; y < rel.size(); ++y) {
      if (rel.holds(x, y) && rel.holds(y, x)) {
        report.add(id, {x, y});
        return;
      }
    }
  }
}

Relation equivalence_kernel(const Relation& quasi) { return quasi.intersect(quasi.inverse()); }

using Bijection = std::vector<std::size_t>;

// Lexicographically first bijection preserving and reflecting both relation pairs.
std::optional<Bijection> find_bijection(const Relation& a1, const Relation& b1, const Relation& a2,
                                        const Relation& b2) {
  const std::size_t n = a1.size();
  if (a2.size() != n) return std::nullopt;

  auto signature = [](const Relation& a, const Relation& b, std::size_t x) {
    return std::array<std::size_t, 6>{cardinality(a.successors(x)), cardinality(a.predecessors(x)),
                                      cardinality(b.successors(x)), cardinality(b.predecessors(x)),
                                      a.holds(x, x) ? 1U : 0U, b.holds(x, x) ? 1U : 0U};
  };
  std::vector<std::array<std::size_t, 6>> sig1(n), sig2(n);
  for (std::size_t x = 0; x < n; ++x) {
    sig1[x] = signature(a1, b1, x);
    sig2[x] = signature(a2, b2, x);
  }

  Bijection map(n, 0);
  PointSet used = 0;
  auto consistent = [&](std::size_t i, std::size_t j) {
    if (sig1[i] != sig2[j]) return false;
    for (std::size_t k = 0; k < i; ++k) {
      const std::size_t m = map[k];
      if (a1.holds(i, k) != a2.holds(j, m) || a1.holds(k, i) != a2.holds(m, j)) return false;
      if (b1.holds(i, k) != b2.holds(j, m) || b1.holds(k, i) != b2.holds(m, j)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (contains(used, j) || !consistent(i, j)) continue;
      map[i] = j;
      used |= singleton(j);
      if (self(self, i + 1)) return true;
      used &= ~singleton(j);
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return map;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

ValidationReport validate_frame(const Ms4Frame& f) {
  require_shape(f.size(), f.r, f.e);
  ValidationReport report;
  check_reflexive(f.r, cond::kRReflexive, report);
  check_transitive(f.r, cond::kRTransitive, report);
  check_reflexive(f.e, cond::kEReflexive, report);
  check_symmetric(f.e, cond::kESymmetric, report);
  check_transitive(f.e, cond::kETransitive, report);

  const std::size_t n = f.size();
  for (std::size_t x = 0; x < n; ++x) {
    const PointSet rx = f.r.successors(x);
    for (std::size_t y = 0; y < n; ++y) {
      if (!f.e.holds(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (f.r.holds(y, z) && (rx & f.e.successors(z)) == 0) {
          report.add(cond::kCommutation, {x, y, z});
          return report;
        }
      }
    }
  }
  return report;
}

ValidationReport validate_frame(const MipcFrame& f) {
  require_shape(f.size(), f.r, f.q);
  ValidationReport report;
  check_reflexive(f.r, cond::kRReflexive, report);
  check_transitive(f.r, cond::kRTransitive, report);
  check_antisymmetric(f.r, cond::kRAntisymmetric, report);
  check_reflexive(f.q, cond::kQReflexive, report);
  check_transitive(f.q, cond::kQTransitive, report);

  const std::size_t n = f.size();
  // Every R-upset is a union of principal ones and Q[-] preserves unions, so the
  // inclusion-minimal violating upsets are principal.
  const Relation generated = f.r.reflexive_transitive_closure();
  std::optional<PointSet> worst;
  for (std::size_t x = 0; x < n; ++x) {
    const PointSet u = generated.successors(x);
    if (!f.r.is_upset(f.q.image(u)) && (!worst || size_then_lex_less(u, *worst))) worst = u;
  }
  if (worst) {
    auto witness = members(*worst);
    const PointSet image = f.q.image(*worst);
    const PointSet escaped = f.r.image(image) & ~image;
    witness.push_back(members(escaped).front());
    report.add(cond::kQImageOfUpset, std::move(witness));
  }

  for (std::size_t x = 0; x < n && !report.has(cond::kRInQ); ++x) {
    const PointSet missing = f.r.successors(x) & ~f.q.successors(x);
    if (missing != 0) report.add(cond::kRInQ, {x, members(missing).front()});
  }

  const Relation eq = equivalence_kernel(f.q);
  for (std::size_t x = 0; x < n && !report.has(cond::kQFactorization); ++x) {
    const PointSet reach = eq.image(f.r.successors(x));
    const PointSet missing = f.q.successors(x) & ~reach;
    if (missing != 0) report.add(cond::kQFactorization, {x, members(missing).front()});
  }
  return report;
}

Relation q_relation(const Ms4Frame& f) { return f.r.then(f.e); }

DerivedRelations derived_relations(const Ms4Frame& f) {
  Relation q = q_relation(f);
  Relation eq = equivalence_kernel(q);
  return {equivalence_kernel(f.r), std::move(eq), std::move(q)};
}

DerivedRelations derived_relations(const MipcFrame& f) {
  return {equivalence_kernel(f.r), equivalence_kernel(f.q), f.q};
}

Skeleton skeleton(const Ms4Frame& g) {
  const std::size_t n = g.size();
  const Relation er = equivalence_kernel(g.r);
  const Relation q = q_relation(g);

  std::vector<std::size_t> projection(n, n);
  std::vector<std::size_t> representative;
  std::vector<std::string> names;
  for (std::size_t x = 0; x < n; ++x) {
    if (projection[x] != n) continue;
    const std::size_t cls = representative.size();
    representative.push_back(x);
    std::string name;
    for_each_member(er.successors(x), [&](std::size_t y) {
      projection[y] = cls;
      if (!name.empty()) name += '=';
      name += g.points[y];
    });
    names.push_back(std::move(name));
  }

  const std::size_t m = representative.size();
  MipcFrame frame{std::move(names), Relation(m), Relation(m)};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (g.r.holds(representative[i], representative[j])) frame.r.set(i, j);
      if (q.holds(representative[i], representative[j])) frame.q.set(i, j);
    }
  }
  return {std::move(frame), std::move(projection)};
}

std::vector<PointSet> q_upsets(const Ms4Frame& f) { return closed_sets(q_relation(f)); }
std::vector<PointSet> q_upsets(const MipcFrame& f) { return closed_sets(f.q); }

namespace {

std::vector<std::string> select_points(const std::vector<std::string>& points, PointSet z) {
  std::vector<std::string> out;
  for_each_member(z, [&](std::size_t i) { out.push_back(points[i]); });
  return out;
}

}  // namespace

Ms4Frame restrict_to(const Ms4Frame& f, PointSet z) {
  if (!is_subset(z, full_set(f.size())) || !q_relation(f).is_upset(z)) {
    throw std::invalid_argument("restrict_to: " + format_set(f.points, z) + " is not a Q-upset");
  }
  return {select_points(f.points, z), f.r.restricted_to(z), f.e.restricted_to(z)};
}

MipcFrame restrict_to(const MipcFrame& f, PointSet z) {
  if (!is_subset(z, full_set(f.size())) || !f.q.is_upset(z)) {
    throw std::invalid_argument("restrict_to: " + format_set(f.points, z) + " is not a Q-upset");
  }
  return {select_points(f.points, z), f.r.restricted_to(z), f.q.restricted_to(z)};
}

std::optional<std::vector<std::size_t>> frames_isomorphic(const Ms4Frame& a, const Ms4Frame& b) {
  return find_bijection(a.r, a.e, b.r, b.e);
}

std::optional<std::vector<std::size_t>> frames_isomorphic(const MipcFrame& a, const MipcFrame& b) {
  return find_bijection(a.r, a.q, b.r, b.q);
}

namespace {

std::optional<std::size_t> root_of(const Relation& q) {
  const PointSet all = full_set(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) {
    if (q.successors(x) == all) return x;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> q_root(const Ms4Frame& f) { return root_of(q_relation(f)); }
std::optional<std::size_t> q_root(const MipcFrame& f) { return root_of(f.q); }

Ms4Frame random_ms4_frame(std::mt19937_64& rng, std::size_t max_points) {
  if (max_points == 0 || max_points > 16) throw std::invalid_argument("random_ms4_frame: bad size");
  const std::size_t n = 1 + draw(rng, max_points);
  Ms4Frame f;
  for (std::size_t i = 0; i < n; ++i) f.points.push_back("p" + std::to_string(i));

  Relation r(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && draw(rng, 3) == 0) r.set(x, y);
    }
  }
  f.r = r.reflexive_transitive_closure();

  std::vector<std::size_t> block(n);
  for (auto& b : block) b = draw(rng, n);
  f.e = Relation(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (block[x] == block[y]) f.e.set(x, y);
    }
  }

  // Adding xRz for each violating (x, y, z) terminates because R only grows.
  for (;;) {
    const auto report = validate_frame(f);
    if (report.ok()) return f;
    const auto& w = report.violations.front().witness;
    f.r.set(w[0], w[2]);
    f.r = f.r.reflexive_transitive_closure();
  }
}

std::string format_set(const std::vector<std::string>& points, PointSet s) {
  std::string out = "{";
  bool first = true;
  for_each_member(s, [&](std::size_t i) {
    if (!first) out += ',';
    out += i < points.size() ? points[i] : std::to_string(i);
    first = false;
  });
  return out + "}";
}

}  // namespace monadic
