#include "monadic/duality.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace monadic {

namespace {

constexpr std::size_t kMaxComplexPoints = 10;

template <class Frame>
void require_valid(const Frame& f) {
  const auto report = validate_frame(f);
  if (!report.ok()) {
    throw std::invalid_argument("invalid frame: " + report.violations.front().condition);
  }
}

std::unordered_map<PointSet, Elem> index_of(const std::vector<PointSet>& carrier) {
  std::unordered_map<PointSet, Elem> out;
  for (std::size_t i = 0; i < carrier.size(); ++i) out.emplace(carrier[i], static_cast<Elem>(i));
  return out;
}

}  // namespace

std::vector<PointSet> r_upsets(const MipcFrame& f) { return closed_sets(f.r); }

FiniteMs4Algebra complex_algebra(const Ms4Frame& f) {
  require_valid(f);
  const std::size_t k = f.size();
  if (k > kMaxComplexPoints) throw std::invalid_argument("complex_algebra: frame too large");
  const PointSet all = full_set(k);
  const std::size_t n = std::size_t{1} << k;

  FiniteMs4Algebra b;
  b.n = n;
  b.meet = Table(n);
  b.join = Table(n);
  b.neg.resize(n);
  b.box.resize(n);
  b.forall.resize(n);
  for (PointSet u = 0; u < n; ++u) {
    for (PointSet v = 0; v < n; ++v) {
      b.meet.set(u, v, static_cast<Elem>(u & v));
      b.join.set(u, v, static_cast<Elem>(u | v));
    }
    b.neg[u] = static_cast<Elem>(all & ~u);
    b.box[u] = static_cast<Elem>(all & ~f.r.preimage(all & ~u));
    b.forall[u] = static_cast<Elem>(all & ~f.e.preimage(all & ~u));
    b.labels.push_back(format_set(f.points, u));
  }
  return b;
}

FiniteMha complex_algebra(const MipcFrame& f) {
  require_valid(f);
  if (f.size() > 2 * kMaxComplexPoints) throw std::invalid_argument("complex_algebra: frame too large");
  const PointSet all = full_set(f.size());
  const auto carrier = r_upsets(f);
  const auto index = index_of(carrier);
  auto at = [&](PointSet s) {
    const auto it = index.find(s);
    if (it == index.end()) throw std::logic_error("complex_algebra: result is not an R-upset");
    return it->second;
  };

  const std::size_t n = carrier.size();
  FiniteMha h;
  h.n = n;
  h.meet = Table(n);
  h.join = Table(n);
  h.imp = Table(n);
  h.forall.resize(n);
  h.exists.resize(n);
  for (Elem i = 0; i < n; ++i) {
    const PointSet u = carrier[i];
    for (Elem j = 0; j < n; ++j) {
      const PointSet v = carrier[j];
      h.meet.set(i, j, at(u & v));
      h.join.set(i, j, at(u | v));
      PointSet imp = 0;
      for (std::size_t x = 0; x < f.size(); ++x) {
        if (is_subset(f.r.successors(x) & u, v)) imp |= singleton(x);
      }
      h.imp.set(i, j, at(imp));
    }
    h.forall[i] = at(all & ~f.q.preimage(all & ~u));
    h.exists[i] = at(f.q.image(u));
    h.labels.push_back(format_set(f.points, u));
  }
  return h;
}

MipcFrame dual_frame(const FiniteMha& a) {
  const auto report = validate_algebra(a);
  if (!report.ok()) throw std::invalid_argument("invalid algebra: " + report.violations.front().condition);
  const auto js = join_irreducibles(a);
  if (js.size() > kMaxPoints) throw std::invalid_argument("dual_frame: too many prime filters");
  const auto h0 = fixpoint_subalgebra(a);

  MipcFrame f;
  f.r = Relation(js.size());
  f.q = Relation(js.size());
  for (Elem j : js) f.points.push_back(std::to_string(j));
  for (std::size_t x = 0; x < js.size(); ++x) {
    for (std::size_t y = 0; y < js.size(); ++y) {
      // ↑j ⊆ ↑k iff k ≤ j.
      if (a.leq(js[y], js[x])) f.r.set(x, y);
      const bool q = std::all_of(h0.begin(), h0.end(), [&](Elem h) {
        return !a.leq(js[x], h) || a.leq(js[y], h);
      });
      if (q) f.q.set(x, y);
    }
  }
  return f;
}

Ms4Frame dual_frame(const FiniteMs4Algebra& b) {
  const auto report = validate_algebra(b);
  if (!report.ok()) throw std::invalid_argument("invalid algebra: " + report.violations.front().condition);
  const auto at = atoms(b);
  if (at.size() > kMaxPoints) throw std::invalid_argument("dual_frame: too many ultrafilters");
  const auto b0 = fixpoint_subalgebra(b);

  Ms4Frame f;
  f.r = Relation(at.size());
  f.e = Relation(at.size());
  for (Elem x : at) f.points.push_back(std::to_string(x));
  for (std::size_t x = 0; x < at.size(); ++x) {
    for (std::size_t y = 0; y < at.size(); ++y) {
      bool r = true;
      for (Elem c = 0; c < b.n && r; ++c) {
        if (b.leq(at[x], b.box[c]) && !b.leq(at[y], c)) r = false;
      }
      if (r) f.r.set(x, y);
      const bool e = std::all_of(b0.begin(), b0.end(), [&](Elem h) {
        return b.leq(at[x], h) == b.leq(at[y], h);
      });
      if (e) f.e.set(x, y);
    }
  }
  return f;
}

namespace {

template <class A>
std::vector<PointSet> point_sets(const A& a, const std::vector<Elem>& generators) {
  std::vector<PointSet> out(a.n, 0);
  for (Elem x = 0; x < a.n; ++x) {
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (a.leq(generators[i], x)) out[x] |= singleton(i);
    }
  }
  return out;
}

}  // namespace

std::vector<Elem> representation(const FiniteMha& a) {
  const auto sets = point_sets(a, join_irreducibles(a));
  const auto index = index_of(r_upsets(dual_frame(a)));
  std::vector<Elem> out;
  for (PointSet s : sets) out.push_back(index.at(s));
  return out;
}

std::vector<Elem> representation(const FiniteMs4Algebra& b) {
  const auto sets = point_sets(b, atoms(b));
  std::vector<Elem> out;
  for (PointSet s : sets) out.push_back(static_cast<Elem>(s));
  return out;
}

namespace {

PointSet preimage_under(const std::vector<std::size_t>& map, PointSet v) {
  PointSet out = 0;
  for (std::size_t x = 0; x < map.size(); ++x) {
    if (contains(v, map[x])) out |= singleton(x);
  }
  return out;
}

void require_total(std::size_t src, std::size_t dst, const std::vector<std::size_t>& map) {
  if (map.size() != src) throw std::invalid_argument("point map is not total");
  for (std::size_t y : map) {
    if (y >= dst) throw std::invalid_argument("point map leaves the target frame");
  }
}

}  // namespace

std::vector<Elem> inverse_image_map(const Ms4Frame& src, const Ms4Frame& dst,
                                    const std::vector<std::size_t>& map) {
  require_total(src.size(), dst.size(), map);
  std::vector<Elem> out;
  for (PointSet v = 0; v < singleton(dst.size()); ++v) {
    out.push_back(static_cast<Elem>(preimage_under(map, v)));
  }
  return out;
}

std::vector<Elem> inverse_image_map(const MipcFrame& src, const MipcFrame& dst,
                                    const std::vector<std::size_t>& map) {
  require_total(src.size(), dst.size(), map);
  const auto index = index_of(r_upsets(src));
  std::vector<Elem> out;
  for (PointSet v : r_upsets(dst)) {
    const auto it = index.find(preimage_under(map, v));
    if (it == index.end()) throw std::invalid_argument("inverse image of an upset is not an upset");
    out.push_back(it->second);
  }
  return out;
}

NaturalityResult check_skeleton_naturality(const Ms4Frame& g) {
  const Skeleton sk = skeleton(g);
  const FiniteMha skeleton_algebra = complex_algebra(sk.frame);
  const OpenAlgebra open = open_algebra(complex_algebra(g));

  std::unordered_map<Elem, Elem> open_index;
  for (std::size_t i = 0; i < open.inclusion.size(); ++i) {
    open_index.emplace(open.inclusion[i], static_cast<Elem>(i));
  }
  std::vector<Elem> map;
  for (PointSet u : r_upsets(sk.frame)) {
    const auto it = open_index.find(static_cast<Elem>(preimage_under(sk.projection, u)));
    if (it == open_index.end()) return {false, "open"};
    map.push_back(it->second);
  }
  if (map.size() != open.algebra.n) return {false, "bijective"};
  auto sorted = map;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {false, "bijective"};

  const auto report = check_homomorphism(skeleton_algebra, open.algebra, map);
  if (!report.ok()) return {false, report.violations.front().condition};
  return {true, ""};
}

}  // namespace monadic
