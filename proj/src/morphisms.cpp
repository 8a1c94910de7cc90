#include "monadic/morphisms.hpp"

#include <algorithm>
#include <stdexcept>

#include "monadic/duality.hpp"

namespace monadic {

std::string_view to_string(Category c) { return c == Category::Mipc ? "mipc" : "ms4"; }

namespace {

void require_total(std::size_t src, std::size_t dst, const std::vector<std::size_t>& map) {
  if (map.size() != src) throw std::invalid_argument("point map is not total");
  for (std::size_t y : map) {
    if (y >= dst) throw std::invalid_argument("point map leaves the target frame");
  }
}

PointSet image_under(const std::vector<std::size_t>& map, PointSet s) {
  PointSet out = 0;
  for_each_member(s, [&](std::size_t x) { out |= singleton(map[x]); });
  return out;
}

// R2[f(x)] = f[R1[x]] split into the forth and back halves.
void check_pmorphism(const Relation& r1, const Relation& r2, const std::vector<std::size_t>& map,
                     const char* forth, const char* back, ValidationReport& report) {
  for (std::size_t x = 0; x < map.size(); ++x) {
    const PointSet image = image_under(map, r1.successors(x));
    const PointSet target = r2.successors(map[x]);
    if (!report.has(forth) && !is_subset(image, target)) {
      report.add(forth, {x, members(image & ~target).front()});
    }
    if (!report.has(back) && !is_subset(target, image)) {
      report.add(back, {x, members(target & ~image).front()});
    }
  }
}

FrameMorphism tag(Category c, std::vector<std::size_t> map, std::size_t dst_size) {
  PointSet hit = 0;
  bool injective = true;
  for (std::size_t y : map) {
    if (contains(hit, y)) injective = false;
    hit |= singleton(y);
  }
  return {c, std::move(map), hit == full_set(dst_size), injective};
}

// Lexicographic backtracking. `forth` lists relation pairs whose forth half is
// checked on every partial assignment; `complete` validates a full map.
template <class Complete>
std::vector<FrameMorphism> search(Category category, std::size_t n1, std::size_t n2,
                                  const std::vector<std::pair<const Relation*, const Relation*>>& forth,
                                  Requirement req, std::size_t limit, Complete&& complete) {
  std::vector<FrameMorphism> out;
  if (req == Requirement::Iso && n1 != n2) return out;
  const bool need_onto = req == Requirement::Onto || req == Requirement::Iso;
  const bool need_injective = req == Requirement::Injective || req == Requirement::Iso;
  if (need_onto && n1 < n2) return out;
  if (need_injective && n1 > n2) return out;

  std::vector<std::size_t> map(n1, 0);
  std::vector<std::size_t> uses(n2, 0);
  std::size_t covered = 0;

  auto consistent = [&](std::size_t x, std::size_t y) {
    for (const auto& [a, b] : forth) {
      if (a->holds(x, x) && !b->holds(y, y)) return false;
      for (std::size_t p = 0; p < x; ++p) {
        if (a->holds(x, p) && !b->holds(y, map[p])) return false;
        if (a->holds(p, x) && !b->holds(map[p], y)) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t x) -> bool {
    if (x == n1) {
      if (complete(map)) {
        out.push_back(tag(category, map, n2));
        if (limit != 0 && out.size() >= limit) return true;
      }
      return false;
    }
    for (std::size_t y = 0; y < n2; ++y) {
      if (need_injective && uses[y] != 0) continue;
      const std::size_t now_covered = covered + (uses[y] == 0 ? 1 : 0);
      if (need_onto && n2 - now_covered > n1 - x - 1) continue;
      if (!consistent(x, y)) continue;
      map[x] = y;
      ++uses[y];
      covered = now_covered;
      const bool stop = self(self, x + 1);
      --uses[y];
      covered = now_covered - (uses[y] == 0 ? 1 : 0);
      if (stop) return true;
    }
    return false;
  };
  rec(rec, 0);
  return out;
}

}  // namespace

ValidationReport check_morphism(const Ms4Frame& src, const Ms4Frame& dst,
                                const std::vector<std::size_t>& map) {
  require_total(src.size(), dst.size(), map);
  ValidationReport report;
  check_pmorphism(src.r, dst.r, map, clause::kRForth, clause::kRBack, report);
  check_pmorphism(src.e, dst.e, map, clause::kEForth, clause::kEBack, report);
  return report;
}

ValidationReport check_morphism(const MipcFrame& src, const MipcFrame& dst,
                                const std::vector<std::size_t>& map) {
  require_total(src.size(), dst.size(), map);
  ValidationReport report;
  check_pmorphism(src.r, dst.r, map, clause::kRForth, clause::kRBack, report);
  check_pmorphism(src.q, dst.q, map, clause::kQForth, clause::kQBack, report);
  for (std::size_t x = 0; x < map.size(); ++x) {
    const PointSet lhs = dst.q.predecessors(map[x]);
    const PointSet rhs = dst.r.preimage(image_under(map, src.q.predecessors(x)));
    if (lhs != rhs) {
      report.add(clause::kQInverse, {x, members(lhs ^ rhs).front()});
      break;
    }
  }
  return report;
}

std::vector<FrameMorphism> enumerate_morphisms(const Ms4Frame& src, const Ms4Frame& dst,
                                               Requirement req, std::size_t limit) {
  return search(Category::Ms4, src.size(), dst.size(), {{&src.r, &dst.r}, {&src.e, &dst.e}}, req,
                limit, [&](const auto& map) { return check_morphism(src, dst, map).ok(); });
}

std::vector<FrameMorphism> enumerate_morphisms(const MipcFrame& src, const MipcFrame& dst,
                                               Requirement req, std::size_t limit) {
  return search(Category::Mipc, src.size(), dst.size(), {{&src.r, &dst.r}, {&src.q, &dst.q}}, req,
                limit, [&](const auto& map) { return check_morphism(src, dst, map).ok(); });
}

SkeletonMorphism skeleton_morphism(const Ms4Frame& src, const Ms4Frame& dst,
                                   const std::vector<std::size_t>& map) {
  const auto report = check_morphism(src, dst, map);
  if (!report.ok()) {
    throw std::invalid_argument("not an MS4 morphism: " + report.violations.front().condition);
  }
  const Skeleton s1 = skeleton(src);
  const Skeleton s2 = skeleton(dst);
  std::vector<std::size_t> rho(s1.frame.size(), 0);
  for (std::size_t x = 0; x < src.size(); ++x) rho[s1.projection[x]] = s2.projection[map[x]];

  SkeletonMorphism out;
  out.morphism = tag(Category::Mipc, rho, s2.frame.size());
  const Relation eq1 = derived_relations(s1.frame).e_q;
  const Relation eq2 = derived_relations(s2.frame).e_q;
  for (std::size_t x = 0; x < rho.size(); ++x) {
    if (eq2.successors(rho[x]) != image_under(rho, eq1.successors(x))) {
      out.witness = x;
      break;
    }
  }
  out.eq_pmorphism = !out.witness.has_value();
  return out;
}

namespace {

Relation& second(Ms4Frame& f) { return f.e; }
Relation& second(MipcFrame& f) { return f.q; }
const Relation& second(const Ms4Frame& f) { return f.e; }
const Relation& second(const MipcFrame& f) { return f.q; }

template <class Frame>
std::vector<Frame> onto_images_impl(const Frame& f) {
  const std::size_t n = f.size();
  if (n > 10) throw std::invalid_argument("onto_images: frame too large");
  std::vector<Frame> out;
  std::vector<std::size_t> block(n, 0);

  auto emit = [&](std::size_t blocks) {
    Frame g;
    g.points.assign(blocks, "");
    for (std::size_t x = 0; x < n; ++x) {
      auto& name = g.points[block[x]];
      if (!name.empty()) name += '+';
      name += f.points[x];
    }
    g.r = Relation(blocks);
    second(g) = Relation(blocks);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (f.r.holds(x, y)) g.r.set(block[x], block[y]);
        if (second(f).holds(x, y)) second(g).set(block[x], block[y]);
      }
    }
    if (!validate_frame(g).ok() || !check_morphism(f, g, block).ok()) return;
    if (contains_isomorphic(out, g)) return;
    out.push_back(std::move(g));
  };
  auto gen = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (i == n) {
      emit(used);
      return;
    }
    for (std::size_t c = 0; c <= used; ++c) {
      block[i] = c;
      self(self, i + 1, std::max(used, c + 1));
    }
  };
  gen(gen, 0, 0);
  std::stable_sort(out.begin(), out.end(),
                   [](const Frame& a, const Frame& b) { return a.size() < b.size(); });
  return out;
}

template <class Frame>
std::vector<Frame> hs_spectrum_impl(const Frame& f) {
  std::vector<Frame> out;
  for (PointSet z : q_upsets(f)) {
    if (z == 0) continue;
    for (auto& g : onto_images_impl(restrict_to(f, z))) {
      if (q_root(g) && !contains_isomorphic(out, g)) out.push_back(std::move(g));
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Frame& a, const Frame& b) { return a.size() < b.size(); });
  return out;
}

template <class Frame>
bool hs_member_impl(const Frame& small, const Frame& big) {
  for (PointSet z : q_upsets(big)) {
    if (cardinality(z) < small.size()) continue;
    if (!enumerate_morphisms(restrict_to(big, z), small, Requirement::Onto, 1).empty()) return true;
  }
  return false;
}

}  // namespace

std::vector<Ms4Frame> onto_images(const Ms4Frame& f) { return onto_images_impl(f); }
std::vector<MipcFrame> onto_images(const MipcFrame& f) { return onto_images_impl(f); }

std::vector<Ms4Frame> hs_spectrum(const Ms4Frame& f) { return hs_spectrum_impl(f); }
std::vector<MipcFrame> hs_spectrum(const MipcFrame& f) { return hs_spectrum_impl(f); }
std::vector<Ms4Frame> hs_spectrum(const FiniteMs4Algebra& b) { return hs_spectrum_impl(dual_frame(b)); }
std::vector<MipcFrame> hs_spectrum(const FiniteMha& a) { return hs_spectrum_impl(dual_frame(a)); }

bool hs_member_frames(const Ms4Frame& small, const Ms4Frame& big) {
  return hs_member_impl(small, big);
}
bool hs_member_frames(const MipcFrame& small, const MipcFrame& big) {
  return hs_member_impl(small, big);
}
bool hs_member(const FiniteMs4Algebra& small, const FiniteMs4Algebra& big) {
  return hs_member_impl(dual_frame(small), dual_frame(big));
}
bool hs_member(const FiniteMha& small, const FiniteMha& big) {
  return hs_member_impl(dual_frame(small), dual_frame(big));
}

bool embeds(const FiniteMs4Algebra& a1, const FiniteMs4Algebra& a2) {
  return !enumerate_morphisms(dual_frame(a2), dual_frame(a1), Requirement::Onto, 1).empty();
}
bool embeds(const FiniteMha& a1, const FiniteMha& a2) {
  return !enumerate_morphisms(dual_frame(a2), dual_frame(a1), Requirement::Onto, 1).empty();
}

bool contains_isomorphic(const std::vector<Ms4Frame>& list, const Ms4Frame& f) {
  for (const auto& g : list) {
    if (frames_isomorphic(g, f)) return true;
  }
  return false;
}

bool contains_isomorphic(const std::vector<MipcFrame>& list, const MipcFrame& f) {
  for (const auto& g : list) {
    if (frames_isomorphic(g, f)) return true;
  }
  return false;
}

}  // namespace monadic
