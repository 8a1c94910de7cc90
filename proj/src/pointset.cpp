#include "monadic/pointset.hpp"

#include <algorithm>
#include <stdexcept>

namespace monadic {

std::vector<std::size_t> members(PointSet s) {
  std::vector<std::size_t> out;
  out.reserve(cardinality(s));
  for_each_member(s, [&](std::size_t i) { out.push_back(i); });
  return out;
}

bool size_then_lex_less(PointSet a, PointSet b) {
  const auto ca = cardinality(a);
  const auto cb = cardinality(b);
  if (ca != cb) return ca < cb;
  if (a == b) return false;
  // With equal sizes the set holding the lowest differing point sorts first.
  const PointSet diff = a ^ b;
  return (a & diff & (~diff + 1)) != 0;
}

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  return r;
}

PointSet Relation::predecessors(std::size_t x) const {
  PointSet out = 0;
  for (std::size_t i = 0; i < succ_.size(); ++i) {
    if (contains(succ_[i], x)) out |= singleton(i);
  }
  return out;
}

PointSet Relation::image(PointSet s) const {
  PointSet out = 0;
  for_each_member(s, [&](std::size_t i) { out |= succ_[i]; });
  return out;
}

PointSet Relation::preimage(PointSet s) const {
  PointSet out = 0;
  for (std::size_t i = 0; i < succ_.size(); ++i) {
    if ((succ_[i] & s) != 0) out |= singleton(i);
  }
  return out;
}

Relation Relation::inverse() const {
  Relation r(size());
  for (std::size_t x = 0; x < size(); ++x) {
    for_each_member(succ_[x], [&](std::size_t y) { r.set(y, x); });
  }
  return r;
}

Relation Relation::then(const Relation& next) const {
  Relation r(size());
  for (std::size_t x = 0; x < size(); ++x) r.succ_[x] = next.image(succ_[x]);
  return r;
}

Relation Relation::intersect(const Relation& other) const {
  Relation r(size());
  for (std::size_t x = 0; x < size(); ++x) r.succ_[x] = succ_[x] & other.succ_[x];
  return r;
}

Relation Relation::reflexive_transitive_closure() const {
  Relation r = *this;
  for (std::size_t x = 0; x < size(); ++x) r.set(x, x);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < size(); ++x) {
      const PointSet grown = r.image(r.succ_[x]);
      if (grown != r.succ_[x]) {
        r.succ_[x] = grown;
        changed = true;
      }
    }
  }
  return r;
}

Relation Relation::restricted_to(PointSet s) const {
  const auto kept = members(s);
  Relation r(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (holds(kept[i], kept[j])) r.set(i, j);
    }
  }
  return r;
}

bool Relation::is_reflexive() const {
  for (std::size_t x = 0; x < size(); ++x) {
    if (!holds(x, x)) return false;
  }
  return true;
}

bool Relation::is_symmetric() const { return *this == inverse(); }

bool Relation::is_transitive() const {
  for (std::size_t x = 0; x < size(); ++x) {
    if (!is_subset(image(succ_[x]), succ_[x])) return false;
  }
  return true;
}

bool Relation::is_antisymmetric() const {
  for (std::size_t x = 0; x < size(); ++x) {
    const PointSet both = succ_[x] & predecessors(x);
    if ((both & ~singleton(x)) != 0) return false;
  }
  return true;
}

bool Relation::is_subset_of(const Relation& other) const {
  for (std::size_t x = 0; x < size(); ++x) {
    if (!is_subset(succ_[x], other.succ_[x])) return false;
  }
  return true;
}

std::vector<PointSet> closed_sets(const Relation& rel) {
  const std::size_t n = rel.size();
  if (n > 24) throw std::invalid_argument("closed_sets: more than 24 points");
  std::vector<PointSet> out;
  const PointSet limit = singleton(n);
  for (PointSet s = 0; s < limit; ++s) {
    if (rel.is_upset(s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), size_then_lex_less);
  return out;
}

}  // namespace monadic
