#include "eqobs/gset.hpp"

#include <algorithm>

namespace eqobs {

FiniteGSet FiniteGSet::from_action(GroupPtr group, uint32_t n_points,
                                   const std::function<uint32_t(const Perm&, uint32_t)>& act) {
  std::vector<std::vector<uint32_t>> table(group->order(), std::vector<uint32_t>(n_points));
  for (uint32_t g = 0; g < group->order(); ++g) {
    for (uint32_t x = 0; x < n_points; ++x) {
      uint32_t y = act(group->element(g), x);
      if (y >= n_points) throw ValidationError("action maps a point outside the set");
      table[g][x] = y;
    }
  }
  FiniteGSet s(std::move(group), n_points, std::move(table));
  s.validate();
  return s;
}

FiniteGSet FiniteGSet::cosets(const Subgroup& h) {
  const GroupPtr& g = h.parent();
  std::vector<uint32_t> coset_of(g->order(), UINT32_MAX);
  std::vector<uint32_t> reps;
  for (uint32_t e = 0; e < g->order(); ++e) {
    if (coset_of[e] != UINT32_MAX) continue;
    uint32_t id = static_cast<uint32_t>(reps.size());
    reps.push_back(e);
    for (uint32_t m : h.members()) coset_of[g->product(e, m)] = id;
  }
  uint32_t n = static_cast<uint32_t>(reps.size());
  std::vector<std::vector<uint32_t>> table(g->order(), std::vector<uint32_t>(n));
  for (uint32_t x = 0; x < g->order(); ++x)
    for (uint32_t c = 0; c < n; ++c) table[x][c] = coset_of[g->product(x, reps[c])];
  return FiniteGSet(g, n, std::move(table));
}

FiniteGSet FiniteGSet::regular(GroupPtr group) {
  uint32_t n = static_cast<uint32_t>(group->order());
  std::vector<std::vector<uint32_t>> table(n, std::vector<uint32_t>(n));
  for (uint32_t g = 0; g < n; ++g)
    for (uint32_t x = 0; x < n; ++x) table[g][x] = group->product(g, x);
  return FiniteGSet(std::move(group), n, std::move(table));
}

FiniteGSet FiniteGSet::product(const FiniteGSet& a, const FiniteGSet& b) {
  if (a.group_ != b.group_) throw ValidationError("product of G-sets over different groups");
  uint32_t n = a.n_ * b.n_;
  std::vector<std::vector<uint32_t>> table(a.group_->order(), std::vector<uint32_t>(n));
  for (uint32_t g = 0; g < a.group_->order(); ++g)
    for (uint32_t x = 0; x < a.n_; ++x)
      for (uint32_t y = 0; y < b.n_; ++y)
        table[g][x * b.n_ + y] = a.table_[g][x] * b.n_ + b.table_[g][y];
  return FiniteGSet(a.group_, n, std::move(table));
}

FiniteGSet FiniteGSet::empty(GroupPtr group) {
  std::vector<std::vector<uint32_t>> table(group->order());
  return FiniteGSet(std::move(group), 0, std::move(table));
}

void FiniteGSet::validate() const {
  uint32_t id = group_->identity_index();
  for (uint32_t x = 0; x < n_; ++x)
    if (table_[id][x] != x)
      throw ValidationError("action axiom violated: identity does not act trivially");
  // composition checked on a generating set; homomorphy then extends to all words
  for (uint32_t s : group_->generating_indices()) {
    for (uint32_t h = 0; h < group_->order(); ++h) {
      uint32_t sh = group_->product(s, h);
      for (uint32_t x = 0; x < n_; ++x) {
        if (table_[s][table_[h][x]] != table_[sh][x])
          throw ValidationError("action axiom violated: composition not respected");
      }
    }
  }
}

std::vector<OrbitInfo> orbit_decompose(const FiniteGSet& x, const Bounds& bounds) {
  const GroupPtr& g = x.group();
  const SubgroupClassTable& classes = g->subgroup_classes(bounds);
  std::vector<OrbitInfo> orbits;
  std::vector<bool> visited(x.size(), false);
  for (uint32_t p0 = 0; p0 < x.size(); ++p0) {
    if (visited[p0]) continue;
    OrbitInfo orbit;
    std::vector<uint32_t> stab;
    for (uint32_t e = 0; e < g->order(); ++e) {
      uint32_t q = x.apply(e, p0);
      if (!visited[q]) {
        visited[q] = true;
        orbit.points.push_back(q);
      }
      if (q == p0) stab.push_back(e);
    }
    std::sort(orbit.points.begin(), orbit.points.end());
    orbit.stabilizer_class = classes.class_of(Subgroup(g, std::move(stab)));
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

} // namespace eqobs
