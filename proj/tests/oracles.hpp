// Independent reference computations for the test suites. Everything here
// deliberately avoids the production code paths it is used to check.
#pragma once

#include <cassert>
#include <set>
#include <vector>

#include "eqobs/burnside.hpp"
#include "eqobs/germ.hpp"
#include "eqobs/global.hpp"
#include "eqobs/gset.hpp"
#include "eqobs/local.hpp"

namespace eqobs::oracles {

// Closure of a member-index set by repeated pairwise products.
inline std::vector<uint32_t> close_set(const PermGroup& g, std::vector<uint32_t> members) {
  std::set<uint32_t> in(members.begin(), members.end());
  in.insert(g.identity_index());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<uint32_t> snapshot(in.begin(), in.end());
    for (uint32_t a : snapshot)
      for (uint32_t b : snapshot)
        if (in.insert(g.product(a, b)).second) grew = true;
  }
  return {in.begin(), in.end()};
}

// Brute force: every subgroup arises as the closure of a union of cyclic
// subgroups; enumerate all unions. Exponential, for small groups only.
inline std::set<std::vector<uint32_t>> all_subgroups_brute(const PermGroup& g) {
  std::set<std::vector<uint32_t>> cyclics;
  for (uint32_t e = 0; e < g.order(); ++e) {
    std::vector<uint32_t> cyc{g.identity_index()};
    uint32_t x = e;
    while (x != g.identity_index()) {
      cyc.push_back(x);
      x = g.product(x, e);
    }
    std::sort(cyc.begin(), cyc.end());
    cyclics.insert(cyc);
  }
  std::vector<std::vector<uint32_t>> cyc(cyclics.begin(), cyclics.end());
  assert(cyc.size() <= 20);
  std::set<std::vector<uint32_t>> subs;
  for (uint64_t mask = 0; mask < (1ull << cyc.size()); ++mask) {
    std::vector<uint32_t> seed;
    for (size_t i = 0; i < cyc.size(); ++i)
      if (mask & (1ull << i)) seed.insert(seed.end(), cyc[i].begin(), cyc[i].end());
    subs.insert(close_set(g, std::move(seed)));
  }
  return subs;
}

// Conjugacy classes of the brute-force subgroup list; returns class sizes
// keyed by the minimal member encoding.
inline std::vector<std::pair<std::vector<uint32_t>, int64_t>> subgroup_classes_brute(
    const PermGroup& g) {
  std::set<std::vector<uint32_t>> subs = all_subgroups_brute(g);
  std::vector<std::pair<std::vector<uint32_t>, int64_t>> classes;
  std::set<std::vector<uint32_t>> seen;
  for (const auto& s : subs) {
    if (seen.count(s)) continue;
    std::set<std::vector<uint32_t>> orbit;
    for (uint32_t cg = 0; cg < g.order(); ++cg) {
      std::vector<uint32_t> conj;
      for (uint32_t m : s) conj.push_back(g.conjugate(cg, m));
      std::sort(conj.begin(), conj.end());
      orbit.insert(std::move(conj));
    }
    seen.insert(orbit.begin(), orbit.end());
    classes.emplace_back(*orbit.begin(), static_cast<int64_t>(orbit.size()));
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    return std::make_pair(a.first.size(), a.first) < std::make_pair(b.first.size(), b.first);
  });
  return classes;
}

// Mark via the double-coset criterion: gH is fixed by K iff g^{-1} K g <= H.
inline int64_t mark_brute(const PermGroup& g, const Subgroup& h, const Subgroup& k) {
  int64_t count = 0;
  for (uint32_t x = 0; x < g.order(); ++x) {
    uint32_t xi = g.inverse(x);
    bool inside = true;
    for (uint32_t m : k.members()) {
      if (!h.contains(g.product(g.product(xi, m), x))) { inside = false; break; }
    }
    if (inside) ++count;
  }
  assert(count % h.order() == 0);
  return count / h.order();
}

// Ghost-ring multiplication: componentwise product of mark vectors, solved
// back to basis coordinates through the triangular table of marks.
inline std::vector<int64_t> marks_route_mul(const PermGroup& g, size_t i, size_t j,
                                            bool* exact = nullptr) {
  const MarksTable& marks = g.table_of_marks();
  const size_t m = marks.size();
  std::vector<int64_t> ghost(m);
  for (size_t k = 0; k < m; ++k) ghost[k] = marks[i][k] * marks[j][k];
  std::vector<int64_t> coeffs(m, 0);
  bool ok = true;
  for (size_t k = m; k-- > 0;) {
    int64_t rest = ghost[k];
    for (size_t h = k + 1; h < m; ++h) rest -= coeffs[h] * marks[h][k];
    if (rest % marks[k][k] != 0) ok = false;
    coeffs[k] = rest / marks[k][k];
  }
  if (exact) *exact = ok;
  return coeffs;
}

// Direct construction of the induced G-set G x_H X for X = H/K.
inline BurnsideElement induce_brute(const BurnsideElement& a, GroupPtr g) {
  GroupPtr h = a.group();
  // left coset representatives of H inside G
  std::vector<uint32_t> h_in_g;
  for (uint32_t i = 0; i < h->order(); ++i)
    h_in_g.push_back(*g->index_of(h->element(static_cast<uint32_t>(i))));
  std::vector<uint32_t> coset_of(g->order(), UINT32_MAX);
  std::vector<uint32_t> reps;
  for (uint32_t e = 0; e < g->order(); ++e) {
    if (coset_of[e] != UINT32_MAX) continue;
    uint32_t id = static_cast<uint32_t>(reps.size());
    reps.push_back(e);
    for (uint32_t m : h_in_g) coset_of[g->product(e, m)] = id;
  }

  const SubgroupClassTable& hclasses = h->subgroup_classes();
  BurnsideElement out = BurnsideElement::zero(g);
  for (size_t kcls = 0; kcls < hclasses.count(); ++kcls) {
    if (a.coeff(kcls) == 0) continue;
    FiniteGSet x = FiniteGSet::cosets(hclasses.representative(kcls));
    uint32_t nx = x.size();
    uint32_t npoints = static_cast<uint32_t>(reps.size()) * nx;
    FiniteGSet induced = FiniteGSet::from_action(g, npoints, [&](const Perm& p, uint32_t pt) {
      uint32_t ci = pt / nx, xx = pt % nx;
      uint32_t t = g->product(*g->index_of(p), reps[ci]);
      uint32_t cj = coset_of[t];
      uint32_t hg = g->product(g->inverse(reps[cj]), t); // lands in H
      uint32_t h_idx = *h->index_of(g->element(hg));
      return cj * nx + x.apply(h_idx, xx);
    });
    BurnsideElement part = from_gset(induced);
    for (size_t c = 0; c < part.coeffs().size(); ++c)
      if (part.coeff(c)) out.add_to(c, a.coeff(kcls) * part.coeff(c));
  }
  return out;
}

// Non-equivariant conservation-law sums, computed point by point from the
// raw records (no Burnside machinery).
inline int64_t radial_reduction_brute(const FormSingularityData& data, size_t k) {
  const StratPoset& poset = data.germ()->poset();
  int64_t top_dim = data.germ()->top_dim();
  int64_t total = 0;
  for (const FormRecord& rec : data.records()) {
    if (!poset.leq(rec.stratum, k)) continue;
    for (const OrbitEntry& e : rec.entries) {
      int64_t orbit_size = data.germ()->group()->order() / e.isotropy.order();
      int64_t sign = data.flavor() == FormFlavor::complex_form
                         ? ((top_dim - poset.dim(rec.stratum)) % 2 == 0 ? 1 : -1)
                         : 1;
      total += sign * e.index * orbit_size;
    }
  }
  return total;
}

inline int64_t euler_reduction_brute(const FormSingularityData& data, size_t k) {
  const StratPoset& poset = data.germ()->poset();
  int64_t top_dim = data.germ()->top_dim();
  int64_t total = 0;
  for (const FormRecord& rec : data.records()) {
    if (!poset.leq(rec.stratum, k)) continue;
    for (const OrbitEntry& e : rec.entries) {
      int64_t orbit_size = data.germ()->group()->order() / e.isotropy.order();
      int64_t sign = data.flavor() == FormFlavor::complex_form
                         ? ((top_dim - poset.dim(rec.stratum)) % 2 == 0 ? 1 : -1)
                         : 1;
      total += sign * e.index * orbit_size * poset.eu(rec.stratum, k);
    }
  }
  return total;
}

inline int64_t chi_reduction_brute(const CompactStratVariety& v) {
  int64_t total = 0;
  for (size_t j = 0; j < v.stratum_count(); ++j)
    total += v.quotient_euler(j) * (v.group()->order() / v.isotropy(j).order());
  return total;
}

inline int64_t global_reduction_brute(const CompactStratVariety& v) {
  int64_t total = 0;
  for (size_t j = 0; j < v.stratum_count(); ++j)
    total += v.eu_top(j) * v.quotient_euler(j) * (v.group()->order() / v.isotropy(j).order());
  return total;
}

inline int64_t orbit_level_reduction_brute(const CompactStratVariety& v,
                                           const GlobalFormData& form) {
  int64_t total = 0;
  for (const FormRecord& rec : form.records)
    for (const OrbitEntry& e : rec.entries)
      total += v.eu_top(rec.stratum) * e.index * (v.group()->order() / e.isotropy.order());
  return total;
}

// Rank of an integer matrix over the rationals (fraction-free elimination).
inline size_t rational_rank(std::vector<std::vector<__int128>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      __int128 a = m[rank][c], b = m[r][c];
      for (size_t cc = 0; cc < cols; ++cc) m[r][cc] = m[r][cc] * a - m[rank][cc] * b;
    }
    ++rank;
  }
  return rank;
}

inline size_t rational_rank_i64(const std::vector<std::vector<int64_t>>& m) {
  std::vector<std::vector<__int128>> w;
  for (const auto& row : m) w.emplace_back(row.begin(), row.end());
  return rational_rank(std::move(w));
}

} // namespace eqobs::oracles
