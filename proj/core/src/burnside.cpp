#include "eqobs/burnside.hpp"

#include <algorithm>
#include <numeric>

#include "eqobs/checked.hpp"

namespace eqobs {

namespace {

void require_same_group(const BurnsideElement& a, const BurnsideElement& b) {
  if (a.group() != b.group())
    throw ValidationError("Burnside elements belong to different groups");
}

} // namespace

BurnsideElement BurnsideElement::zero(GroupPtr group, const Bounds& bounds) {
  size_t n = group->subgroup_classes(bounds).count();
  return BurnsideElement(std::move(group), std::vector<int64_t>(n, 0));
}

BurnsideElement BurnsideElement::unit(GroupPtr group, const Bounds& bounds) {
  BurnsideElement e = zero(group, bounds);
  e.coeffs_.back() = 1; // [G/G] is the last class in canonical order
  return e;
}

BurnsideElement BurnsideElement::basis(GroupPtr group, size_t cls, const Bounds& bounds) {
  BurnsideElement e = zero(std::move(group), bounds);
  if (cls >= e.coeffs_.size()) throw ValidationError("basis class index out of range");
  e.coeffs_[cls] = 1;
  return e;
}

void BurnsideElement::add_to(size_t cls, int64_t value) {
  coeffs_[cls] = checked_add(coeffs_[cls], value);
}

bool BurnsideElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int64_t c) { return c == 0; });
}

BurnsideElement& BurnsideElement::operator+=(const BurnsideElement& other) {
  require_same_group(*this, other);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  return *this;
}

BurnsideElement& BurnsideElement::operator-=(const BurnsideElement& other) {
  require_same_group(*this, other);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] = checked_sub(coeffs_[i], other.coeffs_[i]);
  return *this;
}

BurnsideElement BurnsideElement::operator-() const {
  BurnsideElement r = *this;
  for (int64_t& c : r.coeffs_) c = checked_neg(c);
  return r;
}

BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b) {
  require_same_group(a, b);
  BurnsideElement r = BurnsideElement::zero(a.group_);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      int64_t c = checked_mul(a.coeffs_[i], b.coeffs_[j]);
      const std::vector<int64_t>& prod = a.group_->basis_product(i, j);
      for (size_t k = 0; k < prod.size(); ++k) {
        if (prod[k]) r.coeffs_[k] = checked_add(r.coeffs_[k], checked_mul(c, prod[k]));
      }
    }
  }
  return r;
}

BurnsideElement operator*(int64_t c, BurnsideElement a) {
  for (int64_t& v : a.coeffs_) v = checked_mul(c, v);
  return a;
}

bool BurnsideElement::operator==(const BurnsideElement& other) const {
  return group_ == other.group_ && coeffs_ == other.coeffs_;
}

int64_t BurnsideElement::reduce_count() const {
  const SubgroupClassTable& classes = group_->subgroup_classes();
  int64_t total = 0;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    total = checked_add(total, checked_mul(coeffs_[i], group_->order() / classes.subgroup_order(i)));
  }
  return total;
}

std::string BurnsideElement::render() const {
  const SubgroupClassTable& classes = group_->subgroup_classes();
  std::vector<size_t> order(coeffs_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return classes.subgroup_order(a) > classes.subgroup_order(b);
  });
  std::string out;
  for (size_t idx : order) {
    int64_t c = coeffs_[idx];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += "[G/" + classes.name(idx) + "]";
  }
  return out.empty() ? "0" : out;
}

std::string CharacterVector::render() const {
  std::string out = "(";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + ")";
}

BurnsideElement from_gset(const FiniteGSet& x, const Bounds& bounds) {
  BurnsideElement e = BurnsideElement::zero(x.group(), bounds);
  for (const OrbitInfo& orbit : orbit_decompose(x, bounds)) e.add_to(orbit.stabilizer_class, 1);
  return e;
}

BurnsideElement restrict_to(const BurnsideElement& a, const Subgroup& h, const Bounds& bounds) {
  if (h.parent() != a.group())
    throw ValidationError("restriction subgroup does not belong to the element's group");
  const GroupPtr& g = a.group();
  GroupPtr hg = h.as_group();
  const SubgroupClassTable& gclasses = g->subgroup_classes(bounds);

  // element indices of the subgroup's members inside the parent, ordered as
  // the standalone group's canonical element list
  std::vector<uint32_t> parent_index(hg->order());
  for (uint32_t i = 0; i < hg->order(); ++i) {
    auto idx = g->index_of(hg->element(i));
    if (!idx) throw ValidationError("subgroup element missing from parent group");
    parent_index[i] = *idx;
  }

  BurnsideElement r = BurnsideElement::zero(hg, bounds);
  for (size_t k = 0; k < a.coeffs().size(); ++k) {
    if (a.coeff(k) == 0) continue;
    FiniteGSet cosets = FiniteGSet::cosets(gclasses.representative(k));
    std::vector<std::vector<uint32_t>> table(hg->order(), std::vector<uint32_t>(cosets.size()));
    for (uint32_t i = 0; i < hg->order(); ++i)
      for (uint32_t c = 0; c < cosets.size(); ++c) table[i][c] = cosets.apply(parent_index[i], c);
    FiniteGSet restricted = FiniteGSet::from_action(
        hg, cosets.size(), [&](const Perm& p, uint32_t c) {
          return table[*hg->index_of(p)][c];
        });
    BurnsideElement part = from_gset(restricted, bounds);
    for (size_t cls = 0; cls < part.coeffs().size(); ++cls)
      if (part.coeff(cls)) r.add_to(cls, checked_mul(a.coeff(k), part.coeff(cls)));
  }
  return r;
}

BurnsideElement induce_to(const BurnsideElement& a, GroupPtr g, const Bounds& bounds) {
  const GroupPtr& h = a.group();
  if (!g->contains_group(*h))
    throw ValidationError("induction target does not contain the element's group");
  const SubgroupClassTable& hclasses = h->subgroup_classes(bounds);
  const SubgroupClassTable& gclasses = g->subgroup_classes(bounds);
  BurnsideElement r = BurnsideElement::zero(g, bounds);
  for (size_t k = 0; k < a.coeffs().size(); ++k) {
    if (a.coeff(k) == 0) continue;
    Subgroup in_g = Subgroup::from_generators(g, hclasses.representative(k).member_perms());
    r.add_to(gclasses.class_of(in_g), a.coeff(k));
  }
  return r;
}

CharacterVector permutation_character(const BurnsideElement& a, const Bounds& bounds) {
  const GroupPtr& g = a.group();
  const std::vector<std::vector<int64_t>>& chars = g->basis_character_matrix(bounds);
  size_t ecount = g->element_classes().size();
  CharacterVector cv{g, std::vector<int64_t>(ecount, 0)};
  for (size_t h = 0; h < a.coeffs().size(); ++h) {
    if (a.coeff(h) == 0) continue;
    for (size_t e = 0; e < ecount; ++e)
      cv.values[e] = checked_add(cv.values[e], checked_mul(a.coeff(h), chars[h][e]));
  }
  return cv;
}

} // namespace eqobs
