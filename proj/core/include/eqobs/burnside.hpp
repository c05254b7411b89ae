#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqobs/group.hpp"
#include "eqobs/gset.hpp"

namespace eqobs {

/// An element of the Burnside ring B(G): an integer coefficient per conjugacy
/// class of subgroups, in the canonical class order of the group's table.
class BurnsideElement {
public:
  static BurnsideElement zero(GroupPtr group, const Bounds& bounds = {});
  static BurnsideElement unit(GroupPtr group, const Bounds& bounds = {});
  /// The basis class [G/H] for class index `cls`.
  static BurnsideElement basis(GroupPtr group, size_t cls, const Bounds& bounds = {});

  const GroupPtr& group() const { return group_; }
  const std::vector<int64_t>& coeffs() const { return coeffs_; }
  int64_t coeff(size_t cls) const { return coeffs_[cls]; }
  void add_to(size_t cls, int64_t value);
  bool is_zero() const;

  BurnsideElement& operator+=(const BurnsideElement& other);
  BurnsideElement& operator-=(const BurnsideElement& other);
  friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) { return a += b; }
  friend BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) { return a -= b; }
  BurnsideElement operator-() const;
  friend BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b);
  friend BurnsideElement operator*(int64_t c, BurnsideElement a);
  bool operator==(const BurnsideElement& other) const;

  /// Number of elements of the virtual G-set: sum of a_[H] * |G|/|H|.
  int64_t reduce_count() const;

  /// Canonical rendering: terms by descending subgroup order then ascending
  /// class index, `c*[G/H<order>_<k>]` with the coefficient 1 left implicit,
  /// the zero element rendered as `0`.
  std::string render() const;

private:
  BurnsideElement(GroupPtr group, std::vector<int64_t> coeffs)
      : group_(std::move(group)), coeffs_(std::move(coeffs)) {}

  GroupPtr group_;
  std::vector<int64_t> coeffs_;
};

/// The image of a Burnside element in the representation ring, realized as
/// the character of the permutation representation (one integer per
/// conjugacy class of group elements).
struct CharacterVector {
  GroupPtr group;
  std::vector<int64_t> values;

  bool operator==(const CharacterVector& other) const {
    return group == other.group && values == other.values;
  }
  std::string render() const;
};

/// Class of a finite G-set in B(G): one coefficient per stabilizer class.
BurnsideElement from_gset(const FiniteGSet& x, const Bounds& bounds = {});

/// Restriction B(G) -> B(H): the same sets acted on by the subgroup only.
BurnsideElement restrict_to(const BurnsideElement& a, const Subgroup& h, const Bounds& bounds = {});

/// Induction B(H) -> B(G), [H/K] -> [G/K]; additive but not multiplicative.
/// The element's group must be realized inside `g` (same degree, subset).
BurnsideElement induce_to(const BurnsideElement& a, GroupPtr g, const Bounds& bounds = {});

CharacterVector permutation_character(const BurnsideElement& a, const Bounds& bounds = {});

} // namespace eqobs
