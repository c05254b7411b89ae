#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "eqobs/group.hpp"

namespace eqobs {

/// A finite G-set with a dense action table (one row per group element).
class FiniteGSet {
public:
  /// Builds the action table from a callback and validates the action axioms
  /// (identity acts trivially, composition respected on a generating set).
  static FiniteGSet from_action(GroupPtr group, uint32_t n_points,
                                const std::function<uint32_t(const Perm&, uint32_t)>& act);

  /// Left cosets of H in G with the translation action.
  static FiniteGSet cosets(const Subgroup& h);

  /// G acting on itself by left translation.
  static FiniteGSet regular(GroupPtr group);

  /// Cartesian product with the diagonal action.
  static FiniteGSet product(const FiniteGSet& a, const FiniteGSet& b);

  /// Empty G-set.
  static FiniteGSet empty(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  uint32_t size() const { return n_; }
  uint32_t apply(uint32_t elem_index, uint32_t point) const { return table_[elem_index][point]; }

  /// Throws ValidationError if the table is not a group action.
  void validate() const;

private:
  FiniteGSet(GroupPtr group, uint32_t n, std::vector<std::vector<uint32_t>> table)
      : group_(std::move(group)), n_(n), table_(std::move(table)) {}

  GroupPtr group_;
  uint32_t n_;
  std::vector<std::vector<uint32_t>> table_;
};

struct OrbitInfo {
  std::vector<uint32_t> points;
  size_t stabilizer_class; // index into the group's SubgroupClassTable
};

/// Decomposition into orbits with the conjugacy class of each stabilizer.
std::vector<OrbitInfo> orbit_decompose(const FiniteGSet& x, const Bounds& bounds = {});

} // namespace eqobs
