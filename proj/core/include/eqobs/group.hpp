#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "eqobs/perm.hpp"

namespace eqobs {

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

/// Size limits for group construction and subgroup enumeration.
struct Bounds {
  int64_t max_group_order = 2000;
  int64_t max_subgroup_enum_order = 200;
};

/// A subgroup of a fully enumerated permutation group, stored as sorted
/// element indices into the parent's canonical element list.
class Subgroup {
public:
  Subgroup(GroupPtr parent, std::vector<uint32_t> members);

  static Subgroup from_generator_indices(GroupPtr parent, const std::vector<uint32_t>& gens);
  static Subgroup from_generators(GroupPtr parent, const std::vector<Perm>& gens);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<uint32_t>& members() const { return members_; }
  int64_t order() const { return static_cast<int64_t>(members_.size()); }
  bool contains(uint32_t elem_index) const;
  bool contains_all(const Subgroup& other) const;

  Subgroup conjugated_by(uint32_t g) const;
  std::vector<Perm> member_perms() const;

  /// The subgroup realized as a permutation group in its own right
  /// (same degree, interned so repeated calls share one object).
  GroupPtr as_group() const;

  bool operator==(const Subgroup& other) const;

private:
  GroupPtr parent_;
  std::vector<uint32_t> members_;
};

/// Representatives of the conjugacy classes of subgroups, canonically ordered
/// by (subgroup order, lexicographically minimal member encoding).
class SubgroupClassTable {
public:
  SubgroupClassTable(GroupPtr parent, std::vector<Subgroup> reps, std::vector<int64_t> class_sizes);

  const GroupPtr& parent() const { return parent_; }
  size_t count() const { return reps_.size(); }
  const Subgroup& representative(size_t i) const { return reps_[i]; }
  int64_t subgroup_order(size_t i) const { return reps_[i].order(); }
  int64_t class_size(size_t i) const { return class_sizes_[i]; }
  const std::string& name(size_t i) const { return names_[i]; }
  std::optional<size_t> index_by_name(const std::string& name) const;

  /// Index of the conjugacy class containing `h`.
  size_t class_of(const Subgroup& h) const;
  size_t trivial_class() const;
  size_t full_class() const;

  /// True when some conjugate of representative(a) is contained in representative(b).
  bool is_subconjugate(size_t a, size_t b) const;

private:
  GroupPtr parent_;
  std::vector<Subgroup> reps_;
  std::vector<int64_t> class_sizes_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, size_t> by_name_;
};

/// Table of marks: entry (h,k) counts the points of G/H fixed by K.
using MarksTable = std::vector<std::vector<int64_t>>;

struct ElementClass {
  uint32_t representative = 0;
  std::vector<uint32_t> members;
  int64_t element_order = 1;
  std::string label;
};

/// A finite group of permutations, fully enumerated and immutable.
/// Derived data (subgroup classes, marks, element classes, basis products)
/// is memoized; the caches are guarded for concurrent readers.
class PermGroup : public std::enable_shared_from_this<PermGroup> {
public:
  uint32_t degree() const { return degree_; }
  int64_t order() const { return static_cast<int64_t>(elems_.size()); }
  const std::vector<Perm>& elements() const { return elems_; }
  const Perm& element(uint32_t i) const { return elems_[i]; }
  const std::string& description() const { return description_; }

  /// Index in the canonical (lexicographically sorted) element list.
  std::optional<uint32_t> index_of(const Perm& p) const;
  uint32_t identity_index() const { return 0; }
  uint32_t product(uint32_t a, uint32_t b) const;
  uint32_t inverse(uint32_t a) const;
  /// g x g^{-1}
  uint32_t conjugate(uint32_t g, uint32_t x) const;

  /// A small generating set (greedy), memoized.
  const std::vector<uint32_t>& generating_indices() const;

  /// Stable content hash of (degree, element images); used as cache key.
  uint64_t content_key() const;

  /// True when every element of `other` occurs in this group (same degree).
  bool contains_group(const PermGroup& other) const;

  Subgroup whole_subgroup() const;
  Subgroup trivial_subgroup() const;

  /// Conjugacy classes of subgroups, memoized. The enumeration bound is
  /// enforced on every call; a cached table does not waive it.
  const SubgroupClassTable& subgroup_classes(const Bounds& bounds = {}) const;
  const MarksTable& table_of_marks(const Bounds& bounds = {}) const;
  const std::vector<ElementClass>& element_classes() const;

  /// Coefficients of [G/H_i]*[G/H_j] in the canonical basis, memoized.
  const std::vector<int64_t>& basis_product(size_t i, size_t j, const Bounds& bounds = {}) const;

  /// Characters of the basis coset sets: entry (class i, element class e)
  /// counts the cosets of G/H_i fixed by a representative of e. Memoized.
  const std::vector<std::vector<int64_t>>& basis_character_matrix(const Bounds& bounds = {}) const;

  /// Install externally persisted class data (validated by the caller).
  /// Returns false when a table is already present.
  bool install_class_data(std::vector<std::vector<uint32_t>> class_members,
                          MarksTable marks) const;

private:
  PermGroup(uint32_t degree, std::vector<Perm> elems, std::string description);
  friend GroupPtr intern_group(uint32_t degree, std::vector<Perm> elements,
                               std::string description);

  uint32_t degree_;
  std::vector<Perm> elems_; // sorted lexicographically; identity first
  std::unordered_map<Perm, uint32_t, PermHash> index_;
  std::vector<uint32_t> inverse_;
  std::string description_;

  mutable std::mutex cache_mutex_;
  mutable std::shared_ptr<const SubgroupClassTable> classes_;
  mutable std::shared_ptr<const MarksTable> marks_;
  mutable std::shared_ptr<const std::vector<ElementClass>> element_classes_;
  mutable std::shared_ptr<const std::vector<uint32_t>> generators_;
  mutable std::unordered_map<uint64_t, std::shared_ptr<const std::vector<int64_t>>> basis_products_;
  mutable std::shared_ptr<const std::vector<std::vector<int64_t>>> basis_characters_;
};

/// Canonicalizes and interns a closed element set; the same abstract group
/// always yields the same shared object.
GroupPtr intern_group(uint32_t degree, std::vector<Perm> elements, std::string description = "");

/// Closure of a generating set, subject to the group-order bound.
GroupPtr group_from_generators(uint32_t degree, const std::vector<Perm>& gens,
                               const Bounds& bounds = {}, std::string description = "");

/// Parses and realizes a group description: `cyclic:n`, `dihedral:n` (n >= 3),
/// `symmetric:n` (n <= 6), or `perm:[[...],[...]]` in 0-based one-line image
/// notation.
GroupPtr generate_group(const std::string& description, const Bounds& bounds = {});

/// Uncached enumeration (the memoized accessors call these).
SubgroupClassTable compute_subgroup_classes(const PermGroup& g, const Bounds& bounds = {});
MarksTable compute_table_of_marks(const PermGroup& g, const SubgroupClassTable& classes);

/// Normalizer of a subgroup, as element indices.
std::vector<uint32_t> normalizer(const PermGroup& g, const Subgroup& h);

/// True when the sorted index list is a subgroup (identity, closure).
bool is_closed_member_set(const PermGroup& g, const std::vector<uint32_t>& sorted_members);

} // namespace eqobs
