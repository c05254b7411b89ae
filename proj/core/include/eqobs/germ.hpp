#pragma once

#include <memory>
#include <vector>

#include "eqobs/burnside.hpp"
#include "eqobs/group.hpp"
#include "eqobs/poset.hpp"

namespace eqobs {

/// Raw description of a stratified germ with a group action, as parsed from
/// a germ file: the poset input plus one isotropy subgroup per stratum,
/// given by generating permutations.
struct GermInput {
  GroupPtr group;
  int64_t ambient_dim = 0;
  PosetInput poset;
  std::vector<std::vector<Perm>> isotropy_gens; // one list per stratum
};

/// The combinatorial model of a germ (V, x) with an action of a finite
/// group: poset of strata, dimensions, Eu table, and per-stratum isotropy
/// classes. Immutable after construction.
class StratGermData {
public:
  /// Collects every invariant violation; subconjugacy of isotropy classes
  /// along the order is only warned about.
  static ValidationReport validate(const GermInput& input, const Bounds& bounds = {});

  /// Throws ValidationError (with all messages) when validation fails.
  static std::shared_ptr<const StratGermData> build(const GermInput& input,
                                                    const Bounds& bounds = {});

  const GroupPtr& group() const { return group_; }
  const StratPoset& poset() const { return poset_; }
  int64_t ambient_dim() const { return ambient_dim_; }
  const Subgroup& isotropy(size_t stratum) const { return isotropy_[stratum]; }
  /// Burnside class index [H/H_i] of the stratum's isotropy.
  size_t isotropy_class(size_t stratum) const { return isotropy_class_[stratum]; }
  /// Complex dimension of the germ itself (the top stratum).
  int64_t top_dim() const { return poset_.dim(poset_.top()); }

  bool operator==(const StratGermData& other) const;

private:
  StratGermData() = default;
  GroupPtr group_;
  StratPoset poset_;
  int64_t ambient_dim_ = 0;
  std::vector<Subgroup> isotropy_;
  std::vector<size_t> isotropy_class_;
};

PosetFunction m_tilde(const StratGermData& germ);
PosetFunction n_from_eu(const StratGermData& germ);

} // namespace eqobs
