#pragma once

#include <memory>
#include <string>
#include <vector>

#include "eqobs/burnside.hpp"
#include "eqobs/germ.hpp"
#include "eqobs/local.hpp"

namespace eqobs {

enum class VarietyKind { compact, affine };

/// Raw description of a stratified compact (or affine, radial-at-infinity)
/// variety with a group action: the germ fields plus the Euler
/// characteristic of each stratum quotient.
struct VarietyInput {
  GroupPtr group;
  PosetInput poset;
  std::vector<std::vector<Perm>> isotropy_gens;
  std::vector<int64_t> quotient_euler;
  VarietyKind kind = VarietyKind::compact;
};

/// A stratified variety for the global invariants. Strata must each carry a
/// single isotropy class; Eu(V, W_j) is read from the top row of the table.
/// An empty variety (no strata) is allowed and has vanishing invariants.
class CompactStratVariety {
public:
  static ValidationReport validate(const VarietyInput& input, const Bounds& bounds = {});
  static std::shared_ptr<const CompactStratVariety> build(const VarietyInput& input,
                                                          const Bounds& bounds = {});

  const GroupPtr& group() const { return group_; }
  bool is_empty() const { return empty_; }
  const StratPoset& poset() const { return poset_; }
  const Subgroup& isotropy(size_t stratum) const { return isotropy_[stratum]; }
  size_t isotropy_class(size_t stratum) const { return isotropy_class_[stratum]; }
  int64_t quotient_euler(size_t stratum) const { return quotient_euler_[stratum]; }
  /// Eu(V, W_j): the top row of the Eu table.
  int64_t eu_top(size_t stratum) const;
  VarietyKind kind() const { return kind_; }
  size_t stratum_count() const { return empty_ ? 0 : poset_.count(); }

  bool operator==(const CompactStratVariety& other) const;

private:
  CompactStratVariety() = default;
  GroupPtr group_;
  bool empty_ = false;
  StratPoset poset_;
  std::vector<Subgroup> isotropy_;
  std::vector<size_t> isotropy_class_;
  std::vector<int64_t> quotient_euler_;
  VarietyKind kind_ = VarietyKind::compact;
};

/// Orbit records of an invariant 1-form on the variety (radial at infinity
/// in the affine case). Reuses the germ-side record layout.
struct GlobalFormData {
  std::vector<FormRecord> records;

  bool operator==(const GlobalFormData&) const;
};

/// Equivariant Euler characteristic: sum of chi(W_j/G) [G/H_j].
BurnsideElement chi_g(const CompactStratVariety& v, const Bounds& bounds = {});

/// Global equivariant Euler obstruction: sum of Eu(V, W_j) chi(W_j/G) [G/H_j].
BurnsideElement global_obstruction(const CompactStratVariety& v, const Bounds& bounds = {});

/// Orbit-level route: every singular orbit contributes the induction of
/// Eu(V, W_(p)) * index * [G_p/G_p] from B(G_p) to B(G). When
/// `check_constraint` is set, per-stratum index sums must equal chi(W_j/G).
BurnsideElement orbit_level_obstruction(const CompactStratVariety& v, const GlobalFormData& form,
                                        bool check_constraint = false, const Bounds& bounds = {});

struct PoincareHopfReport {
  BurnsideElement induced_sum, chi;
  bool equal = false;
  struct StratumDiag {
    std::string id;
    int64_t entry_sum;
    int64_t quotient_euler;
    bool satisfied;
  };
  std::vector<StratumDiag> strata;
};

/// Compares the induced radial-index sum of the form against chi^G.
PoincareHopfReport poincare_hopf_check(const CompactStratVariety& v, const GlobalFormData& form,
                                       const Bounds& bounds = {});

/// Deterministic synthetic form data: per stratum, orbit entries whose
/// indices sum to chi(W_j/G), with isotropy conjugate to the stratum class.
GlobalFormData synthesize_form_data(const CompactStratVariety& v, uint64_t seed);

} // namespace eqobs
