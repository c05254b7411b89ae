#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqobs/germ.hpp"
#include "eqobs/global.hpp"
#include "eqobs/local.hpp"

namespace eqobs {

/// Shape limits for generated test data.
struct FuzzLimits {
  int max_strata = 8;
  int64_t value_range = 5; // Eu entries, indices and quotient Euler characteristics in [-r, r]
  int max_entries_per_stratum = 3;
};

/// Per-case derived seed; stable across platforms (splitmix64).
uint64_t mix_seed(uint64_t seed, uint64_t index);

struct GermSample {
  std::shared_ptr<const StratGermData> germ;
  FormSingularityData form;
};

/// Deterministic random germ with singularity data: a random poset with a
/// unique maximum, dimensions strictly increasing along the order, random
/// isotropy classes, random Eu table and random orbit records.
GermSample random_germ_sample(GroupPtr group, uint64_t seed, const FuzzLimits& limits = {},
                              const Bounds& bounds = {});

struct VarietySample {
  std::shared_ptr<const CompactStratVariety> variety;
  GlobalFormData form; // synthesized to satisfy the per-stratum index-sum constraint
};

VarietySample random_variety_sample(GroupPtr group, uint64_t seed, const FuzzLimits& limits = {},
                                    const Bounds& bounds = {});

/// The group pool used by fuzzing and the acceptance corpus.
std::vector<GroupPtr> default_fuzz_groups(const Bounds& bounds = {});

struct FuzzConfig {
  uint64_t seed = 1;
  uint64_t count = 100;
  FuzzLimits limits;
  Bounds bounds;
  unsigned threads = 0; // 0 = automatic
};

struct FuzzFailure {
  uint64_t case_index;
  std::string kind;
  std::string serialized_input;
};

struct FuzzSummary {
  uint64_t cases = 0;
  uint64_t germ_theorem_failures = 0;
  uint64_t germ_inversion_failures = 0;
  uint64_t variety_obstruction_failures = 0;
  uint64_t variety_ph_failures = 0;
  std::vector<FuzzFailure> failures;

  uint64_t total_failures() const {
    return germ_theorem_failures + germ_inversion_failures + variety_obstruction_failures +
           variety_ph_failures;
  }
};

/// Runs `count` cases, each consisting of one random germ (theorem and
/// inversion round-trip checks) and one random variety (orbit-level
/// obstruction and Poincare-Hopf checks). Cases are independent and may be
/// evaluated concurrently; results are reported in case order.
FuzzSummary run_fuzz(const FuzzConfig& config);

} // namespace eqobs
