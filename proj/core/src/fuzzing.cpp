#include "eqobs/fuzzing.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "eqobs/checked.hpp"
#include "eqobs/io.hpp"

namespace eqobs {

uint64_t mix_seed(uint64_t seed, uint64_t index) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

// Random poset with ids s0..s{n-1}, unique maximum s{n-1}, dims strictly
// increasing along the order.
PosetInput random_poset(std::mt19937_64& rng, const FuzzLimits& limits) {
  std::uniform_int_distribution<int> n_dist(1, limits.max_strata);
  const int n = n_dist(rng);
  PosetInput poset;
  for (int i = 0; i < n; ++i) poset.ids.push_back("s" + std::to_string(i));
  poset.top = poset.ids.back();

  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  std::bernoulli_distribution edge(0.4);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (j == n - 1 || edge(rng)) {
        rel[i][j] = 1;
        poset.order.emplace_back(poset.ids[i], poset.ids[j]);
      }
    }
  // transitive closure, then longest-chain heights for the dimensions
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (rel[i][k])
        for (int j = 0; j < n; ++j)
          if (rel[k][j]) rel[i][j] = 1;
  std::vector<int64_t> height(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (rel[i][j]) height[j] = std::max(height[j], height[i] + 1);
  std::uniform_int_distribution<int64_t> scale_dist(1, 2);
  int64_t scale = scale_dist(rng);
  poset.dims.resize(n);
  for (int i = 0; i < n; ++i) poset.dims[i] = scale * height[i];

  std::uniform_int_distribution<int64_t> value(-limits.value_range, limits.value_range);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rel[i][j])
        poset.eu.push_back({poset.ids[i], poset.ids[j], value(rng)});
  return poset;
}

std::vector<std::vector<Perm>> random_isotropy(std::mt19937_64& rng, const GroupPtr& group,
                                               size_t n, const Bounds& bounds) {
  const SubgroupClassTable& classes = group->subgroup_classes(bounds);
  std::uniform_int_distribution<size_t> cls(0, classes.count() - 1);
  std::uniform_int_distribution<uint32_t> conj(0, static_cast<uint32_t>(group->order() - 1));
  std::vector<std::vector<Perm>> out;
  for (size_t i = 0; i < n; ++i)
    out.push_back(classes.representative(cls(rng)).conjugated_by(conj(rng)).member_perms());
  return out;
}

} // namespace

GermSample random_germ_sample(GroupPtr group, uint64_t seed, const FuzzLimits& limits,
                              const Bounds& bounds) {
  std::mt19937_64 rng(seed);
  GermInput input;
  input.group = group;
  input.poset = random_poset(rng, limits);
  input.isotropy_gens = random_isotropy(rng, group, input.poset.ids.size(), bounds);
  input.ambient_dim = *std::max_element(input.poset.dims.begin(), input.poset.dims.end()) + 1;
  auto germ = StratGermData::build(input, bounds);

  std::uniform_int_distribution<int> entries(0, limits.max_entries_per_stratum);
  std::uniform_int_distribution<int64_t> value(-limits.value_range, limits.value_range);
  std::uniform_int_distribution<uint32_t> conj(0, static_cast<uint32_t>(group->order() - 1));
  std::vector<FormRecord> records;
  for (size_t i = 0; i < germ->poset().count(); ++i) {
    FormRecord rec{i, {}};
    int k = entries(rng);
    for (int e = 0; e < k; ++e)
      rec.entries.push_back(OrbitEntry{value(rng), germ->isotropy(i).conjugated_by(conj(rng))});
    if (!rec.entries.empty()) records.push_back(std::move(rec));
  }
  FormFlavor flavor = (rng() & 1) ? FormFlavor::complex_form : FormFlavor::real_form;
  return GermSample{germ, FormSingularityData(germ, std::move(records), flavor)};
}

VarietySample random_variety_sample(GroupPtr group, uint64_t seed, const FuzzLimits& limits,
                                    const Bounds& bounds) {
  std::mt19937_64 rng(seed);
  VarietyInput input;
  input.group = group;
  input.poset = random_poset(rng, limits);
  input.isotropy_gens = random_isotropy(rng, group, input.poset.ids.size(), bounds);
  std::uniform_int_distribution<int64_t> value(-limits.value_range, limits.value_range);
  for (size_t i = 0; i < input.poset.ids.size(); ++i) input.quotient_euler.push_back(value(rng));
  input.kind = (rng() & 1) ? VarietyKind::compact : VarietyKind::affine;
  auto variety = CompactStratVariety::build(input, bounds);
  return VarietySample{variety, synthesize_form_data(*variety, rng())};
}

std::vector<GroupPtr> default_fuzz_groups(const Bounds& bounds) {
  return {
      generate_group("cyclic:2", bounds),  generate_group("cyclic:3", bounds),
      generate_group("cyclic:6", bounds),  generate_group("symmetric:3", bounds),
      generate_group("dihedral:4", bounds),
      // A4 as even permutations of 4 points
      generate_group("perm:[[1,2,0,3],[0,2,3,1]]", bounds),
  };
}

FuzzSummary run_fuzz(const FuzzConfig& config) {
  struct CaseResult {
    bool theorem_ok = true, inversion_ok = true, obstruction_ok = true, ph_ok = true;
    std::string germ_json, variety_json;
  };

  std::vector<GroupPtr> groups = default_fuzz_groups(config.bounds);
  // warm the class tables up front so worker threads only read
  for (const GroupPtr& g : groups) g->subgroup_classes(config.bounds);

  std::vector<CaseResult> results(config.count);
  std::atomic<uint64_t> next{0};
  auto worker = [&]() {
    while (true) {
      uint64_t i = next.fetch_add(1);
      if (i >= config.count) break;
      CaseResult& r = results[i];
      const GroupPtr& group = groups[i % groups.size()];

      GermSample gs = random_germ_sample(group, mix_seed(config.seed, 2 * i), config.limits,
                                         config.bounds);
      TheoremReport theorem = verify_theorem(gs.form, config.bounds);
      r.theorem_ok = theorem.ok();
      const StratPoset& poset = gs.germ->poset();
      PosetFunction mt = m_tilde(poset);
      bool inv_ok = m_from_n(poset, n_from_eu(poset)) == mt;
      if (inv_ok) {
        // Eu recovery: zeta * m~ must reproduce the Eu table
        PosetFunction rec = convolve(poset, zeta(poset), mt);
        for (size_t i2 = 0; i2 < poset.count() && inv_ok; ++i2)
          for (size_t k = 0; k < poset.count(); ++k)
            if (rec(i2, k) != poset.eu(i2, k)) { inv_ok = false; break; }
      }
      r.inversion_ok = inv_ok;
      if (!r.theorem_ok || !r.inversion_ok)
        r.germ_json = serialize_germ(*gs.germ, &gs.form);

      VarietySample vs = random_variety_sample(group, mix_seed(config.seed, 2 * i + 1),
                                               config.limits, config.bounds);
      r.obstruction_ok = orbit_level_obstruction(*vs.variety, vs.form, true, config.bounds) ==
                         global_obstruction(*vs.variety, config.bounds);
      r.ph_ok = poincare_hopf_check(*vs.variety, vs.form, config.bounds).equal;
      if (!r.obstruction_ok || !r.ph_ok)
        r.variety_json = serialize_variety(*vs.variety, &vs.form);
    }
  };

  unsigned n_threads = config.threads;
  if (n_threads == 0)
    n_threads = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
  if (config.count < 32) n_threads = 1;
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  FuzzSummary summary;
  summary.cases = config.count;
  for (uint64_t i = 0; i < config.count; ++i) {
    const CaseResult& r = results[i];
    if (!r.theorem_ok) {
      ++summary.germ_theorem_failures;
      summary.failures.push_back({i, "theorem", r.germ_json});
    }
    if (!r.inversion_ok) {
      ++summary.germ_inversion_failures;
      summary.failures.push_back({i, "inversion", r.germ_json});
    }
    if (!r.obstruction_ok) {
      ++summary.variety_obstruction_failures;
      summary.failures.push_back({i, "obstruction", r.variety_json});
    }
    if (!r.ph_ok) {
      ++summary.variety_ph_failures;
      summary.failures.push_back({i, "poincare-hopf", r.variety_json});
    }
  }
  return summary;
}

} // namespace eqobs
