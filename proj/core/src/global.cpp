#include "eqobs/global.hpp"

#include <random>

#include "eqobs/checked.hpp"

namespace eqobs {

ValidationReport CompactStratVariety::validate(const VarietyInput& input, const Bounds& bounds) {
  ValidationReport report;
  if (!input.group) {
    report.error("variety has no group");
    return report;
  }
  if (input.poset.ids.empty()) {
    // the empty variety: all invariants vanish
    if (!input.poset.top.empty())
      report.error("empty variety must not declare a top stratum");
    return report;
  }
  GermInput as_germ{input.group, 0, input.poset, input.isotropy_gens};
  report = StratGermData::validate(as_germ, bounds);
  if (input.quotient_euler.size() != input.poset.ids.size())
    report.error("quotient_euler list does not match the stratum list");
  return report;
}

std::shared_ptr<const CompactStratVariety> CompactStratVariety::build(const VarietyInput& input,
                                                                      const Bounds& bounds) {
  ValidationReport report = validate(input, bounds);
  if (!report.ok()) throw ValidationError(report.joined_errors());

  auto v = std::shared_ptr<CompactStratVariety>(new CompactStratVariety());
  v->group_ = input.group;
  v->kind_ = input.kind;
  if (input.poset.ids.empty()) {
    v->empty_ = true;
    return v;
  }
  v->poset_ = StratPoset::build(input.poset);
  v->quotient_euler_ = input.quotient_euler;
  const SubgroupClassTable& classes = input.group->subgroup_classes(bounds);
  for (const auto& gens : input.isotropy_gens) {
    v->isotropy_.push_back(Subgroup::from_generators(input.group, gens));
    v->isotropy_class_.push_back(classes.class_of(v->isotropy_.back()));
  }
  return v;
}

int64_t CompactStratVariety::eu_top(size_t stratum) const {
  return poset_.eu(stratum, poset_.top());
}

bool CompactStratVariety::operator==(const CompactStratVariety& other) const {
  if (group_ != other.group_ || empty_ != other.empty_ || kind_ != other.kind_) return false;
  if (empty_) return true;
  if (!(poset_ == other.poset_) || quotient_euler_ != other.quotient_euler_) return false;
  for (size_t i = 0; i < isotropy_.size(); ++i)
    if (!(isotropy_[i] == other.isotropy_[i])) return false;
  return true;
}

bool GlobalFormData::operator==(const GlobalFormData& other) const {
  if (records.size() != other.records.size()) return false;
  for (size_t r = 0; r < records.size(); ++r) {
    if (records[r].stratum != other.records[r].stratum ||
        records[r].entries.size() != other.records[r].entries.size())
      return false;
    for (size_t e = 0; e < records[r].entries.size(); ++e) {
      if (records[r].entries[e].index != other.records[r].entries[e].index ||
          !(records[r].entries[e].isotropy == other.records[r].entries[e].isotropy))
        return false;
    }
  }
  return true;
}

BurnsideElement chi_g(const CompactStratVariety& v, const Bounds& bounds) {
  BurnsideElement out = BurnsideElement::zero(v.group(), bounds);
  for (size_t j = 0; j < v.stratum_count(); ++j)
    out.add_to(v.isotropy_class(j), v.quotient_euler(j));
  return out;
}

BurnsideElement global_obstruction(const CompactStratVariety& v, const Bounds& bounds) {
  BurnsideElement out = BurnsideElement::zero(v.group(), bounds);
  for (size_t j = 0; j < v.stratum_count(); ++j)
    out.add_to(v.isotropy_class(j), checked_mul(v.eu_top(j), v.quotient_euler(j)));
  return out;
}

namespace {

void check_form_against_variety(const CompactStratVariety& v, const GlobalFormData& form,
                                const Bounds& bounds) {
  const SubgroupClassTable& classes = v.group()->subgroup_classes(bounds);
  for (const FormRecord& rec : form.records) {
    if (rec.stratum >= v.stratum_count())
      throw ValidationError("form data references a stratum that does not exist");
    for (const OrbitEntry& e : rec.entries) {
      if (e.isotropy.parent() != v.group())
        throw ValidationError("orbit isotropy subgroup belongs to a different group");
      if (classes.class_of(e.isotropy) != v.isotropy_class(rec.stratum))
        throw ValidationError("orbit isotropy on stratum '" + v.poset().id(rec.stratum) +
                              "' is not in the stratum's class");
    }
  }
}

std::vector<int64_t> stratum_index_sums(const CompactStratVariety& v, const GlobalFormData& form) {
  std::vector<int64_t> sums(v.stratum_count(), 0);
  for (const FormRecord& rec : form.records)
    for (const OrbitEntry& e : rec.entries)
      sums[rec.stratum] = checked_add(sums[rec.stratum], e.index);
  return sums;
}

} // namespace

BurnsideElement orbit_level_obstruction(const CompactStratVariety& v, const GlobalFormData& form,
                                        bool check_constraint, const Bounds& bounds) {
  check_form_against_variety(v, form, bounds);
  if (check_constraint) {
    std::vector<int64_t> sums = stratum_index_sums(v, form);
    for (size_t j = 0; j < v.stratum_count(); ++j) {
      if (sums[j] != v.quotient_euler(j))
        throw ValidationError("form data violates the index-sum constraint on stratum '" +
                              v.poset().id(j) + "': sum " + std::to_string(sums[j]) +
                              " != chi(W/G) " + std::to_string(v.quotient_euler(j)));
    }
  }
  BurnsideElement out = BurnsideElement::zero(v.group(), bounds);
  for (const FormRecord& rec : form.records) {
    for (const OrbitEntry& e : rec.entries) {
      // Eu(V, W_(p)) * index * [G_p/G_p] in B(G_p), induced up to B(G)
      GroupPtr gp = e.isotropy.as_group();
      BurnsideElement local =
          checked_mul(v.eu_top(rec.stratum), e.index) * BurnsideElement::unit(gp, bounds);
      out += induce_to(local, v.group(), bounds);
    }
  }
  return out;
}

PoincareHopfReport poincare_hopf_check(const CompactStratVariety& v, const GlobalFormData& form,
                                       const Bounds& bounds) {
  check_form_against_variety(v, form, bounds);
  BurnsideElement induced = BurnsideElement::zero(v.group(), bounds);
  for (const FormRecord& rec : form.records) {
    for (const OrbitEntry& e : rec.entries) {
      GroupPtr gp = e.isotropy.as_group();
      induced += induce_to(e.index * BurnsideElement::unit(gp, bounds), v.group(), bounds);
    }
  }
  PoincareHopfReport report{std::move(induced), chi_g(v, bounds)};
  report.equal = report.induced_sum == report.chi;
  std::vector<int64_t> sums = stratum_index_sums(v, form);
  for (size_t j = 0; j < v.stratum_count(); ++j)
    report.strata.push_back({v.poset().id(j), sums[j], v.quotient_euler(j),
                             sums[j] == v.quotient_euler(j)});
  return report;
}

GlobalFormData synthesize_form_data(const CompactStratVariety& v, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int64_t> small(-3, 3);
  GlobalFormData form;
  for (size_t j = 0; j < v.stratum_count(); ++j) {
    int64_t target = v.quotient_euler(j);
    std::uniform_int_distribution<int> count_dist(target == 0 ? 0 : 1, 3);
    int n_entries = count_dist(rng);
    FormRecord rec{j, {}};
    int64_t partial = 0;
    for (int e = 0; e + 1 < n_entries; ++e) {
      int64_t idx = small(rng);
      partial = checked_add(partial, idx);
      rec.entries.push_back(OrbitEntry{idx, v.isotropy(j)});
    }
    if (n_entries > 0)
      rec.entries.push_back(OrbitEntry{checked_sub(target, partial), v.isotropy(j)});
    // scatter the orbits over the conjugacy class of the stratum's isotropy
    std::uniform_int_distribution<uint32_t> conj(0, static_cast<uint32_t>(v.group()->order() - 1));
    for (OrbitEntry& e : rec.entries) e.isotropy = e.isotropy.conjugated_by(conj(rng));
    if (!rec.entries.empty()) form.records.push_back(std::move(rec));
  }
  return form;
}

} // namespace eqobs
