#include "eqobs/germ.hpp"

namespace eqobs {

ValidationReport StratGermData::validate(const GermInput& input, const Bounds& bounds) {
  ValidationReport report = StratPoset::validate(input.poset);
  if (!input.group) {
    report.error("germ has no group");
    return report;
  }
  if (input.isotropy_gens.size() != input.poset.ids.size()) {
    report.error("isotropy list does not match the stratum list");
    return report;
  }
  std::vector<Subgroup> iso;
  for (size_t i = 0; i < input.isotropy_gens.size(); ++i) {
    try {
      iso.push_back(Subgroup::from_generators(input.group, input.isotropy_gens[i]));
    } catch (const Error& e) {
      report.error("stratum '" + input.poset.ids[i] + "': " + e.what());
    }
  }
  if (input.ambient_dim < 0) report.error("ambient_dim must be nonnegative");
  if (!report.ok()) return report;

  StratPoset poset = StratPoset::build(input.poset);
  if (input.ambient_dim > 0 && poset.dim(poset.top()) > input.ambient_dim)
    report.warn("top stratum dimension exceeds ambient_dim");
  const SubgroupClassTable& classes = input.group->subgroup_classes(bounds);
  for (size_t i = 0; i < poset.count(); ++i) {
    for (size_t j = 0; j < poset.count(); ++j) {
      if (i == j || !poset.leq(i, j)) continue;
      // isotropy can only shrink when moving to a more generic stratum
      if (!classes.is_subconjugate(classes.class_of(iso[j]), classes.class_of(iso[i])))
        report.warn("isotropy of stratum '" + poset.id(j) +
                    "' is not subconjugate to that of the smaller stratum '" + poset.id(i) + "'");
    }
  }
  return report;
}

std::shared_ptr<const StratGermData> StratGermData::build(const GermInput& input,
                                                          const Bounds& bounds) {
  ValidationReport report = validate(input, bounds);
  if (!report.ok()) throw ValidationError(report.joined_errors());

  auto germ = std::shared_ptr<StratGermData>(new StratGermData());
  germ->group_ = input.group;
  germ->poset_ = StratPoset::build(input.poset);
  germ->ambient_dim_ = input.ambient_dim;
  const SubgroupClassTable& classes = input.group->subgroup_classes(bounds);
  for (size_t i = 0; i < input.isotropy_gens.size(); ++i) {
    germ->isotropy_.push_back(Subgroup::from_generators(input.group, input.isotropy_gens[i]));
    germ->isotropy_class_.push_back(classes.class_of(germ->isotropy_.back()));
  }
  return germ;
}

bool StratGermData::operator==(const StratGermData& other) const {
  if (group_ != other.group_ || !(poset_ == other.poset_) || ambient_dim_ != other.ambient_dim_)
    return false;
  for (size_t i = 0; i < isotropy_.size(); ++i)
    if (!(isotropy_[i] == other.isotropy_[i])) return false;
  return true;
}

PosetFunction m_tilde(const StratGermData& germ) { return m_tilde(germ.poset()); }
PosetFunction n_from_eu(const StratGermData& germ) { return n_from_eu(germ.poset()); }

} // namespace eqobs
