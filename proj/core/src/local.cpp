#include "eqobs/local.hpp"

#include <functional>

#include "eqobs/checked.hpp"

namespace eqobs {

FormSingularityData::FormSingularityData(std::shared_ptr<const StratGermData> germ,
                                         std::vector<FormRecord> records, FormFlavor flavor)
    : germ_(std::move(germ)), records_(std::move(records)), flavor_(flavor) {
  if (!germ_) throw ValidationError("form data requires a germ");
  const SubgroupClassTable& classes = germ_->group()->subgroup_classes();
  for (const FormRecord& rec : records_) {
    if (rec.stratum >= germ_->poset().count())
      throw ValidationError("form data references a stratum that does not exist");
    for (const OrbitEntry& e : rec.entries) {
      if (e.isotropy.parent() != germ_->group())
        throw ValidationError("orbit isotropy subgroup belongs to a different group");
      if (classes.class_of(e.isotropy) != germ_->isotropy_class(rec.stratum))
        throw ValidationError("orbit isotropy on stratum '" + germ_->poset().id(rec.stratum) +
                              "' is not conjugate to the stratum's isotropy class");
    }
  }
}

bool FormSingularityData::operator==(const FormSingularityData& other) const {
  if (!(*germ_ == *other.germ_) || flavor_ != other.flavor_ ||
      records_.size() != other.records_.size())
    return false;
  for (size_t r = 0; r < records_.size(); ++r) {
    if (records_[r].stratum != other.records_[r].stratum ||
        records_[r].entries.size() != other.records_[r].entries.size())
      return false;
    for (size_t e = 0; e < records_[r].entries.size(); ++e) {
      if (records_[r].entries[e].index != other.records_[r].entries[e].index ||
          !(records_[r].entries[e].isotropy == other.records_[r].entries[e].isotropy))
        return false;
    }
  }
  return true;
}

std::vector<int64_t> s_coefficients(const FormSingularityData& data) {
  const StratPoset& poset = data.germ()->poset();
  std::vector<int64_t> s(poset.count(), 0);
  for (const FormRecord& rec : data.records())
    for (const OrbitEntry& e : rec.entries) s[rec.stratum] = checked_add(s[rec.stratum], e.index);
  if (data.flavor() == FormFlavor::complex_form) {
    int64_t top_dim = data.germ()->top_dim();
    for (size_t i = 0; i < s.size(); ++i)
      s[i] = checked_mul(s[i], parity_sign(top_dim - poset.dim(i)));
  }
  return s;
}

namespace {

// sum over i <= k of weight(i) * s_i * [H/H_i]
BurnsideElement weighted_stratum_sum(const FormSingularityData& data, size_t k,
                                     const std::vector<int64_t>& s,
                                     const std::function<int64_t(size_t)>& weight,
                                     const Bounds& bounds) {
  const StratPoset& poset = data.germ()->poset();
  if (k >= poset.count()) throw ValidationError("unknown stratum index");
  BurnsideElement out = BurnsideElement::zero(data.germ()->group(), bounds);
  for (size_t i = 0; i < poset.count(); ++i) {
    if (!poset.leq(i, k) || s[i] == 0) continue;
    out.add_to(data.germ()->isotropy_class(i), checked_mul(weight(i), s[i]));
  }
  return out;
}

} // namespace

BurnsideElement eq_radial_index(const FormSingularityData& data, size_t k, const Bounds& bounds) {
  return weighted_stratum_sum(data, k, s_coefficients(data), [](size_t) { return 1; }, bounds);
}

BurnsideElement eq_euler_obstruction(const FormSingularityData& data, size_t k,
                                     const Bounds& bounds) {
  const StratPoset& poset = data.germ()->poset();
  return weighted_stratum_sum(data, k, s_coefficients(data),
                              [&](size_t i) { return poset.eu(i, k); }, bounds);
}

TheoremReport verify_theorem(const FormSingularityData& data, const Bounds& bounds) {
  const StratPoset& poset = data.germ()->poset();
  const size_t top = poset.top();
  PosetFunction m = m_tilde(poset);

  std::vector<BurnsideElement> radial;
  radial.reserve(poset.count());
  for (size_t j = 0; j < poset.count(); ++j) radial.push_back(eq_radial_index(data, j, bounds));

  auto weighted_sum = [&](size_t k) {
    BurnsideElement acc = BurnsideElement::zero(data.germ()->group(), bounds);
    for (size_t j = 0; j < poset.count(); ++j) {
      if (!poset.leq(j, k) || m(j, k) == 0) continue;
      acc += m(j, k) * radial[j];
    }
    return acc;
  };

  TheoremReport report{eq_euler_obstruction(data, top, bounds), weighted_sum(top)};
  report.top_equal = report.lhs == report.rhs;
  for (size_t j = 0; j < poset.count(); ++j)
    report.terms.push_back({poset.id(j), m(j, top), radial[j]});

  report.restricted_equal = true;
  for (size_t k = 0; k < poset.count(); ++k) {
    if (!(eq_euler_obstruction(data, k, bounds) == weighted_sum(k))) {
      report.restricted_equal = false;
      report.mismatched_strata.push_back(poset.id(k));
    }
  }
  return report;
}

BurnsideElement germ_obstruction(const std::shared_ptr<const StratGermData>& germ,
                                 size_t point_stratum, const Bounds& bounds) {
  const StratPoset& poset = germ->poset();
  if (point_stratum >= poset.count()) throw ValidationError("unknown stratum index");
  if (poset.dim(point_stratum) != 0)
    throw ValidationError("germ obstruction needs a zero-dimensional point stratum");
  for (size_t i = 0; i < poset.count(); ++i)
    if (!poset.leq(point_stratum, i))
      throw ValidationError("point stratum must be the unique minimal stratum");
  if (germ->isotropy(point_stratum).order() != germ->group()->order())
    throw ValidationError("point stratum must be fixed by the whole group");

  FormRecord rec{point_stratum, {OrbitEntry{1, germ->isotropy(point_stratum)}}};
  FormSingularityData radial_form(germ, {rec}, FormFlavor::real_form);
  return eq_euler_obstruction(radial_form, poset.top(), bounds);
}

BurnsideElement gsv_from_relation(const BurnsideElement& eu_omega,
                                  const BurnsideElement& germ_eu,
                                  const BurnsideElement& chi_milnor, int64_t n) {
  if (eu_omega.group() != germ_eu.group() || eu_omega.group() != chi_milnor.group())
    throw ValidationError("GSV relation requires elements over the same group");
  int64_t sign = parity_sign(n);
  return eu_omega - sign * germ_eu + sign * chi_milnor;
}

} // namespace eqobs
