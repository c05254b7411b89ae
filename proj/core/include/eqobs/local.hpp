#pragma once

#include <memory>
#include <string>
#include <vector>

#include "eqobs/burnside.hpp"
#include "eqobs/germ.hpp"

namespace eqobs {

enum class FormFlavor { real_form, complex_form };

/// One orbit of singular points of the deformed 1-form: the local index of
/// the restriction to the stratum at a representative point, and the
/// isotropy subgroup of that point (conjugate to the stratum's class).
struct OrbitEntry {
  int64_t index = 0;
  Subgroup isotropy;
};

struct FormRecord {
  size_t stratum = 0;
  std::vector<OrbitEntry> entries;
};

/// Per-stratum orbit records of an invariant 1-form with a radial-extension
/// deformation; the complex flavor decorates stratum sums with the sign
/// (-1)^(dim V - dim V_i).
class FormSingularityData {
public:
  FormSingularityData(std::shared_ptr<const StratGermData> germ, std::vector<FormRecord> records,
                      FormFlavor flavor);

  const std::shared_ptr<const StratGermData>& germ() const { return germ_; }
  const std::vector<FormRecord>& records() const { return records_; }
  FormFlavor flavor() const { return flavor_; }

  bool operator==(const FormSingularityData& other) const;

private:
  std::shared_ptr<const StratGermData> germ_;
  std::vector<FormRecord> records_;
  FormFlavor flavor_;
};

/// s_i per stratum: the orbit-index sum t_i, signed by
/// (-1)^(dim V - dim V_i) in the complex flavor.
std::vector<int64_t> s_coefficients(const FormSingularityData& data);

/// Equivariant radial index of the form restricted to the closure of
/// stratum k: sum over i <= k of s_i [H/H_i].
BurnsideElement eq_radial_index(const FormSingularityData& data, size_t k,
                                const Bounds& bounds = {});

/// Equivariant local Euler obstruction of the restriction to closure(V_k):
/// sum over i <= k of Eu(V_k, V_i) s_i [H/H_i].
BurnsideElement eq_euler_obstruction(const FormSingularityData& data, size_t k,
                                     const Bounds& bounds = {});

/// Verification that the Euler obstruction equals the m~-weighted sum of
/// radial indices, at the top stratum and restricted to every stratum.
struct TheoremReport {
  BurnsideElement lhs, rhs;
  bool top_equal = false;
  struct Term {
    std::string stratum;
    int64_t weight; // m~(j, top)
    BurnsideElement radial;
  };
  std::vector<Term> terms;
  bool restricted_equal = false;
  std::vector<std::string> mismatched_strata;

  bool ok() const { return top_equal && restricted_equal; }
};

TheoremReport verify_theorem(const FormSingularityData& data, const Bounds& bounds = {});

/// Equivariant local Euler obstruction of the germ itself: the obstruction
/// of the radial form, whose only singular orbit is the fixed point x with
/// index 1. `point_stratum` must be the unique minimal stratum, of dimension
/// zero and with full isotropy.
BurnsideElement germ_obstruction(const std::shared_ptr<const StratGermData>& germ,
                                 size_t point_stratum, const Bounds& bounds = {});

/// GSV index from the obstruction relation:
/// ind_GSV = eu_omega - (-1)^n germ_eu + (-1)^n chi_milnor.
BurnsideElement gsv_from_relation(const BurnsideElement& eu_omega,
                                  const BurnsideElement& germ_eu,
                                  const BurnsideElement& chi_milnor, int64_t n);

} // namespace eqobs
