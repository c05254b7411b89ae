#include <doctest.h>

#include <random>

#include "eqobs/fuzzing.hpp"
#include "eqobs/local.hpp"
#include "oracles.hpp"

using namespace eqobs;

namespace {

std::shared_ptr<const StratGermData> c2_curve_germ() {
  GermInput in;
  in.group = generate_group("cyclic:2");
  in.ambient_dim = 2;
  in.poset.ids = {"origin", "reg"};
  in.poset.dims = {0, 1};
  in.poset.order = {{"origin", "reg"}};
  in.poset.top = "reg";
  in.poset.eu = {{"origin", "reg", 2}};
  in.isotropy_gens = {{Perm::from_images({1, 0})}, {}};
  return StratGermData::build(in);
}

FormSingularityData c2_curve_form(const std::shared_ptr<const StratGermData>& germ) {
  std::vector<FormRecord> records{
      {0, {OrbitEntry{1, germ->isotropy(0)}}},
      {1, {OrbitEntry{3, germ->isotropy(1)}}},
  };
  return FormSingularityData(germ, std::move(records), FormFlavor::complex_form);
}

} // namespace

TEST_CASE("C2 curve germ: the worked fixture") {
  auto germ = c2_curve_germ();
  FormSingularityData form = c2_curve_form(germ);
  const size_t top = germ->poset().top();

  SUBCASE("s coefficients carry the complex sign") {
    std::vector<int64_t> s = s_coefficients(form);
    CHECK(s == std::vector<int64_t>{-1, 3});
  }
  SUBCASE("radial index at the top stratum") {
    BurnsideElement r = eq_radial_index(form, top);
    CHECK(r.render() == "-1*[G/H2_0] + 3*[G/H1_0]");
    CHECK(r.reduce_count() == 5);
  }
  SUBCASE("radial index restricted to the point stratum") {
    BurnsideElement r = eq_radial_index(form, *germ->poset().index_of("origin"));
    CHECK(r.render() == "-1*[G/H2_0]");
  }
  SUBCASE("Euler obstruction") {
    BurnsideElement e = eq_euler_obstruction(form, top);
    CHECK(e.render() == "-2*[G/H2_0] + 3*[G/H1_0]");
    CHECK(e.reduce_count() == 4);
  }
  SUBCASE("both sides of the identity agree") {
    TheoremReport report = verify_theorem(form);
    CHECK(report.ok());
    CHECK(report.lhs == report.rhs);
    CHECK(report.lhs.render() == "-2*[G/H2_0] + 3*[G/H1_0]");
    // m~(origin, top) = 1 in this germ
    REQUIRE(report.terms.size() == 2);
    CHECK(report.terms[0].weight == 1);
  }
  SUBCASE("germ obstruction of the radial form") {
    BurnsideElement g = germ_obstruction(germ, *germ->poset().index_of("origin"));
    CHECK(g.render() == "2*[G/H2_0]");
    CHECK(g.reduce_count() == 2);
  }
}

TEST_CASE("degenerate cases") {
  GroupPtr c2 = generate_group("cyclic:2");
  GermInput in;
  in.group = c2;
  in.ambient_dim = 1;
  in.poset.ids = {"only"};
  in.poset.dims = {1};
  in.poset.top = "only";
  in.isotropy_gens = {{}};
  auto germ = StratGermData::build(in);

  SUBCASE("single smooth stratum: obstruction equals radial index") {
    std::vector<FormRecord> records{{0, {OrbitEntry{2, germ->isotropy(0)}}}};
    FormSingularityData form(germ, records, FormFlavor::complex_form);
    CHECK(eq_euler_obstruction(form, 0) == eq_radial_index(form, 0));
    TheoremReport report = verify_theorem(form);
    CHECK(report.ok());
    CHECK(report.lhs == eq_radial_index(form, 0));
  }
  SUBCASE("no singular records give zero") {
    FormSingularityData form(germ, {}, FormFlavor::complex_form);
    CHECK(eq_euler_obstruction(form, 0).is_zero());
    CHECK(verify_theorem(form).ok());
  }
  SUBCASE("single free orbit of index r on a smooth germ") {
    std::vector<FormRecord> records{{0, {OrbitEntry{4, germ->isotropy(0)}}}};
    FormSingularityData form(germ, records, FormFlavor::complex_form);
    BurnsideElement r = eq_radial_index(form, 0);
    CHECK(r.coeff(c2->subgroup_classes().trivial_class()) == 4);
  }
}

TEST_CASE("form data validation") {
  auto germ = c2_curve_germ();
  SUBCASE("unknown stratum") {
    std::vector<FormRecord> records{{7, {}}};
    CHECK_THROWS_AS(FormSingularityData(germ, records, FormFlavor::real_form), ValidationError);
  }
  SUBCASE("isotropy outside the stratum's class") {
    // trivial isotropy on the origin stratum whose class is the full group
    std::vector<FormRecord> records{{0, {OrbitEntry{1, germ->group()->trivial_subgroup()}}}};
    CHECK_THROWS_AS(FormSingularityData(germ, records, FormFlavor::real_form), ValidationError);
  }
  SUBCASE("unknown stratum index in evaluation") {
    FormSingularityData form(germ, {}, FormFlavor::real_form);
    CHECK_THROWS_AS(eq_radial_index(form, 9), ValidationError);
  }
}

TEST_CASE("germ obstruction preconditions") {
  auto germ = c2_curve_germ();
  CHECK_THROWS_AS(germ_obstruction(germ, *germ->poset().index_of("reg")), ValidationError);

  // a germ whose minimal stratum is not fixed by the whole group
  GermInput in;
  in.group = generate_group("cyclic:2");
  in.ambient_dim = 1;
  in.poset.ids = {"pt", "reg"};
  in.poset.dims = {0, 1};
  in.poset.order = {{"pt", "reg"}};
  in.poset.top = "reg";
  in.isotropy_gens = {{}, {}};
  auto free_pt = StratGermData::build(in);
  CHECK_THROWS_AS(germ_obstruction(free_pt, 0), ValidationError);
}

TEST_CASE("linearity in singularity records") {
  GroupPtr g = generate_group("symmetric:3");
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    GermSample sample = random_germ_sample(g, mix_seed(555, seed));
    const auto& form = sample.form;
    if (form.records().empty()) continue;
    // split the first entry of the first record into two halves
    std::vector<FormRecord> split = form.records();
    if (split[0].entries.empty()) continue;
    OrbitEntry e = split[0].entries[0];
    split[0].entries[0].index = 1;
    split[0].entries.push_back(OrbitEntry{e.index - 1, e.isotropy});
    FormSingularityData split_form(sample.germ, split, form.flavor());
    const size_t top = sample.germ->poset().top();
    CHECK(eq_radial_index(form, top) == eq_radial_index(split_form, top));
    CHECK(eq_euler_obstruction(form, top) == eq_euler_obstruction(split_form, top));
  }
}

TEST_CASE("flavor consistency: complex = sign-decorated real") {
  GroupPtr g = generate_group("dihedral:4");
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    GermSample sample = random_germ_sample(g, mix_seed(777, seed));
    const StratPoset& poset = sample.germ->poset();
    int64_t top_dim = sample.germ->top_dim();
    for (const FormRecord& rec : sample.form.records()) {
      // single-stratum slice of the data, evaluated in both flavors
      FormSingularityData real_one(sample.germ, {rec}, FormFlavor::real_form);
      FormSingularityData cplx_one(sample.germ, {rec}, FormFlavor::complex_form);
      int64_t sign = (top_dim - poset.dim(rec.stratum)) % 2 == 0 ? 1 : -1;
      CHECK(eq_radial_index(cplx_one, poset.top()) ==
            sign * eq_radial_index(real_one, poset.top()));
      CHECK(eq_euler_obstruction(cplx_one, poset.top()) ==
            sign * eq_euler_obstruction(real_one, poset.top()));
    }
  }
}

TEST_CASE("identity holds on random germs and reductions match the oracle") {
  for (const GroupPtr& g : default_fuzz_groups()) {
    for (uint64_t seed = 1; seed <= 8; ++seed) {
      GermSample sample = random_germ_sample(g, mix_seed(31337, seed));
      TheoremReport report = verify_theorem(sample.form);
      CHECK(report.ok());
      const StratPoset& poset = sample.germ->poset();
      for (size_t k = 0; k < poset.count(); ++k) {
        CHECK(eq_radial_index(sample.form, k).reduce_count() ==
              oracles::radial_reduction_brute(sample.form, k));
        CHECK(eq_euler_obstruction(sample.form, k).reduce_count() ==
              oracles::euler_reduction_brute(sample.form, k));
      }
    }
  }
}

TEST_CASE("GSV relation") {
  GroupPtr c2 = generate_group("cyclic:2");
  BurnsideElement unit = BurnsideElement::unit(c2);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int64_t> dist(-4, 4);
  auto random_elem = [&] {
    BurnsideElement e = BurnsideElement::zero(c2);
    for (size_t i = 0; i < c2->subgroup_classes().count(); ++i) e.add_to(i, dist(rng));
    return e;
  };

  SUBCASE("smooth degenerate case returns eu_omega") {
    BurnsideElement eu_omega = random_elem();
    CHECK(gsv_from_relation(eu_omega, unit, unit, 3) == eu_omega);
  }
  SUBCASE("chi = germ obstruction also cancels") {
    BurnsideElement eu_omega = random_elem();
    BurnsideElement same = random_elem();
    CHECK(gsv_from_relation(eu_omega, same, same, 2) == eu_omega);
  }
  SUBCASE("worked C2 example") {
    BurnsideElement eu_omega = BurnsideElement::zero(c2);
    eu_omega.add_to(1, -2);
    eu_omega.add_to(0, 3);
    BurnsideElement germ_eu = 2 * BurnsideElement::unit(c2);
    BurnsideElement chi = BurnsideElement::unit(c2) - BurnsideElement::basis(c2, 0);
    BurnsideElement gsv = gsv_from_relation(eu_omega, germ_eu, chi, 1);
    CHECK(gsv.render() == "-1*[G/H2_0] + 4*[G/H1_0]");
  }
  SUBCASE("rearranged relation round-trips") {
    for (int trial = 0; trial < 25; ++trial) {
      BurnsideElement eu_omega = random_elem();
      BurnsideElement germ_eu = random_elem();
      BurnsideElement chi = random_elem();
      int64_t n = dist(rng);
      BurnsideElement gsv = gsv_from_relation(eu_omega, germ_eu, chi, n);
      int64_t sign = (n % 2 == 0) ? 1 : -1;
      // solve the relation back for eu_omega
      BurnsideElement recovered = gsv + sign * germ_eu - sign * chi;
      CHECK(recovered == eu_omega);
    }
  }
  SUBCASE("group mismatch is rejected") {
    GroupPtr c3 = generate_group("cyclic:3");
    CHECK_THROWS_AS(gsv_from_relation(unit, BurnsideElement::unit(c3), unit, 1), ValidationError);
  }
}
