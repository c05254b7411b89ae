#include <doctest.h>

#include <random>
#include <thread>

#include "eqobs/burnside.hpp"
#include "oracles.hpp"

using namespace eqobs;

namespace {

BurnsideElement random_element(const GroupPtr& g, std::mt19937_64& rng, int64_t range = 3) {
  std::uniform_int_distribution<int64_t> dist(-range, range);
  BurnsideElement e = BurnsideElement::zero(g);
  for (size_t i = 0; i < g->subgroup_classes().count(); ++i) e.add_to(i, dist(rng));
  return e;
}

} // namespace

TEST_CASE("from_gset basics") {
  GroupPtr s3 = generate_group("symmetric:3");
  const SubgroupClassTable& t = s3->subgroup_classes();

  CHECK(from_gset(FiniteGSet::empty(s3)).is_zero());
  CHECK(from_gset(FiniteGSet::empty(s3)).render() == "0");

  // the regular action is free and transitive
  BurnsideElement reg = from_gset(FiniteGSet::regular(s3));
  CHECK(reg == BurnsideElement::basis(s3, t.trivial_class()));

  BurnsideElement cosets = from_gset(FiniteGSet::cosets(t.representative(1)));
  CHECK(cosets == BurnsideElement::basis(s3, 1));
}

TEST_CASE("additive structure") {
  GroupPtr s3 = generate_group("symmetric:3");
  std::mt19937_64 rng(7);
  BurnsideElement a = random_element(s3, rng);
  BurnsideElement zero = BurnsideElement::zero(s3);
  CHECK(a + zero == a);
  BurnsideElement h = BurnsideElement::basis(s3, 1);
  CHECK(h + h == 2 * h);
  CHECK((a + (-a)).is_zero());

  GroupPtr c2 = generate_group("cyclic:2");
  CHECK_THROWS_AS(a + BurnsideElement::zero(c2), ValidationError);
}

TEST_CASE("multiplication by orbit decomposition") {
  GroupPtr s3 = generate_group("symmetric:3");
  const SubgroupClassTable& t = s3->subgroup_classes();
  std::mt19937_64 rng(11);
  BurnsideElement a = random_element(s3, rng);
  CHECK(a * BurnsideElement::unit(s3) == a);

  // [S3/C2]^2 = [S3/C2] + [S3/{e}]
  BurnsideElement h2 = BurnsideElement::basis(s3, 1);
  REQUIRE(t.subgroup_order(1) == 2);
  BurnsideElement sq = h2 * h2;
  BurnsideElement expected = h2 + BurnsideElement::basis(s3, t.trivial_class());
  CHECK(sq == expected);
  CHECK(sq.render() == "[G/H2_0] + [G/H1_0]");

  GroupPtr c2 = generate_group("cyclic:2");
  BurnsideElement free_orbit = BurnsideElement::basis(c2, c2->subgroup_classes().trivial_class());
  CHECK(free_orbit * free_orbit == 2 * free_orbit);
}

TEST_CASE("multiplication agrees with the table-of-marks ghost route") {
  for (const char* desc :
       {"cyclic:2", "cyclic:6", "symmetric:3", "dihedral:4", "perm:[[1,2,0,3],[0,2,3,1]]"}) {
    GroupPtr g = generate_group(desc);
    const size_t m = g->subgroup_classes().count();
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) {
        bool exact = false;
        std::vector<int64_t> viaMarks = oracles::marks_route_mul(*g, i, j, &exact);
        CHECK(exact);
        BurnsideElement prod = BurnsideElement::basis(g, i) * BurnsideElement::basis(g, j);
        CHECK(prod.coeffs() == viaMarks);
      }
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(2024);
  for (const char* desc : {"cyclic:6", "symmetric:3", "dihedral:4"}) {
    GroupPtr g = generate_group(desc);
    BurnsideElement one = BurnsideElement::unit(g);
    for (int trial = 0; trial < 40; ++trial) {
      BurnsideElement a = random_element(g, rng);
      BurnsideElement b = random_element(g, rng);
      BurnsideElement c = random_element(g, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * one == a);
    }
  }
}

TEST_CASE("restriction") {
  GroupPtr s3 = generate_group("symmetric:3");
  const SubgroupClassTable& t = s3->subgroup_classes();
  std::mt19937_64 rng(3);
  BurnsideElement a = random_element(s3, rng);

  SUBCASE("restriction to the whole group is the identity") {
    BurnsideElement r = restrict_to(a, s3->whole_subgroup());
    // the restricted element lives over the interned copy of the same group
    CHECK(r.group() == s3);
    CHECK(r == a);
  }
  SUBCASE("R^{S3}_{C3}[S3/C2] = [C3/{e}]") {
    REQUIRE(t.subgroup_order(2) == 3);
    BurnsideElement r = restrict_to(BurnsideElement::basis(s3, 1), t.representative(2));
    GroupPtr c3 = t.representative(2).as_group();
    CHECK(r == BurnsideElement::basis(c3, c3->subgroup_classes().trivial_class()));
  }
  SUBCASE("restriction to the trivial subgroup counts points") {
    for (size_t k = 0; k < t.count(); ++k) {
      BurnsideElement r = restrict_to(BurnsideElement::basis(s3, k), s3->trivial_subgroup());
      GroupPtr e = s3->trivial_subgroup().as_group();
      REQUIRE(e->subgroup_classes().count() == 1);
      CHECK(r.coeff(0) == s3->order() / t.subgroup_order(k));
    }
  }
  SUBCASE("restriction is a ring homomorphism") {
    for (size_t cls = 0; cls < t.count(); ++cls) {
      const Subgroup& h = t.representative(cls);
      for (int trial = 0; trial < 10; ++trial) {
        BurnsideElement x = random_element(s3, rng);
        BurnsideElement y = random_element(s3, rng);
        CHECK(restrict_to(x + y, h) == restrict_to(x, h) + restrict_to(y, h));
        CHECK(restrict_to(x * y, h) == restrict_to(x, h) * restrict_to(y, h));
      }
      CHECK(restrict_to(BurnsideElement::unit(s3), h) ==
            BurnsideElement::unit(h.as_group()));
    }
  }
  SUBCASE("foreign subgroup is rejected") {
    GroupPtr c2 = generate_group("cyclic:2");
    CHECK_THROWS_AS(restrict_to(a, c2->whole_subgroup()), ValidationError);
  }
}

TEST_CASE("induction") {
  GroupPtr s3 = generate_group("symmetric:3");
  const SubgroupClassTable& t = s3->subgroup_classes();
  GroupPtr c2 = t.representative(1).as_group();
  const SubgroupClassTable& tc2 = c2->subgroup_classes();

  SUBCASE("basis classes map [H/K] -> [G/K]") {
    BurnsideElement full = BurnsideElement::basis(c2, tc2.full_class());
    CHECK(induce_to(full, s3) == BurnsideElement::basis(s3, 1));
    BurnsideElement free_cls = BurnsideElement::basis(c2, tc2.trivial_class());
    CHECK(induce_to(free_cls, s3) == BurnsideElement::basis(s3, t.trivial_class()));
  }
  SUBCASE("counting and the direct induced-set construction") {
    GroupPtr c6 = generate_group("cyclic:6");
    const SubgroupClassTable& t6 = c6->subgroup_classes();
    GroupPtr sub2 = t6.representative(1).as_group();
    REQUIRE(sub2->order() == 2);
    BurnsideElement unit2 = BurnsideElement::unit(sub2);
    BurnsideElement ind = induce_to(unit2, c6);
    CHECK(ind.reduce_count() == 3); // [C6:C2] * 1

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
      BurnsideElement x = random_element(sub2, rng);
      BurnsideElement viaFormula = induce_to(x, c6);
      CHECK(viaFormula == oracles::induce_brute(x, c6));
      CHECK(viaFormula.reduce_count() == 3 * x.reduce_count());
    }
    for (int trial = 0; trial < 10; ++trial) {
      BurnsideElement x = random_element(c2, rng);
      BurnsideElement viaFormula = induce_to(x, s3);
      CHECK(viaFormula == oracles::induce_brute(x, s3));
      CHECK(viaFormula.reduce_count() == 3 * x.reduce_count());
    }
  }
  SUBCASE("induction is additive") {
    std::mt19937_64 rng(9);
    BurnsideElement x = random_element(c2, rng);
    BurnsideElement y = random_element(c2, rng);
    CHECK(induce_to(x + y, s3) == induce_to(x, s3) + induce_to(y, s3));
  }
  SUBCASE("invalid embedding is rejected") {
    GroupPtr c4 = generate_group("cyclic:4");
    CHECK_THROWS_AS(induce_to(BurnsideElement::unit(c4), s3), ValidationError);
  }
}

TEST_CASE("reduction homomorphism") {
  GroupPtr s3 = generate_group("symmetric:3");
  CHECK(BurnsideElement::basis(s3, 1).reduce_count() == 3);

  GroupPtr c2 = generate_group("cyclic:2");
  BurnsideElement e = 2 * BurnsideElement::basis(c2, 0) - BurnsideElement::basis(c2, 1);
  CHECK(e.reduce_count() == 3);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    BurnsideElement a = random_element(s3, rng);
    BurnsideElement b = random_element(s3, rng);
    CHECK((a * b).reduce_count() == a.reduce_count() * b.reduce_count());
    CHECK((a + b).reduce_count() == a.reduce_count() + b.reduce_count());
  }
}

TEST_CASE("permutation character") {
  GroupPtr s3 = generate_group("symmetric:3");
  SUBCASE("unit has character 1 everywhere") {
    CharacterVector cv = permutation_character(BurnsideElement::unit(s3));
    for (int64_t v : cv.values) CHECK(v == 1);
  }
  SUBCASE("regular class of C2 is (2, 0)") {
    GroupPtr c2 = generate_group("cyclic:2");
    CharacterVector cv = permutation_character(BurnsideElement::basis(c2, 0));
    CHECK(cv.values == std::vector<int64_t>{2, 0});
    CHECK(cv.render() == "(2, 0)");
  }
  SUBCASE("[S3/C2] has character (3, 1, 0) on (e, transposition, 3-cycle)") {
    const std::vector<ElementClass>& ec = s3->element_classes();
    REQUIRE(ec.size() == 3);
    CHECK(ec[0].element_order == 1);
    CHECK(ec[1].element_order == 2);
    CHECK(ec[2].element_order == 3);
    CharacterVector cv = permutation_character(BurnsideElement::basis(s3, 1));
    CHECK(cv.values == std::vector<int64_t>{3, 1, 0});
  }
  SUBCASE("character is a ring homomorphism and matches reduction at identity") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
      BurnsideElement a = random_element(s3, rng);
      BurnsideElement b = random_element(s3, rng);
      CharacterVector ca = permutation_character(a);
      CharacterVector cb = permutation_character(b);
      CharacterVector cab = permutation_character(a * b);
      CharacterVector csum = permutation_character(a + b);
      for (size_t i = 0; i < ca.values.size(); ++i) {
        CHECK(cab.values[i] == ca.values[i] * cb.values[i]);
        CHECK(csum.values[i] == ca.values[i] + cb.values[i]);
      }
      CHECK(ca.values[0] == a.reduce_count());
    }
  }
}

TEST_CASE("character matrix of cyclic groups has full rank") {
  for (int n : {2, 3, 4, 6, 8, 12}) {
    GroupPtr g = generate_group("cyclic:" + std::to_string(n));
    const std::vector<std::vector<int64_t>>& m = g->basis_character_matrix();
    CHECK(oracles::rational_rank_i64(m) == g->subgroup_classes().count());
  }
}

TEST_CASE("rendering") {
  GroupPtr c2 = generate_group("cyclic:2");
  BurnsideElement e = BurnsideElement::zero(c2);
  CHECK(e.render() == "0");
  e.add_to(0, 3);
  e.add_to(1, -2);
  // descending subgroup order: the full class first
  CHECK(e.render() == "-2*[G/H2_0] + 3*[G/H1_0]");
  BurnsideElement one = BurnsideElement::unit(c2);
  CHECK(one.render() == "[G/H2_0]");
  CHECK((-one).render() == "-1*[G/H2_0]");
}

TEST_CASE("overflow is reported, never wrapped") {
  GroupPtr c2 = generate_group("cyclic:2");
  BurnsideElement big = BurnsideElement::zero(c2);
  big.add_to(0, INT64_MAX / 2);
  CHECK_THROWS_AS(3 * big, OverflowError);
  CHECK_THROWS_AS(big + big + big, OverflowError);
}

TEST_CASE("concurrent reads of shared groups are safe") {
  GroupPtr g = generate_group("dihedral:6");
  std::vector<std::thread> threads;
  std::atomic<int> mismatches{0};
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&] {
      std::mt19937_64 rng(99);
      BurnsideElement a = random_element(g, rng);
      BurnsideElement b = random_element(g, rng);
      BurnsideElement p1 = a * b;
      BurnsideElement p2 = b * a;
      if (!(p1 == p2)) ++mismatches;
      if (g->table_of_marks().size() != g->subgroup_classes().count()) ++mismatches;
    });
  }
  for (auto& th : threads) th.join();
  CHECK(mismatches == 0);
}
