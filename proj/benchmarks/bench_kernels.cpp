// Microbenchmarks for the hot kernels: subgroup-lattice enumeration, orbit
// decomposition of product sets, Burnside multiplication, and incidence
// algebra inversion.
#include <benchmark/benchmark.h>

#include <random>

#include "eqobs/burnside.hpp"
#include "eqobs/fuzzing.hpp"
#include "eqobs/group.hpp"

using namespace eqobs;

namespace {

void BM_SubgroupEnumeration(benchmark::State& state, const char* desc) {
  GroupPtr g = generate_group(desc);
  for (auto _ : state) {
    SubgroupClassTable t = compute_subgroup_classes(*g);
    benchmark::DoNotOptimize(t.count());
  }
}
BENCHMARK_CAPTURE(BM_SubgroupEnumeration, s4, "symmetric:4");
BENCHMARK_CAPTURE(BM_SubgroupEnumeration, d12, "dihedral:12");
BENCHMARK_CAPTURE(BM_SubgroupEnumeration, a4, "perm:[[1,2,0,3],[0,2,3,1]]");
BENCHMARK_CAPTURE(BM_SubgroupEnumeration, s5, "symmetric:5");

void BM_TableOfMarks(benchmark::State& state, const char* desc) {
  GroupPtr g = generate_group(desc);
  const SubgroupClassTable& classes = g->subgroup_classes();
  for (auto _ : state) {
    MarksTable m = compute_table_of_marks(*g, classes);
    benchmark::DoNotOptimize(m.size());
  }
}
BENCHMARK_CAPTURE(BM_TableOfMarks, s4, "symmetric:4");
BENCHMARK_CAPTURE(BM_TableOfMarks, d12, "dihedral:12");

void BM_ProductOrbitDecomposition(benchmark::State& state) {
  GroupPtr g = generate_group("symmetric:4");
  const SubgroupClassTable& t = g->subgroup_classes();
  FiniteGSet big = FiniteGSet::cosets(t.representative(1));
  FiniteGSet product = FiniteGSet::product(big, big);
  for (auto _ : state) {
    auto orbits = orbit_decompose(product);
    benchmark::DoNotOptimize(orbits.size());
  }
}
BENCHMARK(BM_ProductOrbitDecomposition);

void BM_BurnsideMul(benchmark::State& state) {
  GroupPtr g = generate_group("symmetric:4");
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int64_t> dist(-3, 3);
  BurnsideElement a = BurnsideElement::zero(g);
  BurnsideElement b = BurnsideElement::zero(g);
  for (size_t i = 0; i < g->subgroup_classes().count(); ++i) {
    a.add_to(i, dist(rng));
    b.add_to(i, dist(rng));
  }
  a* b; // warm the basis product table
  for (auto _ : state) {
    BurnsideElement c = a * b;
    benchmark::DoNotOptimize(c.coeffs().data());
  }
}
BENCHMARK(BM_BurnsideMul);

void BM_IncidenceInversion(benchmark::State& state) {
  GroupPtr g = generate_group("cyclic:2");
  FuzzLimits limits;
  limits.max_strata = static_cast<int>(state.range(0));
  GermSample sample = random_germ_sample(g, 42, limits);
  const StratPoset& poset = sample.germ->poset();
  for (auto _ : state) {
    PosetFunction n = n_from_eu(poset);
    benchmark::DoNotOptimize(n.size());
  }
}
BENCHMARK(BM_IncidenceInversion)->Arg(8)->Arg(16)->Arg(32);

} // namespace

BENCHMARK_MAIN();
