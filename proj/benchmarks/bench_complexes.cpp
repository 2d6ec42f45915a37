#include <benchmark/benchmark.h>

#include "matro/bergman.hpp"
#include "matro/flats.hpp"
#include "matro/matroid.hpp"
#include "matro/spec_io.hpp"

using namespace matro;

namespace {

Matroid corpus(const std::string& stem) {
  return build_matroid(parse_spec_file(std::string(MATRO_DATA_DIR) + "/" + stem + ".json"));
}

void BM_LatticeCube16(benchmark::State& state) {
  Matroid m = corpus("cube16");
  for (auto _ : state) {
    FlatsLattice lattice = FlatsLattice::build(m);
    benchmark::DoNotOptimize(lattice.size());
  }
}
BENCHMARK(BM_LatticeCube16)->Unit(benchmark::kMillisecond);

void BM_BergmanFacetsR10(benchmark::State& state) {
  Matroid m = corpus("r10");
  for (auto _ : state) {
    std::vector<SetPartition> facets = bergman_facets(m, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(facets.size());
  }
}
BENCHMARK(BM_BergmanFacetsR10)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_NestedMinR10(benchmark::State& state) {
  Matroid m = corpus("r10");
  FlatsLattice lattice = FlatsLattice::build(m);
  BuildingSet gmin = connected_flats(m, lattice);
  for (auto _ : state) {
    std::vector<NestedSet> facets = nested_facets_min(m, lattice, gmin);
    benchmark::DoNotOptimize(facets.size());
  }
}
BENCHMARK(BM_NestedMinR10)->Unit(benchmark::kMillisecond);

void BM_NestedMinMK5Dual(benchmark::State& state) {
  Matroid m = corpus("mk5dual");
  FlatsLattice lattice = FlatsLattice::build(m);
  BuildingSet gmin = connected_flats(m, lattice);
  for (auto _ : state) {
    std::vector<NestedSet> facets = nested_facets_min(m, lattice, gmin, 4);
    benchmark::DoNotOptimize(facets.size());
  }
}
BENCHMARK(BM_NestedMinMK5Dual)->Unit(benchmark::kMillisecond);

void BM_EqualityCube16(benchmark::State& state) {
  Matroid m = corpus("cube16");
  FlatsLattice lattice = FlatsLattice::build(m);
  BuildingSet gmin = connected_flats(m, lattice);
  for (auto _ : state) {
    EqualityResult result = equality_criterion(m, lattice, gmin);
    benchmark::DoNotOptimize(result.equal);
  }
}
BENCHMARK(BM_EqualityCube16)->Unit(benchmark::kMillisecond);

void BM_MembershipR10(benchmark::State& state) {
  Matroid m = corpus("r10");
  std::vector<Mask> circ = circuits(m);
  WeightVector w(m.ground_size());
  for (int i = 0; i < m.ground_size(); ++i) w[i] = Rat(i % 4, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bergman_membership(circ, w, m.ground_size()));
  }
}
BENCHMARK(BM_MembershipR10);

}  // namespace

BENCHMARK_MAIN();
