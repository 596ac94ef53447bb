#include <benchmark/benchmark.h>

#include "dps/descriptor.hpp"
#include "dps/orbit.hpp"
#include "dps/root_datum.hpp"

namespace {

const dps::RootDatum& e8() {
  static const dps::RootDatum datum = dps::build_root_datum("E8");
  return datum;
}

dps::DPSDescriptor make_desc(int node, const dps::Rat& s, int k) {
  dps::DPSDescriptor desc;
  desc.nodes = {node};
  desc.s = {s};
  desc.chi_pow = {1 % k};
  desc.k = k;
  return desc;
}

// Smallest maximal-parabolic orbit (240 cosets, Heisenberg parabolic).
void BM_OrbitNode8(benchmark::State& state) {
  const auto& datum = e8();
  const auto desc = make_desc(7, dps::Rat(-19, 2), 1);
  const auto levi = dps::all_nodes(datum);
  const auto theta = dps::theta_of(datum, desc);
  const auto lambda0 = dps::initial_exponent(datum, desc);
  for (auto _ : state) {
    auto ms = dps::orbit_multiset(datum, levi, theta, lambda0,
                                  static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(ms.counts.size());
  }
}
BENCHMARK(BM_OrbitNode8)->Arg(1)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

// 17,280-coset orbit used throughout the node-2 analyses.
void BM_OrbitNode2(benchmark::State& state) {
  const auto& datum = e8();
  const auto desc = make_desc(1, dps::Rat(-1, 2), 1);
  const auto levi = dps::all_nodes(datum);
  const auto theta = dps::theta_of(datum, desc);
  const auto lambda0 = dps::initial_exponent(datum, desc);
  for (auto _ : state) {
    auto ms = dps::orbit_multiset(datum, levi, theta, lambda0,
                                  static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(ms.counts.size());
  }
}
BENCHMARK(BM_OrbitNode2)->Arg(1)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

// The heaviest maximal-parabolic orbit (483,840 cosets at node 4).
void BM_OrbitNode4(benchmark::State& state) {
  const auto& datum = e8();
  const auto desc = make_desc(3, dps::Rat(-1, 2), 1);
  const auto levi = dps::all_nodes(datum);
  const auto theta = dps::theta_of(datum, desc);
  const auto lambda0 = dps::initial_exponent(datum, desc);
  for (auto _ : state) {
    auto ms = dps::orbit_multiset(datum, levi, theta, lambda0,
                                  static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(ms.counts.size());
  }
}
BENCHMARK(BM_OrbitNode4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
