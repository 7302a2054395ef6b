// Parallel kernels against their serial references on symmetric groups.

#include "tatek/exactnum.hpp"
#include "tatek/groups.hpp"
#include "tatek/kernels.hpp"

#include <benchmark/benchmark.h>

#include <map>

using namespace tatek;

namespace {

struct Fixture {
  GroupPtr g;
  std::vector<Elem> inverse;
  kernels::TableView view;
};

const Fixture& fixture(std::size_t n) {
  static std::map<std::size_t, Fixture> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    Fixture f{symmetric_group(n), {}, {}};
    for (std::size_t e = 0; e < f.g->order(); ++e) f.inverse.push_back(f.g->inv(static_cast<Elem>(e)));
    it = cache.emplace(n, std::move(f)).first;
    it->second.view = {it->second.g->order(), it->second.g->table(), it->second.inverse};
  }
  return it->second;
}

template <auto Kernel>
void table_kernel(benchmark::State& state) {
  const auto& f = fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f.view));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(f.g->order()));
}

template <auto Kernel>
void tuples_kernel(benchmark::State& state) {
  const auto& f = fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f.view, static_cast<std::size_t>(state.range(1))));
}

// Induction of the permutation character from the point stabilizer S_{n-1}.
template <auto Kernel>
void induce_kernel(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto& f = fixture(n);
  std::vector<std::uint8_t> member(f.g->order());
  std::vector<Cyclotomic> values(f.g->order(), Cyclotomic(0));
  std::size_t sub_order = 0;
  for (std::size_t e = 0; e < f.g->order(); ++e) {
    const auto& p = f.g->permutation(static_cast<Elem>(e));
    if (p[n - 1] != n - 1) continue;
    member[e] = 1;
    ++sub_order;
    long fixed = 0;
    for (std::size_t i = 0; i < n; ++i) fixed += p[i] == i;
    values[e] = Cyclotomic(fixed);
  }
  std::vector<Elem> at;
  for (std::size_t c = 0; c < f.g->class_count(); ++c) at.push_back(f.g->class_rep(c));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f.view, at, member, values, sub_order));
}

}  // namespace

BENCHMARK(table_kernel<kernels::class_minima>)->Arg(5)->Arg(6);
BENCHMARK(table_kernel<kernels::class_minima_serial>)->Arg(5)->Arg(6);
BENCHMARK(table_kernel<kernels::centralizer_orders>)->Arg(5)->Arg(6);
BENCHMARK(table_kernel<kernels::centralizer_orders_serial>)->Arg(5)->Arg(6);
BENCHMARK(table_kernel<kernels::commuting_pairs>)->Arg(5)->Arg(6);
BENCHMARK(table_kernel<kernels::commuting_pairs_serial>)->Arg(5)->Arg(6);
BENCHMARK(tuples_kernel<kernels::commuting_tuples>)->Args({5, 3})->Args({6, 2});
BENCHMARK(tuples_kernel<kernels::commuting_tuples_serial>)->Args({5, 3})->Args({6, 2});
BENCHMARK(induce_kernel<kernels::induce_sums>)->Arg(5)->Arg(6);
BENCHMARK(induce_kernel<kernels::induce_sums_serial>)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
