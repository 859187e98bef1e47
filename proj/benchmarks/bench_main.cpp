#include <benchmark/benchmark.h>

#include <random>

#include "frobstab/frobenius.hpp"
#include "frobstab/gb_cache.hpp"
#include "frobstab/semilinear.hpp"

using namespace frobstab;

namespace {

Ideal parse_ideal(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(parse_poly(s, r));
  return Ideal(r, g);
}

void BM_Groebner(benchmark::State& state) {
  auto r = PolyRing::make(static_cast<std::uint32_t>(state.range(0)), {"x", "y", "z"});
  for (auto _ : state) {
    GbCache::instance().clear_memory();
    Ideal I = parse_ideal(r, {"x^3 + y*z - 1", "y^3 + x*z", "z^3 + x*y - z"});
    benchmark::DoNotOptimize(I.groebner_basis().size());
  }
}
BENCHMARK(BM_Groebner)->Arg(2)->Arg(3)->Arg(5);

void BM_ClosureCusp(benchmark::State& state) {
  auto r = PolyRing::make(2, {"a", "b"});
  const Ideal J = parse_ideal(r, {"b^2 - a^3"});
  for (auto _ : state) {
    GbCache::instance().clear_memory();
    benchmark::DoNotOptimize(frobenius_closure(parse_ideal(r, {"a"}), J).steps.size());
  }
}
BENCHMARK(BM_ClosureCusp);

void BM_StablePart(benchmark::State& state) {
  const auto k = FiniteField::make(2, 2);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint32_t> d(0, 3);
  Matrix m(n, Vector(n));
  for (auto& row : m)
    for (auto& x : row) x = d(rng);
  const SemilinearOperator op(k, m);
  for (auto _ : state) benchmark::DoNotOptimize(stable_part(op).dim());
}
BENCHMARK(BM_StablePart)->Arg(4)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
