#include <random>

#include <benchmark/benchmark.h>

#include "findim/algebra.hpp"
#include "findim/findim.hpp"
#include "findim/matrix.hpp"

using namespace findim;

namespace {

Matrix random_square(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return Matrix::random(Field::prime(32003), n, n, rng);
}

AlgebraPtr nakayama3() {
  Quiver q(3, {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}});
  std::vector<Relation> rels{Relation{{RelationTerm{1, {0, 1}}}}, Relation{{RelationTerm{1, {1, 2}}}},
                             Relation{{RelationTerm{1, {2, 0}}}}};
  return Algebra::build(q, rels, Field::prime(2), 4, "nakayama3");
}

void BM_RrefParallel(benchmark::State& st) {
  Matrix m = random_square(static_cast<std::size_t>(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(rref(m));
}
void BM_RrefSerial(benchmark::State& st) {
  Matrix m = random_square(static_cast<std::size_t>(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(reference::rref(m));
}
void BM_MultiplyParallel(benchmark::State& st) {
  Matrix a = random_square(static_cast<std::size_t>(st.range(0)), 2), b = random_square(a.rows(), 3);
  for (auto _ : st) benchmark::DoNotOptimize(a * b);
}
void BM_MultiplySerial(benchmark::State& st) {
  Matrix a = random_square(static_cast<std::size_t>(st.range(0)), 2), b = random_square(a.rows(), 3);
  for (auto _ : st) benchmark::DoNotOptimize(reference::multiply(a, b));
}
void BM_FindimParallel(benchmark::State& st) {
  AlgebraPtr a = nakayama3();
  for (auto _ : st) benchmark::DoNotOptimize(findim_estimate(a, static_cast<std::size_t>(st.range(0)), 6));
}
void BM_FindimSerial(benchmark::State& st) {
  AlgebraPtr a = nakayama3();
  for (auto _ : st) benchmark::DoNotOptimize(findim_estimate_serial(a, static_cast<std::size_t>(st.range(0)), 6));
}

}  // namespace

BENCHMARK(BM_RrefParallel)->Arg(64)->Arg(256);
BENCHMARK(BM_RrefSerial)->Arg(64)->Arg(256);
BENCHMARK(BM_MultiplyParallel)->Arg(64)->Arg(256);
BENCHMARK(BM_MultiplySerial)->Arg(64)->Arg(256);
BENCHMARK(BM_FindimParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FindimSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
