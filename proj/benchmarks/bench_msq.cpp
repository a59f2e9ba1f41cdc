// Microbenchmarks for the hot paths: model assembly, identity sweeps,
// bilinear form computation, triple-system extraction, and export.
#include <benchmark/benchmark.h>

#include <msq/comp_alg.hpp>
#include <msq/json_io.hpp>
#include <msq/lie.hpp>
#include <msq/magic.hpp>
#include <msq/tensor_model.hpp>
#include <msq/triples.hpp>

using namespace msq;

namespace {

const StructureConstants& e8_sc() {
  static StructureConstants sc = assemble(build_model(Family::e8));
  return sc;
}

const StructureConstants& f4_sc() {
  static StructureConstants sc = assemble(build_model(Family::f4));
  return sc;
}

void BM_assemble_e8(benchmark::State& state) {
  for (auto _ : state) {
    StructureConstants sc = assemble(build_model(Family::e8));
    benchmark::DoNotOptimize(sc.dim);
  }
}
BENCHMARK(BM_assemble_e8)->Unit(benchmark::kMillisecond);

void BM_jacobi_f4(benchmark::State& state) {
  const StructureConstants& sc = f4_sc();
  for (auto _ : state) {
    CheckReport r = jacobi_check(sc, 1);
    benchmark::DoNotOptimize(r.pass);
  }
}
BENCHMARK(BM_jacobi_f4)->Unit(benchmark::kMillisecond);

void BM_jacobi_e8(benchmark::State& state) {
  const StructureConstants& sc = e8_sc();
  for (auto _ : state) {
    CheckReport r = jacobi_check(sc, 1);
    benchmark::DoNotOptimize(r.pass);
  }
}
BENCHMARK(BM_jacobi_e8)->Unit(benchmark::kMillisecond);

void BM_bracket_vec_e8(benchmark::State& state) {
  const StructureConstants& sc = e8_sc();
  SparseVec x, y;
  for (int i = 0; i < sc.dim; ++i) {
    x.set(i, rat(1));
    y.set(i, rat(i % 5 - 2));
  }
  for (auto _ : state) {
    SparseVec z = sc.bracket_vec(x, y);
    benchmark::DoNotOptimize(z.terms.size());
  }
}
BENCHMARK(BM_bracket_vec_e8)->Unit(benchmark::kMillisecond);

void BM_killing_e8(benchmark::State& state) {
  const StructureConstants& sc = e8_sc();
  for (auto _ : state) {
    Mat k = killing_form(sc, 1);
    benchmark::DoNotOptimize(k.size());
  }
}
BENCHMARK(BM_killing_e8)->Unit(benchmark::kMillisecond);

void BM_triality_s8(benchmark::State& state) {
  for (auto _ : state) {
    CompAlg s = symmetric_composition(8);
    TrialityBasis tri = triality_algebra(s);
    benchmark::DoNotOptimize(tri.dim());
  }
}
BENCHMARK(BM_triality_s8)->Unit(benchmark::kMillisecond);

void BM_magic_s8_s8(benchmark::State& state) {
  CompAlg a = symmetric_composition(8);
  CompAlg b = symmetric_composition(8);
  for (auto _ : state) {
    StructureConstants sc = build_g(a, b);
    benchmark::DoNotOptimize(sc.dim);
  }
}
BENCHMARK(BM_magic_s8_s8)->Unit(benchmark::kMillisecond);

void BM_sts_extract_56(benchmark::State& state) {
  for (auto _ : state) {
    SymplecticTripleSystem t = sts_extract("e8/e7");
    benchmark::DoNotOptimize(t.dim);
  }
}
BENCHMARK(BM_sts_extract_56)->Unit(benchmark::kMillisecond);

void BM_json_dump_e8(benchmark::State& state) {
  const StructureConstants& sc = e8_sc();
  for (auto _ : state) {
    std::string text = to_json(sc);
    benchmark::DoNotOptimize(text.size());
  }
}
BENCHMARK(BM_json_dump_e8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
