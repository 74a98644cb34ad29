#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

#include "flagcert/algebra.hpp"
#include "flagcert/canonical.hpp"
#include "flagcert/certificate.hpp"
#include "flagcert/flags.hpp"
#include "flagcert/model_table.hpp"
#include "flagcert/verifier.hpp"

namespace {

using namespace flagcert;

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(FLAGCERT_DATA_DIR) + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void BM_CanonicalKey(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(1);
  std::bernoulli_distribution coin(0.5);
  std::vector<SmallGraph> graphs;
  for (int i = 0; i < 64; ++i) {
    SmallGraph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) g.set_edge(u, v);
    graphs.push_back(g);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_CanonicalKey)->DenseRange(4, 8, 2);

void BM_EnumerateModels(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_models(static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_EnumerateModels)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_FlagProduct(benchmark::State& state) {
  SmallGraph g(4);
  g.set_edge(0, 1);
  const FlagType type(g);
  const auto flags = enumerate_flags(type, 5);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& a = flags[i % flags.size()];
    const auto& b = flags[(i * 7 + 3) % flags.size()];
    benchmark::DoNotOptimize(flag_product(type, a.key(), b.key()).term_count());
    ++i;
  }
}
BENCHMARK(BM_FlagProduct);

void BM_Verify(benchmark::State& state) {
  const Certificate cert = parse_certificate(read_data("w5.cert"));
  for (auto _ : state) benchmark::DoNotOptimize(verify(cert).passed());
}
BENCHMARK(BM_Verify)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace
BENCHMARK_MAIN();
