#include <benchmark/benchmark.h>

#include <string>

#include "hdakit/hda.hpp"
#include "hdakit/io.hpp"
#include "hdakit/myhill_nerode.hpp"
#include "hdakit/refine.hpp"
#include "hdakit/steps.hpp"
#include "hdakit/text.hpp"

using namespace hdakit;

namespace {

const std::string kData = HDAKIT_DATA_DIR;

// Width n: n concurrent events with alternating labels, all but the first
// with a target interface.
Ipomset wide(std::int64_t n) {
  std::string s = "[";
  for (std::int64_t i = 0; i < n; ++i) {
    if (i > 0) s += "|";
    s += (i % 2 == 0) ? "a" : "b";
    if (i > 0) s += "*";
  }
  return parse_shorthand(s + "]");
}

// n copies of the loop square glued together.
Ipomset square_power(std::int64_t n) {
  const auto sq = parse_shorthand("[*aa*|b]");
  auto p = sq;
  for (std::int64_t i = 1; i < n; ++i) p = glue(p, sq);
  return p;
}

void canonicalize_wide(benchmark::State& state) {
  const auto raw = to_raw(wide(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(raw));
}
BENCHMARK(canonicalize_wide)->DenseRange(2, 6);

void refinements_wide(benchmark::State& state) {
  const auto p = wide(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(refinements(p));
}
BENCHMARK(refinements_wide)->DenseRange(2, 5);

void divisions_wide(benchmark::State& state) {
  const auto p = wide(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_divisions(p));
}
BENCHMARK(divisions_wide)->DenseRange(2, 6);

void sparse_decomposition_power(benchmark::State& state) {
  const auto p = square_power(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sparse_decomposition(p));
}
BENCHMARK(sparse_decomposition_power)->DenseRange(1, 4);

void member_loop(benchmark::State& state) {
  const auto x = parse_hda(read_file(kData + "/loop.hda"));
  const auto p = square_power(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(member(x, p));
}
BENCHMARK(member_loop)->DenseRange(1, 4);

void build_mn_file(benchmark::State& state, const char* file) {
  const auto l = parse_lang(read_file(kData + "/" + file));
  for (auto _ : state) benchmark::DoNotOptimize(build_mn(l));
}
BENCHMARK_CAPTURE(build_mn_file, fig5, "fig5.lang");
BENCHMARK_CAPTURE(build_mn_file, strongeq, "strongeq.lang");
BENCHMARK_CAPTURE(build_mn_file, aa, "aa.lang");

void build_mn_generators(benchmark::State& state) {
  const auto l = LanguageSet::from_generators({wide(state.range(0))});
  state.counters["prefixes"] = static_cast<double>(l.prefixes().size());
  for (auto _ : state) benchmark::DoNotOptimize(build_mn(l));
}
BENCHMARK(build_mn_generators)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void enumerate_language_loop(benchmark::State& state) {
  const auto x = parse_hda(read_file(kData + "/loop.hda"));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_language(x, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(enumerate_language_loop)->DenseRange(2, 10, 2)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
