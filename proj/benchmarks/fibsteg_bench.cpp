#include <benchmark/benchmark.h>

#include <random>

#include "fibsteg/covers.hpp"
#include "fibsteg/embed.hpp"
#include "fibsteg/sisr.hpp"
#include "fibsteg/steganalysis.hpp"
#include "fibsteg/zeckendorf.hpp"

namespace {

using namespace fibsteg;

GrayImage cover_512() {
  static const GrayImage img = synthetic_cover(CoverOptions{}, 42);
  return img;
}

BitStream message(std::size_t n) {
  std::mt19937_64 rng(7);
  BitStream bits;
  for (std::size_t i = 0; i < n; ++i) bits.push_back(rng() & 1u);
  return bits;
}

void BM_Zeckendorf(benchmark::State& state) {
  std::uint32_t v = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(from_zeckendorf(to_zeckendorf(v, BitDepth::k8), BitDepth::k8));
    v = (v + 1) & 0xFFu;
  }
}
BENCHMARK(BM_Zeckendorf);

void BM_SisrEncode(benchmark::State& state) {
  const auto img = cover_512();
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sisr::encode_image(img, k));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.size()));
}
BENCHMARK(BM_SisrEncode)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_SisrDecode(benchmark::State& state) {
  const auto img = cover_512();
  const auto container = sisr::encode_image(img, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sisr::decode_image(container));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.size()));
}
BENCHMARK(BM_SisrDecode)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Embed(benchmark::State& state) {
  const auto img = cover_512();
  const auto method = static_cast<Method>(state.range(0));
  const auto msg = message(capacity_bits(method, img));
  for (auto _ : state) benchmark::DoNotOptimize(embed(method, img, msg, StegoKey{1}));
  state.SetLabel(std::string(method_name(method)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(msg.size()));
}
BENCHMARK(BM_Embed)
    ->Arg(static_cast<int>(Method::kBinaryLsb))
    ->Arg(static_cast<int>(Method::kFibonacciLsb))
    ->Arg(static_cast<int>(Method::kMapping))
    ->Unit(benchmark::kMillisecond);

void BM_Rs(benchmark::State& state) {
  const auto img = cover_512();
  for (auto _ : state) benchmark::DoNotOptimize(rs_analyze(img));
}
BENCHMARK(BM_Rs)->Unit(benchmark::kMillisecond);

void BM_Ws(benchmark::State& state) {
  const auto img = cover_512();
  for (auto _ : state) benchmark::DoNotOptimize(ws_estimate(img));
}
BENCHMARK(BM_Ws)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
