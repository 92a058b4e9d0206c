#include <benchmark/benchmark.h>

#include "tmrat/marking.hpp"
#include "tmrat/ratmap.hpp"
#include "tmrat/roots.hpp"

using namespace tmrat;

namespace {

Field field_for(int which) {
  switch (which) {
    case 0: return Field::prime(101);
    case 1: return Field::prime(1000003);
    case 2: return Field::extension(13, 2);
    default: return Field::rationals();
  }
}

TotalMarking draw_marking(const Field& F, Rng& rng) {
  for (;;) {
    auto pick = [&] { return ProjPoint::affine(F.random(rng)); };
    auto mc = validate_marking({pick(), pick(), pick()}, {pick(), pick()});
    if (mc.marking) return *mc.marking;
  }
}

void BM_RootsOfCubic(benchmark::State& state) {
  const Field F = field_for(static_cast<int>(state.range(0)));
  Rng rng(1);
  std::vector<BinaryForm> forms;
  for (int i = 0; i < 64; ++i) {
    forms.push_back(BinaryForm({F.random(rng), F.random(rng), F.random(rng), F.random(rng)}));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& f = forms[i++ % forms.size()];
    if (f.is_zero()) continue;
    benchmark::DoNotOptimize(roots(f, rng));
  }
  state.SetLabel(F.describe());
}
BENCHMARK(BM_RootsOfCubic)->DenseRange(0, 3);

void BM_Reconstruct(benchmark::State& state) {
  const Field F = field_for(static_cast<int>(state.range(0)));
  Rng rng(2);
  std::vector<TotalMarking> ms;
  for (int i = 0; i < 64; ++i) ms.push_back(draw_marking(F, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(ms[i++ % ms.size()]));
  state.SetLabel(F.describe());
}
BENCHMARK(BM_Reconstruct)->DenseRange(0, 3);

void BM_MarkingOf(benchmark::State& state) {
  const Field F = field_for(static_cast<int>(state.range(0)));
  Rng rng(3);
  std::vector<RatMap2> maps;
  for (int i = 0; i < 64; ++i) maps.push_back(reconstruct(draw_marking(F, rng)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(marking_of(maps[i++ % maps.size()], rng));
  state.SetLabel(F.describe());
}
BENCHMARK(BM_MarkingOf)->DenseRange(0, 3);

void BM_Orbit12(benchmark::State& state) {
  const Field F = field_for(static_cast<int>(state.range(0)));
  Rng rng(4);
  std::vector<TotalMarking> ms;
  for (int i = 0; i < 64; ++i) ms.push_back(draw_marking(F, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(orbit12(ms[i++ % ms.size()]));
  state.SetLabel(F.describe());
}
BENCHMARK(BM_Orbit12)->DenseRange(0, 3);

void BM_MultiplierSpectrumComplex(benchmark::State& state) {
  const Field C = Field::complex(static_cast<unsigned>(state.range(0)));
  Rng rng(5);
  const RatMap2 phi = RatMap2::parse("(3*z^2-2*z+1)/(z^2+5*z-7)", C);
  for (auto _ : state) benchmark::DoNotOptimize(multiplier_spectrum(phi, rng));
}
BENCHMARK(BM_MultiplierSpectrumComplex)->Arg(128)->Arg(512);

}  // namespace
BENCHMARK_MAIN();
