#include <benchmark/benchmark.h>

#include <omp.h>

#include "cwb/iterated/signature.hpp"

using namespace cwb;

namespace {

struct Fixture {
  curve::PeriodData pd;
  curve::Path loop;
  std::vector<iterated::OneForm> forms;
  curve::GaussLegendre rule{16};
  iterated::PanelValues values;

  explicit Fixture(const std::string& f, int base_panels)
      : pd(curve::compute_periods(curve::HomologyBasis::build(curve::Curve::build(f)))),
        loop(pd.basis.cycle(2 * pd.genus() - 1)),
        forms(iterated::dual_basis_forms(pd)) {
    values = iterated::panel_values(pd, loop, forms, rule, base_panels);
  }
};

Fixture& fixture(int which) {
  static Fixture g2("x^5 - 1", 32);
  static Fixture g3("x^7 - x - 1", 32);
  return which == 2 ? g2 : g3;
}

void BM_serial(benchmark::State& state) {
  auto& f = fixture(static_cast<int>(state.range(0)));
  const int n = static_cast<int>(f.forms.size());
  for (auto _ : state) benchmark::DoNotOptimize(iterated::signature_serial(f.values, n, 3, f.rule));
  state.counters["panels"] = static_cast<double>(f.values.size());
}

void BM_parallel(benchmark::State& state) {
  auto& f = fixture(static_cast<int>(state.range(0)));
  const int n = static_cast<int>(f.forms.size());
  for (auto _ : state) benchmark::DoNotOptimize(iterated::signature_parallel(f.values, n, 3, f.rule));
  state.counters["panels"] = static_cast<double>(f.values.size());
  state.counters["threads"] = omp_get_max_threads();
}

void BM_panel_values(benchmark::State& state) {
  auto& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(iterated::panel_values(f.pd, f.loop, f.forms, f.rule, 32));
}

}  // namespace

BENCHMARK(BM_serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_panel_values)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
