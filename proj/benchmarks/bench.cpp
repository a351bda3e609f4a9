// Microbenchmarks for the pipeline hot paths at application size
// (55 series x 408 months, single factor).

#include <benchmark/benchmark.h>

#include <Eigen/Core>

#include "regimefactor/breaks.hpp"
#include "regimefactor/critical_values.hpp"
#include "regimefactor/evaluate.hpp"
#include "regimefactor/factor.hpp"
#include "regimefactor/markov.hpp"
#include "regimefactor/rng.hpp"
#include "regimefactor/simulate.hpp"

using namespace regimefactor;

namespace {

const SimulatedPanel& big_panel() {
  static const SimulatedPanel sim = [] {
    DgpSpec spec;
    spec.n_series = 55;
    spec.periods = 408;
    spec.start_date = YearMonth{1990, 1};
    spec.driver = DgpSpec::Driver::Markov;
    spec.transition.resize(3, 3);
    spec.transition << 0.95, 0.04, 0.01,
                       0.03, 0.94, 0.03,
                       0.01, 0.04, 0.95;
    spec.factor_var = {0.5, 1.5, 4.0};
    spec.loading_flip = {0.0, 0.25, 0.5};
    spec.noise_sd = 1.0;
    DgpSpec::Headline h;
    h.alpha = {1.8, 2.5, 4.0};
    h.beta = {0.4, 0.8, 1.3};
    h.noise_sd = 0.25;
    spec.headline = h;
    return simulate_panel(spec, 20240615);
  }();
  return sim;
}

const Eigen::MatrixXd& big_factor() {
  static const Eigen::MatrixXd F =
      estimate_factors(big_panel().panel.values, 1).factors;
  return F;
}

const LongRunCov& big_lrc() {
  static const LongRunCov lrc = battery_long_run_cov(big_factor());
  return lrc;
}

void BM_EstimateFactors(benchmark::State& state) {
  const Eigen::MatrixXd& X = big_panel().panel.values;
  for (auto _ : state) {
    const FactorEstimate fe = estimate_factors(X, 1);
    benchmark::DoNotOptimize(fe.factors.sum());
  }
}
BENCHMARK(BM_EstimateFactors);

void BM_LongRunCov(benchmark::State& state) {
  const Eigen::MatrixXd& F = big_factor();
  for (auto _ : state) {
    const LongRunCov lrc = battery_long_run_cov(F);
    benchmark::DoNotOptimize(lrc.omega.sum());
  }
}
BENCHMARK(BM_LongRunCov);

void BM_DpBreakSearch(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Eigen::MatrixXd& F = big_factor();
  const LongRunCov& lrc = big_lrc();
  for (auto _ : state) {
    const BreakModel bm = dp_break_search(F, m, 0.015, &lrc);
    benchmark::DoNotOptimize(bm.ssne);
  }
}
BENCHMARK(BM_DpBreakSearch)->Arg(2)->Arg(4)->Arg(6);

void BM_UdmaxBattery(benchmark::State& state) {
  const Eigen::MatrixXd& F = big_factor();
  const LongRunCov& lrc = big_lrc();
  const auto& tab = CriticalValueTable::builtin();
  for (auto _ : state) {
    const DmaxResult dm = udmax_wdmax(F, 5, 0.15, 0.05, tab, &lrc);
    benchmark::DoNotOptimize(dm.udmax);
  }
}
BENCHMARK(BM_UdmaxBattery);

void BM_FilterSmoother(benchmark::State& state) {
  const int T = 408, M = 3;
  Rng rng(7);
  Eigen::MatrixXd dens(T, M);
  for (int t = 0; t < T; ++t)
    for (int j = 0; j < M; ++j) dens(t, j) = std::exp(0.5 * rng.normal());
  TransitionMatrix P;
  P.P.resize(M, M);
  P.P << 0.95, 0.04, 0.01,
         0.03, 0.94, 0.03,
         0.01, 0.04, 0.95;
  const Eigen::VectorXd init = ergodic_probs(P);
  for (auto _ : state) {
    const FilterResult fr = hamilton_filter(dens, P, init);
    const Eigen::MatrixXd sm = kim_smoother(fr.filtered, P);
    benchmark::DoNotOptimize(sm.sum());
  }
}
BENCHMARK(BM_FilterSmoother);

void BM_EmFit(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const Eigen::MatrixXd& X = big_panel().panel.values;
  for (auto _ : state) {
    const MsModel ms = em_fit(X, M, 1);
    benchmark::DoNotOptimize(ms.loglik);
  }
}
BENCHMARK(BM_EmFit)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Mcs(benchmark::State& state) {
  const int T = 200, K = 5;
  Rng rng(11);
  LossPanel lp;
  lp.losses.resize(T, K);
  for (int t = 0; t < T; ++t)
    for (int k = 0; k < K; ++k)
      lp.losses(t, k) = std::abs(1.0 + 0.05 * k + 0.2 * rng.normal());
  for (int k = 0; k < K; ++k) lp.models.push_back("M" + std::to_string(k));
  lp.horizon = 1;
  lp.targets = month_range(YearMonth{2000, 1}, add_months(YearMonth{2000, 1}, T - 1));
  McsOptions mo;
  mo.n_boot = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const McsResult res = mcs(lp, 0.25, McsStatistic::Tmax, mo);
    benchmark::DoNotOptimize(res.p_values[0]);
  }
}
BENCHMARK(BM_Mcs)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_VintageBaseline(benchmark::State& state) {
  SimulatedPanel sim = big_panel(); // copy so the rate stamp stays local
  sim.panel.transform = Transform::YoY;
  const InflationSeries& head = *sim.truth.headline;
  const EvalModelSpec m1 = EvalModelSpec::preset("M1");
  const YearMonth last{2023, 12};
  const YearMonth first = add_months(last, -23);
  for (auto _ : state) {
    const VintageRun run = run_vintages(sim.panel, head, m1, first, last, 1);
    benchmark::DoNotOptimize(run.entries.size());
  }
}
BENCHMARK(BM_VintageBaseline)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
