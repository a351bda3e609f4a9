#include "regimefactor/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "regimefactor/breaks.hpp"
#include "regimefactor/errors.hpp"
#include "regimefactor/factor.hpp"
#include "regimefactor/rng.hpp"

namespace regimefactor {

EvalModelSpec EvalModelSpec::preset(const std::string& name) {
  EvalModelSpec s;
  s.name = name;
  if (name == "M1") {
    s.kind = Kind::Baseline;
    s.regimes = 1;
  } else if (name == "M2" || name == "M3" || name == "M4") {
    s.kind = Kind::MarkovSwitching;
    s.regimes = name[1] - '0';
  } else if (name == "SC") {
    s.kind = Kind::StructuralChange;
  } else {
    throw ValidationError("unknown model preset '" + name +
                          "' (expected M1, M2, M3, M4, or SC)");
  }
  return s;
}

const VintageEntry* VintageRun::at(const YearMonth& vintage) const {
  for (const auto& e : entries)
    if (e.vintage == vintage) return &e;
  return nullptr;
}

InflationSeries VintageRun::realtime_path() const {
  InflationSeries out;
  out.values.resize(entries.size());
  Eigen::Index i = 0;
  for (const auto& e : entries) {
    if (!e.series)
      throw NumericError("realtime_path: vintage " + to_string(e.vintage) +
                         " failed: " + e.error);
    out.dates.push_back(e.vintage);
    out.values(i++) = e.series->values(e.series->values.size() - 1);
  }
  out.validate();
  return out;
}

const IndicatorSeries& VintageRun::full_information(const YearMonth& sample_end) const {
  const VintageEntry* e = at(sample_end);
  if (!e)
    throw ValidationError("full_information: no vintage at " + to_string(sample_end));
  if (!e->series)
    throw NumericError("full_information: vintage " + to_string(sample_end) +
                       " failed: " + e->error);
  return *e->series;
}

namespace {

IndicatorSeries fit_vintage(const Eigen::MatrixXd& X, const InflationSeries& hl,
                            const std::vector<YearMonth>& dates,
                            const EvalModelSpec& spec, std::uint64_t vintage_seed) {
  switch (spec.kind) {
    case EvalModelSpec::Kind::Baseline: {
      const FactorEstimate fe = estimate_factors(X, 1);
      return fit_baseline(hl, fe.factors.col(0));
    }
    case EvalModelSpec::Kind::StructuralChange: {
      const FactorEstimate fe = estimate_factors(X, 1);
      int m = spec.fixed_breaks;
      if (m < 0)
        m = decide_num_breaks(fe.factors, spec.max_breaks, spec.epsilon, spec.alpha)
                .num_breaks;
      BreakModel bm;
      if (m == 0) {
        // trivial single-segment model
        const LongRunCov lrc = battery_long_run_cov(fe.factors);
        bm.ssne = ssne(fe.factors, {}, lrc);
        bm.epsilon = spec.epsilon;
        bm.min_segment = static_cast<int>(X.rows());
        bm.r_tilde = 1;
      } else {
        bm = dp_break_search(fe.factors, m, spec.epsilon);
      }
      for (int b : bm.break_indices) bm.break_dates.push_back(dates[b]);
      fit_segment_factors(X, bm, 1);
      return fit_sc(hl, bm);
    }
    case EvalModelSpec::Kind::MarkovSwitching: {
      EmOptions eo = spec.em;
      eo.seed = vintage_seed;
      const MsModel m = em_fit(X, spec.regimes, 1, eo);
      return fit_ms(hl, m);
    }
  }
  throw ValidationError("fit_vintage: unknown model kind");
}

} // namespace

VintageRun run_vintages(const PricePanel& rate_panel,
                        const InflationSeries& headline,
                        const EvalModelSpec& spec,
                        const YearMonth& first_vintage,
                        const YearMonth& last_vintage,
                        std::uint64_t seed) {
  rate_panel.validate();
  headline.validate();
  if (rate_panel.transform != Transform::YoY && rate_panel.transform != Transform::MoM)
    throw ValidationError("run_vintages: panel must be a YoY or MoM rate panel");
  if (headline.dates != rate_panel.dates)
    throw ValidationError("run_vintages: headline months must match the panel");
  if (first_vintage > last_vintage)
    throw ValidationError("run_vintages: first vintage after last");
  if (rate_panel.index_of(first_vintage) < 0 || rate_panel.index_of(last_vintage) < 0)
    throw ValidationError("run_vintages: vintage range outside the panel");
  const YearMonth start = rate_panel.dates.front();
  if (months_between(start, first_vintage) + 1 < 24)
    throw ValidationError("run_vintages: first vintage leaves fewer than 24 months");

  VintageRun run;
  run.model = spec.name;
  run.rate = rate_panel.transform;
  run.panel_start = start;

  std::uint64_t i = 0;
  for (const YearMonth& v : month_range(first_vintage, last_vintage)) {
    VintageEntry entry;
    entry.vintage = v;
    try {
      const PricePanel sub = standardize(rate_panel.slice(start, v));
      const InflationSeries hl = headline.slice(start, v);
      entry.series = fit_vintage(sub.values, hl, sub.dates, spec, Rng::derive(seed, i));
    } catch (const std::exception& ex) {
      entry.error = ex.what();
    }
    run.entries.push_back(std::move(entry));
    ++i;
  }
  return run;
}

namespace {

// real-time value published at `vintage`: last point of that vintage's series
double realtime_at(const VintageRun& run, const YearMonth& vintage) {
  const VintageEntry* e = run.at(vintage);
  if (!e)
    throw ValidationError("no vintage at " + to_string(vintage) + " in the run");
  if (!e->series)
    throw NumericError("vintage " + to_string(vintage) + " failed: " + e->error);
  return e->series->values(e->series->values.size() - 1);
}

} // namespace

double revision_stats(const VintageRun& run,
                      std::pair<YearMonth, YearMonth> sample,
                      RevisionMetric metric) {
  if (sample.first > sample.second)
    throw ValidationError("revision_stats: empty sample");
  const IndicatorSeries& fi = run.full_information(sample.second);
  double acc = 0.0;
  int n = 0;
  for (const YearMonth& v : month_range(sample.first, sample.second)) {
    const int idx = [&] {
      for (size_t k = 0; k < fi.dates.size(); ++k)
        if (fi.dates[k] == v) return static_cast<int>(k);
      return -1;
    }();
    if (idx < 0)
      throw ValidationError("revision_stats: full-information path misses " + to_string(v));
    const double d = realtime_at(run, v) - fi.values(idx);
    acc += metric == RevisionMetric::RMSD ? d * d : std::abs(d);
    ++n;
  }
  if (n == 0) throw ValidationError("revision_stats: empty overlap");
  const double m = acc / n;
  return metric == RevisionMetric::RMSD ? std::sqrt(m) : m;
}

double rmsfe(const VintageRun& run, const InflationSeries& headline,
             int horizon, std::pair<YearMonth, YearMonth> window) {
  if (horizon < 0) throw ValidationError("rmsfe: horizon must be >= 0");
  if (window.first > window.second) throw ValidationError("rmsfe: empty window");
  headline.validate();
  double acc = 0.0;
  int n = 0;
  for (const YearMonth& target : month_range(window.first, window.second)) {
    const int hi = headline.index_of(target);
    if (hi < 0)
      throw ValidationError("rmsfe: headline misses target " + to_string(target));
    const double fc = realtime_at(run, add_months(target, -horizon));
    const double d = fc - headline.values(hi);
    acc += d * d;
    ++n;
  }
  if (n == 0) throw ValidationError("rmsfe: empty window");
  return std::sqrt(acc / n);
}

LossPanel build_loss_panel(const std::vector<VintageRun>& runs,
                           const InflationSeries& headline, int horizon,
                           std::pair<YearMonth, YearMonth> window) {
  if (runs.empty()) throw ValidationError("build_loss_panel: no runs");
  if (window.first > window.second) throw ValidationError("build_loss_panel: empty window");
  headline.validate();
  LossPanel lp;
  lp.horizon = horizon;
  lp.targets = month_range(window.first, window.second);
  lp.losses.resize(static_cast<Eigen::Index>(lp.targets.size()),
                   static_cast<Eigen::Index>(runs.size()));
  for (size_t k = 0; k < runs.size(); ++k) {
    lp.models.push_back(runs[k].model);
    for (size_t ti = 0; ti < lp.targets.size(); ++ti) {
      const int hi = headline.index_of(lp.targets[ti]);
      if (hi < 0)
        throw ValidationError("build_loss_panel: headline misses " +
                              to_string(lp.targets[ti]));
      const double fc = realtime_at(runs[k], add_months(lp.targets[ti], -horizon));
      const double d = fc - headline.values(hi);
      lp.losses(static_cast<Eigen::Index>(ti), static_cast<Eigen::Index>(k)) = d * d;
    }
  }
  return lp;
}

namespace {

// moving-block bootstrap row indices, one resample of length T
std::vector<int> mbb_indices(Rng& rng, int T, int b) {
  std::vector<int> idx;
  idx.reserve(T);
  while (static_cast<int>(idx.size()) < T) {
    const int start = static_cast<int>(rng.uniform_index(T - b + 1));
    for (int j = 0; j < b && static_cast<int>(idx.size()) < T; ++j)
      idx.push_back(start + j);
  }
  return idx;
}

} // namespace

McsResult mcs(const LossPanel& losses, double alpha, McsStatistic stat,
              const McsOptions& opts) {
  const int K = static_cast<int>(losses.losses.cols());
  const int T = static_cast<int>(losses.losses.rows());
  if (K < 2) throw ValidationError("mcs: need at least 2 models");
  if (T < 20) throw ValidationError("mcs: need at least 20 loss rows");
  if (static_cast<int>(losses.models.size()) != K)
    throw ValidationError("mcs: model-name count mismatch");
  if (!(alpha > 0.0) || alpha >= 1.0) throw ValidationError("mcs: alpha in (0,1)");
  if (opts.n_boot < 100) throw ValidationError("mcs: n_boot too small");
  const int b = opts.block_length > 0
                    ? opts.block_length
                    : static_cast<int>(std::ceil(std::cbrt(static_cast<double>(T))));
  if (b < 1 || b > T) throw ValidationError("mcs: invalid block length");

  McsResult res;
  res.models = losses.models;
  res.alpha = alpha;
  res.p_values.assign(K, 1.0);
  res.elimination_order.assign(K, -1);
  res.in_set.assign(K, true);

  const Eigen::MatrixXd& L = losses.losses;
  const Eigen::VectorXd full_mean = L.colwise().mean();

  // resampled column means, drawn once and reused across elimination rounds
  Eigen::MatrixXd boot_mean(opts.n_boot, K);
  for (int r = 0; r < opts.n_boot; ++r) {
    Rng rng(Rng::derive(opts.seed, static_cast<std::uint64_t>(r)));
    const std::vector<int> idx = mbb_indices(rng, T, b);
    Eigen::RowVectorXd m = Eigen::RowVectorXd::Zero(K);
    for (int t : idx) m += L.row(t);
    boot_mean.row(r) = m / static_cast<double>(T);
  }

  std::vector<int> active(K);
  std::iota(active.begin(), active.end(), 0);
  double running_p = 0.0;
  int round = 0;

  while (active.size() > 1) {
    const int n = static_cast<int>(active.size());

    // all pairwise differentials identical-zero -> remaining models tie at p=1
    double max_abs = 0.0;
    for (int i = 1; i < n; ++i)
      max_abs = std::max(max_abs, (L.col(active[i]) - L.col(active[0]))
                                      .cwiseAbs()
                                      .maxCoeff());
    if (max_abs == 0.0) break;

    int worst = -1;
    double t_obs = -std::numeric_limits<double>::infinity();
    double p_round = 1.0;

    if (stat == McsStatistic::Tmax) {
      // studentized deviation of each model from the active-set average
      Eigen::VectorXd davg(n), var(n);
      double set_mean = 0.0;
      for (int i = 0; i < n; ++i) set_mean += full_mean(active[i]);
      set_mean /= n;
      for (int i = 0; i < n; ++i) davg(i) = full_mean(active[i]) - set_mean;
      Eigen::MatrixXd boot_dev(opts.n_boot, n);
      for (int r = 0; r < opts.n_boot; ++r) {
        double bm = 0.0;
        for (int i = 0; i < n; ++i) bm += boot_mean(r, active[i]);
        bm /= n;
        for (int i = 0; i < n; ++i)
          boot_dev(r, i) = (boot_mean(r, active[i]) - bm) - davg(i);
      }
      for (int i = 0; i < n; ++i)
        var(i) = std::max(boot_dev.col(i).squaredNorm() / opts.n_boot, 1e-300);
      for (int i = 0; i < n; ++i) {
        const double t = davg(i) / std::sqrt(var(i));
        if (t > t_obs) {
          t_obs = t;
          worst = i;
        }
      }
      int exceed = 0;
      for (int r = 0; r < opts.n_boot; ++r) {
        double tb = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i)
          tb = std::max(tb, boot_dev(r, i) / std::sqrt(var(i)));
        if (tb >= t_obs) ++exceed;
      }
      p_round = static_cast<double>(exceed) / opts.n_boot;
    } else { // TR: max over ordered pairs of studentized differentials
      Eigen::MatrixXd dbar(n, n), var(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          dbar(i, j) = full_mean(active[i]) - full_mean(active[j]);
          if (i == j) {
            var(i, j) = 1.0;
            continue;
          }
          double s = 0.0;
          for (int r = 0; r < opts.n_boot; ++r) {
            const double dv =
                (boot_mean(r, active[i]) - boot_mean(r, active[j])) - dbar(i, j);
            s += dv * dv;
          }
          var(i, j) = std::max(s / opts.n_boot, 1e-300);
        }
      for (int i = 0; i < n; ++i) {
        double ti = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j)
          if (j != i) ti = std::max(ti, dbar(i, j) / std::sqrt(var(i, j)));
        if (ti > t_obs) {
          t_obs = ti;
          worst = i;
        }
      }
      int exceed = 0;
      for (int r = 0; r < opts.n_boot; ++r) {
        double tb = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (j != i) {
              const double dv =
                  std::abs((boot_mean(r, active[i]) - boot_mean(r, active[j])) -
                           dbar(i, j)) /
                  std::sqrt(var(i, j));
              tb = std::max(tb, dv);
            }
        if (tb >= t_obs) ++exceed;
      }
      p_round = static_cast<double>(exceed) / opts.n_boot;
    }

    // eliminated models carry the running-max p-value: sets nest across alpha
    running_p = std::max(running_p, p_round);
    const int victim = active[worst];
    res.p_values[victim] = running_p;
    res.elimination_order[victim] = round++;
    active.erase(active.begin() + worst);
  }

  for (int i : active) res.p_values[i] = 1.0;
  for (int i = 0; i < K; ++i) res.in_set[i] = res.p_values[i] > alpha;
  return res;
}

std::vector<FanRow> vintage_fan(const VintageRun& run) {
  int fitted = 0;
  for (const auto& e : run.entries)
    if (e.series) ++fitted;
  if (fitted < 2) throw ValidationError("vintage_fan: need at least 2 fitted vintages");
  std::vector<FanRow> rows;
  for (const auto& e : run.entries) {
    if (!e.series) continue;
    for (size_t t = 0; t < e.series->dates.size(); ++t)
      rows.push_back({e.vintage, e.series->dates[t], e.series->values(t)});
  }
  return rows;
}

const std::vector<SamplePreset>& sample_presets() {
  static const std::vector<SamplePreset> presets = {
      {"pre-covid", {1990, 1}, {2019, 12}},
      {"rising-inflation", {2020, 1}, {2022, 12}},
      {"inflation-normalization", {2023, 1}, {2023, 12}},
      {"post-covid", {2020, 1}, {2023, 12}},
      {"full", {1990, 1}, {2023, 12}},
  };
  return presets;
}

} // namespace regimefactor
