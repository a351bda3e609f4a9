#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regimefactor/indicator.hpp"
#include "regimefactor/markov.hpp"
#include "regimefactor/panel.hpp"

namespace regimefactor {

// Model slot in the evaluation harness.  Names follow the reporting
// convention: M1 = baseline, M2..M4 = Markov switching with 2..4 regimes,
// SC = structural change.
struct EvalModelSpec {
  std::string name = "M1";
  enum class Kind { Baseline, MarkovSwitching, StructuralChange };
  Kind kind = Kind::Baseline;
  int regimes = 1;        // MarkovSwitching
  EmOptions em;           // MarkovSwitching
  double epsilon = 0.10;  // StructuralChange trimming
  int max_breaks = 5;     // StructuralChange cap
  double alpha = 0.05;    // StructuralChange test level
  int fixed_breaks = -1;  // >=0 skips the decision and uses that many

  static EvalModelSpec preset(const std::string& name);
};

struct VintageEntry {
  YearMonth vintage;
  std::optional<IndicatorSeries> series; // empty on failure
  std::string error;                     // reason when empty
};

// Expanding-window re-estimation: vintage v uses data through v only
// (re-standardized and re-fit), mimicking real-time publication.
struct VintageRun {
  std::string model;
  Transform rate = Transform::YoY;
  YearMonth panel_start{};
  std::vector<VintageEntry> entries;

  const VintageEntry* at(const YearMonth& vintage) const;
  // Diagonal of the vintage triangle: final value of each vintage's series.
  InflationSeries realtime_path() const;
  // Full-information path for an evaluation sample = the vintage dated at the
  // sample end.  Throws if that vintage is missing.
  const IndicatorSeries& full_information(const YearMonth& sample_end) const;
};

// rate_panel is the transformed (YoY/MoM) but unstandardized panel; headline
// must cover the same months.  Deterministic given seed: vintage i uses
// sub-stream derive(seed, i).
VintageRun run_vintages(const PricePanel& rate_panel,
                        const InflationSeries& headline,
                        const EvalModelSpec& spec,
                        const YearMonth& first_vintage,
                        const YearMonth& last_vintage,
                        std::uint64_t seed);

enum class RevisionMetric { RMSD, MAD };

// Real-time vs full-information deviation over an evaluation sample.
double revision_stats(const VintageRun& run,
                      std::pair<YearMonth, YearMonth> sample,
                      RevisionMetric metric);

// Root mean squared forecast error of the real-time indicator at origin
// tau-h against headline at target tau, tau ranging over `window`.
double rmsfe(const VintageRun& run, const InflationSeries& headline,
             int horizon, std::pair<YearMonth, YearMonth> window);

// Squared-error losses per model (columns) at each target in the window.
struct LossPanel {
  Eigen::MatrixXd losses; // T_f x K
  std::vector<std::string> models;
  int horizon = 0;
  std::vector<YearMonth> targets;
};

LossPanel build_loss_panel(const std::vector<VintageRun>& runs,
                           const InflationSeries& headline, int horizon,
                           std::pair<YearMonth, YearMonth> window);

enum class McsStatistic { Tmax, TR };

struct McsOptions {
  int n_boot = 5000;
  int block_length = 0; // 0 = ceil(T_f^(1/3))
  std::uint64_t seed = 777;
};

// Model-confidence-set p-values by iterated elimination with a moving-block
// bootstrap.  The elimination sequence is computed once; the set at level
// alpha is {models with p > alpha}, so sets nest across alpha by
// construction.  Identical loss columns all survive with p = 1.
struct McsResult {
  std::vector<std::string> models;
  std::vector<double> p_values;        // MCS p-value per model
  std::vector<int> elimination_order;  // -1 = never eliminated (last survivor)
  std::vector<bool> in_set;            // p > alpha
  double alpha = 0.0;
};

McsResult mcs(const LossPanel& losses, double alpha,
              McsStatistic stat = McsStatistic::Tmax,
              const McsOptions& opts = {});

// Long-format vintage triangle for fan charts.
struct FanRow {
  YearMonth vintage;
  YearMonth date;
  double value = 0.0;
};
std::vector<FanRow> vintage_fan(const VintageRun& run);

// Named evaluation samples used in reporting.
struct SamplePreset {
  std::string name;
  YearMonth first;
  YearMonth last;
};
const std::vector<SamplePreset>& sample_presets();

} // namespace regimefactor
