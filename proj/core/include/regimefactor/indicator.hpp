#pragma once

#include <Eigen/Core>
#include <vector>

#include "regimefactor/breaks.hpp"
#include "regimefactor/markov.hpp"
#include "regimefactor/panel.hpp"
#include "regimefactor/stats.hpp"

namespace regimefactor {

enum class IndicatorVariant { Baseline, StructuralChange, MarkovSwitching };

std::string to_string(IndicatorVariant v);

struct RegimeCoef {
  double alpha = 0.0;   // intercept
  double beta = 0.0;    // factor slope
  int n_obs = 0;
  double resid_var = 0.0;       // within-regime residual variance (reported only)
  bool pooled_fallback = false; // regime had <3 assigned months
};

// Core-inflation indicator: fitted value of the headline regression
//   pi_t = alpha_{g(t)} + beta_{g(t)} fhat_t + u_t
// where g(t) is the segment (structural-change) or assigned regime
// (Markov-switching), or constant for the baseline.
struct IndicatorSeries {
  std::vector<YearMonth> dates;
  Eigen::VectorXd values;
  IndicatorVariant variant = IndicatorVariant::Baseline;
  std::vector<RegimeCoef> coef;  // one per regime/segment
  Eigen::VectorXd factor;        // factor path entering the regression
  std::vector<int> regime;       // 0-based regime/segment label per month
  Eigen::VectorXd residuals;
  bool probability_weighted = false;
};

// Single-regime OLS of headline on (1, factor).
IndicatorSeries fit_baseline(const InflationSeries& headline,
                             const Eigen::VectorXd& factor);

// Per-segment OLS on the per-segment factors of a fitted BreakModel
// (fit_segment_factors must have run).  Equivalent to one stacked OLS on a
// block-diagonal design; fit_sc_stacked computes that version for
// cross-checking.
IndicatorSeries fit_sc(const InflationSeries& headline, const BreakModel& model);
IndicatorSeries fit_sc_stacked(const InflationSeries& headline, const BreakModel& model);

// Per-regime OLS using the most likely smoothed regime per month.  Regimes
// with fewer than 3 assigned months fall back to pooled coefficients and are
// flagged.  weighted=true instead weights every month into every regime
// regression by its smoothed probability.
IndicatorSeries fit_ms(const InflationSeries& headline, const MsModel& model,
                       bool weighted = false);

// Pairwise equality-of-variance diagnostic across regimes (F ratios with
// occupancy-based degrees of freedom; heuristic, reported not enforced).
struct VarianceDiagnostic {
  struct Pair {
    int a = 0, b = 0;
    double ratio = 0.0;   // var_a / var_b, a the larger
    double p_value = 1.0; // two-sided
    double dof_a = 0.0, dof_b = 0.0;
  };
  std::vector<Pair> pairs;
  std::vector<double> variances;
};

VarianceDiagnostic regime_variance_diagnostic(const std::vector<double>& variances,
                                              const std::vector<double>& dof);
VarianceDiagnostic regime_variance_diagnostic(const BreakModel& model);
VarianceDiagnostic regime_variance_diagnostic(const MsModel& model);

} // namespace regimefactor
