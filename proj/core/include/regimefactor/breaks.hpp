#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "regimefactor/calendar.hpp"
#include "regimefactor/critical_values.hpp"
#include "regimefactor/factor.hpp"

namespace regimefactor {

// Second-moment series of an estimated factor path: row t is
// vech(f_t f_t'), lower triangle stacked column-major, so r factors give
// nu = r(r+1)/2 moment columns.  (r=2, f=(1,2) -> (1, 2, 4).)
Eigen::MatrixXd vech_moments(const Eigen::MatrixXd& F);

inline int vech_dim(int r) { return r * (r + 1) / 2; }

// Bartlett-kernel long-run covariance of a (demeaned) moment series.
struct LongRunCov {
  Eigen::MatrixXd omega;
  int bandwidth = 0;
  bool ridged = false;  // true when a ridge was added for conditioning
  double ridge = 0.0;
};

// Z must already be demeaned.  Default bandwidth floor(4*(T/100)^(2/9)).
// If cond(omega) > 1e12 a ridge of 1e-8 * trace/nu is added and flagged.
LongRunCov hac_long_run_cov(const Eigen::MatrixXd& Z,
                            std::optional<int> bandwidth = std::nullopt);

// Omega for the break battery: estimated once on the full-sample demeaned
// vech moments of F and then held fixed across all candidate partitions.
LongRunCov battery_long_run_cov(const Eigen::MatrixXd& F,
                                std::optional<int> bandwidth = std::nullopt);

// Sum of squared normalized errors for a given partition:
//   sum over segments of sum_t (z_t - zbar_seg)' Omega^-1 (z_t - zbar_seg).
// `breaks` holds the last index of every segment except the final one,
// strictly increasing, 0-based.  Segments shorter than nu are rejected.
double ssne(const Eigen::MatrixXd& F, const std::vector<int>& breaks,
            const LongRunCov& lrc);

// Optimal m-break partition and the per-segment factor re-estimates that the
// indicator pipeline attaches afterwards.
struct BreakModel {
  std::vector<int> break_indices;  // 0-based last index of each ended segment
  std::vector<YearMonth> break_dates; // filled when the caller knows the calendar
  std::vector<FactorEstimate> segment_factors; // filled by fit_segment_factors
  double ssne = 0.0;
  double epsilon = 0.0;
  int min_segment = 0;  // h actually enforced: max(1, floor(eps*T))
  int r_tilde = 0;      // factor count behind the moment series
};

// Exhaustive-optimal dynamic program over admissible partitions (every
// segment >= h observations).  Ties break toward the earliest break dates.
// Omega defaults to battery_long_run_cov(F).
BreakModel dp_break_search(const Eigen::MatrixXd& F, int m, double eps,
                           const LongRunCov* lrc = nullptr);

// Per-segment principal components on the standardized panel rows of each
// segment (the panel that produced F).
void fit_segment_factors(const Eigen::MatrixXd& X, BreakModel& model, int r = 1);

struct SupFResult {
  double stat = 0.0;
  std::vector<int> breaks;
};

// sup-F statistic for exactly l breaks:
//   (SSNE0 - SSNE(That)) / (l * nu)
SupFResult sup_f_test(const Eigen::MatrixXd& F, int l, double eps,
                      const LongRunCov* lrc = nullptr);

struct DmaxResult {
  double udmax = 0.0;
  double wdmax = 0.0;
  std::vector<double> sup_f; // statistic per l = 1..L
};

// UDmax = max_l supF(l); WDmax weights each supF(l) by cv(nu,alpha,1)/cv(nu,alpha,l).
DmaxResult udmax_wdmax(const Eigen::MatrixXd& F, int max_breaks, double eps,
                       double alpha,
                       const CriticalValueTable& table = CriticalValueTable::builtin(),
                       const LongRunCov* lrc = nullptr);

// Sequential statistic for the null of `null_breaks` breaks (held fixed at
// their DP optimum) against one additional admissible break:
//   SSNE(T1..Tl) - min over insertions SSNE(T1..Tl, tau).
double sequential_test(const Eigen::MatrixXd& F, int null_breaks, double eps,
                       const LongRunCov* lrc = nullptr);

struct BreakDecision {
  int num_breaks = 0;
  DmaxResult dmax;
  bool udmax_reject = false;
  bool wdmax_reject = false;
  std::vector<double> sequential; // statistic for null l vs l+1, l = 1.. (stops early)
  double alpha = 0.0;
  double eps = 0.0;
};

// Dmax gate at alpha: no rejection decides 0 breaks.  On rejection the count
// is the smallest null l >= 1 whose l-vs-(l+1) statistic falls below its
// critical value (quantile (1-alpha)^(1/(l+1))), capped at max_breaks.
BreakDecision decide_num_breaks(const Eigen::MatrixXd& F, int max_breaks,
                                double eps, double alpha,
                                const CriticalValueTable& table = CriticalValueTable::builtin(),
                                const LongRunCov* lrc = nullptr);

} // namespace regimefactor
