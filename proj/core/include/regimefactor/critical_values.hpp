#pragma once

#include <vector>

namespace regimefactor {

// Asymptotic critical values for the structural-break test battery on nu
// moment dimensions.  Entries come from simulating the limiting functional
// (sup over admissible partitions of a nu-dimensional Brownian-bridge
// quadratic form) on a fine grid; tools/gen_critical_values regenerates the
// table compiled into the library.
//
// Coverage: nu in 1..6, trimming in {0.05, 0.10, 0.15, 0.25}, significance
// level alpha in {0.10, 0.05, 0.01}.  Maximum tabulated break counts per
// trimming are feasibility-capped (8, 8, 5, 3).  A request for a missing cell
// throws ValidationError naming the gap.
class CriticalValueTable {
public:
  static const CriticalValueTable& builtin();

  // sup-F statistic for exactly l breaks.
  double sup_f(int nu, double trimming, double alpha, int l) const;
  // double-maximum statistics over l = 1..max_breaks(trimming)
  double udmax(int nu, double trimming, double alpha) const;
  double wdmax(int nu, double trimming, double alpha) const;
  // sequential test of null_breaks vs null_breaks+1 (quantile exponent
  // rises with the null: (1-alpha)^(1/(null_breaks+1)))
  double sequential(int nu, double trimming, double alpha, int null_breaks) const;

  // Nearest tabulated trimming >= eps (throws if eps exceeds the largest).
  double snap_trimming(double eps) const;
  int max_breaks(double trimming) const;

  int max_nu() const { return 6; }
  const std::vector<double>& trimmings() const;
  const std::vector<double>& alphas() const;

  struct Raw; // generated storage
  explicit CriticalValueTable(const Raw* raw) : raw_(raw) {}

private:
  const Raw* raw_;
  int alpha_index(double alpha) const;
  int trim_index(double trimming) const;
};

} // namespace regimefactor
