#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regimefactor/panel.hpp"

namespace regimefactor {

// Synthetic panel generator: one common factor whose variance and loadings
// switch across regimes.  Regimes are driven either by fixed break points or
// by a Markov chain.  Optionally also emits a headline series
//   pi_t = alpha_{S_t} + beta_{S_t} f_t + u_t
// so indicator and evaluation pipelines can run end to end on synthetic data.
struct DgpSpec {
  int n_series = 20;
  int periods = 200;
  YearMonth start_date{2000, 1};

  enum class Driver { Breaks, Markov };
  Driver driver = Driver::Breaks;

  // Driver::Breaks: last index of each regime but the final one (0-based,
  // strictly increasing, inside [0, periods-1)).  Regime count = breaks+1.
  std::vector<int> break_points;

  // Driver::Markov: row-stochastic M x M transition matrix.
  Eigen::MatrixXd transition;

  // per-regime factor standard deviation^2
  std::vector<double> factor_var;

  // Fraction of loadings whose sign flips in regime j relative to regime 0.
  // Empty = no flips.  Explicit loadings (N x M) override the generator.
  std::vector<double> loading_flip;
  std::optional<Eigen::MatrixXd> loadings;

  double noise_sd = 1.0;

  // Optional headline equation.
  struct Headline {
    std::vector<double> alpha;
    std::vector<double> beta;
    double noise_sd = 0.3;
  };
  std::optional<Headline> headline;

  int regime_count() const;
  void validate() const;
};

DgpSpec dgp_from_json(const std::string& json_text);
std::string dgp_to_json(const DgpSpec& spec);

struct PanelTruth {
  Eigen::VectorXd factors;        // T, raw factor path
  std::vector<int> regimes;       // T, 0-based regime per period
  std::vector<int> break_points;  // realized regime-change indices (last index before switch)
  Eigen::MatrixXd loadings;       // N x M, per-regime loadings after standardization absorb
  Eigen::MatrixXd noise;          // T x N, idiosyncratic part after standardization absorb
  std::optional<InflationSeries> headline;
};

struct SimulatedPanel {
  PricePanel panel; // standardized, T x N
  PanelTruth truth;
};

// Deterministic in (spec, seed).  The emitted panel is exactly column
// standardized; the rescaling is absorbed into truth.loadings / truth.noise so
// panel.values(t,i) == loadings(i, regimes[t]) * factors[t] + noise(t,i)
// holds to machine precision.
SimulatedPanel simulate_panel(const DgpSpec& spec, std::uint64_t seed);

} // namespace regimefactor
