#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

namespace regimefactor {

// Row-stochastic regime transition matrix: P(i,j) = Pr(S_t = j | S_{t-1} = i).
struct TransitionMatrix {
  Eigen::MatrixXd P;

  int size() const { return static_cast<int>(P.rows()); }
  // square, entries in [0,1], every row sums to 1 within 1e-10
  void validate() const;
};

// Stationary distribution pi with pi' P = pi', computed by least squares on
// the stacked system [I - P'; 1'] pi = e_{M+1}.  Rejects reducible chains
// (multiple stationary distributions).
Eigen::VectorXd ergodic_probs(const TransitionMatrix& P);

struct FilterResult {
  Eigen::MatrixXd filtered;   // T x M, Pr(S_t = j | data up to t)
  Eigen::MatrixXd predicted;  // T x M, Pr(S_t = j | data up to t-1)
  double loglik = 0.0;
};

// Forward filter over per-period regime densities (T x M).  Each step is
// normalized; the log-likelihood accumulates the log normalizers.
// `initial` is the distribution of S_1.
FilterResult hamilton_filter(const Eigen::MatrixXd& densities,
                             const TransitionMatrix& P,
                             const Eigen::VectorXd& initial);

// Same filter fed with log densities; rows are rescaled by their maximum
// before exponentiation so large cross-sections do not underflow.
FilterResult hamilton_filter_log(const Eigen::MatrixXd& log_densities,
                                 const TransitionMatrix& P,
                                 const Eigen::VectorXd& initial);

// Backward smoother:
//   smoothed_t(i) = filtered_t(i) * sum_j P(i,j) smoothed_{t+1}(j) / predicted_{t+1}(j)
// with predicted probabilities floored at 1e-300.
Eigen::MatrixXd kim_smoother(const Eigen::MatrixXd& filtered,
                             const TransitionMatrix& P);

// Markov-switching single-factor model
//   x_t | S_t = j  ~  N(0, sigma2_f(j) * lambda_j lambda_j' + diag(noise_var))
// fitted by EM.  Loadings are reported with unit norm (scale moved into
// sigma2_f) and regimes are relabelled by increasing factor variance.
struct MsModel {
  int m_regimes = 0;
  int r = 1;
  std::vector<Eigen::VectorXd> loadings; // per regime, N, unit norm
  Eigen::VectorXd factor_var;            // per regime
  Eigen::VectorXd noise_var;             // N, shared diagonal
  TransitionMatrix transition;
  Eigen::VectorXd ergodic;
  Eigen::VectorXd initial_probs;         // fitted distribution of S_1

  Eigen::MatrixXd filtered;  // T x M
  Eigen::MatrixXd smoothed;  // T x M
  std::vector<int> regime;   // argmax smoothed
  Eigen::MatrixXd factor_paths;  // T x M, factor posterior mean per regime
  Eigen::VectorXd regime_factor; // T, factor under the assigned regime

  double loglik = 0.0;
  std::vector<double> loglik_trace; // one entry per EM iteration
  int iterations = 0;
  bool converged = false;
  int best_start = -1; // 0 = break-search seeded start, 1..n random starts
  std::uint64_t seed = 0;
};

struct EmOptions {
  int max_iter = 300;
  double tol = 1e-8;      // absolute log-likelihood increment
  int n_starts = 10;      // random starts; a break-search seeded start is added
  std::uint64_t seed = 20240615;
};

// M = 1 reduces exactly to static principal components (no EM iterations).
// Only the single-factor model (r = 1) is supported.
MsModel em_fit(const Eigen::MatrixXd& X, int m_regimes, int r = 1,
               const EmOptions& opts = {});

} // namespace regimefactor
