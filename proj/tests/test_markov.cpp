#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "regimefactor/errors.hpp"
#include "regimefactor/factor.hpp"
#include "regimefactor/markov.hpp"
#include "regimefactor/rng.hpp"

using namespace regimefactor;

namespace {

TransitionMatrix make_tm(std::initializer_list<double> rows, int m) {
  TransitionMatrix tm;
  tm.P.resize(m, m);
  int k = 0;
  for (double v : rows) tm.P(k / m, k % m) = v, ++k;
  return tm;
}

// brute force over all M^n regime paths of length n
struct PathOracle {
  Eigen::MatrixXd dens; // T x M
  Eigen::MatrixXd P;
  Eigen::VectorXd init;

  double path_weight(const std::vector<int>& s) const {
    double w = init(s[0]) * dens(0, s[0]);
    for (size_t t = 1; t < s.size(); ++t) w *= P(s[t - 1], s[t]) * dens(t, s[t]);
    return w;
  }

  // marginal Pr(S_{n-1} = j, data_{1..n}); summing over j gives the likelihood
  Eigen::VectorXd terminal_joint(int n) const {
    const int M = static_cast<int>(P.rows());
    Eigen::VectorXd out = Eigen::VectorXd::Zero(M);
    std::vector<int> s(n, 0);
    while (true) {
      out(s[n - 1]) += path_weight(s);
      int i = 0;
      while (i < n && ++s[i] == M) s[i++] = 0;
      if (i == n) break;
    }
    return out;
  }

  // smoothed Pr(S_t = j | full data)
  Eigen::MatrixXd smoothed() const {
    const int T = static_cast<int>(dens.rows());
    const int M = static_cast<int>(P.rows());
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(T, M);
    std::vector<int> s(T, 0);
    double total = 0.0;
    while (true) {
      const double w = path_weight(s);
      total += w;
      for (int t = 0; t < T; ++t) out(t, s[t]) += w;
      int i = 0;
      while (i < T && ++s[i] == M) s[i++] = 0;
      if (i == T) break;
    }
    return out / total;
  }
};

Eigen::MatrixXd noise_panel(int T, int N, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd X(T, N);
  for (int t = 0; t < T; ++t)
    for (int i = 0; i < N; ++i) X(t, i) = rng.normal();
  return X;
}

// two-regime switching factor panel; regimes differ in factor variance and
// optionally flip half the loadings
Eigen::MatrixXd switching_panel(int T, int N, double sd_ratio, bool flip,
                                std::uint64_t seed, std::vector<int>* truth = nullptr) {
  Rng rng(seed);
  Eigen::VectorXd lam(N);
  for (int i = 0; i < N; ++i) lam(i) = 0.5 + rng.uniform();
  Eigen::VectorXd lam2 = lam;
  if (flip)
    for (int i = 0; i < N / 2; ++i) lam2(i) = -lam2(i);
  Eigen::MatrixXd X(T, N);
  int s = 0;
  if (truth) truth->assign(T, 0);
  for (int t = 0; t < T; ++t) {
    if (rng.uniform() < 0.05) s = 1 - s; // persistent chain
    if (truth) (*truth)[t] = s;
    const double f = (s == 0 ? 1.0 : sd_ratio) * rng.normal();
    for (int i = 0; i < N; ++i)
      X(t, i) = (s == 0 ? lam(i) : lam2(i)) * f + 0.4 * rng.normal();
  }
  return X;
}

} // namespace

TEST_CASE("transition matrix validation") {
  TransitionMatrix tm = make_tm({0.9, 0.1, 0.3, 0.7}, 2);
  CHECK_NOTHROW(tm.validate());
  tm.P(0, 0) = 0.95;
  CHECK_THROWS_AS(tm.validate(), ValidationError); // row sum 1.05
  tm.P(0, 0) = 1.2;
  tm.P(0, 1) = -0.2;
  CHECK_THROWS_AS(tm.validate(), ValidationError); // entries outside [0,1]
}

TEST_CASE("ergodic distribution") {
  // closed form for 2 states: pi = (p21, p12) / (p12 + p21)
  const TransitionMatrix tm = make_tm({0.95, 0.05, 0.20, 0.80}, 2);
  const Eigen::VectorXd pi = ergodic_probs(tm);
  CHECK(pi(0) == doctest::Approx(0.8).epsilon(1e-10));
  CHECK(pi(1) == doctest::Approx(0.2).epsilon(1e-10));

  // power-iteration oracle for 3 states
  const TransitionMatrix t3 =
      make_tm({0.90, 0.07, 0.03, 0.10, 0.85, 0.05, 0.02, 0.08, 0.90}, 3);
  Eigen::MatrixXd Pk = t3.P;
  for (int i = 0; i < 200; ++i) Pk = Pk * t3.P;
  const Eigen::VectorXd pi3 = ergodic_probs(t3);
  CHECK((pi3.transpose() - Pk.row(0)).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(pi3.sum() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((pi3.transpose() * t3.P - pi3.transpose()).cwiseAbs().maxCoeff() < 1e-10);

  // reducible chain: two absorbing blocks have no unique stationary law
  const TransitionMatrix red = make_tm({1.0, 0.0, 0.0, 1.0}, 2);
  CHECK_THROWS_AS(ergodic_probs(red), NumericError);
}

TEST_CASE("filter and smoother match path enumeration") {
  Rng rng(404);
  for (int rep = 0; rep < 50; ++rep) {
    const int M = 2 + static_cast<int>(rng.uniform_index(2));
    const int T = 3 + static_cast<int>(rng.uniform_index(6)); // 3..8
    Eigen::MatrixXd dens(T, M);
    for (int t = 0; t < T; ++t)
      for (int j = 0; j < M; ++j) dens(t, j) = 0.05 + rng.uniform();
    TransitionMatrix tm;
    tm.P.resize(M, M);
    for (int i = 0; i < M; ++i) {
      double row = 0.0;
      for (int j = 0; j < M; ++j) {
        tm.P(i, j) = 0.1 + rng.uniform();
        row += tm.P(i, j);
      }
      tm.P.row(i) /= row;
    }
    Eigen::VectorXd init(M);
    double s = 0.0;
    for (int j = 0; j < M; ++j) {
      init(j) = 0.2 + rng.uniform();
      s += init(j);
    }
    init /= s;

    const PathOracle oracle{dens, tm.P, init};
    const FilterResult fr = hamilton_filter(dens, tm, init);

    // log-likelihood against the total path weight
    const double lik = oracle.terminal_joint(T).sum();
    CHECK(fr.loglik == doctest::Approx(std::log(lik)).epsilon(1e-10));

    // filtered probabilities: renormalized terminal joints of each prefix
    for (int t = 0; t < T; ++t) {
      Eigen::VectorXd joint = oracle.terminal_joint(t + 1);
      joint /= joint.sum();
      CHECK((fr.filtered.row(t).transpose() - joint).cwiseAbs().maxCoeff() < 1e-10);
    }

    // smoothed probabilities against full-path enumeration
    const Eigen::MatrixXd sm = kim_smoother(fr.filtered, tm);
    CHECK((sm - oracle.smoothed()).cwiseAbs().maxCoeff() < 1e-10);

    // log-density entry point agrees with the plain one
    const FilterResult fl = hamilton_filter_log(dens.array().log().matrix(), tm, init);
    CHECK(fl.loglik == doctest::Approx(fr.loglik).epsilon(1e-12));
    CHECK((fl.filtered - fr.filtered).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("filter input validation") {
  const TransitionMatrix tm = make_tm({0.9, 0.1, 0.2, 0.8}, 2);
  Eigen::MatrixXd dens(4, 2);
  dens.setConstant(0.5);
  Eigen::VectorXd init(2);
  init << 0.5, 0.5;
  CHECK_NOTHROW(hamilton_filter(dens, tm, init));
  Eigen::VectorXd bad3(3);
  bad3 << 0.3, 0.3, 0.4;
  CHECK_THROWS_AS(hamilton_filter(dens, tm, bad3), ValidationError);
  Eigen::VectorXd unnorm(2);
  unnorm << 0.9, 0.3;
  CHECK_THROWS_AS(hamilton_filter(dens, tm, unnorm), ValidationError);
}

TEST_CASE("single-regime fit equals static principal components") {
  const Eigen::MatrixXd X = switching_panel(120, 15, 1.0, false, 11);
  const MsModel m = em_fit(X, 1);
  CHECK(m.m_regimes == 1);
  CHECK(m.iterations == 0);
  CHECK(m.converged);
  CHECK(m.loadings[0].norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.ergodic(0) == 1.0);
  CHECK(m.smoothed.col(0).minCoeff() == 1.0);

  // the common component must match the r = 1 principal-component fit
  const FactorEstimate fe = estimate_factors(X, 1);
  const Eigen::MatrixXd pc = fe.factors * fe.loadings.transpose();
  const Eigen::MatrixXd ms = m.factor_paths.col(0) * m.loadings[0].transpose();
  CHECK((pc - ms).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("em log-likelihood is monotone and the fit is deterministic") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
    const Eigen::MatrixXd X = switching_panel(300, 20, 2.5, false, 100 + seed);
    EmOptions opts;
    opts.n_starts = 3;
    opts.seed = 55 + seed;
    const MsModel a = em_fit(X, 2, 1, opts);
    REQUIRE(a.loglik_trace.size() >= 2);
    for (size_t i = 1; i < a.loglik_trace.size(); ++i)
      CHECK(a.loglik_trace[i] >= a.loglik_trace[i - 1] - 1e-8);
    CHECK(a.loglik == doctest::Approx(a.loglik_trace.back()));

    const MsModel b = em_fit(X, 2, 1, opts);
    CHECK(a.loglik == b.loglik); // bit identical
    CHECK((a.factor_paths - b.factor_paths).cwiseAbs().maxCoeff() == 0.0);
    CHECK(a.best_start == b.best_start);
    CHECK(a.regime == b.regime);
  }
}

TEST_CASE("em model structure") {
  const Eigen::MatrixXd X = switching_panel(300, 20, 3.0, false, 42);
  EmOptions opts;
  opts.n_starts = 4;
  const MsModel m = em_fit(X, 2, 1, opts);

  // loadings unit norm, sign convention, variances ascending
  for (int j = 0; j < 2; ++j) {
    CHECK(m.loadings[j].norm() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(m.loadings[j].sum() >= 0.0);
  }
  CHECK(m.factor_var(0) <= m.factor_var(1));
  CHECK(m.noise_var.minCoeff() > 0.0);
  CHECK_NOTHROW(m.transition.validate());
  CHECK(m.ergodic.sum() == doctest::Approx(1.0).epsilon(1e-8));
  // probabilities normalized row by row
  for (int t = 0; t < 300; ++t) {
    CHECK(m.smoothed.row(t).sum() == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(m.filtered.row(t).sum() == doctest::Approx(1.0).epsilon(1e-8));
  }
  // regime path is the smoothed argmax, regime_factor reads the winning column
  for (int t = 0; t < 300; ++t) {
    int arg = 0;
    m.smoothed.row(t).maxCoeff(&arg);
    CHECK(m.regime[t] == arg);
    CHECK(m.regime_factor(t) == m.factor_paths(t, m.regime[t]));
  }
}

TEST_CASE("em recovers a strong regime split") {
  int hits = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    std::vector<int> truth;
    const Eigen::MatrixXd X = switching_panel(400, 20, 2.0, true, 900 + seed, &truth);
    EmOptions opts;
    opts.n_starts = 6;
    const MsModel m = em_fit(X, 2, 1, opts);
    for (int t = 0; t < 400; ++t) {
      total++;
      if (m.regime[t] == truth[t]) hits++;
    }
  }
  // regimes are labelled by ascending factor variance, matching the DGP
  CHECK(static_cast<double>(hits) / total > 0.9);
}

TEST_CASE("em input validation") {
  const Eigen::MatrixXd X = noise_panel(60, 8, 5);
  CHECK_THROWS_AS(em_fit(X, 0), ValidationError);
  CHECK_THROWS_AS(em_fit(X, 2, 2), ValidationError); // only r = 1
  Eigen::MatrixXd tiny = noise_panel(4, 8, 6);
  CHECK_THROWS_AS(em_fit(tiny, 3), ValidationError); // cannot occupy 3 regimes
}
