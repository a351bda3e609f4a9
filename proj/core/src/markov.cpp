#include "regimefactor/markov.hpp"

#include <Eigen/Dense>
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

void TransitionMatrix::validate() const {
  if (P.rows() < 1 || P.rows() != P.cols())
    throw ValidationError("transition matrix must be square and non-empty");
  for (Eigen::Index i = 0; i < P.rows(); ++i) {
    double rowsum = 0.0;
    for (Eigen::Index j = 0; j < P.cols(); ++j) {
      const double v = P(i, j);
      if (!(v >= 0.0) || v > 1.0 + 1e-12)
        throw ValidationError("transition entry (" + std::to_string(i) + "," +
                              std::to_string(j) + ") outside [0,1]");
      rowsum += v;
    }
    if (std::abs(rowsum - 1.0) > 1e-10)
      throw ValidationError("transition row " + std::to_string(i) +
                            " sums to " + std::to_string(rowsum) + ", not 1");
  }
}

Eigen::VectorXd ergodic_probs(const TransitionMatrix& tm) {
  tm.validate();
  const int M = tm.size();
  if (M == 1) return Eigen::VectorXd::Ones(1);
  const Eigen::MatrixXd IP = Eigen::MatrixXd::Identity(M, M) - tm.P.transpose();
  // reducible chains have rank(I - P') < M-1: stationary law not unique
  Eigen::FullPivLU<Eigen::MatrixXd> lu(IP);
  lu.setThreshold(1e-10);
  if (lu.rank() < M - 1)
    throw NumericError("ergodic_probs: reducible chain, stationary distribution not unique");
  Eigen::MatrixXd A(M + 1, M);
  A.topRows(M) = IP;
  A.bottomRows(1).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(M + 1);
  b(M) = 1.0;
  Eigen::VectorXd pi = (A.transpose() * A).ldlt().solve(A.transpose() * b);
  // clean tiny negatives from roundoff
  for (int i = 0; i < M; ++i) pi(i) = std::max(pi(i), 0.0);
  pi /= pi.sum();
  return pi;
}

namespace {

FilterResult filter_scaled(const Eigen::MatrixXd& dens, const Eigen::VectorXd& scale_log,
                           const TransitionMatrix& tm, const Eigen::VectorXd& initial) {
  const auto T = dens.rows();
  const int M = static_cast<int>(dens.cols());
  if (tm.size() != M) throw ValidationError("hamilton_filter: P size != density columns");
  if (initial.size() != M) throw ValidationError("hamilton_filter: initial size != M");
  if (std::abs(initial.sum() - 1.0) > 1e-8 || (initial.array() < -1e-12).any())
    throw ValidationError("hamilton_filter: initial is not a distribution");
  if ((dens.array() < 0.0).any())
    throw ValidationError("hamilton_filter: negative density");

  FilterResult out;
  out.filtered.resize(T, M);
  out.predicted.resize(T, M);
  out.loglik = 0.0;
  Eigen::VectorXd prior = initial;
  for (Eigen::Index t = 0; t < T; ++t) {
    out.predicted.row(t) = prior.transpose();
    Eigen::VectorXd joint = prior.cwiseProduct(dens.row(t).transpose());
    const double c = joint.sum();
    if (!(c > 0.0))
      throw NumericError("hamilton_filter: zero likelihood at t = " + std::to_string(t));
    out.loglik += std::log(c) + scale_log(t);
    joint /= c;
    out.filtered.row(t) = joint.transpose();
    prior = tm.P.transpose() * joint;
  }
  return out;
}

} // namespace

FilterResult hamilton_filter(const Eigen::MatrixXd& densities, const TransitionMatrix& P,
                             const Eigen::VectorXd& initial) {
  return filter_scaled(densities, Eigen::VectorXd::Zero(densities.rows()), P, initial);
}

FilterResult hamilton_filter_log(const Eigen::MatrixXd& log_densities,
                                 const TransitionMatrix& P,
                                 const Eigen::VectorXd& initial) {
  const auto T = log_densities.rows();
  Eigen::VectorXd scale = log_densities.rowwise().maxCoeff();
  Eigen::MatrixXd dens(T, log_densities.cols());
  for (Eigen::Index t = 0; t < T; ++t)
    dens.row(t) = (log_densities.row(t).array() - scale(t)).exp();
  return filter_scaled(dens, scale, P, initial);
}

Eigen::MatrixXd kim_smoother(const Eigen::MatrixXd& filtered, const TransitionMatrix& tm) {
  const auto T = filtered.rows();
  const int M = static_cast<int>(filtered.cols());
  if (tm.size() != M) throw ValidationError("kim_smoother: P size != filtered columns");
  Eigen::MatrixXd smoothed(T, M);
  smoothed.row(T - 1) = filtered.row(T - 1);
  for (Eigen::Index t = T - 2; t >= 0; --t) {
    // predicted_{t+1} rebuilt from filtered_t
    Eigen::VectorXd pred = tm.P.transpose() * filtered.row(t).transpose();
    Eigen::VectorXd ratio(M);
    for (int j = 0; j < M; ++j)
      ratio(j) = smoothed(t + 1, j) / std::max(pred(j), 1e-300);
    smoothed.row(t) = filtered.row(t).cwiseProduct((tm.P * ratio).transpose());
    // guard accumulated roundoff
    const double s = smoothed.row(t).sum();
    if (s > 0.0) smoothed.row(t) /= s;
  }
  return smoothed;
}

// ---------------------------------------------------------------------------
// EM for the switching one-factor model.
//
// Per regime j the observation density is N(0, s2_j L_j L_j' + D) with D
// diagonal and shared.  All per-(t,j) quantities reduce to rank-1 identities:
//   posterior factor variance  v_j  = s2_j / (1 + s2_j c_j),  c_j = L_j' D^-1 L_j
//   posterior factor mean      m_tj = v_j * (L_j' D^-1 x_t)
//   log density: Sherman-Morrison + matrix determinant lemma.
// ---------------------------------------------------------------------------

namespace {

struct EmParams {
  std::vector<Eigen::VectorXd> lambda; // per regime, N
  Eigen::VectorXd s2;                  // per regime factor variance
  Eigen::VectorXd d;                   // N noise variances
  Eigen::MatrixXd P;                   // M x M
  Eigen::VectorXd rho;                 // initial distribution
};

struct EStep {
  Eigen::MatrixXd logdens;  // T x M
  Eigen::MatrixXd m;        // T x M posterior factor means
  Eigen::VectorXd v;        // M posterior factor variances
  FilterResult filter;
  Eigen::MatrixXd smoothed; // T x M
  Eigen::MatrixXd xi;       // M x M summed smoothed transitions
};

void estep(const Eigen::MatrixXd& X, const EmParams& p, EStep& e) {
  const auto T = X.rows();
  const auto N = X.cols();
  const int M = static_cast<int>(p.s2.size());
  const double log2pi = 1.8378770664093454836;

  e.logdens.resize(T, M);
  e.m.resize(T, M);
  e.v.resize(M);

  const Eigen::VectorXd dinv = p.d.cwiseInverse();
  const Eigen::VectorXd xd2 = X.cwiseProduct(X) * dinv; // x' D^-1 x per row
  const double logdetD = p.d.array().log().sum();

  for (int j = 0; j < M; ++j) {
    const Eigen::VectorXd u = dinv.cwiseProduct(p.lambda[j]); // D^-1 L
    const double c = p.lambda[j].dot(u);
    const double s2 = p.s2(j);
    const double denom = 1.0 + s2 * c;
    e.v(j) = s2 / denom;
    const Eigen::VectorXd ux = X * u; // T, L' D^-1 x_t
    e.m.col(j) = e.v(j) * ux;
    // x' Sigma^-1 x = x' D^-1 x - (s2/denom) (u'x)^2
    // log|Sigma| = log|D| + log(denom)
    e.logdens.col(j) =
        (-0.5 * (static_cast<double>(N) * log2pi + logdetD + std::log(denom) +
                 (xd2.array() - (s2 / denom) * ux.array().square())))
            .matrix();
  }

  TransitionMatrix tm{p.P};
  e.filter = hamilton_filter_log(e.logdens, tm, p.rho);
  e.smoothed = kim_smoother(e.filter.filtered, tm);

  // summed transition responsibilities
  e.xi = Eigen::MatrixXd::Zero(M, M);
  for (Eigen::Index t = 0; t + 1 < T; ++t) {
    for (int i = 0; i < M; ++i) {
      for (int j = 0; j < M; ++j) {
        const double pred = std::max(e.filter.predicted(t + 1, j), 1e-300);
        e.xi(i, j) += e.filter.filtered(t, i) * p.P(i, j) * e.smoothed(t + 1, j) / pred;
      }
    }
  }
}

// exact M-step; returns smallest regime occupancy for degeneracy checks
double mstep(const Eigen::MatrixXd& X, const EStep& e, EmParams& p) {
  const auto T = X.rows();
  const auto N = X.cols();
  const int M = static_cast<int>(p.s2.size());

  double min_occ = std::numeric_limits<double>::infinity();
  Eigen::MatrixXd A(N, M); // sum_t gamma m x_t
  Eigen::VectorXd B(M);    // sum_t gamma (m^2 + v)
  for (int j = 0; j < M; ++j) {
    const Eigen::VectorXd g = e.smoothed.col(j);
    const double W = g.sum();
    min_occ = std::min(min_occ, W);
    const Eigen::VectorXd gm = g.array() * e.m.col(j).array();
    A.col(j) = X.transpose() * gm;
    B(j) = (g.array() * (e.m.col(j).array().square() + e.v(j))).sum();
    if (!(B(j) > 0.0)) return 0.0; // collapsed factor
    p.lambda[j] = A.col(j) / B(j);
    p.s2(j) = B(j) / std::max(W, 1e-12);
  }

  // shared diagonal noise: (1/T)(sum_t x_i^2 - sum_j A_ij^2 / B_j)
  const Eigen::VectorXd sxx = X.cwiseProduct(X).colwise().sum().transpose();
  for (Eigen::Index i = 0; i < N; ++i) {
    double red = 0.0;
    for (int j = 0; j < M; ++j) red += A(i, j) * A(i, j) / B(j);
    p.d(i) = std::max((sxx(i) - red) / static_cast<double>(T), 1e-8);
  }

  // transitions from summed responsibilities
  for (int i = 0; i < M; ++i) {
    const double s = e.xi.row(i).sum();
    if (s > 0.0)
      p.P.row(i) = e.xi.row(i) / s;
    else
      p.P.row(i).setConstant(1.0 / M); // regime never visited before T
  }
  // numerical cleanup to keep rows exactly stochastic
  for (int i = 0; i < M; ++i) {
    for (int j = 0; j < M; ++j) p.P(i, j) = std::max(p.P(i, j), 1e-12);
    p.P.row(i) /= p.P.row(i).sum();
  }

  p.rho = e.smoothed.row(0).transpose().cwiseMax(1e-12);
  p.rho /= p.rho.sum();
  return min_occ;
}

// start values: hard segmentation -> per-segment principal components
EmParams init_from_segments(const Eigen::MatrixXd& X, const std::vector<int>& segment_of,
                            int M) {
  const auto T = X.rows();
  const auto N = X.cols();
  EmParams p;
  p.lambda.resize(M);
  p.s2.resize(M);
  p.d = Eigen::VectorXd::Constant(N, 0.5);

  for (int j = 0; j < M; ++j) {
    std::vector<int> rows;
    for (Eigen::Index t = 0; t < T; ++t)
      if (segment_of[t] == j) rows.push_back(static_cast<int>(t));
    if (rows.size() < 3) throw NumericError("em start: segment too small");
    Eigen::MatrixXd Xj(rows.size(), N);
    for (size_t k = 0; k < rows.size(); ++k) Xj.row(k) = X.row(rows[k]);
    const FactorEstimate fe = estimate_factors(Xj, 1);
    // unit-norm loading direction, scale into the factor variance
    const double nrm = fe.loadings.col(0).norm();
    if (!(nrm > 0.0)) throw NumericError("em start: degenerate loadings");
    p.lambda[j] = fe.loadings.col(0) / nrm;
    // leading eigenvalue of the segment second moment = variance of the
    // unit-loading factor
    p.s2(j) = std::max(fe.eigenvalues(0), 1e-4);
  }

  // sticky transition start
  p.P = Eigen::MatrixXd::Constant(M, M, M > 1 ? 0.05 / (M - 1) : 1.0);
  for (int j = 0; j < M; ++j) if (M > 1) p.P(j, j) = 0.95;
  TransitionMatrix tm{p.P};
  p.rho = ergodic_probs(tm);
  return p;
}

std::vector<int> quantile_segments(Eigen::Index T, int M) {
  std::vector<int> seg(T);
  for (Eigen::Index t = 0; t < T; ++t)
    seg[t] = std::min<int>(static_cast<int>(t * M / T), M - 1);
  return seg;
}

std::vector<int> random_segments(Eigen::Index T, int M, Rng& rng) {
  // M-1 sorted cuts, each block >= 3 observations
  const int lo = 3;
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<int> cuts;
    for (int k = 0; k < M - 1; ++k)
      cuts.push_back(lo + static_cast<int>(rng.uniform_index(
                              std::max<std::uint64_t>(1, T - 2 * lo))));
    std::sort(cuts.begin(), cuts.end());
    bool ok = true;
    int prev = 0;
    for (size_t k = 0; k < cuts.size(); ++k) {
      if (cuts[k] - prev < lo) { ok = false; break; }
      prev = cuts[k];
    }
    if (static_cast<int>(T) - prev < lo) ok = false;
    if (!ok) continue;
    std::vector<int> seg(T);
    size_t next = 0;
    int lab = 0;
    for (Eigen::Index t = 0; t < T; ++t) {
      if (next < cuts.size() && t == cuts[next]) { ++lab; ++next; }
      seg[t] = lab;
    }
    return seg;
  }
  return quantile_segments(T, M); // give up on randomness, still valid
}

MsModel static_pca_model(const Eigen::MatrixXd& X) {
  const auto T = X.rows();
  const auto N = X.cols();
  const FactorEstimate fe = estimate_factors(X, 1);
  MsModel m;
  m.m_regimes = 1;
  m.r = 1;
  const double nrm = fe.loadings.col(0).norm();
  m.loadings = {fe.loadings.col(0) / nrm};
  m.factor_var.resize(1);
  m.factor_var(0) = fe.eigenvalues(0);
  // residual variances around the common component
  Eigen::MatrixXd resid = X - fe.factors * fe.loadings.transpose();
  m.noise_var =
      (resid.cwiseProduct(resid).colwise().sum() / static_cast<double>(T)).transpose();
  m.transition.P = Eigen::MatrixXd::Ones(1, 1);
  m.ergodic = Eigen::VectorXd::Ones(1);
  m.initial_probs = Eigen::VectorXd::Ones(1);
  m.filtered = Eigen::MatrixXd::Ones(T, 1);
  m.smoothed = Eigen::MatrixXd::Ones(T, 1);
  m.regime.assign(T, 0);
  // factor path = unit-loading projection
  m.factor_paths = X * m.loadings[0];
  m.regime_factor = m.factor_paths.col(0);
  // exact gaussian log-likelihood under the fitted covariance
  {
    EmParams p;
    p.lambda = m.loadings;
    p.s2 = m.factor_var;
    p.d = m.noise_var.cwiseMax(1e-8);
    p.P = m.transition.P;
    p.rho = m.initial_probs;
    EStep e;
    estep(X, p, e);
    m.loglik = e.filter.loglik;
    m.loglik_trace = {m.loglik};
  }
  m.iterations = 0;
  m.converged = true;
  m.best_start = 0;
  (void)N;
  return m;
}

struct FitOutcome {
  EmParams params;
  EStep e;
  double loglik = -std::numeric_limits<double>::infinity();
  std::vector<double> trace;
  int iterations = 0;
  bool converged = false;
  bool failed = false;
  std::string why;
};

FitOutcome run_em(const Eigen::MatrixXd& X, EmParams p, const EmOptions& opts, int M) {
  FitOutcome out;
  double prev = -std::numeric_limits<double>::infinity();
  for (int it = 0; it < opts.max_iter; ++it) {
    EStep e;
    estep(X, p, e);
    out.trace.push_back(e.filter.loglik);
    out.iterations = it + 1;

    EmParams cand = p;
    const double occ = mstep(X, e, cand);
    if (occ < 3.0) { // r + 2 with r = 1
      out.failed = true;
      out.why = "regime occupancy below 3 observations";
      return out;
    }
    out.params = p;
    out.e = std::move(e);
    out.loglik = out.trace.back();
    if (it > 0 && std::abs(out.loglik - prev) < opts.tol) {
      out.converged = true;
      return out;
    }
    prev = out.loglik;
    p = std::move(cand);
  }
  // max_iter reached: reported params/E-step/loglik stay mutually consistent
  return out;
}

} // namespace

MsModel em_fit(const Eigen::MatrixXd& X, int m_regimes, int r, const EmOptions& opts) {
  const auto T = X.rows();
  const auto N = X.cols();
  if (m_regimes < 1) throw ValidationError("em_fit: m_regimes must be >= 1");
  if (r != 1) throw ValidationError("em_fit: only the single-factor model (r = 1) is supported");
  if (T < 10 || N < 2) throw ValidationError("em_fit: panel too small");
  if (!X.allFinite()) throw ValidationError("em_fit: non-finite data");
  if (m_regimes == 1) {
    MsModel m = static_pca_model(X);
    m.seed = opts.seed;
    return m;
  }
  const int M = m_regimes;

  // start 0: break-search segmentation of the static factor path;
  // starts 1..n: random contiguous segmentations
  std::vector<std::vector<int>> starts;
  {
    std::vector<int> seg;
    try {
      const FactorEstimate fe = estimate_factors(X, 1);
      const double eps_seed = std::max(0.05, 3.0 / static_cast<double>(T));
      BreakModel bm = dp_break_search(fe.factors, M - 1, eps_seed);
      seg.assign(T, 0);
      int lab = 0;
      size_t next = 0;
      for (Eigen::Index t = 0; t < T; ++t) {
        seg[t] = lab;
        if (next < bm.break_indices.size() && t == bm.break_indices[next]) {
          ++lab;
          ++next;
        }
      }
    } catch (const std::exception&) {
      seg = quantile_segments(T, M);
    }
    starts.push_back(std::move(seg));
  }
  for (int s = 0; s < opts.n_starts; ++s) {
    Rng rng(Rng::derive(opts.seed, static_cast<std::uint64_t>(s + 1)));
    starts.push_back(random_segments(T, M, rng));
  }

  FitOutcome best;
  int best_idx = -1;
  std::string last_err = "no start converged";
  for (size_t s = 0; s < starts.size(); ++s) {
    EmParams p0;
    try {
      p0 = init_from_segments(X, starts[s], M);
    } catch (const std::exception& ex) {
      last_err = ex.what();
      continue;
    }
    FitOutcome fo = run_em(X, std::move(p0), opts, M);
    if (fo.failed) {
      last_err = fo.why;
      continue;
    }
    if (fo.loglik > best.loglik) { // strict: ties keep the lowest start index
      best = std::move(fo);
      best_idx = static_cast<int>(s);
    }
  }
  if (best_idx < 0)
    throw NumericError("em_fit: every start failed (" + last_err + ")");

  // normalize loadings to unit norm and non-negative sum, relabel regimes by
  // factor variance; the factor path rescales by the signed norm so the
  // common component is unchanged
  EmParams& p = best.params;
  Eigen::VectorXd fscale(M);
  for (int j = 0; j < M; ++j) {
    const double nrm = p.lambda[j].norm();
    if (!(nrm > 0.0)) throw NumericError("em_fit: degenerate loadings in regime " +
                                         std::to_string(j));
    p.lambda[j] /= nrm;
    p.s2(j) *= nrm * nrm;
    fscale(j) = nrm;
    if (p.lambda[j].sum() < 0.0) {
      p.lambda[j] = -p.lambda[j];
      fscale(j) = -nrm;
    }
  }
  std::vector<int> order(M);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return p.s2(a) < p.s2(b); });

  MsModel m;
  m.m_regimes = M;
  m.r = 1;
  m.loadings.resize(M);
  m.factor_var.resize(M);
  m.noise_var = p.d;
  m.transition.P.resize(M, M);
  m.initial_probs.resize(M);
  m.filtered.resize(T, M);
  m.smoothed.resize(T, M);
  m.factor_paths.resize(T, M);
  for (int j = 0; j < M; ++j) {
    const int o = order[j];
    m.loadings[j] = p.lambda[o];
    m.factor_var(j) = p.s2(o);
    m.initial_probs(j) = p.rho(o);
    m.filtered.col(j) = best.e.filter.filtered.col(o);
    m.smoothed.col(j) = best.e.smoothed.col(o);
    m.factor_paths.col(j) = best.e.m.col(o) * fscale(o);
    for (int k = 0; k < M; ++k) m.transition.P(j, k) = p.P(o, order[k]);
  }
  m.ergodic = ergodic_probs(m.transition);
  m.regime.resize(T);
  m.regime_factor.resize(T);
  for (Eigen::Index t = 0; t < T; ++t) {
    int arg = 0;
    m.smoothed.row(t).maxCoeff(&arg);
    m.regime[t] = arg;
    m.regime_factor(t) = m.factor_paths(t, arg);
  }
  m.loglik = best.loglik;
  m.loglik_trace = best.trace;
  m.iterations = best.iterations;
  m.converged = best.converged;
  m.best_start = best_idx;
  m.seed = opts.seed;
  return m;
}

} // namespace regimefactor
