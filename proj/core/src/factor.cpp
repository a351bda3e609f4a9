#include "regimefactor/factor.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "regimefactor/errors.hpp"

namespace regimefactor {

FactorEstimate estimate_factors(const Eigen::MatrixXd& X, int r) {
  const auto T = X.rows();
  const auto N = X.cols();
  if (T < 2 || N < 1) throw ValidationError("estimate_factors: degenerate panel");
  if (r < 1 || r > std::min(T, N))
    throw ValidationError("estimate_factors: r out of range [1, min(N,T)]");
  if (!X.allFinite()) throw ValidationError("estimate_factors: non-finite data");

  FactorEstimate fe;
  fe.r = r;
  const double Td = static_cast<double>(T);

  if (T <= N) {
    // T x T gram: eigenvectors are the factors directly
    Eigen::MatrixXd G = X * X.transpose() / Td;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
    if (es.info() != Eigen::Success)
      throw NumericError("estimate_factors: eigen decomposition failed");
    // ascending -> take the tail, reversed
    fe.eigenvalues.resize(T);
    for (Eigen::Index k = 0; k < T; ++k)
      fe.eigenvalues(k) = es.eigenvalues()(T - 1 - k);
    fe.factors.resize(T, r);
    for (int k = 0; k < r; ++k)
      fe.factors.col(k) = std::sqrt(Td) * es.eigenvectors().col(T - 1 - k);
  } else {
    // N x N gram: factors rebuilt from the loading-space eigenvectors
    Eigen::MatrixXd G = X.transpose() * X / Td;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
    if (es.info() != Eigen::Success)
      throw NumericError("estimate_factors: eigen decomposition failed");
    fe.eigenvalues.resize(N);
    for (Eigen::Index k = 0; k < N; ++k)
      fe.eigenvalues(k) = es.eigenvalues()(N - 1 - k);
    fe.factors.resize(T, r);
    for (int k = 0; k < r; ++k) {
      const double mu = fe.eigenvalues(k);
      if (mu <= 0.0)
        throw NumericError("estimate_factors: zero eigenvalue at factor " +
                           std::to_string(k + 1));
      // F_k = X w_k / sqrt(mu_k):  F'F = w'X'Xw/mu = T
      fe.factors.col(k) = X * es.eigenvectors().col(N - 1 - k) / std::sqrt(mu);
    }
  }

  fe.loadings = X.transpose() * fe.factors / Td;

  // sign convention: each loading column sums non-negative
  for (int k = 0; k < r; ++k) {
    if (fe.loadings.col(k).sum() < 0.0) {
      fe.loadings.col(k) = -fe.loadings.col(k);
      fe.factors.col(k) = -fe.factors.col(k);
    }
  }
  return fe;
}

int ic_num_factors(const Eigen::MatrixXd& X, int r_max, FactorCriterion crit) {
  const auto T = X.rows();
  const auto N = X.cols();
  if (r_max < 1 || r_max > std::min(T, N))
    throw ValidationError("ic_num_factors: r_max out of range");
  const double Td = static_cast<double>(T), Nd = static_cast<double>(N);

  const FactorEstimate full = estimate_factors(X, r_max);
  // V(r) = mean squared residual = total mean square - explained eigenvalue mass / N
  const double total = X.squaredNorm() / (Nd * Td);

  double penalty;
  const double scale = (Nd + Td) / (Nd * Td);
  if (crit == FactorCriterion::ICp1)
    penalty = scale * std::log(Nd * Td / (Nd + Td));
  else
    penalty = scale * std::log(std::min(Nd, Td));

  int best_r = 1;
  double best_ic = 0.0;
  double explained = 0.0;
  for (int r = 1; r <= r_max; ++r) {
    explained += full.eigenvalues(r - 1) / Nd;
    const double v = std::max(total - explained, 1e-300);
    const double ic = std::log(v) + r * penalty;
    if (r == 1 || ic < best_ic) { // strict: ties stay with the smaller r
      best_ic = ic;
      best_r = r;
    }
  }
  return best_r;
}

Eigen::VectorXd project_factor(const Eigen::MatrixXd& loadings, const Eigen::VectorXd& x) {
  if (loadings.rows() != x.size())
    throw ValidationError("project_factor: dimension mismatch");
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(loadings);
  if (qr.rank() < loadings.cols())
    throw NumericError("project_factor: rank-deficient loadings");
  return qr.solve(x);
}

} // namespace regimefactor
