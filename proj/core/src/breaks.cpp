#include "regimefactor/breaks.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "regimefactor/errors.hpp"

namespace regimefactor {

Eigen::MatrixXd vech_moments(const Eigen::MatrixXd& F) {
  const auto T = F.rows();
  const int r = static_cast<int>(F.cols());
  if (T < 1 || r < 1) throw ValidationError("vech_moments: empty factor path");
  const int nu = vech_dim(r);
  Eigen::MatrixXd Z(T, nu);
  for (Eigen::Index t = 0; t < T; ++t) {
    int k = 0;
    // lower triangle, column-major: (1,1),(2,1)..(r,1),(2,2)...
    for (int j = 0; j < r; ++j)
      for (int i = j; i < r; ++i) Z(t, k++) = F(t, i) * F(t, j);
  }
  return Z;
}

LongRunCov hac_long_run_cov(const Eigen::MatrixXd& Z, std::optional<int> bandwidth) {
  const auto T = Z.rows();
  const auto nu = Z.cols();
  if (T < 2) throw ValidationError("hac: need at least 2 observations");
  int B = bandwidth ? *bandwidth
                    : static_cast<int>(std::floor(4.0 * std::pow(T / 100.0, 2.0 / 9.0)));
  if (B < 0) throw ValidationError("hac: negative bandwidth");
  if (B >= T) B = static_cast<int>(T) - 1;

  const double Td = static_cast<double>(T);
  Eigen::MatrixXd omega = Z.transpose() * Z / Td;
  for (int k = 1; k <= B; ++k) {
    const double w = 1.0 - static_cast<double>(k) / (B + 1.0);
    // Gamma_k = (1/T) sum_t z_t z_{t-k}'
    Eigen::MatrixXd g = Z.bottomRows(T - k).transpose() * Z.topRows(T - k) / Td;
    omega += w * (g + g.transpose());
  }
  omega = ((omega + omega.transpose()) / 2.0).eval();

  LongRunCov lrc;
  lrc.bandwidth = B;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(omega);
  const double lmax = es.eigenvalues().maxCoeff();
  const double lmin = es.eigenvalues().minCoeff();
  if (!(lmax > 0.0)) throw NumericError("hac: long-run covariance not positive");
  if (lmin <= 0.0 || lmax / lmin > 1e12) {
    lrc.ridge = 1e-8 * omega.trace() / static_cast<double>(nu);
    omega += lrc.ridge * Eigen::MatrixXd::Identity(nu, nu);
    lrc.ridged = true;
  }
  lrc.omega = std::move(omega);
  return lrc;
}

LongRunCov battery_long_run_cov(const Eigen::MatrixXd& F, std::optional<int> bandwidth) {
  Eigen::MatrixXd Z = vech_moments(F);
  Z.rowwise() -= Z.colwise().mean();
  return hac_long_run_cov(Z, bandwidth);
}

namespace {

// Shared machinery: moment series whitened by chol(Omega^-1) so a segment's
// cost is a plain centered sum of squares.
struct Whitened {
  Eigen::MatrixXd Y; // T x nu, y_t = L' z_t with Omega^-1 = L L'
  int nu = 0;

  Whitened(const Eigen::MatrixXd& F, const LongRunCov& lrc) {
    const Eigen::MatrixXd Z = vech_moments(F);
    nu = static_cast<int>(Z.cols());
    if (lrc.omega.rows() != nu || lrc.omega.cols() != nu)
      throw ValidationError("ssne: Omega dimension != vech dimension");
    Eigen::LLT<Eigen::MatrixXd> llt(lrc.omega);
    if (llt.info() != Eigen::Success)
      throw NumericError("ssne: Omega not positive definite");
    const Eigen::MatrixXd oinv =
        llt.solve(Eigen::MatrixXd::Identity(nu, nu));
    Eigen::LLT<Eigen::MatrixXd> llt2((oinv + oinv.transpose()) / 2.0);
    if (llt2.info() != Eigen::Success)
      throw NumericError("ssne: Omega inverse not positive definite");
    Y = Z * llt2.matrixL();
  }

  // sum_t (y_t - ybar)'(y_t - ybar) over rows a..b inclusive
  double segment_cost(int a, int b) const {
    const int n = b - a + 1;
    const Eigen::RowVectorXd mean = Y.middleRows(a, n).colwise().sum() / n;
    return (Y.middleRows(a, n).rowwise() - mean).squaredNorm();
  }
};

int min_segment_length(double eps, Eigen::Index T) {
  if (!(eps > 0.0) || eps >= 0.5)
    throw ValidationError("trimming must lie in (0, 0.5)");
  return std::max(1, static_cast<int>(std::floor(eps * static_cast<double>(T))));
}

void check_breaks(const std::vector<int>& breaks, Eigen::Index T) {
  int prev = -1;
  for (int b : breaks) {
    if (b <= prev || b < 0 || b >= static_cast<int>(T) - 1)
      throw ValidationError("breaks must be strictly increasing inside [0, T-2]");
    prev = b;
  }
}

// cost(a,b) for all admissible [a,b]; kept as a flat T*T array
struct CostTable {
  int T = 0;
  int h = 0;
  std::vector<double> c;

  CostTable(const Whitened& w, int minlen) {
    T = static_cast<int>(w.Y.rows());
    h = minlen;
    c.assign(static_cast<size_t>(T) * T, std::numeric_limits<double>::quiet_NaN());
    for (int a = 0; a < T; ++a)
      for (int b = a + h - 1; b < T; ++b)
        c[static_cast<size_t>(a) * T + b] = w.segment_cost(a, b);
  }

  double at(int a, int b) const { return c[static_cast<size_t>(a) * T + b]; }
};

struct DpResult {
  std::vector<int> breaks;
  double ssne = 0.0;
};

// minimize total cost over partitions of [0, T-1] into m+1 segments of at
// least h observations; ties resolved toward the earliest break dates
DpResult dp_partition(const CostTable& ct, int m) {
  const int T = ct.T;
  const int h = ct.h;
  const double INF = std::numeric_limits<double>::infinity();
  // best[k][a]: cost of splitting [a, T-1] into k+1 segments
  std::vector<std::vector<double>> best(m + 1, std::vector<double>(T + 1, INF));
  std::vector<std::vector<int>> choice(m + 1, std::vector<int>(T + 1, -1));
  for (int a = 0; a <= T - h; ++a) best[0][a] = ct.at(a, T - 1);
  for (int k = 1; k <= m; ++k) {
    for (int a = 0; a + (k + 1) * h <= T; ++a) {
      double bv = INF;
      int bc = -1;
      const int emax = T - 1 - k * h;
      for (int e = a + h - 1; e <= emax; ++e) {
        const double v = ct.at(a, e) + best[k - 1][e + 1];
        if (v < bv) { // strict: earliest first break wins ties
          bv = v;
          bc = e;
        }
      }
      best[k][a] = bv;
      choice[k][a] = bc;
    }
  }
  if (!std::isfinite(best[m][0]))
    throw ValidationError("break search infeasible: (m+1)*h exceeds T");
  DpResult out;
  out.ssne = best[m][0];
  int a = 0;
  for (int k = m; k >= 1; --k) {
    const int e = choice[k][a];
    out.breaks.push_back(e);
    a = e + 1;
  }
  return out;
}

LongRunCov ensure_lrc(const Eigen::MatrixXd& F, const LongRunCov* lrc) {
  if (lrc) return *lrc;
  return battery_long_run_cov(F);
}

} // namespace

double ssne(const Eigen::MatrixXd& F, const std::vector<int>& breaks,
            const LongRunCov& lrc) {
  const auto T = F.rows();
  check_breaks(breaks, T);
  Whitened w(F, lrc);
  double total = 0.0;
  int a = 0;
  for (size_t s = 0; s <= breaks.size(); ++s) {
    const int b = s < breaks.size() ? breaks[s] : static_cast<int>(T) - 1;
    if (b - a + 1 < w.nu)
      throw ValidationError("ssne: segment [" + std::to_string(a) + "," +
                            std::to_string(b) + "] shorter than " +
                            std::to_string(w.nu) + " moment dimensions");
    total += w.segment_cost(a, b);
    a = b + 1;
  }
  return total;
}

BreakModel dp_break_search(const Eigen::MatrixXd& F, int m, double eps,
                           const LongRunCov* lrc_in) {
  const auto T = F.rows();
  if (m < 1) throw ValidationError("dp_break_search: m must be >= 1");
  const int h = min_segment_length(eps, T);
  const int nu = vech_dim(static_cast<int>(F.cols()));
  if (h < nu)
    throw ValidationError("dp_break_search: floor(eps*T) = " + std::to_string(h) +
                          " is below the moment dimension " + std::to_string(nu) +
                          "; raise eps");
  if ((m + 1) * h > T)
    throw ValidationError("dp_break_search: need (m+1)*floor(eps*T) <= T");
  const LongRunCov lrc = ensure_lrc(F, lrc_in);
  Whitened w(F, lrc);
  CostTable ct(w, h);
  DpResult dp = dp_partition(ct, m);

  BreakModel bm;
  bm.break_indices = dp.breaks;
  bm.ssne = dp.ssne;
  bm.epsilon = eps;
  bm.min_segment = h;
  bm.r_tilde = static_cast<int>(F.cols());
  return bm;
}

void fit_segment_factors(const Eigen::MatrixXd& X, BreakModel& model, int r) {
  if (X.rows() < 1) throw ValidationError("fit_segment_factors: empty panel");
  check_breaks(model.break_indices, X.rows());
  model.segment_factors.clear();
  int a = 0;
  for (size_t s = 0; s <= model.break_indices.size(); ++s) {
    const int b = s < model.break_indices.size() ? model.break_indices[s]
                                                 : static_cast<int>(X.rows()) - 1;
    model.segment_factors.push_back(estimate_factors(X.middleRows(a, b - a + 1), r));
    a = b + 1;
  }
}

SupFResult sup_f_test(const Eigen::MatrixXd& F, int l, double eps,
                      const LongRunCov* lrc_in) {
  if (l < 1) throw ValidationError("sup_f_test: l must be >= 1");
  const LongRunCov lrc = ensure_lrc(F, lrc_in);
  const int nu = vech_dim(static_cast<int>(F.cols()));
  BreakModel bm = dp_break_search(F, l, eps, &lrc);
  Whitened w(F, lrc);
  const double ssne0 = w.segment_cost(0, static_cast<int>(F.rows()) - 1);
  SupFResult out;
  out.breaks = bm.break_indices;
  out.stat = (ssne0 - bm.ssne) / (static_cast<double>(l) * nu);
  return out;
}

DmaxResult udmax_wdmax(const Eigen::MatrixXd& F, int max_breaks, double eps,
                       double alpha, const CriticalValueTable& table,
                       const LongRunCov* lrc_in) {
  if (max_breaks < 1) throw ValidationError("udmax_wdmax: max_breaks must be >= 1");
  const LongRunCov lrc = ensure_lrc(F, lrc_in);
  const int nu = vech_dim(static_cast<int>(F.cols()));
  const double trim = table.snap_trimming(eps);
  const int h = min_segment_length(eps, F.rows());
  if (h < nu)
    throw ValidationError("udmax_wdmax: floor(eps*T) below moment dimension");
  Whitened w(F, lrc);
  CostTable ct(w, h);
  const double ssne0 = w.segment_cost(0, static_cast<int>(F.rows()) - 1);
  const double cv1 = table.sup_f(nu, trim, alpha, 1);

  DmaxResult out;
  for (int l = 1; l <= max_breaks; ++l) {
    if ((l + 1) * h > ct.T)
      throw ValidationError("udmax_wdmax: l = " + std::to_string(l) +
                            " breaks infeasible at this trimming");
    DpResult dp = dp_partition(ct, l);
    const double stat = (ssne0 - dp.ssne) / (static_cast<double>(l) * nu);
    out.sup_f.push_back(stat);
    out.udmax = std::max(out.udmax, stat);
    const double cvl = table.sup_f(nu, trim, alpha, l);
    out.wdmax = std::max(out.wdmax, cv1 / cvl * stat);
  }
  return out;
}

double sequential_test(const Eigen::MatrixXd& F, int null_breaks, double eps,
                       const LongRunCov* lrc_in) {
  if (null_breaks < 0) throw ValidationError("sequential_test: null_breaks must be >= 0");
  const auto T = F.rows();
  const int h = min_segment_length(eps, T);
  const int nu = vech_dim(static_cast<int>(F.cols()));
  if (h < nu) throw ValidationError("sequential_test: floor(eps*T) below moment dimension");
  const LongRunCov lrc = ensure_lrc(F, lrc_in);
  Whitened w(F, lrc);
  CostTable ct(w, h);

  std::vector<int> null_part;
  if (null_breaks > 0) {
    if ((null_breaks + 1) * h > T)
      throw ValidationError("sequential_test: null partition infeasible");
    null_part = dp_partition(ct, null_breaks).breaks;
  }

  // best single insertion within any segment of the held-fixed null partition
  double best_delta = 0.0; // no admissible insertion -> statistic 0
  int a = 0;
  for (size_t s = 0; s <= null_part.size(); ++s) {
    const int b = s < null_part.size() ? null_part[s] : static_cast<int>(T) - 1;
    const double base = ct.at(a, b);
    for (int tau = a + h - 1; tau + h <= b; ++tau) {
      const double delta = base - (ct.at(a, tau) + ct.at(tau + 1, b));
      best_delta = std::max(best_delta, delta);
    }
    a = b + 1;
  }
  return best_delta;
}

BreakDecision decide_num_breaks(const Eigen::MatrixXd& F, int max_breaks,
                                double eps, double alpha,
                                const CriticalValueTable& table,
                                const LongRunCov* lrc_in) {
  const LongRunCov lrc = ensure_lrc(F, lrc_in);
  const int nu = vech_dim(static_cast<int>(F.cols()));
  const double trim = table.snap_trimming(eps);
  if (max_breaks > table.max_breaks(trim))
    throw ValidationError("decide_num_breaks: max_breaks " + std::to_string(max_breaks) +
                          " exceeds tabulated " + std::to_string(table.max_breaks(trim)) +
                          " at trimming " + std::to_string(trim));

  BreakDecision d;
  d.alpha = alpha;
  d.eps = eps;
  d.dmax = udmax_wdmax(F, max_breaks, eps, alpha, table, &lrc);
  d.udmax_reject = d.dmax.udmax > table.udmax(nu, trim, alpha);
  d.wdmax_reject = d.dmax.wdmax > table.wdmax(nu, trim, alpha);
  if (!d.udmax_reject && !d.wdmax_reject) {
    d.num_breaks = 0;
    return d;
  }
  // the Dmax gate established at least one break; the count is the smallest
  // null l >= 1 whose l-vs-(l+1) statistic is insignificant, capped at max_breaks
  d.num_breaks = max_breaks;
  for (int l = 1; l < max_breaks; ++l) {
    const double stat = sequential_test(F, l, eps, &lrc);
    d.sequential.push_back(stat);
    if (stat < table.sequential(nu, trim, alpha, l)) {
      d.num_breaks = l;
      break;
    }
  }
  return d;
}

} // namespace regimefactor
