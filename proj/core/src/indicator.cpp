#include "regimefactor/indicator.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "regimefactor/errors.hpp"

namespace regimefactor {

std::string to_string(IndicatorVariant v) {
  switch (v) {
    case IndicatorVariant::Baseline: return "baseline";
    case IndicatorVariant::StructuralChange: return "structural-change";
    case IndicatorVariant::MarkovSwitching: return "markov-switching";
  }
  return "unknown";
}

namespace {

// OLS of y on (1, x) over the given rows; resid_var uses n-2 dof
RegimeCoef coef_from_rows(const Eigen::VectorXd& y, const Eigen::VectorXd& x,
                          const std::vector<int>& rows) {
  const int n = static_cast<int>(rows.size());
  Eigen::MatrixXd X(n, 2);
  Eigen::VectorXd yy(n);
  for (int i = 0; i < n; ++i) {
    X(i, 0) = 1.0;
    X(i, 1) = x(rows[i]);
    yy(i) = y(rows[i]);
  }
  const OlsFit f = ols(X, yy);
  RegimeCoef c;
  c.alpha = f.coef(0);
  c.beta = f.coef(1);
  c.n_obs = n;
  c.resid_var = n > 2 ? f.residuals.squaredNorm() / (n - 2) : 0.0;
  return c;
}

std::vector<int> all_rows(Eigen::Index T) {
  std::vector<int> rows(T);
  for (Eigen::Index t = 0; t < T; ++t) rows[t] = static_cast<int>(t);
  return rows;
}

void check_aligned(const InflationSeries& headline, Eigen::Index T,
                   const char* where) {
  headline.validate();
  if (headline.values.size() != T)
    throw ValidationError(std::string(where) + ": headline has " +
                          std::to_string(headline.values.size()) +
                          " months, factor data " + std::to_string(T));
}

// segment bounds [a,b] implied by break indices over T rows
std::vector<std::pair<int, int>> segment_bounds(const std::vector<int>& breaks,
                                                Eigen::Index T) {
  std::vector<std::pair<int, int>> seg;
  int a = 0;
  for (size_t s = 0; s <= breaks.size(); ++s) {
    const int b = s < breaks.size() ? breaks[s] : static_cast<int>(T) - 1;
    if (b < a) throw ValidationError("invalid break indices");
    seg.emplace_back(a, b);
    a = b + 1;
  }
  return seg;
}

// stitched per-segment factor path + shape checks shared by both sc fits
Eigen::VectorXd sc_factor_path(const BreakModel& model, Eigen::Index T,
                               const std::vector<std::pair<int, int>>& seg) {
  if (model.segment_factors.empty())
    throw ValidationError("fit_sc: segment factors missing; run fit_segment_factors first");
  if (model.segment_factors.size() != seg.size())
    throw ValidationError("fit_sc: segment factor count does not match break indices");
  Eigen::VectorXd path(T);
  for (size_t s = 0; s < seg.size(); ++s) {
    const auto& fe = model.segment_factors[s];
    const int len = seg[s].second - seg[s].first + 1;
    if (fe.r != 1)
      throw ValidationError("fit_sc: indicator regression needs single-factor segments");
    if (fe.factors.rows() != len)
      throw ValidationError("fit_sc: segment " + std::to_string(s) +
                            " factor length mismatch");
    if (len < 3)
      throw ValidationError("fit_sc: segment " + std::to_string(s) +
                            " has fewer than 3 observations");
    path.segment(seg[s].first, len) = fe.factors.col(0);
  }
  return path;
}

} // namespace

IndicatorSeries fit_baseline(const InflationSeries& headline,
                             const Eigen::VectorXd& factor) {
  check_aligned(headline, factor.size(), "fit_baseline");
  if (!factor.allFinite()) throw ValidationError("fit_baseline: non-finite factor");
  if (factor.maxCoeff() - factor.minCoeff() < 1e-12)
    throw ValidationError("fit_baseline: factor is constant");

  IndicatorSeries out;
  out.dates = headline.dates;
  out.variant = IndicatorVariant::Baseline;
  out.factor = factor;
  out.regime.assign(factor.size(), 0);
  out.coef = {coef_from_rows(headline.values, factor, all_rows(factor.size()))};
  out.values = out.coef[0].alpha + out.coef[0].beta * factor.array();
  out.residuals = headline.values - out.values;
  return out;
}

IndicatorSeries fit_sc(const InflationSeries& headline, const BreakModel& model) {
  const Eigen::Index T = headline.values.size();
  check_aligned(headline, T, "fit_sc");
  const auto seg = segment_bounds(model.break_indices, T);
  const Eigen::VectorXd path = sc_factor_path(model, T, seg);

  IndicatorSeries out;
  out.dates = headline.dates;
  out.variant = IndicatorVariant::StructuralChange;
  out.factor = path;
  out.values.resize(T);
  out.regime.resize(T);
  for (size_t s = 0; s < seg.size(); ++s) {
    std::vector<int> rows;
    for (int t = seg[s].first; t <= seg[s].second; ++t) rows.push_back(t);
    RegimeCoef c = coef_from_rows(headline.values, path, rows);
    for (int t : rows) {
      out.values(t) = c.alpha + c.beta * path(t);
      out.regime[t] = static_cast<int>(s);
    }
    out.coef.push_back(c);
  }
  out.residuals = headline.values - out.values;
  return out;
}

IndicatorSeries fit_sc_stacked(const InflationSeries& headline,
                               const BreakModel& model) {
  const Eigen::Index T = headline.values.size();
  check_aligned(headline, T, "fit_sc");
  const auto seg = segment_bounds(model.break_indices, T);
  const Eigen::VectorXd path = sc_factor_path(model, T, seg);
  const int K = static_cast<int>(seg.size());

  // block-diagonal design: per-segment intercept and factor columns
  Eigen::MatrixXd X = Eigen::MatrixXd::Zero(T, 2 * K);
  for (int s = 0; s < K; ++s)
    for (int t = seg[s].first; t <= seg[s].second; ++t) {
      X(t, 2 * s) = 1.0;
      X(t, 2 * s + 1) = path(t);
    }
  const OlsFit f = ols(X, headline.values);

  IndicatorSeries out;
  out.dates = headline.dates;
  out.variant = IndicatorVariant::StructuralChange;
  out.factor = path;
  out.values = X * f.coef;
  out.residuals = headline.values - out.values;
  out.regime.resize(T);
  for (int s = 0; s < K; ++s) {
    RegimeCoef c;
    c.alpha = f.coef(2 * s);
    c.beta = f.coef(2 * s + 1);
    c.n_obs = seg[s].second - seg[s].first + 1;
    double ssr = 0.0;
    for (int t = seg[s].first; t <= seg[s].second; ++t) {
      ssr += out.residuals(t) * out.residuals(t);
      out.regime[t] = s;
    }
    c.resid_var = c.n_obs > 2 ? ssr / (c.n_obs - 2) : 0.0;
    out.coef.push_back(c);
  }
  return out;
}

IndicatorSeries fit_ms(const InflationSeries& headline, const MsModel& model,
                       bool weighted) {
  const Eigen::Index T = model.smoothed.rows();
  check_aligned(headline, T, "fit_ms");
  const int M = model.m_regimes;
  if (M < 1 || model.factor_paths.cols() != M ||
      static_cast<Eigen::Index>(model.regime.size()) != T)
    throw ValidationError("fit_ms: model is incomplete");

  IndicatorSeries out;
  out.dates = headline.dates;
  out.variant = IndicatorVariant::MarkovSwitching;
  out.factor = model.regime_factor;
  out.regime = model.regime;
  out.probability_weighted = weighted;
  out.coef.resize(M);

  std::vector<std::vector<int>> rows_of(M);
  for (Eigen::Index t = 0; t < T; ++t) rows_of[model.regime[t]].push_back(static_cast<int>(t));

  // pooled coefficients on the stitched factor, used as small-regime fallback
  RegimeCoef pooled;
  bool have_pooled = false;
  auto pooled_coef = [&]() -> const RegimeCoef& {
    if (!have_pooled) {
      pooled = coef_from_rows(headline.values, model.regime_factor, all_rows(T));
      have_pooled = true;
    }
    return pooled;
  };

  for (int j = 0; j < M; ++j) {
    RegimeCoef c;
    if (!weighted) {
      if (rows_of[j].size() >= 3) {
        c = coef_from_rows(headline.values, model.factor_paths.col(j), rows_of[j]);
      } else {
        c = pooled_coef();
        c.pooled_fallback = true;
        c.n_obs = static_cast<int>(rows_of[j].size());
      }
    } else {
      const Eigen::VectorXd w = model.smoothed.col(j);
      const double wsum = w.sum();
      if (wsum >= 3.0) {
        // weighted least squares via sqrt-weight scaling
        Eigen::MatrixXd X(T, 2);
        Eigen::VectorXd yy(T);
        for (Eigen::Index t = 0; t < T; ++t) {
          const double sw = std::sqrt(std::max(w(t), 0.0));
          X(t, 0) = sw;
          X(t, 1) = sw * model.factor_paths(t, j);
          yy(t) = sw * headline.values(t);
        }
        const OlsFit f = ols(X, yy);
        c.alpha = f.coef(0);
        c.beta = f.coef(1);
        c.n_obs = static_cast<int>(rows_of[j].size());
        c.resid_var = wsum > 2.0 ? f.residuals.squaredNorm() / (wsum - 2.0) : 0.0;
      } else {
        c = pooled_coef();
        c.pooled_fallback = true;
        c.n_obs = static_cast<int>(rows_of[j].size());
      }
    }
    out.coef[j] = c;
  }

  out.values.resize(T);
  if (!weighted) {
    for (Eigen::Index t = 0; t < T; ++t) {
      const int g = model.regime[t];
      out.values(t) = out.coef[g].alpha + out.coef[g].beta * model.factor_paths(t, g);
    }
  } else {
    // probability-weighted mixture of the per-regime fits
    for (Eigen::Index t = 0; t < T; ++t) {
      double v = 0.0;
      for (int j = 0; j < M; ++j)
        v += model.smoothed(t, j) *
             (out.coef[j].alpha + out.coef[j].beta * model.factor_paths(t, j));
      out.values(t) = v;
    }
  }
  out.residuals = headline.values - out.values;
  return out;
}

VarianceDiagnostic regime_variance_diagnostic(const std::vector<double>& variances,
                                              const std::vector<double>& dof) {
  if (variances.size() != dof.size())
    throw ValidationError("regime_variance_diagnostic: variances/dof size mismatch");
  VarianceDiagnostic out;
  out.variances = variances;
  const int K = static_cast<int>(variances.size());
  for (int i = 0; i < K; ++i)
    for (int j = i + 1; j < K; ++j) {
      VarianceDiagnostic::Pair p;
      const bool i_larger = variances[i] >= variances[j];
      p.a = i_larger ? i : j;
      p.b = i_larger ? j : i;
      const double vb = variances[p.b];
      p.dof_a = dof[p.a];
      p.dof_b = dof[p.b];
      if (vb > 0.0) {
        p.ratio = variances[p.a] / vb;
        p.p_value = std::min(1.0, 2.0 * f_sf(p.ratio, p.dof_a, p.dof_b));
      } else if (variances[p.a] > 0.0) {
        p.ratio = std::numeric_limits<double>::infinity();
        p.p_value = 0.0;
      } else {
        p.ratio = 1.0;
        p.p_value = 1.0;
      }
      out.pairs.push_back(p);
    }
  return out;
}

VarianceDiagnostic regime_variance_diagnostic(const BreakModel& model) {
  if (model.segment_factors.empty())
    throw ValidationError("regime_variance_diagnostic: run fit_segment_factors first");
  std::vector<double> v, dof;
  for (const auto& fe : model.segment_factors) {
    v.push_back(fe.eigenvalues(0)); // variance scale of the common component
    dof.push_back(static_cast<double>(fe.factors.rows() - 1));
  }
  return regime_variance_diagnostic(v, dof);
}

VarianceDiagnostic regime_variance_diagnostic(const MsModel& model) {
  std::vector<double> v, dof;
  for (int j = 0; j < model.m_regimes; ++j) {
    v.push_back(model.factor_var(j));
    dof.push_back(std::max(1.0, model.smoothed.col(j).sum() - 1.0));
  }
  return regime_variance_diagnostic(v, dof);
}

} // namespace regimefactor
