#include "regimefactor/serialize.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "regimefactor/errors.hpp"

namespace regimefactor {

using nlohmann::json;

namespace {

json vec_to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json mat_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

Eigen::VectorXd vec_from_json(const json& a) {
  if (!a.is_array()) throw ValidationError("expected a JSON array of numbers");
  Eigen::VectorXd v(a.size());
  for (size_t i = 0; i < a.size(); ++i) v(static_cast<Eigen::Index>(i)) = a[i].get<double>();
  return v;
}

Eigen::MatrixXd mat_from_json(const json& a) {
  if (!a.is_array() || a.empty()) throw ValidationError("expected a JSON array of rows");
  const size_t cols = a[0].size();
  Eigen::MatrixXd m(a.size(), cols);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != cols) throw ValidationError("ragged JSON matrix");
    for (size_t j = 0; j < cols; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a[i][j].get<double>();
  }
  return m;
}

json dates_to_json(const std::vector<YearMonth>& dates) {
  json a = json::array();
  for (const auto& d : dates) a.push_back(to_string(d));
  return a;
}

std::vector<YearMonth> dates_from_json(const json& a) {
  std::vector<YearMonth> out;
  for (const auto& s : a) out.push_back(parse_year_month(s.get<std::string>()));
  return out;
}

} // namespace

json to_json(const FactorEstimate& fe) {
  return json{{"r", fe.r},
              {"factors", mat_to_json(fe.factors)},
              {"loadings", mat_to_json(fe.loadings)},
              {"eigenvalues", vec_to_json(fe.eigenvalues)}};
}

json to_json(const LongRunCov& lrc) {
  return json{{"omega", mat_to_json(lrc.omega)},
              {"bandwidth", lrc.bandwidth},
              {"ridged", lrc.ridged},
              {"ridge", lrc.ridge}};
}

json to_json(const BreakModel& bm) {
  return json{{"break_indices", bm.break_indices},
              {"break_dates", dates_to_json(bm.break_dates)},
              {"ssne", bm.ssne},
              {"epsilon", bm.epsilon},
              {"min_segment", bm.min_segment},
              {"r_tilde", bm.r_tilde},
              {"num_segments", bm.break_indices.size() + 1}};
}

json to_json(const BreakDecision& bd) {
  return json{{"num_breaks", bd.num_breaks},
              {"udmax", bd.dmax.udmax},
              {"wdmax", bd.dmax.wdmax},
              {"supF", bd.dmax.sup_f},
              {"udmax_reject", bd.udmax_reject},
              {"wdmax_reject", bd.wdmax_reject},
              {"sequential", bd.sequential},
              {"alpha", bd.alpha},
              {"epsilon", bd.eps}};
}

BreakModel break_model_from_json(const json& j) {
  try {
    BreakModel bm;
    bm.break_indices = j.at("break_indices").get<std::vector<int>>();
    bm.break_dates = dates_from_json(j.at("break_dates"));
    bm.ssne = j.at("ssne").get<double>();
    bm.epsilon = j.at("epsilon").get<double>();
    bm.min_segment = j.at("min_segment").get<int>();
    bm.r_tilde = j.at("r_tilde").get<int>();
    return bm;
  } catch (const json::exception& ex) {
    throw ValidationError(std::string("break model json: ") + ex.what());
  }
}

json to_json(const MsModel& m) {
  json loadings = json::array();
  for (const auto& l : m.loadings) loadings.push_back(vec_to_json(l));
  return json{{"m_regimes", m.m_regimes},
              {"r", m.r},
              {"loadings", std::move(loadings)},
              {"factor_var", vec_to_json(m.factor_var)},
              {"noise_var", vec_to_json(m.noise_var)},
              {"transition", mat_to_json(m.transition.P)},
              {"ergodic", vec_to_json(m.ergodic)},
              {"initial_probs", vec_to_json(m.initial_probs)},
              {"filtered", mat_to_json(m.filtered)},
              {"smoothed", mat_to_json(m.smoothed)},
              {"regime", m.regime},
              {"factor_paths", mat_to_json(m.factor_paths)},
              {"regime_factor", vec_to_json(m.regime_factor)},
              {"loglik", m.loglik},
              {"loglik_trace", m.loglik_trace},
              {"iterations", m.iterations},
              {"converged", m.converged},
              {"best_start", m.best_start},
              {"seed", m.seed}};
}

MsModel ms_model_from_json(const json& j) {
  try {
    MsModel m;
    m.m_regimes = j.at("m_regimes").get<int>();
    m.r = j.at("r").get<int>();
    for (const auto& l : j.at("loadings")) m.loadings.push_back(vec_from_json(l));
    m.factor_var = vec_from_json(j.at("factor_var"));
    m.noise_var = vec_from_json(j.at("noise_var"));
    m.transition.P = mat_from_json(j.at("transition"));
    m.ergodic = vec_from_json(j.at("ergodic"));
    m.initial_probs = vec_from_json(j.at("initial_probs"));
    m.filtered = mat_from_json(j.at("filtered"));
    m.smoothed = mat_from_json(j.at("smoothed"));
    m.regime = j.at("regime").get<std::vector<int>>();
    m.factor_paths = mat_from_json(j.at("factor_paths"));
    m.regime_factor = vec_from_json(j.at("regime_factor"));
    m.loglik = j.at("loglik").get<double>();
    m.loglik_trace = j.at("loglik_trace").get<std::vector<double>>();
    m.iterations = j.at("iterations").get<int>();
    m.converged = j.at("converged").get<bool>();
    m.best_start = j.at("best_start").get<int>();
    m.seed = j.at("seed").get<std::uint64_t>();
    return m;
  } catch (const json::exception& ex) {
    throw ValidationError(std::string("markov model json: ") + ex.what());
  }
}

json to_json(const IndicatorSeries& s) {
  json coef = json::array();
  for (const auto& c : s.coef)
    coef.push_back(json{{"alpha", c.alpha},
                        {"beta", c.beta},
                        {"n_obs", c.n_obs},
                        {"resid_var", c.resid_var},
                        {"pooled_fallback", c.pooled_fallback}});
  return json{{"dates", dates_to_json(s.dates)},
              {"values", vec_to_json(s.values)},
              {"variant", to_string(s.variant)},
              {"coefficients", std::move(coef)},
              {"factor", vec_to_json(s.factor)},
              {"regime", s.regime},
              {"residuals", vec_to_json(s.residuals)},
              {"probability_weighted", s.probability_weighted}};
}

json to_json(const VarianceDiagnostic& d) {
  json pairs = json::array();
  for (const auto& p : d.pairs)
    pairs.push_back(json{{"a", p.a},
                         {"b", p.b},
                         {"ratio", p.ratio},
                         {"p_value", p.p_value},
                         {"dof_a", p.dof_a},
                         {"dof_b", p.dof_b}});
  return json{{"variances", d.variances}, {"pairs", std::move(pairs)}};
}

json to_json(const McsResult& r) {
  return json{{"models", r.models},
              {"p_values", r.p_values},
              {"elimination_order", r.elimination_order},
              {"in_set", r.in_set},
              {"alpha", r.alpha}};
}

void write_json_file(const json& j, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot open " + path + " for writing");
  f << j.dump(2) << "\n";
  if (!f) throw ValidationError("failed writing " + path);
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open " + path);
  try {
    return json::parse(f);
  } catch (const json::parse_error& ex) {
    throw ValidationError(path + ": " + ex.what());
  }
}

namespace {

std::ofstream open_csv(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot open " + path + " for writing");
  return f;
}

void csv_num(std::ofstream& f, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  f << buf;
}

} // namespace

void write_smoothed_probs_csv(const MsModel& m, const std::vector<YearMonth>& dates,
                              const std::string& path) {
  if (static_cast<Eigen::Index>(dates.size()) != m.smoothed.rows())
    throw ValidationError("write_smoothed_probs_csv: date count mismatch");
  auto f = open_csv(path);
  f << "date";
  for (int j = 1; j <= m.m_regimes; ++j) f << ",prob_regime_" << j;
  f << "\n";
  for (size_t t = 0; t < dates.size(); ++t) {
    f << to_string(dates[t]);
    for (int j = 0; j < m.m_regimes; ++j) {
      f << ',';
      csv_num(f, m.smoothed(static_cast<Eigen::Index>(t), j));
    }
    f << "\n";
  }
}

void write_indicator_csv(const IndicatorSeries& s, const InflationSeries& headline,
                         const std::string& path) {
  if (headline.dates != s.dates)
    throw ValidationError("write_indicator_csv: headline months must match the indicator");
  auto f = open_csv(path);
  f << "date,headline,indicator,regime,alpha,beta\n";
  for (size_t t = 0; t < s.dates.size(); ++t) {
    const int g = s.regime[t];
    f << to_string(s.dates[t]) << ',';
    csv_num(f, headline.values(static_cast<Eigen::Index>(t)));
    f << ',';
    csv_num(f, s.values(static_cast<Eigen::Index>(t)));
    f << ',' << g << ',';
    csv_num(f, s.coef[g].alpha);
    f << ',';
    csv_num(f, s.coef[g].beta);
    f << "\n";
  }
}

void write_fan_csv(const std::vector<FanRow>& rows, const std::string& path) {
  auto f = open_csv(path);
  f << "vintage,date,value\n";
  for (const auto& r : rows) {
    f << to_string(r.vintage) << ',' << to_string(r.date) << ',';
    csv_num(f, r.value);
    f << "\n";
  }
}

void write_loss_csv(const LossPanel& losses, const std::string& path) {
  auto f = open_csv(path);
  f << "target";
  for (const auto& m : losses.models) f << ',' << m;
  f << "\n";
  for (size_t t = 0; t < losses.targets.size(); ++t) {
    f << to_string(losses.targets[t]);
    for (Eigen::Index k = 0; k < losses.losses.cols(); ++k) {
      f << ',';
      csv_num(f, losses.losses(static_cast<Eigen::Index>(t), k));
    }
    f << "\n";
  }
}

} // namespace regimefactor
