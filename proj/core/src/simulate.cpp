#include "regimefactor/simulate.hpp"

#include <cmath>
#include <nlohmann/json.hpp>
#include <set>

#include "regimefactor/errors.hpp"
#include "regimefactor/markov.hpp"
#include "regimefactor/rng.hpp"

namespace regimefactor {

using nlohmann::json;

int DgpSpec::regime_count() const {
  if (driver == Driver::Breaks) return static_cast<int>(break_points.size()) + 1;
  return static_cast<int>(transition.rows());
}

void DgpSpec::validate() const {
  if (n_series < 1) throw ValidationError("dgp: n_series must be >= 1");
  if (periods < 2) throw ValidationError("dgp: periods must be >= 2");
  if (driver == Driver::Breaks) {
    int prev = -1;
    for (int b : break_points) {
      if (b <= prev) throw ValidationError("dgp: break points must be strictly increasing");
      if (b < 0 || b >= periods - 1)
        throw ValidationError("dgp: break point " + std::to_string(b) +
                              " outside [0, periods-2]");
      prev = b;
    }
  } else {
    if (transition.rows() < 1 || transition.rows() != transition.cols())
      throw ValidationError("dgp: transition matrix must be square");
    TransitionMatrix tm{transition};
    tm.validate(); // rejects non-stochastic rows
  }
  const int M = regime_count();
  if (static_cast<int>(factor_var.size()) != M)
    throw ValidationError("dgp: factor_var needs one entry per regime (" +
                          std::to_string(M) + ")");
  for (double v : factor_var)
    if (!(v > 0.0)) throw ValidationError("dgp: factor variances must be positive");
  if (!loading_flip.empty() && static_cast<int>(loading_flip.size()) != M)
    throw ValidationError("dgp: loading_flip needs one entry per regime");
  for (double f : loading_flip)
    if (f < 0.0 || f > 1.0) throw ValidationError("dgp: loading_flip outside [0,1]");
  if (loadings) {
    if (loadings->rows() != n_series || loadings->cols() != M)
      throw ValidationError("dgp: explicit loadings must be n_series x regimes");
  }
  if (!(noise_sd >= 0.0)) throw ValidationError("dgp: noise_sd must be >= 0");
  if (headline) {
    if (static_cast<int>(headline->alpha.size()) != M ||
        static_cast<int>(headline->beta.size()) != M)
      throw ValidationError("dgp: headline alpha/beta need one entry per regime");
    if (!(headline->noise_sd >= 0.0))
      throw ValidationError("dgp: headline noise_sd must be >= 0");
  }
}

DgpSpec dgp_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("dgp json: ") + e.what());
  }
  static const std::set<std::string> known = {
      "n_series", "periods", "start_date", "driver", "break_points", "transition",
      "factor_var", "loading_flip", "loadings", "noise_sd", "headline"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key()))
      throw ValidationError("dgp json: unknown key '" + it.key() + "'");

  DgpSpec s;
  try {
    if (j.contains("n_series")) s.n_series = j["n_series"].get<int>();
    if (j.contains("periods")) s.periods = j["periods"].get<int>();
    if (j.contains("start_date"))
      s.start_date = parse_year_month(j["start_date"].get<std::string>());
    if (j.contains("driver")) {
      const std::string d = j["driver"].get<std::string>();
      if (d == "breaks") s.driver = DgpSpec::Driver::Breaks;
      else if (d == "markov") s.driver = DgpSpec::Driver::Markov;
      else throw ValidationError("dgp json: driver must be 'breaks' or 'markov'");
    }
    if (j.contains("break_points"))
      s.break_points = j["break_points"].get<std::vector<int>>();
    if (j.contains("transition")) {
      const auto rows = j["transition"].get<std::vector<std::vector<double>>>();
      const auto M = rows.size();
      s.transition.resize(M, M);
      for (size_t i = 0; i < M; ++i) {
        if (rows[i].size() != M)
          throw ValidationError("dgp json: transition matrix not square");
        for (size_t k = 0; k < M; ++k) s.transition(i, k) = rows[i][k];
      }
    }
    if (j.contains("factor_var"))
      s.factor_var = j["factor_var"].get<std::vector<double>>();
    if (j.contains("loading_flip"))
      s.loading_flip = j["loading_flip"].get<std::vector<double>>();
    if (j.contains("loadings")) {
      const auto rows = j["loadings"].get<std::vector<std::vector<double>>>();
      Eigen::MatrixXd L(rows.size(), rows.empty() ? 0 : rows[0].size());
      for (size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<Eigen::Index>(rows[i].size()) != L.cols())
          throw ValidationError("dgp json: ragged loadings");
        for (Eigen::Index k = 0; k < L.cols(); ++k) L(i, k) = rows[i][k];
      }
      s.loadings = L;
    }
    if (j.contains("noise_sd")) s.noise_sd = j["noise_sd"].get<double>();
    if (j.contains("headline")) {
      DgpSpec::Headline h;
      const auto& hj = j["headline"];
      h.alpha = hj.at("alpha").get<std::vector<double>>();
      h.beta = hj.at("beta").get<std::vector<double>>();
      if (hj.contains("noise_sd")) h.noise_sd = hj["noise_sd"].get<double>();
      s.headline = h;
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("dgp json: ") + e.what());
  }
  s.validate();
  return s;
}

std::string dgp_to_json(const DgpSpec& s) {
  json j;
  j["n_series"] = s.n_series;
  j["periods"] = s.periods;
  j["start_date"] = to_string(s.start_date);
  j["driver"] = s.driver == DgpSpec::Driver::Breaks ? "breaks" : "markov";
  if (s.driver == DgpSpec::Driver::Breaks) {
    j["break_points"] = s.break_points;
  } else {
    std::vector<std::vector<double>> rows;
    for (Eigen::Index i = 0; i < s.transition.rows(); ++i) {
      std::vector<double> r;
      for (Eigen::Index k = 0; k < s.transition.cols(); ++k) r.push_back(s.transition(i, k));
      rows.push_back(r);
    }
    j["transition"] = rows;
  }
  j["factor_var"] = s.factor_var;
  if (!s.loading_flip.empty()) j["loading_flip"] = s.loading_flip;
  j["noise_sd"] = s.noise_sd;
  if (s.headline) {
    j["headline"] = {{"alpha", s.headline->alpha},
                     {"beta", s.headline->beta},
                     {"noise_sd", s.headline->noise_sd}};
  }
  return j.dump(2);
}

SimulatedPanel simulate_panel(const DgpSpec& spec, std::uint64_t seed) {
  spec.validate();
  Rng rng(seed);
  const int T = spec.periods;
  const int N = spec.n_series;
  const int M = spec.regime_count();

  // regime path
  std::vector<int> regimes(T);
  if (spec.driver == DgpSpec::Driver::Breaks) {
    int reg = 0;
    size_t next = 0;
    for (int t = 0; t < T; ++t) {
      regimes[t] = reg;
      if (next < spec.break_points.size() && t == spec.break_points[next]) {
        ++reg;
        ++next;
      }
    }
  } else {
    TransitionMatrix tm{spec.transition};
    const Eigen::VectorXd pi = ergodic_probs(tm);
    auto draw = [&rng](const Eigen::VectorXd& p) {
      const double u = rng.uniform();
      double acc = 0.0;
      for (Eigen::Index i = 0; i < p.size(); ++i) {
        acc += p(i);
        if (u < acc) return static_cast<int>(i);
      }
      return static_cast<int>(p.size() - 1);
    };
    regimes[0] = draw(pi);
    for (int t = 1; t < T; ++t)
      regimes[t] = draw(spec.transition.row(regimes[t - 1]).transpose());
  }

  // base loadings and per-regime sign flips
  Eigen::MatrixXd lambda(N, M);
  if (spec.loadings) {
    lambda = *spec.loadings;
  } else {
    Eigen::VectorXd base(N);
    for (int i = 0; i < N; ++i) base(i) = 1.0 + 0.25 * rng.normal();
    for (int j = 0; j < M; ++j) lambda.col(j) = base;
    if (!spec.loading_flip.empty()) {
      for (int j = 1; j < M; ++j) {
        const int flips = static_cast<int>(std::lround(spec.loading_flip[j] * N));
        for (int i = 0; i < flips; ++i) lambda(i, j) = -lambda(i, j);
      }
    }
  }

  // factors, noise, raw panel
  Eigen::VectorXd f(T);
  for (int t = 0; t < T; ++t)
    f(t) = std::sqrt(spec.factor_var[regimes[t]]) * rng.normal();
  Eigen::MatrixXd noise(T, N);
  for (int t = 0; t < T; ++t)
    for (int i = 0; i < N; ++i) noise(t, i) = spec.noise_sd * rng.normal();

  Eigen::MatrixXd X(T, N);
  for (int t = 0; t < T; ++t)
    X.row(t) = (lambda.col(regimes[t]) * f(t)).transpose() + noise.row(t);

  // optional headline series drawn before standardization (its own units)
  std::optional<InflationSeries> headline;
  if (spec.headline) {
    InflationSeries h;
    h.dates = month_range(spec.start_date, add_months(spec.start_date, T - 1));
    h.values.resize(T);
    for (int t = 0; t < T; ++t) {
      const int j = regimes[t];
      h.values(t) = spec.headline->alpha[j] + spec.headline->beta[j] * f(t) +
                    spec.headline->noise_sd * rng.normal();
    }
    headline = std::move(h);
  }

  // exact column standardization, absorbed into the stored truth:
  //   x_std = (x - m)/s = (lambda/s) f + (e - m)/s
  SimulatedPanel out;
  out.truth.factors = f;
  out.truth.regimes = regimes;
  out.truth.loadings = lambda;
  out.truth.noise = noise;
  out.truth.headline = std::move(headline);
  for (int t = 1; t < T; ++t)
    if (regimes[t] != regimes[t - 1]) out.truth.break_points.push_back(t - 1);

  PricePanel p;
  p.dates = month_range(spec.start_date, add_months(spec.start_date, T - 1));
  p.series.reserve(N);
  for (int i = 0; i < N; ++i) p.series.push_back("s" + std::to_string(i + 1));
  p.values.resize(T, N);
  std::vector<SeriesStats> stats(N);
  for (int i = 0; i < N; ++i) {
    const double m = X.col(i).mean();
    const double sd = std::sqrt((X.col(i).array() - m).square().sum() / (T - 1));
    if (!(sd > 0.0)) throw NumericError("simulate_panel: zero-variance series drawn");
    stats[i] = {m, sd};
    p.values.col(i) = (X.col(i).array() - m) / sd;
  }
  for (int i = 0; i < N; ++i) {
    out.truth.loadings.row(i) /= stats[i].sd;
    out.truth.noise.col(i) = (noise.col(i).array() - stats[i].mean) / stats[i].sd;
  }
  p.transform = Transform::Standardized;
  p.standardization = std::move(stats);
  p.standardization_window = std::make_pair(p.dates.front(), p.dates.back());
  out.panel = std::move(p);
  out.panel.validate();
  return out;
}

} // namespace regimefactor
