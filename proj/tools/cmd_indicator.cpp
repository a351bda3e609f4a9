#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cli_common.hpp"
#include "regimefactor/breaks.hpp"
#include "regimefactor/factor.hpp"
#include "regimefactor/indicator.hpp"
#include "regimefactor/markov.hpp"
#include "regimefactor/serialize.hpp"

namespace rfcli {

namespace {

using namespace regimefactor;

struct Params {
  std::string config;
  std::string input;
  std::string layout = "wide";
  std::string rate = "yoy";
  std::string headline;
  std::string variant = "baseline";
  double epsilon = 0.10;
  int max_breaks = 5;
  double alpha = 0.05;
  int breaks = -1;
  int regimes = 2;
  int starts = 10;
  int max_iter = 300;
  double tol = 1e-8;
  std::uint64_t seed = EmOptions{}.seed;
  bool weighted = false;
  std::string out;
  int threads = 0;
};

void run(const CLI::App& cmd, const Params& p) {
  const json cfg = p.config.empty() ? json::object() : load_config(cmd, p.config);
  Options opts(cmd, cfg);

  const std::string input = opts.require<std::string>("input", p.input);
  const std::string layout = opts.get<std::string>("layout", p.layout, "wide");
  const std::string rate = opts.get<std::string>("rate", p.rate, "yoy");
  const std::string headline_path = opts.require<std::string>("headline", p.headline);
  const std::string variant = opts.get<std::string>("variant", p.variant, "baseline");
  const std::string out = ensure_out_dir(opts.require<std::string>("out", p.out));
  resolve_threads(opts, p.threads);

  if (variant != "baseline" && variant != "sc" && variant != "ms")
    throw ValidationError("variant must be 'baseline', 'sc' or 'ms', got '" + variant + "'");

  const PricePanel rates = load_rate_panel(input, layout, rate);
  const InflationSeries headline = load_headline(headline_path, rates);
  const PricePanel std_panel = standardize(rates);
  const Eigen::MatrixXd& X = std_panel.values;

  IndicatorSeries ind;
  std::optional<VarianceDiagnostic> diag;
  std::vector<std::string> outputs{"indicator.json", "indicator.csv"};

  if (variant == "baseline") {
    const FactorEstimate fe = estimate_factors(X, 1);
    ind = fit_baseline(headline, fe.factors.col(0));
  } else if (variant == "sc") {
    const double epsilon = opts.get<double>("epsilon", p.epsilon, 0.10);
    const int max_breaks = opts.get<int>("max-breaks", p.max_breaks, 5);
    const double alpha = opts.get<double>("alpha", p.alpha, 0.05);
    const int fixed = opts.get<int>("breaks", p.breaks, -1);

    const FactorEstimate fe = estimate_factors(X, 1);
    const LongRunCov lrc = battery_long_run_cov(fe.factors);
    int m = fixed;
    if (m < 0)
      m = decide_num_breaks(fe.factors, max_breaks, epsilon, alpha,
                            CriticalValueTable::builtin(), &lrc)
              .num_breaks;
    BreakModel bm;
    if (m >= 1) {
      bm = dp_break_search(fe.factors, m, epsilon, &lrc);
    } else {
      bm.ssne = ssne(fe.factors, {}, lrc);
      bm.epsilon = epsilon;
      bm.min_segment = static_cast<int>(X.rows());
      bm.r_tilde = 1;
    }
    for (const int b : bm.break_indices) bm.break_dates.push_back(std_panel.dates[b]);
    fit_segment_factors(X, bm, 1);
    ind = fit_sc(headline, bm);
    diag = regime_variance_diagnostic(bm);
    write_json_file(to_json(bm), out_file(out, "breaks.json"));
    outputs.push_back("breaks.json");
  } else {
    const int regimes = opts.get<int>("regimes", p.regimes, 2);
    EmOptions eo;
    eo.n_starts = opts.get<int>("starts", p.starts, EmOptions{}.n_starts);
    eo.max_iter = opts.get<int>("max-iter", p.max_iter, EmOptions{}.max_iter);
    eo.tol = opts.get<double>("tol", p.tol, EmOptions{}.tol);
    eo.seed = opts.get<std::uint64_t>("seed", p.seed, EmOptions{}.seed);
    const bool weighted = opts.get<bool>("weighted", p.weighted, false);

    const MsModel model = em_fit(X, regimes, 1, eo);
    ind = fit_ms(headline, model, weighted);
    diag = regime_variance_diagnostic(model);
    write_json_file(to_json(model), out_file(out, "msmodel.json"));
    write_smoothed_probs_csv(model, std_panel.dates, out_file(out, "probabilities.csv"));
    outputs.push_back("msmodel.json");
    outputs.push_back("probabilities.csv");
  }

  json ij{{"indicator", to_json(ind)}};
  ij["variance_diagnostic"] = diag ? to_json(*diag) : json(nullptr);
  write_json_file(ij, out_file(out, "indicator.json"));
  write_indicator_csv(ind, headline, out_file(out, "indicator.csv"));
  write_manifest(out, "indicator", opts.resolved(), outputs);

  json coefs = json::array();
  for (const RegimeCoef& c : ind.coef)
    coefs.push_back(json{{"alpha", c.alpha},
                         {"beta", c.beta},
                         {"n_obs", c.n_obs},
                         {"pooled_fallback", c.pooled_fallback}});
  print_summary(json{{"command", "indicator"},
                     {"variant", variant},
                     {"coefficients", coefs}});
}

} // namespace

void register_indicator(CLI::App& app) {
  auto p = std::make_shared<Params>();
  CLI::App* cmd = app.add_subcommand(
      "indicator", "Core-inflation indicator from the headline regression");
  cmd->add_option("--config", p->config, "JSON config file; flags override its keys");
  cmd->add_option("--input", p->input, "rate panel CSV");
  cmd->add_option("--layout", p->layout, "input CSV layout: wide|long");
  cmd->add_option("--rate", p->rate, "rate type of the input panel: yoy|mom");
  cmd->add_option("--headline", p->headline, "headline rate CSV (date,value)");
  cmd->add_option("--variant", p->variant, "indicator variant: baseline|sc|ms");
  cmd->add_option("--epsilon", p->epsilon, "sc: trimming, minimum segment share");
  cmd->add_option("--max-breaks", p->max_breaks, "sc: largest break count considered");
  cmd->add_option("--alpha", p->alpha, "sc: test level for the break decision");
  cmd->add_option("--breaks", p->breaks, "sc: fixed break count; -1 decides by testing");
  cmd->add_option("--regimes", p->regimes, "ms: number of regimes");
  cmd->add_option("--starts", p->starts, "ms: random EM starts");
  cmd->add_option("--max-iter", p->max_iter, "ms: EM iteration cap");
  cmd->add_option("--tol", p->tol, "ms: log-likelihood convergence increment");
  cmd->add_option("--seed", p->seed, "ms: random seed");
  cmd->add_flag("--weighted", p->weighted, "ms: probability-weighted regression");
  cmd->add_option("--out", p->out, "output directory");
  cmd->add_option("--threads", p->threads, "worker threads");
  cmd->callback([p, cmd] { run(*cmd, *p); });
}

} // namespace rfcli
