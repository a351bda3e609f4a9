#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cli_common.hpp"
#include "regimefactor/breaks.hpp"
#include "regimefactor/factor.hpp"
#include "regimefactor/serialize.hpp"

namespace rfcli {

namespace {

using namespace regimefactor;

struct Params {
  std::string config;
  std::string input;
  std::string layout = "wide";
  std::string rate = "yoy";
  int r_tilde = 1;
  double epsilon = 0.10;
  int max_breaks = 5;
  double alpha = 0.05;
  int breaks = -1;
  int bandwidth = 0;
  std::string out;
  int threads = 0;
};

void run(const CLI::App& cmd, const Params& p) {
  const json cfg = p.config.empty() ? json::object() : load_config(cmd, p.config);
  Options opts(cmd, cfg);

  const std::string input = opts.require<std::string>("input", p.input);
  const std::string layout = opts.get<std::string>("layout", p.layout, "wide");
  const std::string rate = opts.get<std::string>("rate", p.rate, "yoy");
  const int r_tilde = opts.get<int>("r-tilde", p.r_tilde, 1);
  const double epsilon = opts.get<double>("epsilon", p.epsilon, 0.10);
  const int max_breaks = opts.get<int>("max-breaks", p.max_breaks, 5);
  const double alpha = opts.get<double>("alpha", p.alpha, 0.05);
  const int fixed = opts.get<int>("breaks", p.breaks, -1);
  const int bandwidth = opts.get<int>("bandwidth", p.bandwidth, 0);
  const std::string out = ensure_out_dir(opts.require<std::string>("out", p.out));
  resolve_threads(opts, p.threads);

  const PricePanel rates = load_rate_panel(input, layout, rate);
  const PricePanel std_panel = standardize(rates);
  const Eigen::MatrixXd& X = std_panel.values;

  const FactorEstimate fe = estimate_factors(X, r_tilde);
  const LongRunCov lrc = battery_long_run_cov(
      fe.factors, bandwidth > 0 ? std::optional<int>(bandwidth) : std::nullopt);

  std::optional<BreakDecision> decision;
  int m = fixed;
  if (m < 0) {
    decision = decide_num_breaks(fe.factors, max_breaks, epsilon, alpha,
                                 CriticalValueTable::builtin(), &lrc);
    m = decision->num_breaks;
  }

  BreakModel model;
  if (m >= 1) {
    model = dp_break_search(fe.factors, m, epsilon, &lrc);
  } else {
    model.ssne = ssne(fe.factors, {}, lrc);
    model.epsilon = epsilon;
    model.min_segment = static_cast<int>(X.rows());
    model.r_tilde = r_tilde;
  }
  for (const int b : model.break_indices) model.break_dates.push_back(std_panel.dates[b]);
  fit_segment_factors(X, model, r_tilde);

  json bj{{"model", to_json(model)}, {"long_run_cov", to_json(lrc)}};
  bj["decision"] = decision ? to_json(*decision) : json(nullptr);
  write_json_file(bj, out_file(out, "breaks.json"));
  write_manifest(out, "breaks", opts.resolved(), {"breaks.json"});

  json dates = json::array();
  for (const YearMonth& d : model.break_dates) dates.push_back(to_string(d));
  json summary{{"command", "breaks"}, {"num_breaks", m}, {"break_dates", dates}};
  if (decision) {
    summary["udmax"] = decision->dmax.udmax;
    summary["wdmax"] = decision->dmax.wdmax;
    summary["udmax_reject"] = decision->udmax_reject;
    summary["wdmax_reject"] = decision->wdmax_reject;
  }
  print_summary(summary);
}

} // namespace

void register_breaks(CLI::App& app) {
  auto p = std::make_shared<Params>();
  CLI::App* cmd = app.add_subcommand(
      "breaks", "Structural-break battery and search on the factor moment series");
  cmd->add_option("--config", p->config, "JSON config file; flags override its keys");
  cmd->add_option("--input", p->input, "rate panel CSV");
  cmd->add_option("--layout", p->layout, "input CSV layout: wide|long");
  cmd->add_option("--rate", p->rate, "rate type of the input panel: yoy|mom");
  cmd->add_option("--r-tilde", p->r_tilde, "factor count behind the moment series");
  cmd->add_option("--epsilon", p->epsilon, "trimming: minimum segment share");
  cmd->add_option("--max-breaks", p->max_breaks, "largest break count considered");
  cmd->add_option("--alpha", p->alpha, "test level for the decision battery");
  cmd->add_option("--breaks", p->breaks, "fixed break count; -1 decides by testing");
  cmd->add_option("--bandwidth", p->bandwidth, "HAC bandwidth; 0 = automatic");
  cmd->add_option("--out", p->out, "output directory");
  cmd->add_option("--threads", p->threads, "worker threads");
  cmd->callback([p, cmd] { run(*cmd, *p); });
}

} // namespace rfcli
