#include <algorithm>
#include <cctype>
#include <cmath>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cli_common.hpp"
#include "regimefactor/evaluate.hpp"
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
  std::string models = "M1,SC";
  std::string first_vintage;
  std::string last_vintage;
  std::string horizons = "1,3,6,12";
  std::string sample;
  double mcs_alpha = 0.25;
  std::string mcs_stat = "tmax";
  int n_boot = 5000;
  int block_length = 0;
  bool skip_mcs = false;
  double epsilon = 0.10;
  int max_breaks = 5;
  double alpha = 0.05;
  int breaks = -1;
  int starts = 10;
  int max_iter = 300;
  double tol = 1e-8;
  std::uint64_t seed = EmOptions{}.seed;
  std::string out;
  int threads = 0;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (const char c : s) {
    if (c == ',') {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

std::vector<int> parse_horizons(const std::string& s) {
  std::vector<int> hs;
  for (const std::string& part : split_list(s)) {
    try {
      size_t pos = 0;
      const int h = std::stoi(part, &pos);
      if (pos != part.size() || h < 0) throw std::invalid_argument(part);
      hs.push_back(h);
    } catch (const std::exception&) {
      throw ValidationError("horizons: expected non-negative integers, got '" + part + "'");
    }
  }
  if (hs.empty()) throw ValidationError("horizons: empty list");
  return hs;
}

std::pair<YearMonth, YearMonth> parse_sample(const std::string& s,
                                             const YearMonth& fv, const YearMonth& lv) {
  if (s.empty()) return {fv, lv};
  const size_t colon = s.find(':');
  if (colon != std::string::npos)
    return {parse_year_month(s.substr(0, colon)), parse_year_month(s.substr(colon + 1))};
  for (const SamplePreset& p : sample_presets())
    if (p.name == s) return {p.first, p.last};
  throw ValidationError("sample: expected 'YYYY-MM:YYYY-MM' or a preset name, got '" + s + "'");
}

McsStatistic parse_stat(const std::string& s) {
  if (s == "tmax") return McsStatistic::Tmax;
  if (s == "tr") return McsStatistic::TR;
  throw ValidationError("mcs-stat must be 'tmax' or 'tr', got '" + s + "'");
}

void run(const CLI::App& cmd, const Params& p) {
  const json cfg = p.config.empty() ? json::object() : load_config(cmd, p.config);
  Options opts(cmd, cfg);

  const std::string input = opts.require<std::string>("input", p.input);
  const std::string layout = opts.get<std::string>("layout", p.layout, "wide");
  const std::string rate = opts.get<std::string>("rate", p.rate, "yoy");
  const std::string headline_path = opts.require<std::string>("headline", p.headline);
  const std::vector<std::string> model_names =
      split_list(opts.get<std::string>("models", p.models, "M1,SC"));
  const YearMonth fv = parse_year_month(opts.require<std::string>("first-vintage", p.first_vintage));
  const YearMonth lv = parse_year_month(opts.require<std::string>("last-vintage", p.last_vintage));
  const std::vector<int> horizons =
      parse_horizons(opts.get<std::string>("horizons", p.horizons, "1,3,6,12"));
  const std::pair<YearMonth, YearMonth> sample =
      parse_sample(opts.get<std::string>("sample", p.sample, ""), fv, lv);
  const double mcs_alpha = opts.get<double>("mcs-alpha", p.mcs_alpha, 0.25);
  const std::string mcs_stat = opts.get<std::string>("mcs-stat", p.mcs_stat, "tmax");
  const bool skip_mcs = opts.get<bool>("skip-mcs", p.skip_mcs, false);
  McsOptions mo;
  mo.n_boot = opts.get<int>("n-boot", p.n_boot, 5000);
  mo.block_length = opts.get<int>("block-length", p.block_length, 0);
  const std::uint64_t seed = opts.get<std::uint64_t>("seed", p.seed, EmOptions{}.seed);
  mo.seed = seed;
  const std::string out = ensure_out_dir(opts.require<std::string>("out", p.out));
  resolve_threads(opts, p.threads);

  if (model_names.empty()) throw ValidationError("models: empty list");
  if (std::set<std::string>(model_names.begin(), model_names.end()).size() !=
      model_names.size())
    throw ValidationError("models: duplicate names");

  std::vector<EvalModelSpec> specs;
  for (const std::string& name : model_names) {
    EvalModelSpec s = EvalModelSpec::preset(name);
    s.epsilon = opts.get<double>("epsilon", p.epsilon, 0.10);
    s.max_breaks = opts.get<int>("max-breaks", p.max_breaks, 5);
    s.alpha = opts.get<double>("alpha", p.alpha, 0.05);
    s.fixed_breaks = opts.get<int>("breaks", p.breaks, -1);
    s.em.n_starts = opts.get<int>("starts", p.starts, EmOptions{}.n_starts);
    s.em.max_iter = opts.get<int>("max-iter", p.max_iter, EmOptions{}.max_iter);
    s.em.tol = opts.get<double>("tol", p.tol, EmOptions{}.tol);
    specs.push_back(std::move(s));
  }

  // evaluation windows, clipped to what the vintage range can serve
  const std::pair<YearMonth, YearMonth> rev_sample{std::max(sample.first, fv),
                                                   std::min(sample.second, lv)};
  if (rev_sample.first > rev_sample.second)
    throw ValidationError("sample does not overlap the vintage range");
  std::vector<std::pair<YearMonth, YearMonth>> windows;
  for (const int h : horizons) {
    const std::pair<YearMonth, YearMonth> w{std::max(sample.first, add_months(fv, h)),
                                            std::min(sample.second, lv)};
    if (w.first > w.second)
      throw ValidationError("horizon " + std::to_string(h) +
                            " leaves no targets inside the sample");
    if (!skip_mcs) {
      if (specs.size() < 2)
        throw ValidationError("mcs needs at least 2 models; pass --skip-mcs to drop it");
      if (months_between(w.first, w.second) + 1 < 20)
        throw ValidationError("mcs needs at least 20 targets at horizon " +
                              std::to_string(h) + "; pass --skip-mcs to drop it");
    }
    windows.push_back(w);
  }

  const PricePanel rates = load_rate_panel(input, layout, rate);
  const InflationSeries headline = load_headline(headline_path, rates);

  std::vector<VintageRun> runs;
  for (const EvalModelSpec& spec : specs) {
    VintageRun run = run_vintages(rates, headline, spec, fv, lv, seed);
    for (const VintageEntry& e : run.entries)
      if (!e.series)
        throw NumericError("model " + spec.name + ", vintage " + to_string(e.vintage) +
                           ": " + e.error);
    runs.push_back(std::move(run));
  }

  std::vector<std::string> outputs{"evaluation.json"};
  json revisions = json::object();
  for (const VintageRun& run : runs) {
    revisions[run.model] =
        json{{"rmsd", revision_stats(run, rev_sample, RevisionMetric::RMSD)},
             {"mad", revision_stats(run, rev_sample, RevisionMetric::MAD)}};
    const std::string fan_name = "fan_" + run.model + ".csv";
    write_fan_csv(vintage_fan(run), out_file(out, fan_name));
    outputs.push_back(fan_name);
    const std::string rt_name = "realtime_" + run.model + ".csv";
    write_series_csv(run.realtime_path(), out_file(out, rt_name), "indicator");
    outputs.push_back(rt_name);
  }

  json rmsfe_json = json::object();
  for (const VintageRun& run : runs) rmsfe_json[run.model] = json::object();
  json mcs_json = json::object();
  json survivors_json = json::object();

  for (size_t i = 0; i < horizons.size(); ++i) {
    const int h = horizons[i];
    const std::string key = std::to_string(h);
    const LossPanel lp = build_loss_panel(runs, headline, h, windows[i]);
    const std::string loss_name = "losses_h" + key + ".csv";
    write_loss_csv(lp, out_file(out, loss_name));
    outputs.push_back(loss_name);
    for (size_t k = 0; k < runs.size(); ++k)
      rmsfe_json[lp.models[k]][key] = std::sqrt(lp.losses.col(static_cast<Eigen::Index>(k)).mean());
    if (!skip_mcs) {
      const McsResult res = mcs(lp, mcs_alpha, parse_stat(mcs_stat), mo);
      mcs_json[key] = to_json(res);
      json names = json::array();
      for (size_t k = 0; k < res.models.size(); ++k)
        if (res.in_set[k]) names.push_back(res.models[k]);
      survivors_json[key] = names;
    }
  }

  json ej{{"models", model_names},
          {"first_vintage", to_string(fv)},
          {"last_vintage", to_string(lv)},
          {"sample", {to_string(rev_sample.first), to_string(rev_sample.second)}},
          {"horizons", horizons},
          {"revisions", revisions},
          {"rmsfe", rmsfe_json}};
  ej["mcs"] = skip_mcs ? json(nullptr) : mcs_json;
  write_json_file(ej, out_file(out, "evaluation.json"));
  write_manifest(out, "evaluate", opts.resolved(), outputs);

  json summary{{"command", "evaluate"},
               {"models", model_names},
               {"revisions", revisions},
               {"rmsfe", rmsfe_json}};
  if (!skip_mcs) summary["mcs_survivors"] = survivors_json;
  print_summary(summary);
}

} // namespace

void register_evaluate(CLI::App& app) {
  auto p = std::make_shared<Params>();
  CLI::App* cmd = app.add_subcommand(
      "evaluate", "Real-time vintage evaluation: revisions, forecast losses, MCS");
  cmd->add_option("--config", p->config, "JSON config file; flags override its keys");
  cmd->add_option("--input", p->input, "rate panel CSV");
  cmd->add_option("--layout", p->layout, "input CSV layout: wide|long");
  cmd->add_option("--rate", p->rate, "rate type of the input panel: yoy|mom");
  cmd->add_option("--headline", p->headline, "headline rate CSV (date,value)");
  cmd->add_option("--models", p->models, "comma list of M1,M2,M3,M4,SC");
  cmd->add_option("--first-vintage", p->first_vintage, "first vintage, YYYY-MM");
  cmd->add_option("--last-vintage", p->last_vintage, "last vintage, YYYY-MM");
  cmd->add_option("--horizons", p->horizons, "comma list of forecast horizons in months");
  cmd->add_option("--sample", p->sample,
                  "evaluation sample: 'YYYY-MM:YYYY-MM' or a named preset");
  cmd->add_option("--mcs-alpha", p->mcs_alpha, "MCS elimination level");
  cmd->add_option("--mcs-stat", p->mcs_stat, "MCS statistic: tmax|tr");
  cmd->add_option("--n-boot", p->n_boot, "bootstrap replications");
  cmd->add_option("--block-length", p->block_length, "bootstrap block length; 0 = automatic");
  cmd->add_flag("--skip-mcs", p->skip_mcs, "skip the model confidence set");
  cmd->add_option("--epsilon", p->epsilon, "sc: trimming, minimum segment share");
  cmd->add_option("--max-breaks", p->max_breaks, "sc: largest break count considered");
  cmd->add_option("--alpha", p->alpha, "sc: test level for the break decision");
  cmd->add_option("--breaks", p->breaks, "sc: fixed break count; -1 decides by testing");
  cmd->add_option("--starts", p->starts, "ms: random EM starts");
  cmd->add_option("--max-iter", p->max_iter, "ms: EM iteration cap");
  cmd->add_option("--tol", p->tol, "ms: log-likelihood convergence increment");
  cmd->add_option("--seed", p->seed, "random seed for EM starts and the bootstrap");
  cmd->add_option("--out", p->out, "output directory");
  cmd->add_option("--threads", p->threads, "worker threads");
  cmd->callback([p, cmd] { run(*cmd, *p); });
}

} // namespace rfcli
