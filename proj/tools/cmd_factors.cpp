#include <memory>
#include <string>
#include <vector>

#include "cli_common.hpp"
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
  int factors = 0;
  int r_max = 8;
  std::string criterion = "icp2";
  std::string out;
  int threads = 0;
};

FactorCriterion parse_criterion(const std::string& s) {
  if (s == "icp1") return FactorCriterion::ICp1;
  if (s == "icp2") return FactorCriterion::ICp2;
  throw ValidationError("criterion must be 'icp1' or 'icp2', got '" + s + "'");
}

void run(const CLI::App& cmd, const Params& p) {
  const json cfg = p.config.empty() ? json::object() : load_config(cmd, p.config);
  Options opts(cmd, cfg);

  const std::string input = opts.require<std::string>("input", p.input);
  const std::string layout = opts.get<std::string>("layout", p.layout, "wide");
  const std::string rate = opts.get<std::string>("rate", p.rate, "yoy");
  const int r_arg = opts.get<int>("factors", p.factors, 0);
  const int r_max = opts.get<int>("r-max", p.r_max, 8);
  const std::string criterion = opts.get<std::string>("criterion", p.criterion, "icp2");
  const std::string out = ensure_out_dir(opts.require<std::string>("out", p.out));
  resolve_threads(opts, p.threads);

  const PricePanel rates = load_rate_panel(input, layout, rate);
  const PricePanel std_panel = standardize(rates);

  int r = r_arg;
  if (r == 0) r = ic_num_factors(std_panel.values, r_max, parse_criterion(criterion));
  if (r < 1) throw ValidationError("factors must be >= 1 (0 selects by criterion)");

  const FactorEstimate fe = estimate_factors(std_panel.values, r);

  json fj = to_json(fe);
  fj["selected_by"] = r_arg == 0 ? criterion : "fixed";
  write_json_file(fj, out_file(out, "factors.json"));

  PricePanel fpanel;
  fpanel.dates = std_panel.dates;
  for (int k = 0; k < r; ++k) fpanel.series.push_back("factor_" + std::to_string(k + 1));
  fpanel.values = fe.factors;
  write_panel_csv(fpanel, out_file(out, "factors.csv"));

  write_manifest(out, "factors", opts.resolved(), {"factors.json", "factors.csv"});

  json eig = json::array();
  for (int k = 0; k < r && k < fe.eigenvalues.size(); ++k) eig.push_back(fe.eigenvalues(k));
  print_summary(json{{"command", "factors"},
                     {"r", r},
                     {"selected_by", r_arg == 0 ? criterion : "fixed"},
                     {"eigenvalues", eig}});
}

} // namespace

void register_factors(CLI::App& app) {
  auto p = std::make_shared<Params>();
  CLI::App* cmd = app.add_subcommand(
      "factors", "Principal-component factors of the standardized rate panel");
  cmd->add_option("--config", p->config, "JSON config file; flags override its keys");
  cmd->add_option("--input", p->input, "rate panel CSV");
  cmd->add_option("--layout", p->layout, "input CSV layout: wide|long");
  cmd->add_option("--rate", p->rate, "rate type of the input panel: yoy|mom");
  cmd->add_option("--factors", p->factors, "factor count; 0 selects by criterion");
  cmd->add_option("--r-max", p->r_max, "largest candidate factor count");
  cmd->add_option("--criterion", p->criterion, "selection criterion: icp1|icp2");
  cmd->add_option("--out", p->out, "output directory");
  cmd->add_option("--threads", p->threads, "worker threads");
  cmd->callback([p, cmd] { run(*cmd, *p); });
}

} // namespace rfcli
