#include <memory>
#include <string>
#include <vector>

#include "cli_common.hpp"
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
  int regimes = 0;
  int starts = 10;
  int max_iter = 300;
  double tol = 1e-8;
  std::uint64_t seed = EmOptions{}.seed;
  std::string out;
  int threads = 0;
};

void run(const CLI::App& cmd, const Params& p) {
  const json cfg = p.config.empty() ? json::object() : load_config(cmd, p.config);
  Options opts(cmd, cfg);

  const std::string input = opts.require<std::string>("input", p.input);
  const std::string layout = opts.get<std::string>("layout", p.layout, "wide");
  const std::string rate = opts.get<std::string>("rate", p.rate, "yoy");
  const int regimes = opts.require<int>("regimes", p.regimes);
  EmOptions eo;
  eo.n_starts = opts.get<int>("starts", p.starts, EmOptions{}.n_starts);
  eo.max_iter = opts.get<int>("max-iter", p.max_iter, EmOptions{}.max_iter);
  eo.tol = opts.get<double>("tol", p.tol, EmOptions{}.tol);
  eo.seed = opts.get<std::uint64_t>("seed", p.seed, EmOptions{}.seed);
  const std::string out = ensure_out_dir(opts.require<std::string>("out", p.out));
  resolve_threads(opts, p.threads);

  const PricePanel rates = load_rate_panel(input, layout, rate);
  const PricePanel std_panel = standardize(rates);

  const MsModel model = em_fit(std_panel.values, regimes, 1, eo);

  write_json_file(to_json(model), out_file(out, "msmodel.json"));
  write_smoothed_probs_csv(model, std_panel.dates, out_file(out, "probabilities.csv"));
  write_manifest(out, "msfit", opts.resolved(), {"msmodel.json", "probabilities.csv"});

  json fv = json::array(), erg = json::array();
  for (int j = 0; j < model.m_regimes; ++j) {
    fv.push_back(model.factor_var(j));
    erg.push_back(model.ergodic(j));
  }
  print_summary(json{{"command", "msfit"},
                     {"regimes", regimes},
                     {"loglik", model.loglik},
                     {"iterations", model.iterations},
                     {"converged", model.converged},
                     {"factor_var", fv},
                     {"ergodic", erg}});
}

} // namespace

void register_msfit(CLI::App& app) {
  auto p = std::make_shared<Params>();
  CLI::App* cmd = app.add_subcommand(
      "msfit", "Markov-switching single-factor model fitted by EM");
  cmd->add_option("--config", p->config, "JSON config file; flags override its keys");
  cmd->add_option("--input", p->input, "rate panel CSV");
  cmd->add_option("--layout", p->layout, "input CSV layout: wide|long");
  cmd->add_option("--rate", p->rate, "rate type of the input panel: yoy|mom");
  cmd->add_option("--regimes", p->regimes, "number of regimes");
  cmd->add_option("--starts", p->starts, "random EM starts besides the seeded one");
  cmd->add_option("--max-iter", p->max_iter, "EM iteration cap");
  cmd->add_option("--tol", p->tol, "log-likelihood convergence increment");
  cmd->add_option("--seed", p->seed, "random seed");
  cmd->add_option("--out", p->out, "output directory");
  cmd->add_option("--threads", p->threads, "worker threads");
  cmd->callback([p, cmd] { run(*cmd, *p); });
}

} // namespace rfcli
