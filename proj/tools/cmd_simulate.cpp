#include <memory>
#include <string>
#include <vector>

#include "cli_common.hpp"
#include "regimefactor/serialize.hpp"
#include "regimefactor/simulate.hpp"

namespace rfcli {

namespace {

using namespace regimefactor;

struct Params {
  std::string config;
  std::string spec;
  std::uint64_t seed = 1;
  std::string out;
  int threads = 0;
};

json vec_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json mat_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

void run(const CLI::App& cmd, const Params& p) {
  const json cfg = p.config.empty() ? json::object() : load_config(cmd, p.config);
  Options opts(cmd, cfg);

  const std::string spec_path = opts.require<std::string>("spec", p.spec);
  const std::uint64_t seed = opts.get<std::uint64_t>("seed", p.seed, 1);
  const std::string out = ensure_out_dir(opts.require<std::string>("out", p.out));
  resolve_threads(opts, p.threads);

  const DgpSpec spec = dgp_from_json(slurp_file(spec_path));
  const SimulatedPanel sim = simulate_panel(spec, seed);

  std::vector<std::string> outputs{"panel.csv", "truth.json", "dgp.json"};
  write_panel_csv(sim.panel, out_file(out, "panel.csv"));
  write_text_file(dgp_to_json(spec), out_file(out, "dgp.json"));

  json truth{{"factors", vec_json(sim.truth.factors)},
             {"regimes", sim.truth.regimes},
             {"break_points", sim.truth.break_points},
             {"loadings", mat_json(sim.truth.loadings)}};
  if (sim.truth.headline) {
    json dates = json::array();
    for (const YearMonth& d : sim.truth.headline->dates) dates.push_back(to_string(d));
    truth["headline"] = json{{"dates", std::move(dates)},
                             {"values", vec_json(sim.truth.headline->values)}};
    write_series_csv(*sim.truth.headline, out_file(out, "headline.csv"), "headline");
    outputs.push_back("headline.csv");
  }
  write_json_file(truth, out_file(out, "truth.json"));
  write_manifest(out, "simulate", opts.resolved(), outputs);

  print_summary(json{{"command", "simulate"},
                     {"periods", spec.periods},
                     {"series", spec.n_series},
                     {"regimes", spec.regime_count()},
                     {"break_points", sim.truth.break_points},
                     {"headline", sim.truth.headline.has_value()}});
}

} // namespace

void register_simulate(CLI::App& app) {
  auto p = std::make_shared<Params>();
  CLI::App* cmd = app.add_subcommand(
      "simulate", "Generate a synthetic regime-switching panel from a DGP spec");
  cmd->add_option("--config", p->config, "JSON config file; flags override its keys");
  cmd->add_option("--spec", p->spec, "DGP spec JSON file");
  cmd->add_option("--seed", p->seed, "random seed");
  cmd->add_option("--out", p->out, "output directory");
  cmd->add_option("--threads", p->threads, "worker threads");
  cmd->callback([p, cmd] { run(*cmd, *p); });
}

} // namespace rfcli
