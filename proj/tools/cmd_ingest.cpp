#include <memory>
#include <string>
#include <vector>

#include "cli_common.hpp"
#include "regimefactor/csv.hpp"
#include "regimefactor/panel.hpp"

namespace rfcli {

namespace {

using namespace regimefactor;

struct Params {
  std::string config;
  std::string input;
  std::string layout = "wide";
  std::string transform = "yoy";
  std::string headline;
  std::string out;
  int threads = 0;
};

// headline index transforms ride through a one-column panel
InflationSeries transform_series(const InflationSeries& s, Transform t) {
  PricePanel p;
  p.dates = s.dates;
  p.series = {"headline"};
  p.values = s.values;
  const PricePanel r = t == Transform::YoY ? to_yoy(p) : to_mom(p);
  InflationSeries out;
  out.dates = r.dates;
  out.values = r.values.col(0);
  return out;
}

void run(const CLI::App& cmd, const Params& p) {
  const json cfg = p.config.empty() ? json::object() : load_config(cmd, p.config);
  Options opts(cmd, cfg);

  const std::string input = opts.require<std::string>("input", p.input);
  const std::string layout = opts.get<std::string>("layout", p.layout, "wide");
  const std::string transform = opts.get<std::string>("transform", p.transform, "yoy");
  const std::string headline_path = opts.get<std::string>("headline", p.headline, "");
  const std::string out = ensure_out_dir(opts.require<std::string>("out", p.out));
  resolve_threads(opts, p.threads);

  if (transform != "yoy" && transform != "mom")
    throw ValidationError("transform must be 'yoy' or 'mom', got '" + transform + "'");
  const Transform t = parse_rate(transform);

  const PricePanel raw = read_panel_csv(input, parse_layout(layout));
  const PricePanel rates = t == Transform::YoY ? to_yoy(raw) : to_mom(raw);

  std::vector<std::string> outputs{"panel.csv"};
  write_panel_csv(rates, out_file(out, "panel.csv"));

  if (!headline_path.empty()) {
    const InflationSeries hraw = read_series_csv(headline_path);
    InflationSeries hl = transform_series(hraw, t);
    if (hl.index_of(rates.dates.front()) < 0 || hl.index_of(rates.dates.back()) < 0)
      throw ValidationError("headline does not cover the panel calendar after the transform");
    hl = hl.slice(rates.dates.front(), rates.dates.back());
    write_series_csv(hl, out_file(out, "headline.csv"), "headline");
    outputs.push_back("headline.csv");
  }

  write_manifest(out, "ingest", opts.resolved(), outputs);
  print_summary(json{{"command", "ingest"},
                     {"rows", rates.rows()},
                     {"series", rates.cols()},
                     {"first", to_string(rates.dates.front())},
                     {"last", to_string(rates.dates.back())},
                     {"transform", transform}});
}

} // namespace

void register_ingest(CLI::App& app) {
  auto p = std::make_shared<Params>();
  CLI::App* cmd = app.add_subcommand(
      "ingest", "Read a raw price-index panel and emit the rate panel");
  cmd->add_option("--config", p->config, "JSON config file; flags override its keys");
  cmd->add_option("--input", p->input, "raw index panel CSV");
  cmd->add_option("--layout", p->layout, "input CSV layout: wide|long");
  cmd->add_option("--transform", p->transform, "rate transform: yoy|mom");
  cmd->add_option("--headline", p->headline, "raw headline index CSV (date,value)");
  cmd->add_option("--out", p->out, "output directory");
  cmd->add_option("--threads", p->threads, "worker threads");
  cmd->callback([p, cmd] { run(*cmd, *p); });
}

} // namespace rfcli
