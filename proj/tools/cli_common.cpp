#include "cli_common.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "regimefactor/serialize.hpp"

#ifndef REGIMEFACTOR_VERSION
#define REGIMEFACTOR_VERSION "0.0.0"
#endif

namespace rfcli {

using regimefactor::ValidationError;

json load_config(const CLI::App& cmd, const std::string& path) {
  const json cfg = regimefactor::read_json_file(path);
  if (!cfg.is_object())
    throw ValidationError("config file " + path + ": expected a JSON object");

  std::set<std::string> allowed;
  for (const CLI::Option* opt : cmd.get_options())
    for (const std::string& name : opt->get_lnames())
      if (name != "config" && name != "help") allowed.insert(name);

  for (const auto& item : cfg.items())
    if (!allowed.count(item.key()))
      throw ValidationError("config file " + path + ": unknown key '" + item.key() +
                            "' for command '" + cmd.get_name() + "'");
  return cfg;
}

int resolve_threads(Options& opts, int flag_value) {
  int fallback = 0;
  if (const char* env = std::getenv("REGIMEFACTOR_THREADS")) {
    try {
      size_t pos = 0;
      fallback = std::stoi(env, &pos);
      if (pos != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw ValidationError(std::string("REGIMEFACTOR_THREADS: not an integer: ") + env);
    }
  }
  if (fallback <= 0) fallback = static_cast<int>(std::thread::hardware_concurrency());
  if (fallback <= 0) fallback = 1;
  const int threads = opts.get<int>("threads", flag_value, fallback);
  if (threads < 1) throw ValidationError("threads must be >= 1");
  return threads;
}

std::string ensure_out_dir(const std::string& path) {
  if (path.empty()) throw ValidationError("--out must not be empty");
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  if (ec) throw ValidationError("cannot create output directory " + path + ": " + ec.message());
  return path;
}

std::string out_file(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

std::string slurp_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& text, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot write " + path);
  f << text;
  if (!f.good()) throw ValidationError("failed writing " + path);
}

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_manifest(const std::string& out_dir, const std::string& command,
                    const json& resolved_config,
                    const std::vector<std::string>& outputs) {
  json m{{"command", command},
         {"version", REGIMEFACTOR_VERSION},
         {"config", resolved_config},
         {"config_hash", fnv1a_hex(resolved_config.dump())},
         {"outputs", outputs}};
  if (resolved_config.contains("seed")) m["seed"] = resolved_config.at("seed");
  if (resolved_config.contains("threads")) m["threads"] = resolved_config.at("threads");
  regimefactor::write_json_file(m, out_file(out_dir, "manifest.json"));
}

regimefactor::CsvLayout parse_layout(const std::string& s) {
  if (s == "wide") return regimefactor::CsvLayout::Wide;
  if (s == "long") return regimefactor::CsvLayout::Long;
  throw ValidationError("layout must be 'wide' or 'long', got '" + s + "'");
}

regimefactor::Transform parse_rate(const std::string& s) {
  if (s == "yoy") return regimefactor::Transform::YoY;
  if (s == "mom") return regimefactor::Transform::MoM;
  throw ValidationError("rate must be 'yoy' or 'mom', got '" + s + "'");
}

regimefactor::PricePanel load_rate_panel(const std::string& path,
                                         const std::string& layout,
                                         const std::string& rate) {
  regimefactor::PricePanel p = regimefactor::read_panel_csv(path, parse_layout(layout));
  p.transform = parse_rate(rate);
  p.validate();
  return p;
}

regimefactor::InflationSeries load_headline(const std::string& path,
                                            const regimefactor::PricePanel& panel) {
  const regimefactor::InflationSeries full = regimefactor::read_series_csv(path);
  if (full.index_of(panel.dates.front()) < 0 || full.index_of(panel.dates.back()) < 0)
    throw ValidationError("headline " + path + " does not cover the panel calendar " +
                          to_string(panel.dates.front()) + ".." +
                          to_string(panel.dates.back()));
  regimefactor::InflationSeries h = full.slice(panel.dates.front(), panel.dates.back());
  if (h.dates != panel.dates)
    throw ValidationError("headline months do not line up with the panel");
  return h;
}

void print_summary(const json& j) { std::cout << j.dump(2) << "\n"; }

} // namespace rfcli
