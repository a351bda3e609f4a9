#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "regimefactor/csv.hpp"
#include "regimefactor/errors.hpp"
#include "regimefactor/panel.hpp"

namespace rfcli {

using nlohmann::json;

// Loads --config JSON and rejects keys that do not name a long option of the
// subcommand ("config" itself and "help" are not configurable).
json load_config(const CLI::App& cmd, const std::string& path);

// Effective option values, precedence: command line > config file > fallback.
// Every resolved value is recorded so the manifest can reproduce the run.
class Options {
 public:
  Options(const CLI::App& cmd, json cfg) : cmd_(cmd), cfg_(std::move(cfg)) {
    resolved_ = json::object();
  }

  template <typename T>
  T get(const std::string& key, const T& flag_value, const T& fallback) {
    T v = fallback;
    if (cfg_.contains(key)) {
      try {
        v = cfg_.at(key).get<T>();
      } catch (const json::exception& e) {
        throw regimefactor::ValidationError("config key '" + key + "': " + e.what());
      }
    }
    if (flag_given(key)) v = flag_value;
    resolved_[key] = v;
    return v;
  }

  template <typename T>
  T require(const std::string& key, const T& flag_value) {
    if (!flag_given(key) && !cfg_.contains(key))
      throw regimefactor::ValidationError("missing required option --" + key);
    return get<T>(key, flag_value, flag_value);
  }

  template <typename T>
  std::optional<T> find(const std::string& key, const T& flag_value) {
    if (!flag_given(key) && !cfg_.contains(key)) return std::nullopt;
    return get<T>(key, flag_value, flag_value);
  }

  const json& resolved() const { return resolved_; }

 private:
  bool flag_given(const std::string& key) const { return cmd_.count("--" + key) > 0; }

  const CLI::App& cmd_;
  json cfg_;
  json resolved_;
};

// --threads > REGIMEFACTOR_THREADS > hardware concurrency; must be >= 1.
int resolve_threads(Options& opts, int flag_value);

// Creates the directory if needed and returns it; `file` joins inside it.
std::string ensure_out_dir(const std::string& path);
std::string out_file(const std::string& dir, const std::string& name);

std::string slurp_file(const std::string& path);
void write_text_file(const std::string& text, const std::string& path);

std::string fnv1a_hex(const std::string& s);

// manifest.json: command, version, resolved config and its hash, outputs.
void write_manifest(const std::string& out_dir, const std::string& command,
                    const json& resolved_config,
                    const std::vector<std::string>& outputs);

regimefactor::CsvLayout parse_layout(const std::string& s);
regimefactor::Transform parse_rate(const std::string& s);

// Reads a rate panel and stamps the declared rate type.
regimefactor::PricePanel load_rate_panel(const std::string& path,
                                         const std::string& layout,
                                         const std::string& rate);

// Reads a headline rate series and aligns it to the panel calendar
// (the headline must cover every panel month).
regimefactor::InflationSeries load_headline(const std::string& path,
                                            const regimefactor::PricePanel& panel);

void print_summary(const json& j);

void register_ingest(CLI::App& app);
void register_factors(CLI::App& app);
void register_breaks(CLI::App& app);
void register_msfit(CLI::App& app);
void register_indicator(CLI::App& app);
void register_evaluate(CLI::App& app);
void register_simulate(CLI::App& app);

} // namespace rfcli
