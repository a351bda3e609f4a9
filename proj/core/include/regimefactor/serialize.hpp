#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "regimefactor/breaks.hpp"
#include "regimefactor/evaluate.hpp"
#include "regimefactor/factor.hpp"
#include "regimefactor/indicator.hpp"
#include "regimefactor/markov.hpp"

namespace regimefactor {

nlohmann::json to_json(const FactorEstimate& fe);
nlohmann::json to_json(const LongRunCov& lrc);
nlohmann::json to_json(const BreakModel& bm);
nlohmann::json to_json(const BreakDecision& bd);
nlohmann::json to_json(const MsModel& m);
nlohmann::json to_json(const IndicatorSeries& s);
nlohmann::json to_json(const VarianceDiagnostic& d);
nlohmann::json to_json(const McsResult& r);

BreakModel break_model_from_json(const nlohmann::json& j);
MsModel ms_model_from_json(const nlohmann::json& j);

void write_json_file(const nlohmann::json& j, const std::string& path);
nlohmann::json read_json_file(const std::string& path);

// plot-ready csv emitters
void write_smoothed_probs_csv(const MsModel& m,
                              const std::vector<YearMonth>& dates,
                              const std::string& path);
void write_indicator_csv(const IndicatorSeries& s,
                         const InflationSeries& headline,
                         const std::string& path);
void write_fan_csv(const std::vector<FanRow>& rows, const std::string& path);
void write_loss_csv(const LossPanel& losses, const std::string& path);

} // namespace regimefactor
