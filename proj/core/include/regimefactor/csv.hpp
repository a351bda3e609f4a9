#pragma once

#include <string>

#include "regimefactor/panel.hpp"

namespace regimefactor {

enum class CsvLayout { Long, Wide };

// Long layout:  date,series_id,value   (one row per observation)
// Wide layout:  date,<id1>,<id2>,...   (one row per month)
//
// Series are aligned on the intersection of their dates; the resulting
// calendar must be consecutive months.  Duplicate (date, series) pairs and
// unparseable cells are rejected with row numbers.
PricePanel read_panel_csv(const std::string& path, CsvLayout layout);

// Two-column csv: date,value.
InflationSeries read_series_csv(const std::string& path);

void write_panel_csv(const PricePanel& p, const std::string& path);
void write_series_csv(const InflationSeries& s, const std::string& path,
                      const std::string& value_header = "value");

} // namespace regimefactor
