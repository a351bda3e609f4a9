#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regimefactor/calendar.hpp"

namespace regimefactor {

enum class Transform { RawIndex, YoY, MoM, Standardized };

std::string to_string(Transform t);
Transform transform_from_string(const std::string& s);

struct SeriesStats {
  double mean = 0.0;
  double sd = 1.0;
};

// Balanced monthly panel, T x N, one column per price series.
struct PricePanel {
  std::vector<YearMonth> dates;     // length T, consecutive months
  std::vector<std::string> series;  // length N, unique ids
  Eigen::MatrixXd values;           // T x N
  Transform transform = Transform::RawIndex;
  // present iff transform == Standardized: moments used per column and the
  // window they were computed on
  std::optional<std::vector<SeriesStats>> standardization;
  std::optional<std::pair<YearMonth, YearMonth>> standardization_window;

  Eigen::Index rows() const { return values.rows(); }
  Eigen::Index cols() const { return values.cols(); }

  // Throws ValidationError on shape mismatch, gaps, duplicate ids,
  // non-finite cells, or a Standardized panel whose columns are not
  // mean 0 / sd 1 within 1e-10.
  void validate() const;

  // Row index of a date, or -1.
  int index_of(const YearMonth& ym) const;

  // Sub-panel over inclusive date range (same transform & metadata).
  PricePanel slice(const YearMonth& first, const YearMonth& last) const;
};

// Single monthly series (headline inflation, indicators).
struct InflationSeries {
  std::vector<YearMonth> dates;
  Eigen::VectorXd values;

  void validate() const;
  int index_of(const YearMonth& ym) const;
  InflationSeries slice(const YearMonth& first, const YearMonth& last) const;
};

// Year-over-year rate: 100*(I_t/I_{t-12} - 1).  Drops the first 12 months.
// Rejects non-positive index values.
PricePanel to_yoy(const PricePanel& p);

// Month-over-month rate: 100*(I_t/I_{t-1} - 1).  Drops the first month.
PricePanel to_mom(const PricePanel& p);

// Column-wise standardization.  Moments are computed over `window` (inclusive,
// defaults to the full sample) and applied to every row.  Zero-variance
// columns are rejected by name.
PricePanel standardize(const PricePanel& p,
                       std::optional<std::pair<YearMonth, YearMonth>> window = std::nullopt);

} // namespace regimefactor
