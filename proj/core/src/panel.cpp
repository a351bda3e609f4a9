#include "regimefactor/panel.hpp"

#include <cmath>
#include <set>

#include "regimefactor/errors.hpp"

namespace regimefactor {

std::string to_string(Transform t) {
  switch (t) {
    case Transform::RawIndex: return "raw_index";
    case Transform::YoY: return "yoy";
    case Transform::MoM: return "mom";
    case Transform::Standardized: return "standardized";
  }
  return "?";
}

Transform transform_from_string(const std::string& s) {
  if (s == "raw_index") return Transform::RawIndex;
  if (s == "yoy") return Transform::YoY;
  if (s == "mom") return Transform::MoM;
  if (s == "standardized") return Transform::Standardized;
  throw ValidationError("unknown transform '" + s + "'");
}

void PricePanel::validate() const {
  const auto T = values.rows();
  const auto N = values.cols();
  if (static_cast<Eigen::Index>(dates.size()) != T)
    throw ValidationError("panel: date count != row count");
  if (static_cast<Eigen::Index>(series.size()) != N)
    throw ValidationError("panel: series count != column count");
  if (T == 0 || N == 0) throw ValidationError("panel: empty");
  for (size_t i = 1; i < dates.size(); ++i) {
    if (months_between(dates[i - 1], dates[i]) != 1)
      throw ValidationError("panel: calendar gap between " + to_string(dates[i - 1]) +
                            " and " + to_string(dates[i]));
  }
  std::set<std::string> ids(series.begin(), series.end());
  if (ids.size() != series.size())
    throw ValidationError("panel: duplicate series ids");
  if (!values.allFinite())
    throw ValidationError("panel: non-finite values");
  if (transform == Transform::Standardized) {
    if (!standardization || static_cast<Eigen::Index>(standardization->size()) != N)
      throw ValidationError("panel: standardized without stored moments");
    // moments are only checkable over the window they came from
    if (standardization_window) {
      const int a = index_of(standardization_window->first);
      const int b = index_of(standardization_window->second);
      if (a >= 0 && b >= a && b - a >= 1) {
        const int n = b - a + 1;
        for (Eigen::Index j = 0; j < N; ++j) {
          const auto wcol = values.col(j).segment(a, n);
          const double m = wcol.mean();
          const double v = (wcol.array() - m).square().sum() / (n - 1);
          if (std::abs(m) > 1e-10 || std::abs(std::sqrt(v) - 1.0) > 1e-10)
            throw ValidationError("panel: column '" + series[j] +
                                  "' not standardized (mean " + std::to_string(m) + ")");
        }
      }
    }
  }
}

int PricePanel::index_of(const YearMonth& ym) const {
  if (dates.empty()) return -1;
  const int k = months_between(dates.front(), ym);
  if (k < 0 || k >= static_cast<int>(dates.size())) return -1;
  return k;
}

PricePanel PricePanel::slice(const YearMonth& first, const YearMonth& last) const {
  const int a = index_of(first);
  const int b = index_of(last);
  if (a < 0 || b < 0 || a > b)
    throw ValidationError("panel slice [" + to_string(first) + ", " + to_string(last) +
                          "] outside sample [" + to_string(dates.front()) + ", " +
                          to_string(dates.back()) + "]");
  PricePanel out;
  out.dates.assign(dates.begin() + a, dates.begin() + b + 1);
  out.series = series;
  out.values = values.middleRows(a, b - a + 1);
  out.transform = transform;
  out.standardization = standardization;
  if (standardization_window &&
      standardization_window->first >= first && standardization_window->second <= last)
    out.standardization_window = standardization_window;
  return out;
}

void InflationSeries::validate() const {
  if (static_cast<Eigen::Index>(dates.size()) != values.size())
    throw ValidationError("series: date count != value count");
  if (dates.empty()) throw ValidationError("series: empty");
  for (size_t i = 1; i < dates.size(); ++i)
    if (months_between(dates[i - 1], dates[i]) != 1)
      throw ValidationError("series: calendar gap at " + to_string(dates[i]));
  if (!values.allFinite()) throw ValidationError("series: non-finite values");
}

int InflationSeries::index_of(const YearMonth& ym) const {
  if (dates.empty()) return -1;
  const int k = months_between(dates.front(), ym);
  if (k < 0 || k >= static_cast<int>(dates.size())) return -1;
  return k;
}

InflationSeries InflationSeries::slice(const YearMonth& first, const YearMonth& last) const {
  const int a = index_of(first);
  const int b = index_of(last);
  if (a < 0 || b < 0 || a > b)
    throw ValidationError("series slice outside sample");
  InflationSeries out;
  out.dates.assign(dates.begin() + a, dates.begin() + b + 1);
  out.values = values.segment(a, b - a + 1);
  return out;
}

namespace {

PricePanel rate_transform(const PricePanel& p, int lag, Transform target) {
  p.validate();
  if (p.transform != Transform::RawIndex)
    throw ValidationError("rate transform expects a raw index panel, got " +
                          to_string(p.transform));
  if (p.rows() <= lag)
    throw ValidationError("rate transform: need more than " + std::to_string(lag) +
                          " months of data");
  if ((p.values.array() <= 0.0).any())
    throw ValidationError("rate transform: non-positive index values present");
  PricePanel out;
  out.dates.assign(p.dates.begin() + lag, p.dates.end());
  out.series = p.series;
  out.transform = target;
  const auto T = p.rows() - lag;
  out.values = 100.0 * (p.values.bottomRows(T).array() /
                        p.values.topRows(T).array() - 1.0);
  return out;
}

} // namespace

PricePanel to_yoy(const PricePanel& p) { return rate_transform(p, 12, Transform::YoY); }
PricePanel to_mom(const PricePanel& p) { return rate_transform(p, 1, Transform::MoM); }

PricePanel standardize(const PricePanel& p,
                       std::optional<std::pair<YearMonth, YearMonth>> window) {
  p.validate();
  int a = 0;
  int b = static_cast<int>(p.rows()) - 1;
  if (window) {
    a = p.index_of(window->first);
    b = p.index_of(window->second);
    if (a < 0 || b < 0 || a > b)
      throw ValidationError("standardize: window outside sample");
  }
  const int n = b - a + 1;
  if (n < 2) throw ValidationError("standardize: window too short");

  PricePanel out;
  out.dates = p.dates;
  out.series = p.series;
  out.transform = Transform::Standardized;
  out.values.resize(p.rows(), p.cols());
  std::vector<SeriesStats> stats(p.cols());
  for (Eigen::Index j = 0; j < p.cols(); ++j) {
    const auto wcol = p.values.col(j).segment(a, n);
    const double m = wcol.mean();
    const double sd = std::sqrt((wcol.array() - m).square().sum() / (n - 1));
    if (!(sd > 0.0))
      throw ValidationError("standardize: zero variance in series '" + p.series[j] + "'");
    stats[j] = {m, sd};
    out.values.col(j) = (p.values.col(j).array() - m) / sd;
  }
  out.standardization = std::move(stats);
  out.standardization_window = std::make_pair(p.dates[a], p.dates[b]);
  return out;
}

} // namespace regimefactor
