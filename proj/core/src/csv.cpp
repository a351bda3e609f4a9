#include "regimefactor/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "regimefactor/errors.hpp"

namespace regimefactor {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      out.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  out.push_back(field);
  for (auto& f : out) {
    // trim surrounding whitespace
    const auto a = f.find_first_not_of(" \t");
    const auto b = f.find_last_not_of(" \t");
    f = (a == std::string::npos) ? "" : f.substr(a, b - a + 1);
  }
  return out;
}

double parse_value(const std::string& s, size_t line_no) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ValidationError("csv line " + std::to_string(line_no) +
                          ": unparseable value '" + s + "'");
  }
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(f, line)) lines.push_back(line);
  // drop trailing blank lines
  while (!lines.empty() && lines.back().find_first_not_of(" \t\r") == std::string::npos)
    lines.pop_back();
  if (lines.size() < 2) throw ValidationError("'" + path + "': no data rows");
  return lines;
}

PricePanel assemble(const std::map<std::string, std::map<int, double>>& by_series,
                    const YearMonth& epoch) {
  // intersect date keys (stored as month offsets from epoch)
  std::set<int> common;
  bool first = true;
  for (const auto& [id, obs] : by_series) {
    std::set<int> keys;
    for (const auto& [k, v] : obs) keys.insert(k);
    if (first) {
      common = std::move(keys);
      first = false;
    } else {
      std::set<int> inter;
      std::set_intersection(common.begin(), common.end(), keys.begin(), keys.end(),
                            std::inserter(inter, inter.begin()));
      common = std::move(inter);
    }
  }
  if (common.empty()) throw ValidationError("csv: no common dates across series");
  // the intersected calendar must be gap-free
  int prev = *common.begin();
  for (int k : common) {
    if (k != prev && k != prev + 1)
      throw ValidationError("csv: monthly gap in common sample at " +
                            to_string(add_months(epoch, prev + 1)));
    prev = k;
  }

  PricePanel p;
  for (int k : common) p.dates.push_back(add_months(epoch, k));
  for (const auto& [id, obs] : by_series) p.series.push_back(id);
  p.values.resize(static_cast<Eigen::Index>(common.size()),
                  static_cast<Eigen::Index>(by_series.size()));
  Eigen::Index j = 0;
  for (const auto& [id, obs] : by_series) {
    Eigen::Index i = 0;
    for (int k : common) p.values(i++, j) = obs.at(k);
    ++j;
  }
  p.transform = Transform::RawIndex;
  p.validate();
  return p;
}

} // namespace

PricePanel read_panel_csv(const std::string& path, CsvLayout layout) {
  const auto lines = read_lines(path);
  const auto header = split_csv_line(lines[0]);

  if (layout == CsvLayout::Long) {
    if (header.size() != 3)
      throw ValidationError("'" + path + "': long layout needs 3 columns, got " +
                            std::to_string(header.size()));
    const YearMonth epoch{1900, 1};
    std::map<std::string, std::map<int, double>> by_series;
    for (size_t i = 1; i < lines.size(); ++i) {
      if (lines[i].find_first_not_of(" \t\r") == std::string::npos) continue;
      const auto f = split_csv_line(lines[i]);
      if (f.size() != 3)
        throw ValidationError("csv line " + std::to_string(i + 1) + ": expected 3 fields");
      const YearMonth ym = parse_year_month(f[0]);
      const int k = months_between(epoch, ym);
      const double v = parse_value(f[2], i + 1);
      auto [it, inserted] = by_series[f[1]].emplace(k, v);
      if (!inserted)
        throw ValidationError("csv line " + std::to_string(i + 1) + ": duplicate (" +
                              f[0] + ", " + f[1] + ")");
    }
    if (by_series.empty()) throw ValidationError("'" + path + "': no observations");
    return assemble(by_series, epoch);
  }

  // wide
  if (header.size() < 2)
    throw ValidationError("'" + path + "': wide layout needs date + series columns");
  std::set<std::string> seen;
  for (size_t j = 1; j < header.size(); ++j) {
    if (header[j].empty())
      throw ValidationError("'" + path + "': empty series name in header");
    if (!seen.insert(header[j]).second)
      throw ValidationError("'" + path + "': duplicate series '" + header[j] + "'");
  }
  PricePanel p;
  p.series.assign(header.begin() + 1, header.end());
  const Eigen::Index N = static_cast<Eigen::Index>(p.series.size());
  p.values.resize(static_cast<Eigen::Index>(lines.size() - 1), N);
  std::set<std::string> dates_seen;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto f = split_csv_line(lines[i]);
    if (static_cast<Eigen::Index>(f.size()) != N + 1)
      throw ValidationError("csv line " + std::to_string(i + 1) + ": expected " +
                            std::to_string(N + 1) + " fields, got " +
                            std::to_string(f.size()));
    const YearMonth ym = parse_year_month(f[0]);
    if (!dates_seen.insert(to_string(ym)).second)
      throw ValidationError("csv line " + std::to_string(i + 1) + ": duplicate date " + f[0]);
    p.dates.push_back(ym);
    for (Eigen::Index j = 0; j < N; ++j)
      p.values(static_cast<Eigen::Index>(i - 1), j) = parse_value(f[j + 1], i + 1);
  }
  p.transform = Transform::RawIndex;
  p.validate();
  return p;
}

InflationSeries read_series_csv(const std::string& path) {
  const auto lines = read_lines(path);
  InflationSeries s;
  std::vector<double> vals;
  for (size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto f = split_csv_line(lines[i]);
    if (f.size() != 2)
      throw ValidationError("csv line " + std::to_string(i + 1) + ": expected 2 fields");
    s.dates.push_back(parse_year_month(f[0]));
    vals.push_back(parse_value(f[1], i + 1));
  }
  s.values = Eigen::Map<Eigen::VectorXd>(vals.data(), static_cast<Eigen::Index>(vals.size()));
  s.validate();
  return s;
}

void write_panel_csv(const PricePanel& p, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot write '" + path + "'");
  f << "date";
  for (const auto& id : p.series) f << ',' << id;
  f << '\n';
  char buf[32];
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    f << to_string(p.dates[i]);
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.10g", p.values(i, j));
      f << ',' << buf;
    }
    f << '\n';
  }
}

void write_series_csv(const InflationSeries& s, const std::string& path,
                      const std::string& value_header) {
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot write '" + path + "'");
  f << "date," << value_header << '\n';
  char buf[32];
  for (size_t i = 0; i < s.dates.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.10g", s.values(static_cast<Eigen::Index>(i)));
    f << to_string(s.dates[i]) << ',' << buf << '\n';
  }
}

} // namespace regimefactor
