#pragma once

#include <string>
#include <vector>

namespace regimefactor {

// Monthly calendar stamp. All panel data is monthly; a date is (year, month).
struct YearMonth {
  int year = 0;
  int month = 1; // 1..12

  bool operator==(const YearMonth&) const = default;
  auto operator<=>(const YearMonth&) const = default;
};

// Parses "YYYY-MM"; a trailing "-DD" day component is accepted and ignored.
YearMonth parse_year_month(const std::string& s);
std::string to_string(const YearMonth& ym);

// Signed number of months from a to b (b - a).
int months_between(const YearMonth& a, const YearMonth& b);
YearMonth add_months(const YearMonth& ym, int n);

// [first, last] inclusive, both ends required to be ordered.
std::vector<YearMonth> month_range(const YearMonth& first, const YearMonth& last);

} // namespace regimefactor
