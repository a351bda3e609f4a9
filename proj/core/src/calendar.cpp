#include "regimefactor/calendar.hpp"

#include <cctype>
#include <cstdio>

#include "regimefactor/errors.hpp"

namespace regimefactor {

YearMonth parse_year_month(const std::string& s) {
  // accepted: YYYY-MM or YYYY-MM-DD (day ignored)
  auto fail = [&] { throw ValidationError("bad date '" + s + "', expected YYYY-MM"); };
  if (s.size() != 7 && s.size() != 10) fail();
  for (size_t i = 0; i < 7; ++i) {
    if (i == 4) {
      if (s[i] != '-') fail();
    } else if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      fail();
    }
  }
  if (s.size() == 10) {
    if (s[7] != '-' || !std::isdigit(static_cast<unsigned char>(s[8])) ||
        !std::isdigit(static_cast<unsigned char>(s[9])))
      fail();
  }
  YearMonth ym;
  ym.year = std::stoi(s.substr(0, 4));
  ym.month = std::stoi(s.substr(5, 2));
  if (ym.month < 1 || ym.month > 12) fail();
  return ym;
}

std::string to_string(const YearMonth& ym) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d", ym.year, ym.month);
  return buf;
}

int months_between(const YearMonth& a, const YearMonth& b) {
  return (b.year - a.year) * 12 + (b.month - a.month);
}

YearMonth add_months(const YearMonth& ym, int n) {
  int idx = ym.year * 12 + (ym.month - 1) + n;
  YearMonth out;
  out.year = idx / 12;
  out.month = idx % 12 + 1;
  if (out.month <= 0) { // negative idx rounding
    out.month += 12;
    out.year -= 1;
  }
  return out;
}

std::vector<YearMonth> month_range(const YearMonth& first, const YearMonth& last) {
  const int n = months_between(first, last);
  if (n < 0) throw ValidationError("month_range: first after last");
  std::vector<YearMonth> out;
  out.reserve(n + 1);
  for (int i = 0; i <= n; ++i) out.push_back(add_months(first, i));
  return out;
}

} // namespace regimefactor
