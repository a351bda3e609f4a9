#include <doctest.h>

#include "regimefactor/calendar.hpp"
#include "regimefactor/errors.hpp"

using namespace regimefactor;

TEST_CASE("year-month parsing") {
  CHECK(parse_year_month("2020-03") == YearMonth{2020, 3});
  CHECK(parse_year_month("1995-12") == YearMonth{1995, 12});
  CHECK(parse_year_month("2020-03-15") == YearMonth{2020, 3}); // day ignored
  CHECK(to_string(YearMonth{2020, 3}) == "2020-03");

  CHECK_THROWS_AS(parse_year_month("2020"), ValidationError);
  CHECK_THROWS_AS(parse_year_month("2020-13"), ValidationError);
  CHECK_THROWS_AS(parse_year_month("2020-00"), ValidationError);
  CHECK_THROWS_AS(parse_year_month("20-03"), ValidationError);
  CHECK_THROWS_AS(parse_year_month("garbage"), ValidationError);
  CHECK_THROWS_AS(parse_year_month(""), ValidationError);
}

TEST_CASE("month arithmetic") {
  CHECK(months_between({2020, 1}, {2020, 12}) == 11);
  CHECK(months_between({2019, 11}, {2020, 2}) == 3);
  CHECK(months_between({2020, 2}, {2019, 11}) == -3);
  CHECK(add_months({2020, 1}, 11) == YearMonth{2020, 12});
  CHECK(add_months({2020, 1}, 12) == YearMonth{2021, 1});
  CHECK(add_months({2020, 1}, -1) == YearMonth{2019, 12});
  CHECK(add_months({2020, 6}, -18) == YearMonth{2018, 12});

  // inverse round trip on a spread of offsets
  for (int k = -40; k <= 40; ++k) {
    const YearMonth m = add_months({2001, 7}, k);
    CHECK(months_between({2001, 7}, m) == k);
  }
}

TEST_CASE("month ordering") {
  CHECK(YearMonth{2019, 12} < YearMonth{2020, 1});
  CHECK(YearMonth{2020, 1} < YearMonth{2020, 2});
  CHECK(YearMonth{2020, 2} == YearMonth{2020, 2});
}

TEST_CASE("month_range") {
  const auto r = month_range({2019, 11}, {2020, 2});
  REQUIRE(r.size() == 4);
  CHECK(r.front() == YearMonth{2019, 11});
  CHECK(r.back() == YearMonth{2020, 2});
  CHECK(month_range({2020, 5}, {2020, 5}).size() == 1);
  CHECK_THROWS_AS(month_range({2020, 5}, {2020, 4}), ValidationError);
}
