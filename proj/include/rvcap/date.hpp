#pragma once

#include <charconv>
#include <cstdio>
#include <string>
#include <string_view>

#include "rvcap/errors.hpp"

namespace rvcap {

// Proleptic Gregorian civil date. Comparison is field order (y, m, d).
struct Date {
  int year = 1970;
  int month = 1;
  int day = 1;

  auto operator<=>(const Date&) const = default;
};

namespace detail {

inline bool parse_fixed_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace detail

inline bool is_leap_year(int y) {
  return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

inline int days_in_month(int y, int m) {
  static constexpr int lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap_year(y)) return 29;
  return lengths[m - 1];
}

inline bool is_valid(const Date& d) {
  return d.month >= 1 && d.month <= 12 && d.day >= 1 && d.day <= days_in_month(d.year, d.month);
}

// Days since 1970-01-01 (Howard Hinnant's civil-days algorithm).
inline long days_from_civil(const Date& d) {
  long y = d.year - (d.month <= 2 ? 1 : 0);
  long era = (y >= 0 ? y : y - 399) / 400;
  unsigned yoe = static_cast<unsigned>(y - era * 400);
  unsigned doy = (153u * (d.month + (d.month > 2 ? -3 : 9)) + 2) / 5 + d.day - 1;
  unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<long>(doe) - 719468;
}

inline Date civil_from_days(long z) {
  z += 719468;
  long era = (z >= 0 ? z : z - 146096) / 146097;
  unsigned doe = static_cast<unsigned>(z - era * 146097);
  unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  long y = static_cast<long>(yoe) + era * 400;
  unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  unsigned mp = (5 * doy + 2) / 153;
  unsigned d = doy - (153 * mp + 2) / 5 + 1;
  unsigned m = mp + (mp < 10 ? 3 : -9);
  return Date{static_cast<int>(y + (m <= 2 ? 1 : 0)), static_cast<int>(m), static_cast<int>(d)};
}

// 0 = Monday ... 6 = Sunday.
inline int weekday(const Date& d) {
  long z = days_from_civil(d);  // 1970-01-01 was a Thursday
  return static_cast<int>(((z % 7) + 10) % 7);
}

inline bool is_weekend(const Date& d) { return weekday(d) >= 5; }

inline Date next_day(const Date& d) { return civil_from_days(days_from_civil(d) + 1); }

inline Date next_weekday(Date d) {
  do {
    d = next_day(d);
  } while (is_weekend(d));
  return d;
}

// Strict ISO-8601 "YYYY-MM-DD".
inline Date parse_date(std::string_view s) {
  Date d;
  if (s.size() != 10 || s[4] != '-' || s[7] != '-' ||
      !detail::parse_fixed_int(s.substr(0, 4), d.year) ||
      !detail::parse_fixed_int(s.substr(5, 2), d.month) ||
      !detail::parse_fixed_int(s.substr(8, 2), d.day)) {
    throw ParseError("bad date '" + std::string(s) + "' (expected YYYY-MM-DD)");
  }
  if (!is_valid(d)) throw ParseError("invalid calendar date '" + std::string(s) + "'");
  return d;
}

inline std::string to_string(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

// "HH:MM:SS" -> seconds since midnight.
inline int parse_time_seconds(std::string_view s) {
  int h = 0, m = 0, sec = 0;
  if (s.size() != 8 || s[2] != ':' || s[5] != ':' ||
      !detail::parse_fixed_int(s.substr(0, 2), h) ||
      !detail::parse_fixed_int(s.substr(3, 2), m) ||
      !detail::parse_fixed_int(s.substr(6, 2), sec) || h < 0 || h > 23 || m < 0 || m > 59 ||
      sec < 0 || sec > 59) {
    throw ParseError("bad time '" + std::string(s) + "' (expected HH:MM:SS)");
  }
  return h * 3600 + m * 60 + sec;
}

inline std::string time_to_string(int seconds_of_day) {
  char buf[12];
  std::snprintf(buf, sizeof(buf), "%02d:%02d:%02d", seconds_of_day / 3600,
                (seconds_of_day / 60) % 60, seconds_of_day % 60);
  return buf;
}

}  // namespace rvcap
