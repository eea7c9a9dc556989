#pragma once

#include <istream>
#include <set>
#include <string>

#include "rvcap/date.hpp"
#include "rvcap/errors.hpp"
#include "rvcap/io.hpp"

namespace rvcap {

// Contract-level grid geometry: m intraday intervals of fixed length, so a
// day holds m+1 prices (the open plus m interval closes).
struct ContractSpec {
  std::string name;
  int intervals_per_day = 113;
  int interval_minutes = 5;

  void validate() const {
    if (intervals_per_day < 2) throw ValidationError("intervals_per_day must be >= 2");
    if (interval_minutes < 1) throw ValidationError("interval_minutes must be >= 1");
  }
};

// Holidays and half days are both excluded outright; half-day sessions would
// otherwise distort the per-day interval counts.
struct TradingCalendar {
  std::set<Date> holidays;
  std::set<Date> half_days;
  Date range_start{1, 1, 1};
  Date range_end{9999, 12, 31};

  bool in_range(const Date& d) const { return range_start <= d && d <= range_end; }

  bool excluded(const Date& d) const {
    return holidays.count(d) > 0 || half_days.count(d) > 0;
  }

  bool admits(const Date& d) const { return in_range(d) && !excluded(d); }

  void validate() const {
    if (range_end < range_start) throw ValidationError("calendar range end precedes start");
    for (const Date& d : holidays) {
      if (!in_range(d)) throw ValidationError("holiday " + to_string(d) + " outside range");
    }
    for (const Date& d : half_days) {
      if (!in_range(d)) throw ValidationError("halfday " + to_string(d) + " outside range");
    }
  }
};

enum class FillMode {
  midquote_then_previous,  // midquote of the interval if quoted, else carry forward
  previous_only,           // carry forward only; quotes ignored
  fail_on_gap,             // any unobserved slot is an error
};

struct FillPolicy {
  FillMode mode = FillMode::midquote_then_previous;
};

inline FillMode parse_fill_mode(const std::string& name) {
  if (name == "midquote" || name == "midquote_then_previous") {
    return FillMode::midquote_then_previous;
  }
  if (name == "previous" || name == "previous_only") return FillMode::previous_only;
  if (name == "fail" || name == "fail_on_gap") return FillMode::fail_on_gap;
  throw ValidationError("unknown fill mode '" + name + "'");
}

// Calendar file: one directive per line, '#' comments allowed.
//   holiday 1996-12-25
//   halfday 1996-12-24
//   range 1996-01-01 1999-12-31     (optional)
inline TradingCalendar parse_calendar(std::istream& in, const std::string& origin = "<stream>") {
  TradingCalendar cal;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view v = strip_cr(line);
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    if (v.empty() || v.front() == '#') continue;
    auto fail = [&](const char* what) {
      throw ParseError(origin + ":" + std::to_string(line_no) + ": " + what);
    };
    if (v.rfind("holiday ", 0) == 0) {
      cal.holidays.insert(parse_date(v.substr(8)));
    } else if (v.rfind("halfday ", 0) == 0) {
      cal.half_days.insert(parse_date(v.substr(8)));
    } else if (v.rfind("range ", 0) == 0) {
      std::string_view rest = v.substr(6);
      std::size_t sp = rest.find(' ');
      if (sp == std::string_view::npos) fail("range needs two dates");
      cal.range_start = parse_date(rest.substr(0, sp));
      cal.range_end = parse_date(rest.substr(sp + 1));
    } else {
      fail("unknown directive (expected holiday/halfday/range)");
    }
  }
  cal.validate();
  return cal;
}

inline TradingCalendar read_calendar(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_not_found(path);
  return parse_calendar(in, path);
}

}  // namespace rvcap
