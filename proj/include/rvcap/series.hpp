#pragma once

#include <cmath>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "rvcap/date.hpp"
#include "rvcap/errors.hpp"
#include "rvcap/io.hpp"

namespace rvcap {

// One finite value per trading day, dates strictly increasing.
//
// Producers that have to drop a date (e.g. the log of a zero-volatility day)
// omit it from dates/values and record it in `skipped`, so missing values
// never appear in-band and downstream consumers can report the skip count.
struct DailySeries {
  std::string label;
  std::vector<Date> dates;
  std::vector<double> values;
  std::vector<Date> skipped;

  std::size_t size() const { return values.size(); }

  void validate() const {
    if (dates.size() != values.size()) {
      throw ValidationError("series '" + label + "': dates/values length mismatch");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!std::isfinite(values[i])) {
        throw ValidationError("series '" + label + "': non-finite value at " +
                              to_string(dates[i]));
      }
      if (i > 0 && !(dates[i - 1] < dates[i])) {
        throw ValidationError("series '" + label + "': dates not strictly increasing at " +
                              to_string(dates[i]));
      }
    }
  }
};

// CSV layout:
//   # series label=<label>
//   # skipped <date>            (zero or more)
//   date,value
//   1996-01-02,0.0123
inline std::string series_to_csv(const DailySeries& s) {
  std::ostringstream out;
  out << "# series label=" << s.label << "\n";
  for (const Date& d : s.skipped) out << "# skipped " << to_string(d) << "\n";
  out << "date,value\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << to_string(s.dates[i]) << "," << format_double(s.values[i]) << "\n";
  }
  return out.str();
}

inline void write_series_csv(const std::string& path, const DailySeries& s) {
  atomic_write_file(path, series_to_csv(s));
}

inline DailySeries parse_series_csv(std::istream& in, const std::string& origin = "<stream>") {
  DailySeries s;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view v = strip_cr(line);
    if (v.empty()) continue;
    if (v.front() == '#') {
      std::string_view body = v.substr(1);
      while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
      if (body.rfind("series label=", 0) == 0) {
        s.label = std::string(body.substr(13));
      } else if (body.rfind("skipped ", 0) == 0) {
        s.skipped.push_back(parse_date(body.substr(8)));
      }
      continue;
    }
    if (!header_seen) {
      if (v != "date,value") {
        throw ParseError(origin + ":" + std::to_string(line_no) +
                         ": expected header 'date,value'");
      }
      header_seen = true;
      continue;
    }
    auto fields = split_csv_line(v);
    if (fields.size() != 2) {
      throw ParseError(origin + ":" + std::to_string(line_no) + ": expected 2 fields");
    }
    s.dates.push_back(parse_date(fields[0]));
    char* end = nullptr;
    std::string num(fields[1]);
    double value = std::strtod(num.c_str(), &end);
    if (end == num.c_str() || *end != '\0') {
      throw ParseError(origin + ":" + std::to_string(line_no) + ": bad value '" + num + "'");
    }
    s.values.push_back(value);
  }
  s.validate();
  return s;
}

inline DailySeries read_series_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_not_found(path);
  return parse_series_csv(in, path);
}

}  // namespace rvcap
