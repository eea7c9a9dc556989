#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rvcap {

// Exit-code convention shared by the library and the CLI:
//   0 success, 1 usage, 2 data/validation, 3 numeric failure.
//
// Every error carries a stable machine-parsable category string such as
// "io.not_found" or "data.parse"; the CLI prints it as
//   error: <category>: <detail>
class Error : public std::runtime_error {
public:
  Error(std::string category, int exit_code, const std::string& detail)
      : std::runtime_error(detail),
        category_(std::move(category)),
        exit_code_(exit_code) {}

  const std::string& category() const noexcept { return category_; }
  int exit_code() const noexcept { return exit_code_; }

private:
  std::string category_;
  int exit_code_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& detail) : Error("data.parse", 2, detail) {}
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& detail) : Error("data.validation", 2, detail) {}
};

// A slot could not be populated under FillPolicy::fail_on_gap.
struct GapError : Error {
  explicit GapError(const std::string& detail) : Error("data.gap", 2, detail) {}
};

// Two series that must share a date axis do not.
struct AlignmentError : Error {
  explicit AlignmentError(const std::string& detail) : Error("data.alignment", 2, detail) {}
};

struct InsufficientDataError : Error {
  explicit InsufficientDataError(const std::string& detail)
      : Error("data.insufficient", 2, detail) {}
};

struct EstimationError : Error {
  explicit EstimationError(const std::string& detail) : Error("numeric.estimation", 3, detail) {}
};

struct NumericDomainError : Error {
  explicit NumericDomainError(const std::string& detail) : Error("numeric.domain", 3, detail) {}
};

struct IoError : Error {
  IoError(const std::string& category, const std::string& detail) : Error(category, 2, detail) {}
};

inline IoError io_not_found(const std::string& path) {
  return IoError("io.not_found", "cannot open input file: " + path);
}

inline IoError io_write_failed(const std::string& path) {
  return IoError("io.write", "cannot write output file: " + path);
}

}  // namespace rvcap
