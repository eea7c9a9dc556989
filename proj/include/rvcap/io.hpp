#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rvcap/errors.hpp"

namespace rvcap {

// FNV-1a 64-bit, used for the input checksums recorded in run manifests.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_not_found(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::uint64_t file_checksum(const std::string& path) {
  return fnv1a64(read_file(path));
}

// Atomic write: the content lands under a temporary name and is renamed into
// place, so a partially written file is never observed at `path`.
inline void atomic_write_file(const std::string& path, std::string_view content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw io_write_failed(path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw io_write_failed(path);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw io_write_failed(path);
  }
}

// Splits one CSV line on commas. No quoting: none of the file formats used
// here embed commas in fields.
inline std::vector<std::string_view> split_csv_line(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

inline std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

// Shortest round-trippable decimal rendering of a double. Used by every CSV
// writer so that re-running a command reproduces outputs byte for byte.
inline std::string format_double(double v) {
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == v) break;
  }
  return buf;
}

}  // namespace rvcap
