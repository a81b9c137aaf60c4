#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathweave {

// Shortest round-trip decimal form via to_chars: '.' separator, no locale,
// identical bytes for identical doubles on every platform.
inline std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw std::runtime_error("format_number failed");
  return std::string(buf, ptr);
}

inline std::string format_number(std::uint64_t value) {
  return std::to_string(value);
}

inline std::string format_number(std::int64_t value) {
  return std::to_string(value);
}

// Header row first, '\n' line endings, binary stream so output bytes are
// digest-stable.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header)
      : out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error("csv: cannot open " + path);
    write_cells(header);
  }

  void row(const std::vector<std::string>& cells) { write_cells(cells); }

  void close() { out_.close(); }

 private:
  void write_cells(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
  }

  std::ofstream out_;
};

}  // namespace pathweave
