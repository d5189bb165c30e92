#pragma once

// Shared helpers for the line-oriented text formats.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ordram/error.hpp"

namespace ordram::detail {

/// Splits LF-terminated text. A missing final LF or a CR is a format error.
inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  if (text.empty()) return lines;
  std::size_t start = 0;
  int lineno = 1;
  while (start < text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string_view::npos) throw ParseError(lineno, "missing final newline");
    auto line = text.substr(start, end - start);
    if (line.find('\r') != std::string_view::npos) throw ParseError(lineno, "carriage return");
    lines.push_back(line);
    start = end + 1;
    ++lineno;
  }
  return lines;
}

inline int parse_int(std::string_view s, int lineno) {
  int value = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || s.empty()) {
    throw ParseError(lineno, "expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

inline int parse_count_field(std::string_view line, std::string_view key, int lineno) {
  if (line.substr(0, key.size()) != key) {
    throw ParseError(lineno, "expected '" + std::string(key) + "<count>'");
  }
  const int value = parse_int(line.substr(key.size()), lineno);
  if (value < 0) throw ParseError(lineno, "count must be non-negative");
  return value;
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace ordram::detail
