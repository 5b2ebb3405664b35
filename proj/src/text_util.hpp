#pragma once

#include "gaplab/errors.hpp"

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gaplab::detail {

struct TextLine {
  std::size_t number; // 1-based
  std::string_view text;
};

// Non-blank lines that do not start with '#', with surrounding whitespace trimmed.
inline std::vector<TextLine> content_lines(std::string_view text) {
  std::vector<TextLine> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto end = text.find('\n');
    auto line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
      continue;
    }
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (line.front() == '#') {
      continue;
    }
    lines.push_back({number, line});
  }
  return lines;
}

inline std::vector<std::string_view> split_tokens(std::string_view line, std::string_view separators) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const auto start = line.find_first_not_of(separators, pos);
    if (start == std::string_view::npos) {
      break;
    }
    const auto stop = line.find_first_of(separators, start);
    tokens.push_back(line.substr(start, stop == std::string_view::npos ? line.npos : stop - start));
    pos = stop == std::string_view::npos ? line.size() : stop;
  }
  return tokens;
}

inline std::size_t parse_index(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, "expected a nonnegative integer, got '" + std::string(token) + "'");
  }
  return value;
}

inline bool is_decimal(std::string_view token) {
  return !token.empty() && token.find_first_not_of("0123456789") == std::string_view::npos;
}

} // namespace gaplab::detail
