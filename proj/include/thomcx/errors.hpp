#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thomcx {

/// Malformed input text, with the 0-based offset where parsing failed.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A malformed coefficient-table file.
class table_format_error : public std::runtime_error {
 public:
  table_format_error(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace thomcx
