#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vnumlab {

// Domain failure carrying a stable, script-friendly code such as
// "colon-by-zero" or "prime-not-associated".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Input that could not be parsed. line/column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(std::string code, const std::string& detail, std::size_t line = 0,
             std::size_t column = 0)
      : Error(std::move(code), detail + location_suffix(line, column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string location_suffix(std::size_t line, std::size_t column) {
    if (line == 0) return {};
    return " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace vnumlab
