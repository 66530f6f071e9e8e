#ifndef SEIFERT_PARSE_ERROR_HPP
#define SEIFERT_PARSE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace seifert {

/// Malformed textual input. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace seifert

#endif  // SEIFERT_PARSE_ERROR_HPP
