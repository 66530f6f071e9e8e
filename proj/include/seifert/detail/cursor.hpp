#ifndef SEIFERT_DETAIL_CURSOR_HPP
#define SEIFERT_DETAIL_CURSOR_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "seifert/parse_error.hpp"

namespace seifert::detail {

/// Character cursor with line/column bookkeeping for the small hand-written
/// grammars of band words and fronts. '#' starts a comment to end of line.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (pos_ >= text_.size()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }

  void expect_word(std::string_view word) {
    skip_space();
    for (char c : word) {
      if (peek() != c) fail("expected '" + std::string(word) + "'" + found());
      advance();
    }
  }

  /// Nonnegative decimal integer; no sign, no whitespace inside.
  long long number() {
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number" + found());
    long long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000'000) fail("number too large");
      advance();
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, column_, what); }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string found() const {
    if (pos_ >= text_.size()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace seifert::detail

#endif  // SEIFERT_DETAIL_CURSOR_HPP
