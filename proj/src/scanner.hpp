#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "refine/error.hpp"

namespace refine::detail {

// Character cursor shared by the text formats. Tracks 1-based line and
// column; `#` starts a comment that runs to the end of the line.
class Scanner {
 public:
  Scanner(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

  bool at_end() const noexcept { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const noexcept {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (at_end()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  // Spaces, tabs, carriage returns and comments; stops at a newline.
  void skip_blank() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  // Blanks and newlines.
  void skip_space() {
    for (;;) {
      skip_blank();
      if (peek() != '\n') return;
      advance();
    }
  }

  bool at_eol() {
    skip_blank();
    return at_end() || peek() == '\n';
  }

  void expect_eol() {
    if (!at_eol()) fail("unexpected '" + std::string(1, peek()) + "' before end of line");
  }

  bool accept(char c) {
    skip_blank();
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }

  // Accepts `word` if it appears next as a whole token.
  bool accept_word(std::string_view word) {
    skip_blank();
    if (text_.substr(pos_, word.size()) != word) return false;
    if (pos_ + word.size() < text_.size() && is_token_char(text_[pos_ + word.size()])) return false;
    for (std::size_t i = 0; i < word.size(); ++i) advance();
    return true;
  }

  std::size_t read_uint(std::string_view what) {
    skip_blank();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected " + std::string(what) + found());
    std::size_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::size_t>(peek() - '0');
      if (value > 100'000'000) fail(std::string(what) + " is too large");
      advance();
    }
    return value;
  }

  // A bare token: a maximal run of characters that are neither whitespace
  // nor punctuation of the formats.
  std::string read_token(std::string_view what) {
    skip_blank();
    std::string out;
    while (!at_end() && is_token_char(peek()) && !(peek() == '-' && peek(1) == '>')) {
      out += peek();
      advance();
    }
    if (out.empty()) fail("expected " + std::string(what) + found());
    return out;
  }

  // A token or a double-quoted string (no escapes).
  std::string read_label(std::string_view what) {
    skip_blank();
    if (peek() != '"') return read_token(what);
    advance();
    std::string out;
    while (!at_end() && peek() != '"' && peek() != '\n') {
      out += peek();
      advance();
    }
    if (peek() != '"') fail("unterminated quoted label");
    advance();
    return out;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(source_, line_, column_, message); }
  [[noreturn]] void fail_at(std::size_t line, std::size_t column, const std::string& message) const {
    throw ParseError(source_, line, column, message);
  }

  static bool is_token_char(char c) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '\0') return false;
    static constexpr std::string_view punctuation = "\"(){}[],|@#;:";
    return punctuation.find(c) == std::string_view::npos;
  }

 private:
  std::string found() const {
    if (at_end()) return ", found end of input";
    if (peek() == '\n') return ", found end of line";
    return ", found '" + std::string(1, peek()) + "'";
  }

  std::string_view text_;
  std::string source_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace refine::detail
