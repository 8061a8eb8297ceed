#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "polyadic/error.hpp"

namespace polyadic::detail {

struct Token {
  enum class Kind { Ident, Number, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  char punct = 0;
  std::size_t column = 0;  // 1-based
};

// Hand-rolled tokenizer shared by the word and term grammars. Identifiers
// are [A-Za-z_][A-Za-z0-9_]*, numbers are digit runs, everything else that
// is not whitespace is a one-character punctuation token.
class Lexer {
 public:
  explicit Lexer(std::string_view text, std::size_t line = 0) : text_(text), line_(line) {
    advance();
  }

  const Token& peek() const noexcept { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  bool at_punct(char c) const noexcept {
    return current_.kind == Token::Kind::Punct && current_.punct == c;
  }

  bool accept(char c) {
    if (!at_punct(c)) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::string where = line_ ? "line " + std::to_string(line_) + ", " : std::string();
    where += "column " + std::to_string(current_.column);
    throw Error(ErrorCode::ParseError, where + ": " + message,
                {std::int64_t(line_), std::int64_t(current_.column)});
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    current_ = Token{};
    current_.column = pos_ + 1;
    if (pos_ >= text_.size()) return;
    char c = text_[pos_];
    auto is_ident = [](char ch) {
      return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident(text_[pos_])) ++pos_;
      current_.kind = Token::Kind::Ident;
      current_.text = std::string(text_.substr(start, pos_ - start));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      // Digit-led names such as "0a" are identifiers too.
      if (pos_ < text_.size() && is_ident(text_[pos_])) {
        while (pos_ < text_.size() && is_ident(text_[pos_])) ++pos_;
        current_.kind = Token::Kind::Ident;
      } else {
        current_.kind = Token::Kind::Number;
      }
      current_.text = std::string(text_.substr(start, pos_ - start));
    } else {
      current_.kind = Token::Kind::Punct;
      current_.punct = c;
      current_.text = std::string(1, c);
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
  Token current_;
};

}  // namespace polyadic::detail
