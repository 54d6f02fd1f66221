#pragma once

// Tokenizer shared by the .ipo, .hda and .lang readers.

#include <cctype>
#include <string>
#include <string_view>

#include "hdakit/errors.hpp"

namespace hdakit::detail {

struct Token {
  enum class Kind { word, punct, end };
  Kind kind = Kind::end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t offset = 0;

  bool is(char c) const { return kind == Kind::punct && text.size() == 1 && text[0] == c; }
  bool is_word(std::string_view w) const { return kind == Kind::word && text == w; }
};

class Lexer {
 public:
  explicit Lexer(std::string_view src, std::size_t pos = 0) : src_(src), pos_(pos) {
    for (std::size_t i = 0; i < pos && i < src.size(); ++i) advance_position(src[i]);
  }

  const Token& peek() {
    if (!peeked_) {
      tok_ = scan();
      peeked_ = true;
    }
    return tok_;
  }

  Token next() {
    peek();
    peeked_ = false;
    return tok_;
  }

  Token expect(char c) {
    Token t = next();
    if (!t.is(c)) fail(t, std::string("expected '") + c + "'");
    return t;
  }

  std::string expect_word(std::string_view what) {
    Token t = next();
    if (t.kind != Token::Kind::word) fail(t, "expected " + std::string(what));
    return t.text;
  }

  void expect_keyword(std::string_view kw) {
    Token t = next();
    if (!t.is_word(kw)) fail(t, "expected '" + std::string(kw) + "'");
  }

  bool accept(char c) {
    if (peek().is(c)) {
      next();
      return true;
    }
    return false;
  }

  /// Offset just past the last consumed token.
  std::size_t offset() const { return peeked_ ? tok_.offset : pos_; }

  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    const std::string got = t.kind == Token::Kind::end ? "end of input" : "'" + t.text + "'";
    throw ParseError(std::to_string(t.line) + ":" + std::to_string(t.column) + ": " + msg +
                     ", got " + got);
  }

 private:
  static bool is_punct(char c) {
    switch (c) {
      case '{': case '}': case '[': case ']': case '(': case ')':
      case ':': case ';': case ',': case '<': case '=':
        return true;
      default:
        return false;
    }
  }

  void advance_position(char c) {
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
  }

  void bump() { advance_position(src_[pos_++]); }

  Token scan() {
    for (;;) {
      while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])) != 0) bump();
      if (pos_ < src_.size() && src_[pos_] == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
        continue;
      }
      break;
    }
    Token t;
    t.line = line_;
    t.column = column_;
    t.offset = pos_;
    if (pos_ >= src_.size()) return t;
    if (is_punct(src_[pos_])) {
      t.kind = Token::Kind::punct;
      t.text = std::string(1, src_[pos_]);
      bump();
      return t;
    }
    t.kind = Token::Kind::word;
    while (pos_ < src_.size() && !is_punct(src_[pos_]) && src_[pos_] != '#' &&
           std::isspace(static_cast<unsigned char>(src_[pos_])) == 0) {
      t.text.push_back(src_[pos_]);
      bump();
    }
    return t;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token tok_;
  bool peeked_ = false;
};

}  // namespace hdakit::detail
