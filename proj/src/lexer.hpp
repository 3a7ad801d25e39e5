#pragma once

// Shared character-level lexer for the Turtle subset and the query language.
// Internal to the library; not installed.

#include <string>
#include <string_view>

#include "oppo/turtle.hpp"

namespace oppo::detail {

enum class TokenKind {
  Eof,
  Dot,
  Semicolon,
  Comma,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Caret2,
  AtPrefix,
  IriRef,      // text = IRI body
  PName,       // text = prefix label, text2 = local name (may be empty)
  BlankLabel,  // text = label
  String,      // text = unescaped value
  Integer,     // text = lexical form
  Word,        // bare name: 'a', 'true', 'false', keywords
  Var,         // text = variable name (query mode only)
  Op,          // text = one of = != < <= > >= (query mode only)
};

struct Token {
  TokenKind kind = TokenKind::Eof;
  std::string text;
  std::string text2;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  /// In query mode '?' introduces variables, comparison operators are lexed,
  /// and '<' only opens an IRIREF when it plausibly starts one.
  Lexer(std::string_view source, bool query_mode);

  Token next();

  [[noreturn]] void fail(const Token& at, const std::string& message) const;
  [[noreturn]] void fail_here(const std::string& message) const;

 private:
  int peek() const;
  int peek2() const;
  void advance();
  void skip_trivia();

  Token lex_iriref(Token token);
  Token lex_string(Token token);
  Token lex_number(Token token);
  Token lex_name(Token token);

  std::string_view src_;
  bool query_mode_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace oppo::detail
