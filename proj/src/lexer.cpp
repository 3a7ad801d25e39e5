#include "lexer.hpp"

#include <cctype>

namespace oppo::detail {

namespace {

bool is_name_start(int c) { return std::isalpha(c) != 0; }
bool is_name_char(int c) { return std::isalnum(c) != 0 || c == '_' || c == '-'; }
bool is_local_start(int c) { return std::isalnum(c) != 0 || c == '_'; }

}  // namespace

Lexer::Lexer(std::string_view source, bool query_mode)
    : src_(source), query_mode_(query_mode) {}

int Lexer::peek() const { return pos_ < src_.size() ? static_cast<unsigned char>(src_[pos_]) : -1; }

int Lexer::peek2() const {
  return pos_ + 1 < src_.size() ? static_cast<unsigned char>(src_[pos_ + 1]) : -1;
}

void Lexer::advance() {
  if (pos_ >= src_.size()) return;
  if (src_[pos_] == '\n') {
    ++line_;
    column_ = 1;
  } else {
    ++column_;
  }
  ++pos_;
}

void Lexer::skip_trivia() {
  while (true) {
    int c = peek();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
    } else if (c == '#') {
      while (peek() != -1 && peek() != '\n') advance();
    } else {
      return;
    }
  }
}

void Lexer::fail(const Token& at, const std::string& message) const {
  throw turtle::ParseError(turtle::ParseDiagnostic{at.line, at.column, message});
}

void Lexer::fail_here(const std::string& message) const {
  throw turtle::ParseError(turtle::ParseDiagnostic{line_, column_, message});
}

Token Lexer::next() {
  skip_trivia();
  Token token;
  token.line = line_;
  token.column = column_;
  int c = peek();
  switch (c) {
    case -1:
      token.kind = TokenKind::Eof;
      return token;
    case '.':
      advance();
      token.kind = TokenKind::Dot;
      return token;
    case ';':
      advance();
      token.kind = TokenKind::Semicolon;
      return token;
    case ',':
      advance();
      token.kind = TokenKind::Comma;
      return token;
    case '"':
      return lex_string(token);
    case '^':
      advance();
      if (peek() != '^') fail(token, "expected '^^'");
      advance();
      token.kind = TokenKind::Caret2;
      return token;
    case '@': {
      advance();
      std::string word;
      while (is_name_char(peek())) {
        word += static_cast<char>(peek());
        advance();
      }
      if (word != "prefix") fail(token, "unknown directive '@" + word + "'");
      token.kind = TokenKind::AtPrefix;
      return token;
    }
    case '_': {
      advance();
      if (peek() != ':') fail(token, "expected ':' after '_' in blank node label");
      advance();
      if (!is_local_start(peek())) fail(token, "blank node label must not be empty");
      while (is_name_char(peek())) {
        token.text += static_cast<char>(peek());
        advance();
      }
      token.kind = TokenKind::BlankLabel;
      return token;
    }
    default:
      break;
  }

  if (query_mode_) {
    switch (c) {
      case '{':
        advance();
        token.kind = TokenKind::LBrace;
        return token;
      case '}':
        advance();
        token.kind = TokenKind::RBrace;
        return token;
      case '(':
        advance();
        token.kind = TokenKind::LParen;
        return token;
      case ')':
        advance();
        token.kind = TokenKind::RParen;
        return token;
      case '?': {
        advance();
        if (!is_name_start(peek())) fail(token, "variable name must start with a letter");
        while (std::isalnum(peek()) != 0 || peek() == '_') {
          token.text += static_cast<char>(peek());
          advance();
        }
        token.kind = TokenKind::Var;
        return token;
      }
      case '=':
        advance();
        token.kind = TokenKind::Op;
        token.text = "=";
        return token;
      case '!':
        advance();
        if (peek() != '=') fail(token, "expected '!='");
        advance();
        token.kind = TokenKind::Op;
        token.text = "!=";
        return token;
      case '>':
        advance();
        token.kind = TokenKind::Op;
        token.text = ">";
        if (peek() == '=') {
          advance();
          token.text = ">=";
        }
        return token;
      case '<': {
        // '<' starts an IRIREF only when what follows can start an IRI.
        int n = peek2();
        if (n == '=' || n == ' ' || n == '\t' || n == '\r' || n == '\n' || n == '?' ||
            std::isdigit(n) != 0 || n == '+' || n == '-' || n == -1) {
          advance();
          token.kind = TokenKind::Op;
          token.text = "<";
          if (peek() == '=') {
            advance();
            token.text = "<=";
          }
          return token;
        }
        return lex_iriref(token);
      }
      default:
        break;
    }
  } else if (c == '<') {
    return lex_iriref(token);
  }

  if (c == '+' || c == '-' || std::isdigit(c) != 0) return lex_number(token);
  if (is_name_start(c)) return lex_name(token);

  fail(token, std::string("unexpected character '") + static_cast<char>(c) + "'");
}

Token Lexer::lex_iriref(Token token) {
  advance();  // '<'
  while (true) {
    int c = peek();
    if (c == '>') {
      advance();
      break;
    }
    if (c == -1 || c == '\n' || c == ' ' || c == '\t' || c == '\r') {
      fail(token, "unterminated IRI reference");
    }
    token.text += static_cast<char>(c);
    advance();
  }
  if (token.text.empty()) fail(token, "empty IRI reference");
  token.kind = TokenKind::IriRef;
  return token;
}

Token Lexer::lex_string(Token token) {
  advance();  // '"'
  while (true) {
    int c = peek();
    if (c == '"') {
      advance();
      break;
    }
    if (c == -1 || c == '\n') fail(token, "unterminated string literal");
    if (c == '\\') {
      advance();
      int e = peek();
      switch (e) {
        case '\\': token.text += '\\'; break;
        case '"': token.text += '"'; break;
        case 'n': token.text += '\n'; break;
        case 'r': token.text += '\r'; break;
        case 't': token.text += '\t'; break;
        default: fail_here("unknown escape sequence in string literal");
      }
      advance();
    } else {
      token.text += static_cast<char>(c);
      advance();
    }
  }
  token.kind = TokenKind::String;
  return token;
}

Token Lexer::lex_number(Token token) {
  int c = peek();
  if (c == '+' || c == '-') {
    token.text += static_cast<char>(c);
    advance();
  }
  if (std::isdigit(peek()) == 0) fail(token, "expected digits after sign");
  while (std::isdigit(peek()) != 0) {
    token.text += static_cast<char>(peek());
    advance();
  }
  token.kind = TokenKind::Integer;
  return token;
}

Token Lexer::lex_name(Token token) {
  std::string word;
  while (is_name_char(peek())) {
    word += static_cast<char>(peek());
    advance();
  }
  if (peek() != ':') {
    token.kind = TokenKind::Word;
    token.text = std::move(word);
    return token;
  }
  advance();  // ':'
  token.kind = TokenKind::PName;
  token.text = std::move(word);
  while (is_name_char(peek())) {
    token.text2 += static_cast<char>(peek());
    advance();
  }
  return token;
}

}  // namespace oppo::detail
