// Copyright 2026 The annlint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "annlint/lexer.hpp"

#include <array>
#include <cctype>
#include <utility>

namespace annlint {

namespace {

struct KeywordEntry {
  std::string_view spelling;
  Keyword keyword;
};

constexpr std::array<KeywordEntry, 32> kKeywords = {{
    {"package", Keyword::kPackage},       {"annotation", Keyword::kAnnotation},
    {"require", Keyword::kRequire},       {"forbid", Keyword::kForbid},
    {"at", Keyword::kAt},                 {"all", Keyword::kAll},
    {"and", Keyword::kAnd},               {"or", Keyword::kOr},
    {"runtime", Keyword::kRuntime},       {"class", Keyword::kClass},
    {"source", Keyword::kSource},         {"Class", Keyword::kClassType},
    {"String", Keyword::kString},         {"int", Keyword::kInt},
    {"long", Keyword::kLong},             {"short", Keyword::kShort},
    {"float", Keyword::kFloat},           {"double", Keyword::kDouble},
    {"char", Keyword::kChar},             {"boolean", Keyword::kBoolean},
    {"byte", Keyword::kByte},             {"public", Keyword::kPublic},
    {"private", Keyword::kPrivate},       {"protected", Keyword::kProtected},
    {"final", Keyword::kFinal},           {"abstract", Keyword::kAbstract},
    {"static", Keyword::kStatic},         {"interface", Keyword::kInterface},
    {"method", Keyword::kMethod},         {"field", Keyword::kField},
    {"constructor", Keyword::kConstructor}, {"enum", Keyword::kEnum},
}};

Keyword lookup_keyword(std::string_view s) {
  for (const auto& e : kKeywords) {
    if (e.spelling == s) return e.keyword;
  }
  return Keyword::kNone;
}

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_ident_part(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  Lexer(std::string_view src, std::string_view file) : src_(src), file_(file) {}

  LexResult run() {
    while (true) {
      skip_trivia();
      if (at_end()) break;
      lex_one();
    }
    Token end;
    end.kind = TokenKind::kEnd;
    end.span = span_here(0);
    result_.tokens.push_back(std::move(end));
    return std::move(result_);
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
      ++col_;  // count code points, not UTF-8 continuation bytes
    }
    ++pos_;
  }

  Span span_here(std::uint32_t length) const {
    return Span{std::string(file_), line_, col_, length};
  }

  void skip_trivia() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  void emit(TokenKind kind, std::string text, Span span, Keyword kw = Keyword::kNone) {
    result_.tokens.push_back(Token{kind, kw, std::move(text), std::move(span)});
  }

  void error(std::string code, std::string message, Span span) {
    result_.diagnostics.push_back(make_error(std::move(code), std::move(message), std::move(span)));
  }

  void lex_one() {
    const std::size_t start = pos_;
    Span span = span_here(1);
    const char c = peek();

    if (is_ident_start(c)) {
      while (!at_end() && is_ident_part(peek())) advance();
      std::string text(src_.substr(start, pos_ - start));
      span.length = static_cast<std::uint32_t>(text.size());
      if (text == "true" || text == "false") {
        emit(TokenKind::kBool, std::move(text), std::move(span));
        return;
      }
      Keyword kw = lookup_keyword(text);
      emit(kw == Keyword::kNone ? TokenKind::kIdentifier : TokenKind::kKeyword, std::move(text),
           std::move(span), kw);
      return;
    }
    if (is_digit(c) || (c == '-' && is_digit(peek(1)))) {
      lex_number(start, std::move(span));
      return;
    }
    if (c == '"' || c == '\'') {
      lex_quoted(c, std::move(span));
      return;
    }

    TokenKind kind;
    switch (c) {
      case '@': kind = TokenKind::kAt; break;
      case '{': kind = TokenKind::kLBrace; break;
      case '}': kind = TokenKind::kRBrace; break;
      case '(': kind = TokenKind::kLParen; break;
      case ')': kind = TokenKind::kRParen; break;
      case '[': kind = TokenKind::kLBracket; break;
      case ']': kind = TokenKind::kRBracket; break;
      case ';': kind = TokenKind::kSemicolon; break;
      case ':': kind = TokenKind::kColon; break;
      case ',': kind = TokenKind::kComma; break;
      case '=': kind = TokenKind::kEquals; break;
      case '.': kind = TokenKind::kDot; break;
      default: {
        // Swallow a whole run of junk so random input yields one diagnostic
        // per run rather than one per byte.
        while (!at_end()) {
          char d = peek();
          if (is_ident_start(d) || is_digit(d) || d == ' ' || d == '\n' || d == '\t' ||
              std::string_view("@{}()[];:,=.\"'").find(d) != std::string_view::npos) {
            break;
          }
          advance();
        }
        span.length = static_cast<std::uint32_t>(pos_ - start);
        error("lex-illegal", "illegal character sequence", std::move(span));
        return;
      }
    }
    advance();
    emit(kind, std::string(1, c), std::move(span));
  }

  void lex_number(std::size_t start, Span span) {
    bool real = false;
    if (peek() == '-') advance();
    while (is_digit(peek())) advance();
    if (peek() == '.' && is_digit(peek(1))) {
      real = true;
      advance();
      while (is_digit(peek())) advance();
    }
    if ((peek() == 'e' || peek() == 'E') &&
        (is_digit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))))) {
      real = true;
      advance();
      if (peek() == '+' || peek() == '-') advance();
      while (is_digit(peek())) advance();
    }
    if (real && (peek() == 'f' || peek() == 'F' || peek() == 'd' || peek() == 'D')) {
      advance();
    } else if (!real && (peek() == 'l' || peek() == 'L')) {
      advance();
    }
    std::string text(src_.substr(start, pos_ - start));
    span.length = static_cast<std::uint32_t>(text.size());
    if (is_ident_part(peek())) {
      while (is_ident_part(peek())) advance();
      span.length = static_cast<std::uint32_t>(pos_ - start);
      error("lex-number", "malformed numeric literal", std::move(span));
      return;
    }
    emit(real ? TokenKind::kReal : TokenKind::kInt, std::move(text), std::move(span));
  }

  void lex_quoted(char quote, Span span) {
    const std::size_t start = pos_;
    advance();  // opening quote
    std::string text;
    bool closed = false;
    while (!at_end()) {
      char d = peek();
      if (d == '\n') break;
      if (d == quote) {
        advance();
        closed = true;
        break;
      }
      if (d == '\\') {
        text += d;
        advance();
        if (at_end() || peek() == '\n') break;
        d = peek();
      }
      text += d;
      advance();
    }
    span.length = static_cast<std::uint32_t>(pos_ - start);
    if (!closed) {
      error("lex-unterminated",
            quote == '"' ? "unterminated string literal" : "unterminated character literal",
            std::move(span));
      return;
    }
    emit(quote == '"' ? TokenKind::kString : TokenKind::kChar, std::move(text), std::move(span));
  }

  std::string_view src_;
  std::string_view file_;
  std::size_t pos_ = 0;
  std::uint32_t line_ = 1;
  std::uint32_t col_ = 1;
  LexResult result_;
};

}  // namespace

LexResult tokenize(std::string_view source, std::string_view file) {
  return Lexer(source, file).run();
}

std::string_view keyword_spelling(Keyword k) {
  for (const auto& e : kKeywords) {
    if (e.keyword == k) return e.spelling;
  }
  return {};
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::kIdentifier: return "id(" + t.text + ")";
    case TokenKind::kKeyword: return "kw_" + t.text;
    case TokenKind::kString: return "string(" + t.text + ")";
    case TokenKind::kChar: return "char(" + t.text + ")";
    case TokenKind::kInt: return "int(" + t.text + ")";
    case TokenKind::kReal: return "real(" + t.text + ")";
    case TokenKind::kBool: return "bool(" + t.text + ")";
    case TokenKind::kAt: return "at_sign";
    case TokenKind::kLBrace: return "lbrace";
    case TokenKind::kRBrace: return "rbrace";
    case TokenKind::kLParen: return "lparen";
    case TokenKind::kRParen: return "rparen";
    case TokenKind::kLBracket: return "lbracket";
    case TokenKind::kRBracket: return "rbracket";
    case TokenKind::kSemicolon: return "semicolon";
    case TokenKind::kColon: return "colon";
    case TokenKind::kComma: return "comma";
    case TokenKind::kEquals: return "eq";
    case TokenKind::kDot: return "dot";
    case TokenKind::kEnd: return "end";
  }
  return "?";
}

}  // namespace annlint
