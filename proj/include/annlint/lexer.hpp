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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "annlint/diagnostic.hpp"

namespace annlint {

enum class TokenKind : std::uint8_t {
  kIdentifier,
  kKeyword,
  kString,
  kChar,
  kInt,
  kReal,
  kBool,
  kAt,
  kLBrace,
  kRBrace,
  kLParen,
  kRParen,
  kLBracket,
  kRBracket,
  kSemicolon,
  kColon,
  kComma,
  kEquals,
  kDot,
  kEnd,
};

// Reserved words. Whether `class` means a retention, a target type or (as
// `Class`) an attribute type is decided by the parser.
enum class Keyword : std::uint8_t {
  kNone,
  kPackage,
  kAnnotation,
  kRequire,
  kForbid,
  kAt,
  kAll,
  kAnd,
  kOr,
  kRuntime,
  kClass,
  kSource,
  kClassType,  // `Class`
  kString,     // `String`
  kInt,
  kLong,
  kShort,
  kFloat,
  kDouble,
  kChar,
  kBoolean,
  kByte,
  kPublic,
  kPrivate,
  kProtected,
  kFinal,
  kAbstract,
  kStatic,
  kInterface,
  kMethod,
  kField,
  kConstructor,
  kEnum,
};

struct Token {
  TokenKind kind = TokenKind::kEnd;
  Keyword keyword = Keyword::kNone;
  std::string text;  // lexeme; for string/char literals the text between quotes
  Span span;
};

struct LexResult {
  std::vector<Token> tokens;  // always terminated by a kEnd token
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

/// Splits Ann source into tokens. Whitespace and `//` comments are dropped.
/// Lexing continues past errors so that the parser can still report on the
/// rest of the file.
LexResult tokenize(std::string_view source, std::string_view file = "<input>");

/// Compact rendering used in tests and debugging: `kw_require`, `id(weight)`,
/// `real(52.3)`, `semicolon`, ...
std::string describe(const Token& t);

std::string_view keyword_spelling(Keyword k);

}  // namespace annlint
