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

#include "annlint/parser.hpp"

#include <array>
#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <span>
#include <string>

namespace annlint {

namespace {

constexpr std::string_view kProductions[] = {
    "PackageDecl",
    "Annotation",
    "Retention:runtime",
    "Retention:class",
    "Retention:source",
    "Attribute:ClassAtt",
    "Attribute:StringAtt",
    "Attribute:ExternalAtt",
    "Attribute:IntAtt",
    "Attribute:LongAtt",
    "Attribute:ShortAtt",
    "Attribute:FloatAtt",
    "Attribute:DoubleAtt",
    "Attribute:ByteAtt",
    "Attribute:CharAtt",
    "Attribute:BooleanAtt",
    "Attribute:array",
    "Attribute:default",
    "ClassDefault",
    "EnumDefault",
    "AnnDefault:marker",
    "AnnDefault:single",
    "AnnDefault:keyvalues",
    "AnnID",
    "KeyValue",
    "AnnArray:empty",
    "AnnArray:elements",
    "AnnBasicValue:FLOAT",
    "AnnBasicValue:INT",
    "AnnBasicValue:BOOLEAN",
    "AnnBasicValue:CHAR",
    "AnnBasicValue:STRING",
    "AnnBasicValue:EnumDefault",
    "AnnBasicValue:AnnDefault",
    "Constraints",
    "Require:unscoped",
    "Require:scoped",
    "Require:all",
    "Require:or",
    "Forbid:unscoped",
    "Forbid:scoped",
    "Forbid:and",
    "Statement:AnnID",
    "Statement:TgtStatement",
    "TgtStatement:AnnID",
    "Modifiers:final",
    "Modifiers:abstract",
    "Modifiers:static",
    "VisibMod:public",
    "VisibMod:private",
    "VisibMod:protected",
    "VisibMod:package",
    "TargetType:interface",
    "TargetType:class",
    "TargetType:annotation",
    "TargetType:method",
    "TargetType:field",
    "TargetType:constructor",
    "TargetType:enum",
};

std::optional<TargetType> target_type_of(Keyword k) {
  switch (k) {
    case Keyword::kInterface: return TargetType::kInterface;
    case Keyword::kClass: return TargetType::kClass;
    case Keyword::kAnnotation: return TargetType::kAnnotation;
    case Keyword::kMethod: return TargetType::kMethod;
    case Keyword::kField: return TargetType::kField;
    case Keyword::kConstructor: return TargetType::kConstructor;
    case Keyword::kEnum: return TargetType::kEnum;
    default: return std::nullopt;
  }
}

std::optional<Visibility> visibility_of(Keyword k) {
  switch (k) {
    case Keyword::kPublic: return Visibility::kPublic;
    case Keyword::kPrivate: return Visibility::kPrivate;
    case Keyword::kProtected: return Visibility::kProtected;
    case Keyword::kPackage: return Visibility::kPackage;
    default: return std::nullopt;
  }
}

struct AttrKindEntry {
  Keyword keyword;
  AttributeKind kind;
  std::string_view production;
};

constexpr std::array<AttrKindEntry, 10> kAttrKinds = {{
    {Keyword::kClassType, AttributeKind::kClassRef, "Attribute:ClassAtt"},
    {Keyword::kString, AttributeKind::kString, "Attribute:StringAtt"},
    {Keyword::kInt, AttributeKind::kInt, "Attribute:IntAtt"},
    {Keyword::kLong, AttributeKind::kLong, "Attribute:LongAtt"},
    {Keyword::kShort, AttributeKind::kShort, "Attribute:ShortAtt"},
    {Keyword::kFloat, AttributeKind::kFloat, "Attribute:FloatAtt"},
    {Keyword::kDouble, AttributeKind::kDouble, "Attribute:DoubleAtt"},
    {Keyword::kChar, AttributeKind::kChar, "Attribute:CharAtt"},
    {Keyword::kBoolean, AttributeKind::kBoolean, "Attribute:BooleanAtt"},
    {Keyword::kByte, AttributeKind::kByte, "Attribute:ByteAtt"},
}};

struct SyntaxError {};

class Parser {
 public:
  Parser(std::span<const Token> tokens, std::string_view path, ProductionCoverage* coverage)
      : toks_(tokens), cov_(coverage) {
    result_.file.source_path = std::string(path);
  }

  ParseResult run() {
    if (toks_.empty() || toks_.back().kind != TokenKind::kEnd) {
      // parse() may be handed a raw slice; give it a terminator.
      owned_.assign(toks_.begin(), toks_.end());
      Token end;
      end.kind = TokenKind::kEnd;
      if (!owned_.empty()) end.span = owned_.back().span;
      owned_.push_back(end);
      toks_ = owned_;
    }
    parse_file();
    return std::move(result_);
  }

 private:
  // --- token helpers ------------------------------------------------------

  const Token& cur() const { return toks_[pos_]; }
  const Token& peek(std::size_t ahead) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool at_end() const { return cur().kind == TokenKind::kEnd; }
  bool is(TokenKind k) const { return cur().kind == k; }
  bool is_kw(Keyword k) const { return cur().kind == TokenKind::kKeyword && cur().keyword == k; }

  const Token& advance() {
    const Token& t = toks_[pos_];
    if (!at_end()) ++pos_;
    return t;
  }

  void hit(std::string_view p) {
    if (cov_) cov_->hit(p);
  }

  [[noreturn]] void fail(std::string code, std::string message) {
    error_at(cur(), std::move(code), std::move(message));
    throw SyntaxError{};
  }

  void error_at(const Token& t, std::string code, std::string message) {
    result_.diagnostics.push_back(make_error(std::move(code), std::move(message), t.span));
  }

  std::string found() const {
    if (at_end()) return "end of input";
    return "'" + cur().text + "'";
  }

  const Token& expect(TokenKind k, std::string_view what) {
    if (!is(k)) fail("syntax", "expected " + std::string(what) + ", found " + found());
    return advance();
  }

  // Identifiers; keywords are accepted where only a name can appear.
  bool is_name() const { return is(TokenKind::kIdentifier) || is(TokenKind::kKeyword); }

  std::string expect_name(std::string_view what) {
    if (!is_name()) fail("syntax", "expected " + std::string(what) + ", found " + found());
    return advance().text;
  }

  // Skip to just past the next `;` at this nesting level, or stop before `}`.
  void sync_statement() {
    int depth = 0;
    while (!at_end()) {
      if (is(TokenKind::kLBrace) || is(TokenKind::kLParen)) {
        ++depth;
      } else if (is(TokenKind::kRParen)) {
        if (depth > 0) --depth;
      } else if (is(TokenKind::kRBrace)) {
        if (depth == 0) return;
        --depth;
      } else if (is(TokenKind::kSemicolon) && depth == 0) {
        advance();
        return;
      }
      advance();
    }
  }

  bool at_annotation_start() const {
    if (is_kw(Keyword::kAnnotation)) return true;
    if (is_kw(Keyword::kRuntime) || is_kw(Keyword::kClass) || is_kw(Keyword::kSource)) {
      const Token& n = peek(1);
      return n.kind == TokenKind::kKeyword && n.keyword == Keyword::kAnnotation;
    }
    return false;
  }

  // --- file ---------------------------------------------------------------

  void parse_file() {
    if (is_kw(Keyword::kPackage)) {
      try {
        parse_package();
      } catch (const SyntaxError&) {
        sync_statement();
      }
    }
    while (!at_end()) {
      if (!at_annotation_start()) {
        error_at(cur(), "syntax", "expected an annotation declaration, found " + found());
        advance();
        while (!at_end() && !at_annotation_start()) advance();
        continue;
      }
      parse_annotation();
    }
  }

  void parse_package() {
    advance();
    std::string name = expect_name("package name");
    while (is(TokenKind::kDot)) {
      advance();
      name += '.';
      name += expect_name("package name");
    }
    expect(TokenKind::kSemicolon, "';'");
    hit("PackageDecl");
    result_.file.package_name = std::move(name);
  }

  void parse_annotation() {
    AnnotationDef def;
    def.location = cur().span;
    if (is_kw(Keyword::kRuntime)) {
      def.retention = Retention::kRuntime;
      hit("Retention:runtime");
      advance();
    } else if (is_kw(Keyword::kClass)) {
      def.retention = Retention::kClass;
      hit("Retention:class");
      advance();
    } else if (is_kw(Keyword::kSource)) {
      def.retention = Retention::kSource;
      hit("Retention:source");
      advance();
    }
    advance();  // `annotation`
    try {
      def.name = expect_name("annotation name");
      expect(TokenKind::kLBrace, "'{'");
    } catch (const SyntaxError&) {
      // Header is unusable; skip to the next declaration.
      while (!at_end() && !at_annotation_start()) advance();
      return;
    }
    hit("Annotation");
    def.package_name = result_.file.package_name.value_or("");

    bool in_constraints = false;
    while (!at_end() && !is(TokenKind::kRBrace)) {
      if (at_annotation_start()) break;  // missing `}`
      try {
        if (is_kw(Keyword::kRequire) || is_kw(Keyword::kForbid) || is_kw(Keyword::kAt)) {
          if (!in_constraints) hit("Constraints");
          in_constraints = true;
          def.constraints.push_back(parse_constraint());
        } else {
          if (in_constraints) {
            error_at(cur(), "syntax", "attributes must be declared before constraints");
          }
          def.attributes.push_back(parse_attribute());
        }
      } catch (const SyntaxError&) {
        sync_statement();
      }
    }
    if (is(TokenKind::kRBrace)) {
      advance();
    } else {
      error_at(cur(), "syntax", "expected '}' closing annotation " + def.name);
    }
    result_.file.annotations.push_back(std::move(def));
  }

  // --- attributes ---------------------------------------------------------

  AttributeDef parse_attribute() {
    AttributeDef attr;
    attr.location = cur().span;
    bool found_kind = false;
    if (is(TokenKind::kKeyword)) {
      for (const auto& e : kAttrKinds) {
        if (e.keyword == cur().keyword) {
          attr.kind = e.kind;
          hit(e.production);
          found_kind = true;
          break;
        }
      }
      if (!found_kind) fail("syntax", "expected an attribute type or constraint, found " + found());
      advance();
    } else if (is(TokenKind::kIdentifier)) {
      attr.kind = AttributeKind::kExternal;
      attr.external_type = advance().text;
      hit("Attribute:ExternalAtt");
    } else {
      fail("syntax", "expected an attribute type or constraint, found " + found());
    }
    if (is(TokenKind::kLBracket)) {
      advance();
      expect(TokenKind::kRBracket, "']'");
      attr.is_array = true;
      hit("Attribute:array");
    }
    attr.location = cur().span;
    attr.name = expect_name("attribute name");
    if (is(TokenKind::kEquals)) {
      advance();
      hit("Attribute:default");
      attr.default_value = parse_value(/*allow_array=*/true);
    }
    expect(TokenKind::kSemicolon, "';'");
    return attr;
  }

  std::int64_t parse_int(const Token& t) {
    std::string_view s = t.text;
    if (!s.empty() && (s.back() == 'l' || s.back() == 'L')) s.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      error_at(t, "literal-range", "integer literal out of 64-bit range: " + t.text);
    }
    return v;
  }

  double parse_real(const Token& t) {
    std::string s = t.text;
    if (!s.empty() && (s.back() == 'f' || s.back() == 'F' || s.back() == 'd' || s.back() == 'D')) {
      s.pop_back();
    }
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (errno == ERANGE || end != s.c_str() + s.size()) {
      error_at(t, "literal-range", "real literal out of range: " + t.text);
    }
    return v;
  }

  DefaultValue parse_value(bool allow_array) {
    DefaultValue v;
    v.location = cur().span;
    switch (cur().kind) {
      case TokenKind::kString:
        hit("AnnBasicValue:STRING");
        v.value = StringLiteral{advance().text};
        return v;
      case TokenKind::kChar:
        hit("AnnBasicValue:CHAR");
        v.value = CharLiteral{advance().text};
        return v;
      case TokenKind::kInt: {
        hit("AnnBasicValue:INT");
        const Token& t = advance();
        v.value = IntegerLiteral{parse_int(t), t.text};
        return v;
      }
      case TokenKind::kReal: {
        hit("AnnBasicValue:FLOAT");
        const Token& t = advance();
        v.value = RealLiteral{parse_real(t), t.text};
        return v;
      }
      case TokenKind::kBool:
        hit("AnnBasicValue:BOOLEAN");
        v.value = BoolLiteral{advance().text == "true"};
        return v;
      case TokenKind::kAt:
        hit("AnnBasicValue:AnnDefault");
        v.value = parse_ann_literal();
        return v;
      case TokenKind::kLBrace: {
        if (!allow_array) fail("syntax", "nested array values are not allowed");
        advance();
        ArrayLiteral arr;
        if (is(TokenKind::kRBrace)) {
          hit("AnnArray:empty");
        } else {
          hit("AnnArray:elements");
          arr.elements.push_back(parse_value(false));
          while (is(TokenKind::kComma)) {
            advance();
            arr.elements.push_back(parse_value(false));
          }
        }
        expect(TokenKind::kRBrace, "'}'");
        v.value = std::move(arr);
        return v;
      }
      case TokenKind::kIdentifier:
      case TokenKind::kKeyword: {
        std::string type = advance().text;
        expect(TokenKind::kDot, "'.'");
        if (is_kw(Keyword::kClass)) {
          advance();
          hit("ClassDefault");
          v.value = ClassLiteral{std::move(type)};
          return v;
        }
        std::string constant = expect_name("enum constant or 'class'");
        hit("EnumDefault");
        hit("AnnBasicValue:EnumDefault");
        v.value = EnumRef{std::move(type), std::move(constant)};
        return v;
      }
      default:
        fail("syntax", "expected a value, found " + found());
    }
  }

  AnnLiteral parse_ann_literal() {
    advance();  // `@`
    AnnLiteral lit;
    lit.name = expect_name("annotation name");
    hit("AnnID");
    if (!is(TokenKind::kLParen)) {
      hit("AnnDefault:marker");
      return lit;
    }
    advance();
    if (is_name() && peek(1).kind == TokenKind::kEquals) {
      lit.form = AnnLiteral::Form::kKeyValues;
      hit("AnnDefault:keyvalues");
      while (true) {
        KeyValue kv;
        kv.key = expect_name("attribute name");
        expect(TokenKind::kEquals, "'='");
        kv.value = parse_value(true);
        hit("KeyValue");
        lit.members.push_back(std::move(kv));
        if (!is(TokenKind::kComma)) break;
        advance();
      }
    } else {
      lit.form = AnnLiteral::Form::kSingle;
      hit("AnnDefault:single");
      lit.members.push_back(KeyValue{"value", parse_value(true)});
    }
    expect(TokenKind::kRParen, "')'");
    return lit;
  }

  // --- constraints --------------------------------------------------------

  ConstraintDef parse_constraint() {
    ConstraintDef c;
    c.location = cur().span;
    if (is_kw(Keyword::kAt)) {
      advance();
      if (!is(TokenKind::kKeyword) || !target_type_of(cur().keyword)) {
        fail("syntax", "expected a target type after 'at', found " + found());
      }
      c.scope = target_type_of(cur().keyword);
      hit("TargetType:" + std::string(to_string(*c.scope)));
      advance();
      expect(TokenKind::kColon, "':'");
      if (is_kw(Keyword::kRequire)) {
        c.kind = ConstraintKind::kRequire;
        hit("Require:scoped");
        advance();
        if (is_kw(Keyword::kAll)) {
          advance();
          c.all_quantifier = true;
          hit("Require:all");
        }
      } else if (is_kw(Keyword::kForbid)) {
        c.kind = ConstraintKind::kForbid;
        hit("Forbid:scoped");
        advance();
      } else {
        fail("syntax", "expected 'require' or 'forbid', found " + found());
      }
    } else if (is_kw(Keyword::kRequire)) {
      c.kind = ConstraintKind::kRequire;
      hit("Require:unscoped");
      advance();
    } else {
      c.kind = ConstraintKind::kForbid;
      hit("Forbid:unscoped");
      advance();
    }

    const Keyword joiner = c.kind == ConstraintKind::kRequire ? Keyword::kOr : Keyword::kAnd;
    const Keyword wrong = c.kind == ConstraintKind::kRequire ? Keyword::kAnd : Keyword::kOr;
    c.statements.push_back(parse_statement());
    while (true) {
      if (is_kw(joiner)) {
        hit(c.kind == ConstraintKind::kRequire ? "Require:or" : "Forbid:and");
        advance();
        c.statements.push_back(parse_statement());
      } else if (is_kw(wrong)) {
        fail("syntax", c.kind == ConstraintKind::kRequire
                           ? "statements of a require are joined with 'or'"
                           : "statements of a forbid are joined with 'and'");
      } else {
        break;
      }
    }
    expect(TokenKind::kSemicolon, "';'");
    return c;
  }

  Statement parse_statement() {
    Statement s;
    s.location = cur().span;
    if (is(TokenKind::kAt)) {
      advance();
      s.ann_ref = expect_name("annotation name");
      hit("AnnID");
    }
    bool any_modifier = false;
    while (is(TokenKind::kKeyword)) {
      const Token& t = cur();
      if (auto vis = visibility_of(t.keyword)) {
        if (s.modifiers.visibility) {
          error_at(t, "duplicate-modifier", "more than one visibility modifier");
        }
        s.modifiers.visibility = vis;
        hit("VisibMod:" + t.text);
      } else if (t.keyword == Keyword::kFinal || t.keyword == Keyword::kAbstract ||
                 t.keyword == Keyword::kStatic) {
        bool& flag = t.keyword == Keyword::kFinal      ? s.modifiers.is_final
                     : t.keyword == Keyword::kAbstract ? s.modifiers.is_abstract
                                                       : s.modifiers.is_static;
        if (flag) error_at(t, "duplicate-modifier", "modifier '" + t.text + "' repeated");
        flag = true;
        hit("Modifiers:" + t.text);
      } else {
        break;
      }
      any_modifier = true;
      advance();
    }
    if (is(TokenKind::kKeyword) && target_type_of(cur().keyword)) {
      s.target_type = target_type_of(cur().keyword);
      hit("TargetType:" + cur().text);
      advance();
      hit("Statement:TgtStatement");
      if (s.ann_ref) hit("TgtStatement:AnnID");
      return s;
    }
    if (s.ann_ref && !any_modifier) {
      hit("Statement:AnnID");
      return s;
    }
    fail("syntax", "expected a target type, found " + found());
  }

  std::span<const Token> toks_;
  std::vector<Token> owned_;
  std::size_t pos_ = 0;
  ProductionCoverage* cov_;
  ParseResult result_;
};

}  // namespace

std::size_t ProductionCoverage::count(std::string_view production) const {
  auto it = hits_.find(production);
  return it == hits_.end() ? 0 : it->second;
}

std::span<const std::string_view> ProductionCoverage::all_productions() { return kProductions; }

std::vector<std::string_view> ProductionCoverage::missing() const {
  std::vector<std::string_view> out;
  for (std::string_view p : kProductions) {
    if (count(p) == 0) out.push_back(p);
  }
  return out;
}

ParseResult parse(std::span<const Token> tokens, std::string_view source_path,
                  ProductionCoverage* coverage) {
  return Parser(tokens, source_path, coverage).run();
}

ParseResult parse_source(std::string_view source, std::string_view source_path,
                         ProductionCoverage* coverage) {
  LexResult lex = tokenize(source, source_path);
  ParseResult r = parse(lex.tokens, source_path, coverage);
  lex.diagnostics.insert(lex.diagnostics.end(), r.diagnostics.begin(), r.diagnostics.end());
  r.diagnostics = std::move(lex.diagnostics);
  return r;
}

}  // namespace annlint
