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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "annlint/diagnostic.hpp"
#include "annlint/types.hpp"

namespace annlint {

enum class Retention : std::uint8_t { kUnspecified, kRuntime, kClass, kSource };

std::string_view to_string(Retention r);

enum class AttributeKind : std::uint8_t {
  kClassRef,
  kString,
  kInt,
  kLong,
  kShort,
  kFloat,
  kDouble,
  kChar,
  kBoolean,
  kByte,
  kExternal,
};

// --- default values -------------------------------------------------------

struct DefaultValue;
struct KeyValue;

struct ClassLiteral {
  std::string type_name;
  bool operator==(const ClassLiteral&) const = default;
};

struct EnumRef {
  std::string type_name;
  std::string constant;
  bool operator==(const EnumRef&) const = default;
};

// Literal text is kept verbatim so printing and Java emission reproduce it.
struct IntegerLiteral {
  std::int64_t value = 0;
  std::string text;
  bool operator==(const IntegerLiteral&) const = default;
};

struct RealLiteral {
  double value = 0.0;
  std::string text;
  bool operator==(const RealLiteral&) const = default;
};

struct StringLiteral {
  std::string text;  // contents between the quotes, escapes untouched
  bool operator==(const StringLiteral&) const = default;
};

struct CharLiteral {
  std::string text;  // contents between the quotes, escapes untouched
  bool operator==(const CharLiteral&) const = default;
};

struct BoolLiteral {
  bool value = false;
  bool operator==(const BoolLiteral&) const = default;
};

/// `@A`, `@A(value)` or `@A(k = v, ...)`.
struct AnnLiteral {
  enum class Form : std::uint8_t { kMarker, kSingle, kKeyValues };
  std::string name;
  Form form = Form::kMarker;
  std::vector<KeyValue> members;  // kSingle stores one entry keyed "value"
  bool operator==(const AnnLiteral&) const;
};

struct ArrayLiteral {
  std::vector<DefaultValue> elements;
  bool operator==(const ArrayLiteral&) const;
};

struct DefaultValue {
  using Variant = std::variant<ClassLiteral, StringLiteral, IntegerLiteral, RealLiteral,
                               CharLiteral, BoolLiteral, EnumRef, AnnLiteral, ArrayLiteral>;
  Variant value;
  Span location;

  bool operator==(const DefaultValue& o) const { return value == o.value; }
};

struct KeyValue {
  std::string key;
  DefaultValue value;
  bool operator==(const KeyValue&) const = default;
};

inline bool AnnLiteral::operator==(const AnnLiteral& o) const {
  return name == o.name && form == o.form && members == o.members;
}

inline bool ArrayLiteral::operator==(const ArrayLiteral& o) const {
  return elements == o.elements;
}

// --- declarations ---------------------------------------------------------

struct AttributeDef {
  std::string name;
  AttributeKind kind = AttributeKind::kInt;
  std::string external_type;  // only for kExternal
  bool is_array = false;
  std::optional<DefaultValue> default_value;
  Span location;

  /// Ann spelling of the declared type, e.g. `String` or `int[]`.
  std::string type_spelling() const;

  bool operator==(const AttributeDef& o) const {
    return name == o.name && kind == o.kind && external_type == o.external_type &&
           is_array == o.is_array && default_value == o.default_value;
  }
};

struct Modifiers {
  std::optional<Visibility> visibility;
  bool is_final = false;
  bool is_abstract = false;
  bool is_static = false;

  bool empty() const { return !visibility && !is_final && !is_abstract && !is_static; }
  bool operator==(const Modifiers&) const = default;
};

/// `@Name`, or `@Name? Modifiers TargetType`.
struct Statement {
  std::optional<std::string> ann_ref;
  Modifiers modifiers;
  std::optional<TargetType> target_type;
  Span location;

  bool is_bare() const { return !target_type.has_value(); }
  bool operator==(const Statement& o) const {
    return ann_ref == o.ann_ref && modifiers == o.modifiers && target_type == o.target_type;
  }
};

enum class ConstraintKind : std::uint8_t { kRequire, kForbid };

struct ConstraintDef {
  ConstraintKind kind = ConstraintKind::kRequire;
  std::optional<TargetType> scope;  // the `at T:` prefix
  bool all_quantifier = false;
  std::vector<Statement> statements;
  Span location;

  bool operator==(const ConstraintDef& o) const {
    return kind == o.kind && scope == o.scope && all_quantifier == o.all_quantifier &&
           statements == o.statements;
  }
};

struct AnnotationDef {
  std::string name;
  Retention retention = Retention::kUnspecified;
  std::vector<AttributeDef> attributes;
  std::vector<ConstraintDef> constraints;
  Span location;
  /// Package of the declaring file (empty when the file has none).
  std::string package_name;

  bool operator==(const AnnotationDef& o) const {
    return name == o.name && retention == o.retention && attributes == o.attributes &&
           constraints == o.constraints && package_name == o.package_name;
  }
};

struct AnnSourceFile {
  std::optional<std::string> package_name;
  std::vector<AnnotationDef> annotations;
  std::string source_path;

  bool operator==(const AnnSourceFile& o) const {
    return package_name == o.package_name && annotations == o.annotations;
  }
};

/// Flattens the annotations of a file set in file order.
std::vector<AnnotationDef> collect_annotations(const std::vector<AnnSourceFile>& files);

}  // namespace annlint
