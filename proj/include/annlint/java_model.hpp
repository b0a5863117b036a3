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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "annlint/diagnostic.hpp"
#include "annlint/types.hpp"

namespace annlint {

// A deliberately small Java meta-model: top-level classifiers, their methods
// and fields, and annotation uses attached to any of those. No types,
// signatures, packages or nesting.

enum class ClassifierKind : std::uint8_t { kClass, kInterface, kAnnotation, kEnum };

std::string_view to_string(ClassifierKind k);
std::optional<ClassifierKind> classifier_kind_from_string(std::string_view s);
TargetType to_target_type(ClassifierKind k);

struct Method {
  std::string name;
  Visibility visibility = Visibility::kPackage;
  bool is_abstract = false;
  bool is_static = false;
  bool is_final = false;
  bool is_constructor = false;

  bool operator==(const Method&) const = default;
};

struct Field {
  std::string name;
  Visibility visibility = Visibility::kPackage;
  bool is_static = false;
  bool is_final = false;

  bool operator==(const Field&) const = default;
};

struct Classifier {
  std::string name;
  ClassifierKind kind = ClassifierKind::kClass;
  Visibility visibility = Visibility::kPackage;
  bool is_abstract = false;
  bool is_final = false;
  bool is_static = false;
  std::optional<std::string> superclass;
  std::vector<std::string> interfaces;
  std::vector<Method> methods;
  std::vector<Field> fields;

  bool operator==(const Classifier&) const = default;
};

using AnnotationValue = std::variant<std::string, std::int64_t, double, bool>;

struct AnnotationUse {
  std::string ann;
  /// `C`, `C#method:m` or `C#field:f`; duplicate member names are
  /// disambiguated with a `[k]` suffix (k >= 1, 0-based occurrence).
  std::string target;
  std::vector<std::pair<std::string, AnnotationValue>> values;

  bool operator==(const AnnotationUse&) const = default;
};

struct ProgramModel {
  std::vector<Classifier> classifiers;
  std::vector<AnnotationUse> annotations;

  bool operator==(const ProgramModel&) const = default;
};

enum class MemberKind : std::uint8_t { kNone, kMethod, kField };

/// Index-based reference to a classifier or one of its members.
struct ElementRef {
  std::size_t classifier = 0;
  MemberKind member_kind = MemberKind::kNone;
  std::size_t member = 0;

  bool is_classifier() const { return member_kind == MemberKind::kNone; }
  auto operator<=>(const ElementRef&) const = default;
};

/// The Ann target type an element answers to; methods split into `method`
/// and `constructor`.
TargetType target_type_of(const ProgramModel& m, ElementRef e);

std::string element_path(const ProgramModel& m, ElementRef e);
std::optional<ElementRef> resolve_path(const ProgramModel& m, std::string_view path);

/// Modifier view of an element, shared by every evaluator.
struct ElementFlags {
  TargetType type = TargetType::kClass;
  Visibility visibility = Visibility::kPackage;
  bool is_abstract = false;
  bool is_static = false;
  bool is_final = false;
};

ElementFlags flags_of(const ProgramModel& m, ElementRef e);

/// Built-in invariants of the meta-model:
///   1. top-level classifiers are package or public;
///   2. abstract methods live in abstract classes, interfaces or annotation types;
///   3. the extends/implements graph is acyclic and well-kinded;
///   4. interfaces and annotation types declare no constructors, annotation
///      types declare no fields;
///   5. modifier combinations are legal (constructors are neither abstract
///      nor static and carry the owner's name; interfaces are never final;
///      enums are never abstract);
///   6. a given annotation appears at most once per element.
/// Unresolved references are reported as well. Empty result iff all hold.
std::vector<Diagnostic> well_formed(const ProgramModel& m);

/// Elements answering to `t`, in declaration order.
std::vector<ElementRef> elements_of(const ProgramModel& m, TargetType t);

}  // namespace annlint
