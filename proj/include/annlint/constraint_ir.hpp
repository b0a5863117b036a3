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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "annlint/ast.hpp"
#include "annlint/diagnostic.hpp"
#include "annlint/java_model.hpp"
#include "annlint/types.hpp"

namespace annlint {

/// Modifier requirements of one statement. Only stated dimensions are
/// tested; a stated flag requires the flag to be set.
struct ModifierTest {
  std::optional<Visibility> visibility;
  bool is_abstract = false;
  bool is_static = false;
  bool is_final = false;

  bool empty() const { return !visibility && !is_abstract && !is_static && !is_final; }
  bool operator==(const ModifierTest&) const = default;
};

ModifierTest to_modifier_test(const Modifiers& m);

/// Flags meaningless for a kind evaluate false: fields are never abstract,
/// interfaces and annotation types are implicitly abstract and never final.
bool modifiers_hold(const ModifierTest& test, const ElementFlags& flags);

/// Which element a statement describes, relative to the annotated one.
enum class Relation : std::uint8_t { kSelf, kMember, kOwner };

/// One lowered statement.
struct Atom {
  Relation relation = Relation::kSelf;
  std::optional<TargetType> type;  // empty for a bare `@A` statement
  ModifierTest mods;
  std::string co_ann;   // required co-annotation, empty when none
  int co_index = -1;    // index of co_ann in the IR, -1 when external or none

  bool operator==(const Atom&) const = default;
};

enum class PredicateKind : std::uint8_t {
  kTargetCondition,           // unscoped require, OR across statements
  kForbiddenTargetCondition,  // unscoped forbid, AND across statements, negated
  kSameElementCoOccurrence,   // only bare `@A` statements
  kMemberExists,              // `at <container>: require`
  kMemberForAll,              // `at <container>: require all`
  kMemberForbidden,           // `at <container>: forbid`
  kOwnerCondition,            // `at <member>: require|forbid`, about the owner
};

std::string_view to_string(PredicateKind k);

enum class Polarity : std::uint8_t { kRequire, kForbid };

struct Predicate {
  std::string name;
  PredicateKind kind = PredicateKind::kTargetCondition;
  Polarity polarity = Polarity::kRequire;
  std::optional<TargetType> scope;
  bool for_all = false;
  std::vector<Atom> atoms;
  std::size_t origin = 0;  // index of the ConstraintDef in its annotation

  bool operator==(const Predicate&) const = default;
};

struct AnnotationIR {
  AnnotationDef source;
  std::array<bool, kTargetTypeCount> allowed{};
  /// True when no unscoped require names a target type, so every type is allowed.
  bool implicit_targets = true;
  /// Allowed types in order of first mention.
  std::vector<TargetType> target_order;
  std::vector<Predicate> predicates;

  const std::string& name() const { return source.name; }
  bool allows(TargetType t) const { return allowed[index_of(t)]; }
  /// Exactly one target type allowed (role cardinality 1..1).
  bool single_target() const { return target_order.size() == 1; }
};

struct ConstraintIR {
  std::vector<AnnotationIR> annotations;

  int index_of(std::string_view name) const;
  const AnnotationIR* find(std::string_view name) const;
};

struct CompileResult {
  ConstraintIR ir;
  std::vector<Diagnostic> diagnostics;  // warnings only
};

/// Lowers annotation definitions that passed analyze() to predicates.
CompileResult compile(std::span<const AnnotationDef> defs);

/// Lowers one constraint of `owner`. `ir` resolves co-annotation indices.
Predicate lower_constraint(const ConstraintDef& c, std::size_t origin, const ConstraintIR& ir);

/// `[at_<scope>__]<require|forbid>[_all]_<statement>(_or_|_and_)...`
std::string predicate_base_name(const ConstraintDef& c);
std::string statement_descriptor(const Statement& s);

/// Name reported when an annotation sits on a disallowed target kind.
inline constexpr std::string_view kAllowedTargetsPredicate = "allowed_targets";

struct Violation {
  std::string ann;
  std::string predicate;
  std::string target;
  std::string description;

  auto operator<=>(const Violation&) const = default;
};

struct EvaluationResult {
  std::vector<Violation> violations;    // sorted by (target, ann, predicate)
  std::vector<Diagnostic> diagnostics;  // annotation uses not defined in the IR
};

EvaluationResult evaluate(const ConstraintIR& ir, const ProgramModel& model);

/// One-line human phrasing of what a predicate demands.
std::string describe(const Predicate& p);
std::string describe_allowed_targets(const AnnotationIR& ann);

}  // namespace annlint
