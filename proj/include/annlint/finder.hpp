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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "annlint/constraint_ir.hpp"
#include "annlint/java_model.hpp"

namespace annlint {

/// Bounds of the model search.
struct Scope {
  int ann_min = 1;
  int ann_max = 2;
  int max_classifiers = 3;
  int max_methods = 3;
  int max_fields = 3;
  bool allow_interfaces = true;
  bool allow_enums = false;
  bool allow_annotation_types = true;
  std::optional<std::int64_t> deadline_ms;
  /// Annotations exempt from the at-least-min-uses coverage obligation.
  std::set<std::string, std::less<>> relaxed;

  int min_for(std::string_view ann) const { return relaxed.count(ann) ? 0 : ann_min; }

  /// Empty when valid; otherwise a description of the first problem.
  std::string validate() const;
};

/// Reads `key = value` lines (`#` comments). Known keys: ann_min, ann_max,
/// max_classifiers, max_methods, max_fields, deadline_ms. Throws
/// std::invalid_argument on unknown keys or malformed values.
Scope parse_scope_config(std::string_view text, Scope base = {});

struct FinderStats {
  std::uint64_t nodes = 0;       // search nodes visited
  std::uint64_t candidates = 0;  // complete candidate models examined
  std::uint64_t pruned = 0;      // branches cut before completion
  std::int64_t elapsed_ms = 0;
};

struct Sat {
  ProgramModel witness;
  FinderStats stats;
};

struct UnsatWithinScope {
  FinderStats stats;
};

struct Timeout {
  FinderStats stats;
};

using FinderResult = std::variant<Sat, UnsatWithinScope, Timeout>;

const FinderStats& stats_of(const FinderResult& r);
std::string_view verdict_name(const FinderResult& r);  // "sat", "unsat", "timeout"

/// An additional requirement imposed on every use of `ann`.
struct ExtraPredicate {
  std::string ann;
  Predicate predicate;
};

struct FinderOptions {
  /// Reference mode for differential testing: no propagation, no symmetry
  /// breaking, no memoisation; every candidate is checked only when complete.
  bool disable_pruning = false;
};

/// Searches, in a fixed canonical order, for a well-formed model that
/// satisfies every predicate of `ir` and `extra` and uses each annotation
/// between its min and max number of times.
FinderResult find(const ConstraintIR& ir, const Scope& scope,
                  const std::vector<ExtraPredicate>& extra = {}, FinderOptions options = {});

/// Human-readable verdict summary, including the bounds searched.
std::string explain_scope(const FinderResult& result, const Scope& scope);

}  // namespace annlint
