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

#include <string>
#include <string_view>
#include <vector>

#include "annlint/ast.hpp"
#include "annlint/java_model.hpp"

namespace annlint {

struct PlacementDiagnostic {
  Severity severity = Severity::kError;
  std::string code;       // "placement", "model/<rule>", "unknown-annotation", "model-format"
  std::string message;
  std::string element_path;
  std::string ann_name;
  std::string predicate_name;

  bool operator==(const PlacementDiagnostic&) const = default;
};

/// The annotation-processor analogue: checks a complete annotated model
/// against the annotation set. Model well-formedness problems come first,
/// then placement errors sorted by (element, annotation, predicate).
std::vector<PlacementDiagnostic> check(const ProgramModel& model,
                                       const std::vector<AnnotationDef>& ann_set);

/// Same, starting from model JSON; undecodable input yields a single
/// fatal diagnostic.
std::vector<PlacementDiagnostic> check_json(std::string_view model_json,
                                            const std::vector<AnnotationDef>& ann_set);

/// `path: error[ann/predicate]: message`
std::string format(const PlacementDiagnostic& d);

/// Message template shared with the generated processors.
std::string disallowed_message(std::string_view ann);

}  // namespace annlint
