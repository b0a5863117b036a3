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

#include "annlint/checker.hpp"

#include <algorithm>
#include <tuple>

#include "annlint/constraint_ir.hpp"
#include "annlint/model_json.hpp"

namespace annlint {

std::string disallowed_message(std::string_view ann) {
  return "The annotation @" + std::string(ann) + " is disallowed for this location.";
}

std::vector<PlacementDiagnostic> check(const ProgramModel& model,
                                       const std::vector<AnnotationDef>& ann_set) {
  std::vector<PlacementDiagnostic> out;
  for (const Diagnostic& d : well_formed(model)) {
    out.push_back({Severity::kError, d.code, d.message, d.element, {}, {}});
  }

  const CompileResult compiled = compile(ann_set);
  const EvaluationResult eval = evaluate(compiled.ir, model);
  for (const Violation& v : eval.violations) {
    std::string message = disallowed_message(v.ann);
    message.pop_back();
    message += ": " + v.description + ".";
    out.push_back({Severity::kError, "placement", std::move(message), v.target, v.ann, v.predicate});
  }

  // A processor ignores annotations it does not support.
  std::vector<PlacementDiagnostic> notes;
  for (const Diagnostic& d : eval.diagnostics) {
    notes.push_back({Severity::kNote, d.code, d.message, d.element, {}, {}});
  }
  std::stable_sort(notes.begin(), notes.end(), [](const auto& a, const auto& b) {
    return a.element_path < b.element_path;
  });
  out.insert(out.end(), notes.begin(), notes.end());
  return out;
}

std::vector<PlacementDiagnostic> check_json(std::string_view model_json,
                                            const std::vector<AnnotationDef>& ann_set) {
  ProgramModel model;
  try {
    model = decode_model(model_json);
  } catch (const ModelFormatError& e) {
    return {{Severity::kError, "model-format", e.what(), "<model>", {}, {}}};
  }
  return check(model, ann_set);
}

std::string format(const PlacementDiagnostic& d) {
  std::string s = d.element_path + ": " + std::string(to_string(d.severity)) + "[";
  if (d.code == "placement") {
    s += d.ann_name + "/" + d.predicate_name;
  } else {
    s += d.code;
  }
  return s + "]: " + d.message;
}

}  // namespace annlint
