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

#include "annlint/ast.hpp"

namespace annlint {

std::string_view to_string(Retention r) {
  switch (r) {
    case Retention::kUnspecified: return "unspecified";
    case Retention::kRuntime: return "runtime";
    case Retention::kClass: return "class";
    case Retention::kSource: return "source";
  }
  return "unspecified";
}

std::string AttributeDef::type_spelling() const {
  std::string s;
  switch (kind) {
    case AttributeKind::kClassRef: s = "Class"; break;
    case AttributeKind::kString: s = "String"; break;
    case AttributeKind::kInt: s = "int"; break;
    case AttributeKind::kLong: s = "long"; break;
    case AttributeKind::kShort: s = "short"; break;
    case AttributeKind::kFloat: s = "float"; break;
    case AttributeKind::kDouble: s = "double"; break;
    case AttributeKind::kChar: s = "char"; break;
    case AttributeKind::kBoolean: s = "boolean"; break;
    case AttributeKind::kByte: s = "byte"; break;
    case AttributeKind::kExternal: s = external_type; break;
  }
  if (is_array) s += "[]";
  return s;
}

std::vector<AnnotationDef> collect_annotations(const std::vector<AnnSourceFile>& files) {
  std::vector<AnnotationDef> out;
  for (const auto& f : files) {
    out.insert(out.end(), f.annotations.begin(), f.annotations.end());
  }
  return out;
}

}  // namespace annlint
