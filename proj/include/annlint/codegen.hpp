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

#include <stdexcept>
#include <string>
#include <vector>

#include "annlint/ast.hpp"
#include "annlint/constraint_ir.hpp"

namespace annlint {

struct GeneratedUnit {
  std::string relative_path;  // e.g. examples/Person.java
  std::string contents;
};

class CodegenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kDefaultPackage = "annotations";

/// The Java `@interface` for one annotation. Throws CodegenError when an
/// external attribute type cannot be resolved.
GeneratedUnit gen_annotation_type(const AnnotationDef& def, const ConstraintIR& ir,
                                  const std::string& package);

/// `<Name>RequireProcessor` and/or `<Name>ForbidProcessor`, depending on which
/// predicate polarities the annotation has.
std::vector<GeneratedUnit> gen_processors(const AnnotationDef& def, const ConstraintIR& ir,
                                          const std::string& package);

/// Everything for a file set: one type per annotation plus its processors.
std::vector<GeneratedUnit> gen_all(const std::vector<AnnSourceFile>& files,
                                   const ConstraintIR& ir);

}  // namespace annlint
