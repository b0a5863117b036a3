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

#include <vector>

#include "annlint/ast.hpp"

namespace annlint {

/// Static semantic checks over a file set. `@Name` references resolve across
/// all files. Returns an empty list when the set is semantically valid;
/// unresolved references are warnings, everything else is an error.
std::vector<Diagnostic> analyze(const std::vector<AnnSourceFile>& files);

inline std::vector<Diagnostic> analyze(const AnnSourceFile& file) {
  return analyze(std::vector<AnnSourceFile>{file});
}

}  // namespace annlint
