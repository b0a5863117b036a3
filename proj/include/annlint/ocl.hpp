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

#include "annlint/constraint_ir.hpp"

namespace annlint {

/// USE model text: one JavaAnnotation subclass per annotation with its
/// invariants, then one association per allowed target type.
std::string emit_ocl(const ConstraintIR& ir);

}  // namespace annlint
