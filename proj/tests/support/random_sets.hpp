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
#include <random>
#include <vector>

#include "annlint/ast.hpp"
#include "annlint/java_model.hpp"

namespace annlint::testing {

struct RandomSetOptions {
  int max_anns = 3;
  int max_constraints = 2;
  int max_statements = 2;
};

/// A random annotation set that passes analyze() without errors. Annotations
/// are named A, B, C, ... and only reference each other.
std::vector<AnnotationDef> random_set(std::mt19937_64& rng, RandomSetOptions opts = {});

/// A random well-formed model with at most `max_classifiers` classifiers,
/// annotated with uses of `names` at random elements.
ProgramModel random_model(std::mt19937_64& rng, const std::vector<std::string>& names,
                          int max_classifiers = 2, int max_members = 2);

}  // namespace annlint::testing
