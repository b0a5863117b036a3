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
#include <vector>

#include "annlint/ast.hpp"
#include "annlint/java_model.hpp"

namespace annlint::testing {

/// Reads a file under tests/data.
std::string read_data(const std::string& name);

/// Parses a file under tests/data; aborts the test run on parse errors.
AnnSourceFile load_data(const std::string& name);
std::vector<AnnotationDef> load_defs(const std::string& name);

// JPA usage shapes, as models.
ProgramModel embedded_id_usage();  // @Embeddable key class + @EmbeddedId field
ProgramModel id_class_usage();     // @IdClass + @Entity with @Id fields
ProgramModel entity_without_key();
ProgramModel id_in_non_entity();
ProgramModel id_class_on_non_entity();

}  // namespace annlint::testing
