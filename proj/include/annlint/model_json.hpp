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
#include <string_view>

#include "annlint/java_model.hpp"

namespace annlint {

class ModelFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `{"classifiers":[...],"annotations":[...]}`, pretty-printed with a
/// trailing newline.
std::string encode_model(const ProgramModel& m);

/// Throws ModelFormatError on malformed JSON, unknown enum spellings or
/// annotation targets that do not resolve.
ProgramModel decode_model(std::string_view json_text);

}  // namespace annlint
