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

#include "annlint/types.hpp"

#include <algorithm>

namespace annlint {

namespace {

constexpr std::array<std::string_view, kTargetTypeCount> kTargetNames = {
    "interface", "class", "annotation", "method", "field", "constructor", "enum"};

constexpr std::array<std::string_view, 4> kVisibilityNames = {"public", "protected", "package",
                                                              "private"};

}  // namespace

std::string_view to_string(TargetType t) { return kTargetNames[index_of(t)]; }

std::optional<TargetType> target_type_from_string(std::string_view s) {
  auto it = std::find(kTargetNames.begin(), kTargetNames.end(), s);
  if (it == kTargetNames.end()) return std::nullopt;
  return static_cast<TargetType>(it - kTargetNames.begin());
}

std::string_view to_string(Visibility v) { return kVisibilityNames[static_cast<std::size_t>(v)]; }

std::optional<Visibility> visibility_from_string(std::string_view s) {
  auto it = std::find(kVisibilityNames.begin(), kVisibilityNames.end(), s);
  if (it == kVisibilityNames.end()) return std::nullopt;
  return static_cast<Visibility>(it - kVisibilityNames.begin());
}

}  // namespace annlint
