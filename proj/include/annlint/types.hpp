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

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace annlint {

// Kinds of Java program element an annotation may be attached to.
enum class TargetType : std::uint8_t {
  kInterface,
  kClass,
  kAnnotation,
  kMethod,
  kField,
  kConstructor,
  kEnum,
};

inline constexpr std::size_t kTargetTypeCount = 7;

inline constexpr std::array<TargetType, kTargetTypeCount> kAllTargetTypes = {
    TargetType::kInterface, TargetType::kClass,       TargetType::kAnnotation,
    TargetType::kMethod,    TargetType::kField,       TargetType::kConstructor,
    TargetType::kEnum,
};

constexpr std::size_t index_of(TargetType t) { return static_cast<std::size_t>(t); }

// Types that own members.
constexpr bool is_container(TargetType t) {
  return t == TargetType::kClass || t == TargetType::kInterface ||
         t == TargetType::kAnnotation || t == TargetType::kEnum;
}

// Types that live inside a container.
constexpr bool is_contained(TargetType t) { return !is_container(t); }

std::string_view to_string(TargetType t);
std::optional<TargetType> target_type_from_string(std::string_view s);

enum class Visibility : std::uint8_t { kPublic, kProtected, kPackage, kPrivate };

inline constexpr std::array<Visibility, 4> kAllVisibilities = {
    Visibility::kPublic, Visibility::kProtected, Visibility::kPackage,
    Visibility::kPrivate};

std::string_view to_string(Visibility v);
std::optional<Visibility> visibility_from_string(std::string_view s);

}  // namespace annlint
