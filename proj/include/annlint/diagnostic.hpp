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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace annlint {

enum class Severity : std::uint8_t { kError, kWarning, kNote };

std::string_view to_string(Severity s);

/// Location inside a source file. Line and column are 1-based; a zero line
/// means "no source location".
struct Span {
  std::string file;
  std::uint32_t line = 0;
  std::uint32_t column = 0;
  std::uint32_t length = 0;

  bool operator==(const Span&) const = default;
};

struct Diagnostic {
  Severity severity = Severity::kError;
  std::string code;
  std::string message;
  Span span;
  /// Program-model element path ("C1#field:f1") for diagnostics about models
  /// rather than source text.
  std::string element;
};

/// Renders `file:line:col: severity[code]: message`, or
/// `element: severity[code]: message` for model diagnostics.
std::string format(const Diagnostic& d);

bool has_errors(std::span<const Diagnostic> diags);

inline Diagnostic make_error(std::string code, std::string message, Span span = {}) {
  return {Severity::kError, std::move(code), std::move(message), std::move(span), {}};
}

inline Diagnostic make_warning(std::string code, std::string message, Span span = {}) {
  return {Severity::kWarning, std::move(code), std::move(message), std::move(span), {}};
}

}  // namespace annlint
