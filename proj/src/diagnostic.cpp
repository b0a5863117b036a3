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

#include "annlint/diagnostic.hpp"

#include <algorithm>

namespace annlint {

std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::kError:
      return "error";
    case Severity::kWarning:
      return "warning";
    case Severity::kNote:
      return "note";
  }
  return "error";
}

std::string format(const Diagnostic& d) {
  std::string out;
  if (!d.element.empty()) {
    out = d.element;
  } else {
    out = d.span.file.empty() ? std::string("<input>") : d.span.file;
    if (d.span.line != 0) {
      out += ':' + std::to_string(d.span.line) + ':' + std::to_string(d.span.column);
    }
  }
  out += ": ";
  out += to_string(d.severity);
  out += '[' + d.code + "]: " + d.message;
  return out;
}

bool has_errors(std::span<const Diagnostic> diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::kError; });
}

}  // namespace annlint
