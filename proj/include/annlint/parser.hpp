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

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "annlint/ast.hpp"
#include "annlint/lexer.hpp"

namespace annlint {

/// Counts how often each grammar production (or alternative, written
/// `Production:alternative`) was used while parsing.
class ProductionCoverage {
 public:
  void hit(std::string_view production) { ++hits_[std::string(production)]; }
  std::size_t count(std::string_view production) const;
  const std::map<std::string, std::size_t, std::less<>>& hits() const { return hits_; }

  /// Every production and alternative the parser can record.
  static std::span<const std::string_view> all_productions();
  std::vector<std::string_view> missing() const;

 private:
  std::map<std::string, std::size_t, std::less<>> hits_;
};

struct ParseResult {
  AnnSourceFile file;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return !has_errors(diagnostics); }
};

ParseResult parse(std::span<const Token> tokens, std::string_view source_path,
                  ProductionCoverage* coverage = nullptr);

/// tokenize + parse; lexer diagnostics come first.
ParseResult parse_source(std::string_view source, std::string_view source_path,
                         ProductionCoverage* coverage = nullptr);

}  // namespace annlint
