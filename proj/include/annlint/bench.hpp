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
#include <string>
#include <vector>

#include "annlint/finder.hpp"

namespace annlint {

// Synthetic scalability suite: annotation sets of growing size linked by a
// co-occurrence chain, each in a satisfiable form and an unsatisfiable twin
// where exactly two constraints conflict.

struct BenchCase {
  std::string set;  // e.g. "SAT-4", "UNSAT-8"
  int anns = 0;
  int constraints_per_ann = 0;  // split evenly between requires and forbids
  bool expect_sat = true;
  std::string source;  // Ann text
};

/// Sizes 2, 4, 8, ... up to `max_anns`; constraint levels 2, 4 and 8.
std::vector<BenchCase> bench_cases(int max_anns);

/// Ann text for one case.
std::string bench_source(int anns, int constraints_per_ann, bool satisfiable);

struct BenchRow {
  BenchCase bench;
  std::string verdict;
  std::int64_t ms = 0;
  std::uint64_t candidates = 0;
  bool as_expected = false;
};

BenchRow run_bench_case(const BenchCase& c, const Scope& scope);

inline constexpr const char* kBenchCsvHeader = "set,anns,constraints,verdict,ms,candidates";
std::string to_csv_line(const BenchRow& row);

}  // namespace annlint
