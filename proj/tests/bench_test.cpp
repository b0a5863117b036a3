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

#include <gtest/gtest.h>

#include "annlint/analyzer.hpp"
#include "annlint/bench.hpp"
#include "annlint/parser.hpp"

namespace annlint {
namespace {

TEST(Bench, CaseGrid) {
  const auto cases = bench_cases(8);
  ASSERT_EQ(cases.size(), 18u);  // sizes 2, 4, 8; levels 2, 4, 8; two twins
  int sat = 0;
  for (const auto& c : cases) {
    sat += c.expect_sat;
    EXPECT_TRUE(c.anns == 2 || c.anns == 4 || c.anns == 8);
    EXPECT_TRUE(c.constraints_per_ann == 2 || c.constraints_per_ann == 4 ||
                c.constraints_per_ann == 8);
  }
  EXPECT_EQ(sat, 9);
  EXPECT_EQ(bench_cases(3).size(), 6u);
}

TEST(Bench, SourcesAreValidAndShaped) {
  for (const auto& c : bench_cases(16)) {
    const ParseResult r = parse_source(c.source, c.set);
    ASSERT_TRUE(r.ok()) << c.source;
    EXPECT_TRUE(analyze(r.file).empty()) << c.set;
    ASSERT_EQ(r.file.annotations.size(), std::size_t(c.anns));
    for (const auto& a : r.file.annotations) {
      ASSERT_EQ(a.constraints.size(), std::size_t(c.constraints_per_ann)) << c.set;
      int requires_ = 0;
      for (const auto& k : a.constraints) requires_ += k.kind == ConstraintKind::kRequire;
      EXPECT_EQ(requires_ * 2, c.constraints_per_ann);
    }
  }
}

// The unsatisfiable twin differs from its satisfiable sibling in one constraint.
TEST(Bench, TwinsDifferByOneConstraint) {
  for (int level : {2, 4, 8}) {
    const auto sat = parse_source(bench_source(4, level, true), "s").file;
    const auto unsat = parse_source(bench_source(4, level, false), "u").file;
    int diffs = 0;
    for (std::size_t i = 0; i < sat.annotations.size(); ++i) {
      for (std::size_t k = 0; k < sat.annotations[i].constraints.size(); ++k) {
        diffs += !(sat.annotations[i].constraints[k] == unsat.annotations[i].constraints[k]);
      }
    }
    EXPECT_EQ(diffs, 1) << level;
  }
}

TEST(Bench, VerdictsUpToEight) {
  for (const auto& c : bench_cases(8)) {
    const BenchRow row = run_bench_case(c, Scope{});
    EXPECT_TRUE(row.as_expected) << c.set << " gave " << row.verdict;
    EXPECT_EQ(row.verdict, c.expect_sat ? "sat" : "unsat");
  }
}

TEST(Bench, CsvLine) {
  BenchRow row;
  row.bench.set = "SAT-2x4";
  row.bench.anns = 2;
  row.bench.constraints_per_ann = 4;
  row.verdict = "sat";
  row.ms = 3;
  row.candidates = 17;
  EXPECT_EQ(to_csv_line(row), "SAT-2x4,2,4,sat,3,17");
  EXPECT_STREQ(kBenchCsvHeader, "set,anns,constraints,verdict,ms,candidates");
}

}  // namespace
}  // namespace annlint
