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

#include <map>
#include <random>

#include "annlint/checker.hpp"
#include "annlint/finder.hpp"
#include "annlint/printer.hpp"
#include "brute_force.hpp"
#include "naive_oracle.hpp"
#include "random_sets.hpp"

namespace annlint {
namespace {

Scope oracle_scope() {
  Scope s;
  s.ann_min = 1;
  s.ann_max = 1;
  s.max_classifiers = 2;
  s.max_methods = 1;
  s.max_fields = 1;
  return s;
}

std::string source_of(const std::vector<AnnotationDef>& defs) {
  AnnSourceFile f;
  f.annotations = defs;
  return print(f);
}

void expect_valid_witness(const std::vector<AnnotationDef>& defs, const ConstraintIR& ir,
                          const ProgramModel& w) {
  EXPECT_TRUE(well_formed(w).empty());
  const EvaluationResult ev = evaluate(ir, w);
  EXPECT_TRUE(ev.violations.empty());
  EXPECT_TRUE(ev.diagnostics.empty());
  EXPECT_TRUE(testing::naive_violations(defs, w).empty());
  std::map<std::string, int> uses;
  for (const auto& u : w.annotations) ++uses[u.ann];
  for (const auto& d : defs) EXPECT_EQ(uses[d.name], 1) << d.name;
  EXPECT_LE(w.classifiers.size(), 2u);
  for (const auto& c : w.classifiers) {
    EXPECT_LE(c.methods.size(), 1u);
    EXPECT_LE(c.fields.size(), 1u);
  }
  for (const auto& d : check(w, defs)) EXPECT_NE(d.severity, Severity::kError) << format(d);
}

// Finder verdicts agree with exhaustive enumeration on small random sets.
TEST(Oracle, FinderMatchesBruteForce) {
  std::mt19937_64 rng(424242);
  int sat = 0, unsat = 0;
  for (int i = 0; i < 600; ++i) {
    const auto defs = testing::random_set(rng);
    const ConstraintIR ir = compile(defs).ir;
    const FinderResult r = find(ir, oracle_scope());
    const auto reference = testing::brute_force(defs);
    ASSERT_FALSE(std::holds_alternative<Timeout>(r));
    ASSERT_EQ(std::holds_alternative<Sat>(r), reference.has_value())
        << "case " << i << "\n" << source_of(defs);
    if (reference) {
      ++sat;
      expect_valid_witness(defs, ir, *reference);
      expect_valid_witness(defs, ir, std::get<Sat>(r).witness);
    } else {
      ++unsat;
    }
  }
  // Both verdicts must be well represented for the comparison to mean much.
  EXPECT_GT(sat, 100);
  EXPECT_GT(unsat, 40);
}

// The pruned search and the plain enumeration agree. The plain search has
// no cut-offs at all, so it runs on scopes small enough to exhaust.
TEST(Oracle, PruningIsSafe) {
  std::mt19937_64 rng(99);
  FinderOptions plain;
  plain.disable_pruning = true;
  Scope one_class = oracle_scope();
  one_class.max_classifiers = 1;
  Scope bare = oracle_scope();
  bare.max_methods = 0;
  bare.max_fields = 0;
  int sat = 0;
  for (int i = 0; i < 300; ++i) {
    const auto defs = testing::random_set(rng, {2, 2, 2});
    const ConstraintIR ir = compile(defs).ir;
    for (const Scope& s : {one_class, bare}) {
      const FinderResult fast = find(ir, s);
      const FinderResult slow = find(ir, s, {}, plain);
      ASSERT_EQ(verdict_name(fast), verdict_name(slow)) << source_of(defs);
      if (auto* w = std::get_if<Sat>(&slow)) {
        ++sat;
        EXPECT_TRUE(well_formed(w->witness).empty());
        EXPECT_TRUE(evaluate(ir, w->witness).violations.empty());
      }
    }
  }
  EXPECT_GT(sat, 100);
}

}  // namespace
}  // namespace annlint
