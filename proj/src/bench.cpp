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

#include "annlint/bench.hpp"

#include <sstream>
#include <stdexcept>

#include "annlint/analyzer.hpp"
#include "annlint/parser.hpp"

namespace annlint {

namespace {

// Constraints every annotation can share without conflict.
constexpr std::string_view kExtraRequires[] = {
    "at class: require public constructor or protected constructor;",
    "at class: require public method;",
    "at class: require field;",
};

constexpr std::string_view kExtraForbids[] = {
    "forbid abstract class;",
    "at class: forbid final method;",
    "at class: forbid static field;",
};

}  // namespace

std::string bench_source(int anns, int constraints_per_ann, bool satisfiable) {
  if (anns < 2) throw std::invalid_argument("bench sets need at least 2 annotations");
  const int half = constraints_per_ann / 2;
  if (half < 1 || half > 4) throw std::invalid_argument("constraints per annotation must be 2..8");

  std::ostringstream out;
  out << "package bench;\n";
  for (int i = 1; i <= anns; ++i) {
    out << "\nruntime annotation A" << i << " {\n";
    // The chain ties every annotation to the same class; the last link fixes
    // its visibility.
    if (i < anns) {
      out << "    require @A" << i + 1 << " class;\n";
    } else {
      out << "    require public class;\n";
    }
    for (int k = 1; k < half; ++k) out << "    " << kExtraRequires[k - 1] << "\n";
    if (i == 1 && !satisfiable) {
      out << "    forbid public class;\n";
    } else {
      out << "    forbid final class;\n";
    }
    for (int k = 1; k < half; ++k) out << "    " << kExtraForbids[k - 1] << "\n";
    out << "}\n";
  }
  return out.str();
}

std::vector<BenchCase> bench_cases(int max_anns) {
  std::vector<BenchCase> cases;
  for (int n = 2; n <= max_anns; n *= 2) {
    for (int c : {2, 4, 8}) {
      for (bool sat : {true, false}) {
        BenchCase b;
        b.set = std::string(sat ? "SAT" : "UNSAT") + "-" + std::to_string(n) + "x" +
                std::to_string(c);
        b.anns = n;
        b.constraints_per_ann = c;
        b.expect_sat = sat;
        b.source = bench_source(n, c, sat);
        cases.push_back(std::move(b));
      }
    }
  }
  return cases;
}

BenchRow run_bench_case(const BenchCase& c, const Scope& scope) {
  ParseResult parsed = parse_source(c.source, c.set + ".ann");
  if (!parsed.ok() || has_errors(analyze(parsed.file))) {
    throw std::logic_error("bench case " + c.set + " does not parse cleanly");
  }
  const CompileResult compiled = compile(parsed.file.annotations);
  const FinderResult result = find(compiled.ir, scope);
  const FinderStats& st = stats_of(result);

  BenchRow row;
  row.bench = c;
  row.verdict = std::string(verdict_name(result));
  row.ms = st.elapsed_ms;
  row.candidates = st.candidates;
  row.as_expected = row.verdict == (c.expect_sat ? "sat" : "unsat");
  return row;
}

std::string to_csv_line(const BenchRow& row) {
  return row.bench.set + "," + std::to_string(row.bench.anns) + "," +
         std::to_string(row.bench.constraints_per_ann) + "," + row.verdict + "," +
         std::to_string(row.ms) + "," + std::to_string(row.candidates);
}

}  // namespace annlint
