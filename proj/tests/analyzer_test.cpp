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
#include "annlint/parser.hpp"
#include "fixtures.hpp"

namespace annlint {
namespace {

std::vector<Diagnostic> analyzed(std::string_view src) {
  ParseResult r = parse_source(src, "t.ann");
  EXPECT_TRUE(r.ok()) << src;
  return analyze(r.file);
}

std::vector<std::string> codes(std::string_view src) {
  std::vector<std::string> out;
  for (const auto& d : analyzed(src)) out.push_back(d.code);
  return out;
}

using Codes = std::vector<std::string>;

TEST(Analyzer, FixturesAreClean) {
  for (const char* name : {"jpa.ann", "person.ann", "conflict.ann", "no_conflict.ann"}) {
    EXPECT_TRUE(analyze(testing::load_data(name)).empty()) << name;
  }
}

TEST(Analyzer, DuplicateAnnotationAcrossFiles) {
  const AnnSourceFile a = parse_source("annotation X { }", "a.ann").file;
  const AnnSourceFile b = parse_source("\nannotation X { }", "b.ann").file;
  const auto d = analyze(std::vector<AnnSourceFile>{a, b});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].code, "duplicate-annotation");
  EXPECT_EQ(d[0].span.file, "b.ann");
  EXPECT_NE(d[0].message.find("a.ann:1:1"), std::string::npos);
}

TEST(Analyzer, DuplicateAttribute) {
  EXPECT_EQ(codes("annotation X { int a; long a; }"), Codes{"duplicate-attribute"});
}

TEST(Analyzer, DefaultKinds) {
  EXPECT_EQ(codes("annotation X { int a = \"s\"; }"), Codes{"default-kind"});
  EXPECT_EQ(codes("annotation X { String a = 1; }"), Codes{"default-kind"});
  EXPECT_EQ(codes("annotation X { int a = 1.5; }"), Codes{"default-kind"});
  EXPECT_EQ(codes("annotation X { int a = {1}; }"), Codes{"default-kind"});
  EXPECT_EQ(codes("annotation X { int[] a = {1, \"b\"}; }"), Codes{"default-kind"});
  EXPECT_EQ(codes("annotation X { int a = 10L; }"), Codes{"default-kind"});
  EXPECT_EQ(codes("annotation X { Color c = Shade.RED; }"), Codes{"default-kind"});
  EXPECT_TRUE(codes("annotation X { double d = 2; long l = 10L; int[] a = 3; }").empty());
}

TEST(Analyzer, DefaultRanges) {
  EXPECT_EQ(codes("annotation X { byte b = 128; }"), Codes{"default-range"});
  EXPECT_EQ(codes("annotation X { short s = -32769; }"), Codes{"default-range"});
  EXPECT_EQ(codes("annotation X { char c = 'ab'; }"), Codes{"default-range"});
  EXPECT_EQ(codes("annotation X { float f = 1e39; }"), Codes{"default-range"});
  EXPECT_TRUE(codes("annotation X { byte b = -128; char c = '\\n'; }").empty());
}

TEST(Analyzer, DuplicateKeyInAnnotationDefault) {
  EXPECT_EQ(codes("annotation X { P p = @P(a = 1, a = 2); }"), Codes{"duplicate-key"});
}

TEST(Analyzer, AbstractField) {
  EXPECT_EQ(codes("annotation X { require abstract field; }"), Codes{"abstract-field"});
}

TEST(Analyzer, ScopeShapes) {
  EXPECT_EQ(codes("annotation X { at class: require interface; }"), Codes{"container-scope"});
  EXPECT_EQ(codes("annotation X { at field: require method; }"), Codes{"contained-scope"});
  EXPECT_TRUE(codes("annotation X { at method: forbid final class; at class: require field; }")
                  .empty());
}

TEST(Analyzer, UnknownReferenceIsAWarning) {
  const auto d = analyzed("annotation X { require @Missing class; }");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].code, "unknown-annotation");
  EXPECT_EQ(d[0].severity, Severity::kWarning);
  EXPECT_FALSE(has_errors(d));
}

TEST(Analyzer, DiagnosticsCarrySpans) {
  const auto d = analyzed("annotation X {\n  int a;\n  int a;\n}");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].span.line, 3u);
  EXPECT_EQ(format(d[0]).rfind("t.ann:3:", 0), 0u);
}

}  // namespace
}  // namespace annlint
