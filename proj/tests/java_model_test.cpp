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

#include <algorithm>
#include <random>

#include "annlint/constraint_ir.hpp"
#include "annlint/java_model.hpp"
#include "annlint/model_json.hpp"
#include "fixtures.hpp"
#include "random_sets.hpp"

namespace annlint {
namespace {

std::vector<std::string> rules(const ProgramModel& m) {
  std::vector<std::string> out;
  for (const auto& d : well_formed(m)) out.push_back(d.code);
  return out;
}

using Rules = std::vector<std::string>;

Classifier cls(std::string name, ClassifierKind kind = ClassifierKind::kClass) {
  Classifier c;
  c.name = std::move(name);
  c.kind = kind;
  return c;
}

TEST(WellFormed, FixturesAreWellFormed) {
  for (const auto& m : {testing::embedded_id_usage(), testing::id_class_usage(),
                        testing::entity_without_key(), testing::id_in_non_entity(),
                        testing::id_class_on_non_entity()}) {
    EXPECT_TRUE(well_formed(m).empty());
  }
  EXPECT_TRUE(well_formed(ProgramModel{}).empty());
}

TEST(WellFormed, TopLevelVisibility) {
  Classifier c = cls("A");
  c.visibility = Visibility::kPrivate;
  EXPECT_EQ(rules({{c}, {}}), Rules{"model/top-level-visibility"});
}

TEST(WellFormed, AbstractMethodNeedsAbstractOwner) {
  Classifier c = cls("A");
  c.methods.push_back({"m", Visibility::kPublic, true});
  EXPECT_EQ(rules({{c}, {}}), Rules{"model/abstract-method"});
  c.is_abstract = true;
  EXPECT_TRUE(rules({{c}, {}}).empty());
  Classifier i = cls("I", ClassifierKind::kInterface);
  i.methods.push_back({"m", Visibility::kPublic, true});
  EXPECT_TRUE(rules({{i}, {}}).empty());
}

TEST(WellFormed, InheritanceIsAcyclicAndWellKinded) {
  Classifier a = cls("A"), b = cls("B");
  a.superclass = "B";
  b.superclass = "A";
  EXPECT_EQ(rules({{a, b}, {}}), Rules{"model/inheritance-cycle"});

  Classifier i = cls("I", ClassifierKind::kInterface);
  Classifier c = cls("C");
  c.superclass = "I";
  EXPECT_EQ(rules({{i, c}, {}}), Rules{"model/inheritance-kind"});

  c.superclass.reset();
  c.interfaces = {"Nope"};
  EXPECT_EQ(rules({{i, c}, {}}), Rules{"model/unresolved-reference"});
  c.interfaces = {"I"};
  EXPECT_TRUE(rules({{i, c}, {}}).empty());
}

TEST(WellFormed, ConstructorsAndFieldsByKind) {
  Classifier i = cls("I", ClassifierKind::kInterface);
  i.methods.push_back({"I", Visibility::kPublic, false, false, false, true});
  EXPECT_EQ(rules({{i}, {}}), Rules{"model/constructor-in-interface"});

  Classifier a = cls("T", ClassifierKind::kAnnotation);
  a.fields.push_back({"f"});
  EXPECT_EQ(rules({{a}, {}}), Rules{"model/field-in-annotation"});
}

TEST(WellFormed, ModifierCombinations) {
  Classifier i = cls("I", ClassifierKind::kInterface);
  i.is_final = true;
  EXPECT_EQ(rules({{i}, {}}), Rules{"model/modifiers"});

  Classifier c = cls("C");
  c.methods.push_back({"Wrong", Visibility::kPublic, false, false, false, true});
  EXPECT_EQ(rules({{c}, {}}), Rules{"model/modifiers"});

  Classifier d = cls("D");
  d.is_abstract = d.is_final = true;
  EXPECT_EQ(rules({{d}, {}}), Rules{"model/modifiers"});

  Classifier e = cls("E", ClassifierKind::kEnum);
  e.is_abstract = true;
  EXPECT_EQ(rules({{e}, {}}), Rules{"model/modifiers"});
}

TEST(WellFormed, AnnotationUses) {
  ProgramModel m{{cls("A")}, {{"X", "A", {}}, {"X", "A", {}}, {"Y", "A#field:f", {}}}};
  EXPECT_EQ(rules(m), (Rules{"model/duplicate-annotation", "model/unresolved-target"}));
}

TEST(WellFormed, DuplicateClassifier) {
  EXPECT_EQ(rules({{cls("A"), cls("A")}, {}}), Rules{"model/duplicate-classifier"});
}

// Reordering the annotation uses never changes which problems are found.
TEST(WellFormed, IndependentOfUseOrder) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    ProgramModel m = testing::random_model(rng, {"A", "B"});
    m.annotations.push_back(m.annotations.empty() ? AnnotationUse{"A", "C1", {}}
                                                  : m.annotations.front());
    m.annotations.push_back({"B", "C9", {}});
    auto before = rules(m);
    std::shuffle(m.annotations.begin(), m.annotations.end(), rng);
    auto after = rules(m);
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    EXPECT_EQ(before, after);
  }
}

TEST(Paths, ResolveInvertsElementPath) {
  Classifier c = cls("C");
  c.methods = {{"m"}, {"m"}, {"C", Visibility::kPublic, false, false, false, true}};
  c.fields = {{"f"}, {"f"}};
  const ProgramModel m{{c}, {}};
  EXPECT_EQ(element_path(m, {0, MemberKind::kMethod, 1}), "C#method:m[1]");
  EXPECT_EQ(element_path(m, {0, MemberKind::kField, 0}), "C#field:f");
  for (ElementRef e : {ElementRef{0, MemberKind::kNone, 0}, ElementRef{0, MemberKind::kMethod, 0},
                       ElementRef{0, MemberKind::kMethod, 1}, ElementRef{0, MemberKind::kMethod, 2},
                       ElementRef{0, MemberKind::kField, 1}}) {
    EXPECT_EQ(resolve_path(m, element_path(m, e)), e);
  }
  EXPECT_FALSE(resolve_path(m, "C#field:g"));
  EXPECT_FALSE(resolve_path(m, "D"));
  EXPECT_EQ(target_type_of(m, {0, MemberKind::kMethod, 2}), TargetType::kConstructor);
}

TEST(Flags, InterfacesAreImplicitlyAbstract) {
  const ProgramModel m{{cls("I", ClassifierKind::kInterface)}, {}};
  const ElementFlags f = flags_of(m, {0, MemberKind::kNone, 0});
  EXPECT_EQ(f.type, TargetType::kInterface);
  ModifierTest abstract_test;
  abstract_test.is_abstract = true;
  ModifierTest final_test;
  final_test.is_final = true;
  EXPECT_TRUE(modifiers_hold(abstract_test, f));
  EXPECT_FALSE(modifiers_hold(final_test, f));
}

TEST(Json, RoundTripsFixturesAndRandomModels) {
  for (const auto& m : {testing::embedded_id_usage(), testing::id_class_usage()}) {
    EXPECT_EQ(decode_model(encode_model(m)), m);
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    ProgramModel m = testing::random_model(rng, {"A", "B", "C"}, 3, 3);
    if (!m.annotations.empty()) m.annotations[0].values = {{"n", std::int64_t(4)}, {"x", 1.5}};
    const std::string text = encode_model(m);
    EXPECT_EQ(decode_model(text), m);
    EXPECT_EQ(encode_model(decode_model(text)), text);
  }
}

TEST(Json, DefaultsForMissingKeys) {
  const ProgramModel m = decode_model(R"({"classifiers":[{"name":"A"}]})");
  ASSERT_EQ(m.classifiers.size(), 1u);
  EXPECT_EQ(m.classifiers[0].kind, ClassifierKind::kClass);
  EXPECT_EQ(m.classifiers[0].visibility, Visibility::kPackage);
}

TEST(Json, RejectsMalformedInput) {
  for (const char* bad : {"", "[", "[]", R"({"classes":[]})", R"({"classifiers":[{"kind":"class"}]})",
                          R"({"classifiers":[{"name":"A","kind":"struct"}]})",
                          R"({"classifiers":[{"name":"A","visibility":"open"}]})",
                          R"({"classifiers":[{"name":"A"}],"annotations":[{"ann":"X","target":"B"}]})",
                          R"({"classifiers":[{"name":"A","final":"yes"}]})"}) {
    EXPECT_THROW(decode_model(bad), ModelFormatError) << bad;
  }
}

}  // namespace
}  // namespace annlint
