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
#include <map>

#include "annlint/ocl.hpp"
#include "fixtures.hpp"
#include "ocl_reference.hpp"

namespace annlint {
namespace {

using testing::is_subsequence;
using testing::squeeze;

std::map<std::string, std::vector<std::string>> invariants(const std::string& ocl) {
  return testing::ocl_invariants(ocl);
}

class JpaOcl : public ::testing::Test {
 protected:
  std::string ocl_ = emit_ocl(compile(testing::load_defs("jpa.ann")).ir);
};

TEST_F(JpaOcl, InvariantNamesMatchTheReference) {
  const auto got = invariants(ocl_);
  ASSERT_EQ(got.size(), testing::jpa_reference_invariants().size());
  for (const auto& [cls, names] : testing::jpa_reference_invariants()) {
    ASSERT_TRUE(got.count(cls)) << cls;
    if (cls == "Embeddable") {
      // The reference omits the two EmbeddedId prohibitions; they are emitted too.
      EXPECT_TRUE(is_subsequence(names, got.at(cls)));
      EXPECT_EQ(got.at(cls).size(), names.size() + 2);
    } else {
      EXPECT_EQ(got.at(cls), names) << cls;
    }
  }
}

TEST_F(JpaOcl, AssociationsMatchTheReference) {
  const auto got = testing::ocl_associations(ocl_);
  ASSERT_EQ(got.size(), testing::jpa_reference_associations().size());
  for (const auto& a : testing::jpa_reference_associations()) {
    EXPECT_NE(std::find(got.begin(), got.end(), a), got.end()) << a;
  }
}

TEST_F(JpaOcl, ComparisonHelperAgrees) {
  EXPECT_TRUE(testing::compare_with_jpa_reference(ocl_).ok);
  std::string broken = ocl_;
  broken.replace(broken.find("forbid_final_class"), 18, "forbid_final_klass");
  EXPECT_FALSE(testing::compare_with_jpa_reference(broken).ok);
}

TEST_F(JpaOcl, InvariantBodies) {
  const std::string flat = squeeze(ocl_);
  for (const char* want : {
           "inv redefs : self.target.isUndefined()",
           "self.targetEntityClass->notEmpty() implies ( (self.targetEntityClass.methods->exists(e | "
           "e.isConstructor = true and e.visibility = #public)) or "
           "(self.targetEntityClass.methods->exists(e | e.isConstructor = true and e.visibility = #protected)) )",
           "inv forbid_final_class: not ( (self.targetEntityClass.isFinal = true) )",
           "inv require_annEntity_class: ( (self.targetIdClassClass.annotationsEntity->notEmpty()) )",
       }) {
    EXPECT_NE(flat.find(want), std::string::npos) << want;
  }
  EXPECT_NE(flat.find("self.targetIdField->notEmpty() implies ( (Entity.allInstances()->exists(e | "
                      "e.targetEntityClass = self.targetIdField.owner)) )"),
            std::string::npos);
  EXPECT_NE(flat.find("class IdClass < JavaAnnotation attributes value : JavaClass constraints"),
            std::string::npos);
  EXPECT_NE(flat.find("class Entity < JavaAnnotation attributes name : String constraints"),
            std::string::npos);
}

TEST(Ocl, PersonEmployee) {
  const std::string ocl = emit_ocl(compile(testing::load_defs("conflict.ann")).ir);
  const auto inv = invariants(ocl);
  EXPECT_EQ(inv.at("Person"),
            (std::vector<std::string>{"redefs", "require_public_class", "at_class__forbid_final_field"}));
  EXPECT_EQ(inv.at("Employee"), (std::vector<std::string>{"redefs", "require_annPerson_package_class"}));
  EXPECT_NE(squeeze(ocl).find("association Employee_target_annPerson_package_class between JavaClass [1..1] "
                              "role targetEmployeeClass"),
            std::string::npos);
}

TEST(Ocl, MultiTargetRequireIsGuarded) {
  const std::string ocl = emit_ocl(compile(testing::load_defs("coverage.ann")).ir);
  const std::string flat = squeeze(ocl);
  EXPECT_NE(flat.find("inv require_public_final_class_or_private_static_method: "
                      "(self.targetEverythingClass->notEmpty() or self.targetEverythingMethod->notEmpty()) implies"),
            std::string::npos)
      << ocl;
  EXPECT_NE(flat.find("JavaMethod [0..1] role targetEverythingConstructor"), std::string::npos);
}

TEST(Ocl, UnreachableScopeBecomesAComment) {
  AnnotationDef a;
  a.name = "A";
  ConstraintDef req;
  Statement field;
  field.target_type = TargetType::kField;
  req.statements = {field};
  ConstraintDef scoped;
  scoped.scope = TargetType::kClass;
  Statement method;
  method.target_type = TargetType::kMethod;
  scoped.statements = {method};
  a.constraints = {req, scoped};
  const std::string ocl = emit_ocl(compile(std::vector<AnnotationDef>{a}).ir);
  EXPECT_NE(ocl.find("-- at_class__require_method: A never annotates class targets"), std::string::npos)
      << ocl;
}

TEST(Ocl, Deterministic) {
  const auto defs = testing::load_defs("coverage.ann");
  EXPECT_EQ(emit_ocl(compile(defs).ir), emit_ocl(compile(defs).ir));
}

}  // namespace
}  // namespace annlint
