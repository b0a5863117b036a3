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

#include "fixtures.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "annlint/parser.hpp"

namespace annlint::testing {

std::string read_data(const std::string& name) {
  const std::string path = std::string(ANNLINT_TEST_DATA) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::fprintf(stderr, "cannot open %s\n", path.c_str());
    std::abort();
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AnnSourceFile load_data(const std::string& name) {
  ParseResult r = parse_source(read_data(name), name);
  if (!r.ok()) {
    for (const auto& d : r.diagnostics) std::fprintf(stderr, "%s\n", format(d).c_str());
    std::abort();
  }
  return r.file;
}

std::vector<AnnotationDef> load_defs(const std::string& name) {
  return collect_annotations({load_data(name)});
}

namespace {

Classifier key_class() {
  Classifier pk;
  pk.name = "EmployeePK";
  pk.visibility = Visibility::kPublic;
  pk.fields = {{"name", Visibility::kPrivate}, {"id", Visibility::kPrivate}};
  pk.methods = {{"EmployeePK", Visibility::kPublic, false, false, false, true}};
  return pk;
}

Classifier employee() {
  Classifier c;
  c.name = "Employee";
  c.visibility = Visibility::kPublic;
  c.methods = {{"Employee", Visibility::kPublic, false, false, false, true}};
  return c;
}

}  // namespace

ProgramModel embedded_id_usage() {
  ProgramModel m;
  Classifier e = employee();
  e.fields = {{"primaryKey"}};
  m.classifiers = {key_class(), e};
  m.annotations = {{"Embeddable", "EmployeePK", {}},
                   {"Entity", "Employee", {}},
                   {"EmbeddedId", "Employee#field:primaryKey", {}}};
  return m;
}

ProgramModel id_class_usage() {
  ProgramModel m;
  Classifier e = employee();
  e.fields = {{"name"}, {"id"}};
  m.classifiers = {key_class(), e};
  m.annotations = {{"IdClass", "Employee", {{"value", std::string("EmployeePK")}}},
                   {"Entity", "Employee", {}},
                   {"Id", "Employee#field:name", {}},
                   {"Id", "Employee#field:id", {}}};
  return m;
}

ProgramModel entity_without_key() {
  ProgramModel m;
  Classifier e = employee();
  e.fields = {{"name"}, {"id"}};
  m.classifiers = {e};
  m.annotations = {{"Entity", "Employee", {}}};
  return m;
}

ProgramModel id_in_non_entity() {
  ProgramModel m;
  Classifier e = employee();
  e.fields = {{"name"}, {"id"}};
  m.classifiers = {e};
  m.annotations = {{"Id", "Employee#field:id", {}}};
  return m;
}

ProgramModel id_class_on_non_entity() {
  ProgramModel m;
  Classifier e = employee();
  e.fields = {{"name"}, {"id"}};
  m.classifiers = {key_class(), e};
  m.annotations = {{"IdClass", "Employee", {{"value", std::string("EmployeePK")}}}};
  return m;
}

}  // namespace annlint::testing
