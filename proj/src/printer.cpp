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

#include "annlint/printer.hpp"

#include <sstream>

namespace annlint {

namespace {

struct ValuePrinter {
  std::string operator()(const ClassLiteral& v) const { return v.type_name + ".class"; }
  std::string operator()(const StringLiteral& v) const { return "\"" + v.text + "\""; }
  std::string operator()(const IntegerLiteral& v) const { return v.text; }
  std::string operator()(const RealLiteral& v) const { return v.text; }
  std::string operator()(const CharLiteral& v) const { return "'" + v.text + "'"; }
  std::string operator()(const BoolLiteral& v) const { return v.value ? "true" : "false"; }
  std::string operator()(const EnumRef& v) const { return v.type_name + "." + v.constant; }
  std::string operator()(const AnnLiteral& v) const {
    std::string s = "@" + v.name;
    switch (v.form) {
      case AnnLiteral::Form::kMarker:
        break;
      case AnnLiteral::Form::kSingle:
        s += "(" + (v.members.empty() ? std::string() : print(v.members.front().value)) + ")";
        break;
      case AnnLiteral::Form::kKeyValues: {
        s += "(";
        for (std::size_t i = 0; i < v.members.size(); ++i) {
          if (i) s += ", ";
          s += v.members[i].key + " = " + print(v.members[i].value);
        }
        s += ")";
        break;
      }
    }
    return s;
  }
  std::string operator()(const ArrayLiteral& v) const {
    std::string s = "{";
    for (std::size_t i = 0; i < v.elements.size(); ++i) {
      if (i) s += ", ";
      s += print(v.elements[i]);
    }
    return s + "}";
  }
};

}  // namespace

std::string print(const DefaultValue& v) { return std::visit(ValuePrinter{}, v.value); }

std::string print(const Statement& stmt) {
  std::string s;
  auto add = [&s](std::string_view word) {
    if (!s.empty()) s += ' ';
    s += word;
  };
  if (stmt.ann_ref) add("@" + *stmt.ann_ref);
  if (stmt.modifiers.visibility) add(to_string(*stmt.modifiers.visibility));
  if (stmt.modifiers.is_final) add("final");
  if (stmt.modifiers.is_abstract) add("abstract");
  if (stmt.modifiers.is_static) add("static");
  if (stmt.target_type) add(to_string(*stmt.target_type));
  return s;
}

std::string print(const ConstraintDef& c) {
  std::string s;
  if (c.scope) s += "at " + std::string(to_string(*c.scope)) + ": ";
  s += c.kind == ConstraintKind::kRequire ? "require " : "forbid ";
  if (c.all_quantifier) s += "all ";
  const char* joiner = c.kind == ConstraintKind::kRequire ? " or " : " and ";
  for (std::size_t i = 0; i < c.statements.size(); ++i) {
    if (i) s += joiner;
    s += print(c.statements[i]);
  }
  return s + ";";
}

std::string print(const AnnotationDef& def) {
  std::ostringstream out;
  if (def.retention != Retention::kUnspecified) out << to_string(def.retention) << ' ';
  out << "annotation " << def.name << " {\n";
  for (const auto& a : def.attributes) {
    out << "    " << a.type_spelling() << ' ' << a.name;
    if (a.default_value) out << " = " << print(*a.default_value);
    out << ";\n";
  }
  if (!def.attributes.empty() && !def.constraints.empty()) out << '\n';
  for (const auto& c : def.constraints) out << "    " << print(c) << '\n';
  out << "}\n";
  return out.str();
}

std::string print(const AnnSourceFile& file) {
  std::string s;
  if (file.package_name) s += "package " + *file.package_name + ";\n";
  for (const auto& def : file.annotations) {
    if (!s.empty()) s += '\n';
    s += print(def);
  }
  return s;
}

}  // namespace annlint
