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

#include "annlint/serializer.hpp"

#include <charconv>
#include <map>
#include <sstream>

namespace annlint {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string value_text(const AnnotationValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return quote(x);
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, double>) {
          char buf[32];
          auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
          std::string s(buf, end);
          if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
          return s;
        } else {
          return std::to_string(x);
        }
      },
      v);
}

std::string modifiers(Visibility vis, bool is_abstract, bool is_static, bool is_final) {
  std::string s;
  if (vis != Visibility::kPackage) s += std::string(to_string(vis)) + " ";
  if (is_abstract) s += "abstract ";
  if (is_static) s += "static ";
  if (is_final) s += "final ";
  return s;
}

std::string_view keyword(ClassifierKind k) {
  switch (k) {
    case ClassifierKind::kClass: return "class";
    case ClassifierKind::kInterface: return "interface";
    case ClassifierKind::kAnnotation: return "@interface";
    case ClassifierKind::kEnum: return "enum";
  }
  return "class";
}

}  // namespace

std::string to_java_text(const ProgramModel& model) {
  std::map<std::string, std::vector<const AnnotationUse*>> uses;
  for (const auto& u : model.annotations) uses[u.target].push_back(&u);

  std::ostringstream out;
  auto annotate = [&](const std::string& path, std::string_view indent) {
    auto it = uses.find(path);
    if (it == uses.end()) return;
    for (const AnnotationUse* u : it->second) {
      out << indent << '@' << u->ann;
      if (!u->values.empty()) {
        out << '(';
        for (std::size_t i = 0; i < u->values.size(); ++i) {
          if (i) out << ", ";
          out << u->values[i].first << " = " << value_text(u->values[i].second);
        }
        out << ')';
      }
      out << '\n';
    }
  };

  for (std::size_t ci = 0; ci < model.classifiers.size(); ++ci) {
    const Classifier& c = model.classifiers[ci];
    if (ci) out << '\n';
    annotate(element_path(model, {ci, MemberKind::kNone, 0}), "");
    out << modifiers(c.visibility, c.is_abstract, c.is_static, c.is_final) << keyword(c.kind)
        << ' ' << c.name;
    if (c.superclass) out << " extends " << *c.superclass;
    if (!c.interfaces.empty()) {
      out << (c.kind == ClassifierKind::kInterface ? " extends " : " implements ");
      for (std::size_t i = 0; i < c.interfaces.size(); ++i) {
        if (i) out << ", ";
        out << c.interfaces[i];
      }
    }
    out << " {\n";
    for (std::size_t i = 0; i < c.fields.size(); ++i) {
      const Field& f = c.fields[i];
      annotate(element_path(model, {ci, MemberKind::kField, i}), "    ");
      out << "    " << modifiers(f.visibility, false, f.is_static, f.is_final) << "int " << f.name
          << ";\n";
    }
    for (std::size_t i = 0; i < c.methods.size(); ++i) {
      const Method& m = c.methods[i];
      annotate(element_path(model, {ci, MemberKind::kMethod, i}), "    ");
      out << "    " << modifiers(m.visibility, m.is_abstract, m.is_static, m.is_final);
      if (!m.is_constructor) out << "void ";
      out << m.name << "()";
      out << (m.is_abstract ? ";\n" : " { ... }\n");
    }
    out << "}\n";
  }
  return out.str();
}

}  // namespace annlint
