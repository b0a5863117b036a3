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

#include "annlint/analyzer.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "annlint/printer.hpp"

namespace annlint {

namespace {

bool is_integral(AttributeKind k) {
  return k == AttributeKind::kInt || k == AttributeKind::kLong || k == AttributeKind::kShort ||
         k == AttributeKind::kByte;
}

std::pair<std::int64_t, std::int64_t> integral_range(AttributeKind k) {
  switch (k) {
    case AttributeKind::kByte: return {INT8_MIN, INT8_MAX};
    case AttributeKind::kShort: return {INT16_MIN, INT16_MAX};
    case AttributeKind::kInt: return {INT32_MIN, INT32_MAX};
    default: return {INT64_MIN, INT64_MAX};
  }
}

// Number of code points in a UTF-8 string.
std::size_t code_points(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

bool valid_char_literal(std::string_view text) {
  if (text.empty()) return false;
  if (text.front() != '\\') return code_points(text) == 1;
  if (text.size() == 2) return std::string_view("btnfr\"'\\0").find(text[1]) != std::string_view::npos;
  if (text.size() == 6 && text[1] == 'u') {
    for (std::size_t i = 2; i < 6; ++i) {
      if (!std::isxdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
  }
  return false;
}

class Analyzer {
 public:
  explicit Analyzer(const std::vector<AnnSourceFile>& files) : files_(files) {
    for (const auto& f : files) {
      for (const auto& a : f.annotations) known_.insert(a.name);
    }
  }

  std::vector<Diagnostic> run() {
    std::map<std::string, Span> seen;
    for (const auto& f : files_) {
      for (const auto& def : f.annotations) {
        auto [it, inserted] = seen.emplace(def.name, def.location);
        if (!inserted) {
          error("duplicate-annotation",
                "annotation " + def.name + " is already defined at " + where(it->second),
                def.location);
        }
        check_annotation(def);
      }
    }
    return std::move(out_);
  }

 private:
  static std::string where(const Span& s) {
    return s.file + ":" + std::to_string(s.line) + ":" + std::to_string(s.column);
  }

  void error(std::string code, std::string message, const Span& span) {
    out_.push_back(make_error(std::move(code), std::move(message), span));
  }

  void check_annotation(const AnnotationDef& def) {
    std::set<std::string> names;
    for (const auto& attr : def.attributes) {
      if (!names.insert(attr.name).second) {
        error("duplicate-attribute",
              "attribute " + attr.name + " is declared more than once in " + def.name,
              attr.location);
      }
      if (attr.default_value) check_default(attr, *attr.default_value);
    }
    for (const auto& c : def.constraints) check_constraint(c);
  }

  // --- defaults -----------------------------------------------------------

  void check_default(const AttributeDef& attr, const DefaultValue& v) {
    if (const auto* arr = std::get_if<ArrayLiteral>(&v.value)) {
      if (!attr.is_array) {
        kind_mismatch(attr, v, "an array value");
        return;
      }
      for (std::size_t i = 0; i < arr->elements.size(); ++i) {
        if (i > 0 && arr->elements[i].value.index() != arr->elements[0].value.index()) {
          error("default-kind", "array default for " + attr.name + " mixes value kinds",
                arr->elements[i].location);
          return;
        }
      }
      for (const auto& e : arr->elements) check_element(attr, e);
      return;
    }
    // A single value is shorthand for a one-element array.
    check_element(attr, v);
  }

  void kind_mismatch(const AttributeDef& attr, const DefaultValue& v, std::string_view got) {
    error("default-kind",
          "default of " + attr.name + " has type " + attr.type_spelling() + " but the value " +
              print(v) + " is " + std::string(got),
          v.location);
  }

  void check_element(const AttributeDef& attr, const DefaultValue& v) {
    const AttributeKind k = attr.kind;
    std::visit(
        [&](const auto& lit) {
          using T = std::decay_t<decltype(lit)>;
          if constexpr (std::is_same_v<T, IntegerLiteral>) {
            if (k == AttributeKind::kFloat || k == AttributeKind::kDouble) return;
            if (!is_integral(k)) return kind_mismatch(attr, v, "an integer");
            const bool long_suffix =
                !lit.text.empty() && (lit.text.back() == 'L' || lit.text.back() == 'l');
            if (long_suffix && k != AttributeKind::kLong) {
              return kind_mismatch(attr, v, "a long");
            }
            auto [lo, hi] = integral_range(k);
            if (lit.value < lo || lit.value > hi) {
              error("default-range",
                    "default " + lit.text + " does not fit in " + attr.type_spelling(),
                    v.location);
            }
          } else if constexpr (std::is_same_v<T, RealLiteral>) {
            if (k != AttributeKind::kFloat && k != AttributeKind::kDouble) {
              return kind_mismatch(attr, v, "a real number");
            }
            if (k == AttributeKind::kFloat && std::isfinite(lit.value) &&
                std::fabs(lit.value) > FLT_MAX) {
              error("default-range", "default " + lit.text + " does not fit in float",
                    v.location);
            }
          } else if constexpr (std::is_same_v<T, StringLiteral>) {
            if (k != AttributeKind::kString) kind_mismatch(attr, v, "a string");
          } else if constexpr (std::is_same_v<T, CharLiteral>) {
            if (k != AttributeKind::kChar) return kind_mismatch(attr, v, "a character");
            if (!valid_char_literal(lit.text)) {
              error("default-range", "character literal must hold exactly one character",
                    v.location);
            }
          } else if constexpr (std::is_same_v<T, BoolLiteral>) {
            if (k != AttributeKind::kBoolean) kind_mismatch(attr, v, "a boolean");
          } else if constexpr (std::is_same_v<T, ClassLiteral>) {
            if (k != AttributeKind::kClassRef) kind_mismatch(attr, v, "a class literal");
          } else if constexpr (std::is_same_v<T, EnumRef>) {
            if (k != AttributeKind::kExternal) return kind_mismatch(attr, v, "an enum constant");
            if (lit.type_name != attr.external_type) {
              kind_mismatch(attr, v, "a constant of " + lit.type_name);
            }
          } else if constexpr (std::is_same_v<T, AnnLiteral>) {
            if (k != AttributeKind::kExternal) return kind_mismatch(attr, v, "an annotation");
            if (lit.name != attr.external_type) kind_mismatch(attr, v, "an @" + lit.name);
            std::set<std::string> keys;
            for (const auto& kv : lit.members) {
              if (!keys.insert(kv.key).second) {
                error("duplicate-key", "key " + kv.key + " repeated in @" + lit.name,
                      kv.value.location);
              }
            }
          } else {
            error("default-kind", "nested arrays are not allowed", v.location);
          }
        },
        v.value);
  }

  // --- constraints --------------------------------------------------------

  void check_constraint(const ConstraintDef& c) {
    for (const auto& s : c.statements) {
      if (s.ann_ref && !known_.count(*s.ann_ref)) {
        out_.push_back(make_warning("unknown-annotation",
                                    "@" + *s.ann_ref + " is not defined in this annotation set",
                                    s.location));
      }
      if (s.target_type == TargetType::kField && s.modifiers.is_abstract) {
        error("abstract-field", "fields cannot be abstract", s.location);
      }
      if (!c.scope || !s.target_type) continue;
      const TargetType t = *s.target_type;
      if (is_contained(*c.scope)) {
        if (t != TargetType::kClass && t != TargetType::kInterface &&
            t != TargetType::kAnnotation) {
          error("contained-scope",
                "at " + std::string(to_string(*c.scope)) +
                    ": statements describe the enclosing type and must name class, interface "
                    "or annotation, not " + std::string(to_string(t)),
                s.location);
        }
      } else if (!is_contained(t)) {
        error("container-scope",
              "at " + std::string(to_string(*c.scope)) +
                  ": statements describe members and must name method, field or constructor, "
                  "not " + std::string(to_string(t)),
              s.location);
      }
    }
  }

  const std::vector<AnnSourceFile>& files_;
  std::set<std::string> known_;
  std::vector<Diagnostic> out_;
};

}  // namespace

std::vector<Diagnostic> analyze(const std::vector<AnnSourceFile>& files) {
  return Analyzer(files).run();
}

}  // namespace annlint
