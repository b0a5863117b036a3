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

#include "annlint/codegen.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "annlint/checker.hpp"

namespace annlint {

namespace {

std::string package_of(const AnnotationDef& def) {
  return def.package_name.empty() ? std::string(kDefaultPackage) : def.package_name;
}

std::string path_for(const std::string& package, const std::string& type) {
  std::string dir = package;
  for (char& c : dir) {
    if (c == '.') c = '/';
  }
  return dir + "/" + type + ".java";
}

// --- annotation types -----------------------------------------------------

std::string java_type(const AttributeDef& a) {
  std::string t;
  switch (a.kind) {
    case AttributeKind::kClassRef: t = "Class<?>"; break;
    case AttributeKind::kString: t = "String"; break;
    case AttributeKind::kInt: t = "int"; break;
    case AttributeKind::kLong: t = "long"; break;
    case AttributeKind::kShort: t = "short"; break;
    case AttributeKind::kFloat: t = "float"; break;
    case AttributeKind::kDouble: t = "double"; break;
    case AttributeKind::kChar: t = "char"; break;
    case AttributeKind::kBoolean: t = "boolean"; break;
    case AttributeKind::kByte: t = "byte"; break;
    case AttributeKind::kExternal: t = a.external_type; break;
  }
  return a.is_array ? t + "[]" : t;
}

bool has_suffix(const std::string& text, std::string_view chars) {
  return !text.empty() && chars.find(text.back()) != std::string_view::npos;
}

std::string java_value(const DefaultValue& v, AttributeKind kind) {
  return std::visit(
      [kind](const auto& lit) -> std::string {
        using T = std::decay_t<decltype(lit)>;
        if constexpr (std::is_same_v<T, IntegerLiteral>) {
          if (kind == AttributeKind::kFloat) return lit.text + "f";
          if (kind == AttributeKind::kDouble) return lit.text + ".0";
          if (kind == AttributeKind::kLong && !has_suffix(lit.text, "lL")) return lit.text + "L";
          return lit.text;
        } else if constexpr (std::is_same_v<T, RealLiteral>) {
          std::string t = lit.text;
          if (kind == AttributeKind::kFloat) {
            if (has_suffix(t, "fF")) return t;
            if (has_suffix(t, "dD")) t.pop_back();
            return t + "f";
          }
          return t;
        } else if constexpr (std::is_same_v<T, StringLiteral>) {
          return "\"" + lit.text + "\"";
        } else if constexpr (std::is_same_v<T, CharLiteral>) {
          return "'" + lit.text + "'";
        } else if constexpr (std::is_same_v<T, BoolLiteral>) {
          return lit.value ? "true" : "false";
        } else if constexpr (std::is_same_v<T, ClassLiteral>) {
          return lit.type_name + ".class";
        } else if constexpr (std::is_same_v<T, EnumRef>) {
          return lit.type_name + "." + lit.constant;
        } else if constexpr (std::is_same_v<T, AnnLiteral>) {
          std::string s = "@" + lit.name;
          if (lit.form == AnnLiteral::Form::kMarker) return s;
          s += "(";
          for (std::size_t i = 0; i < lit.members.size(); ++i) {
            if (i) s += ", ";
            // Member kinds are unknown here; literals keep their own spelling.
            const std::string v = java_value(lit.members[i].value, AttributeKind::kExternal);
            s += lit.form == AnnLiteral::Form::kSingle ? v : lit.members[i].key + " = " + v;
          }
          return s + ")";
        } else {
          std::string s = "{";
          for (std::size_t i = 0; i < lit.elements.size(); ++i) {
            if (i) s += ", ";
            s += java_value(lit.elements[i], kind);
          }
          return s + "}";
        }
      },
      v.value);
}

std::string_view element_type(TargetType t) {
  switch (t) {
    case TargetType::kClass:
    case TargetType::kInterface:
    case TargetType::kAnnotation:
    case TargetType::kEnum: return "TYPE";
    case TargetType::kMethod: return "METHOD";
    case TargetType::kField: return "FIELD";
    case TargetType::kConstructor: return "CONSTRUCTOR";
  }
  return "TYPE";
}

std::string_view retention_policy(Retention r) {
  switch (r) {
    case Retention::kRuntime: return "RUNTIME";
    case Retention::kClass: return "CLASS";
    case Retention::kSource: return "SOURCE";
    case Retention::kUnspecified: break;
  }
  return {};
}

// --- processors -----------------------------------------------------------

std::string_view element_kind(TargetType t) {
  switch (t) {
    case TargetType::kClass: return "CLASS";
    case TargetType::kInterface: return "INTERFACE";
    case TargetType::kAnnotation: return "ANNOTATION_TYPE";
    case TargetType::kEnum: return "ENUM";
    case TargetType::kMethod: return "METHOD";
    case TargetType::kField: return "FIELD";
    case TargetType::kConstructor: return "CONSTRUCTOR";
  }
  return "CLASS";
}

std::string kind_test(const std::string& e, TargetType t) {
  return e + ".getKind() == ElementKind." + std::string(element_kind(t));
}

class ProcessorWriter {
 public:
  ProcessorWriter(const AnnotationDef& def, const ConstraintIR& ir, Polarity polarity)
      : def_(def), ir_(ir), polarity_(polarity) {}

  std::string write(const std::string& package, const std::string& class_name) {
    std::ostringstream body;
    const AnnotationIR* ann = ir_.find(def_.name);
    std::vector<const Predicate*> preds;
    for (const auto& p : ann->predicates) {
      if (p.polarity == polarity_) preds.push_back(&p);
    }
    const bool check_targets = polarity_ == Polarity::kRequire && target_is_lossy(*ann);
    if (check_targets) body << allowed_targets_method(*ann);
    for (const Predicate* p : preds) body << check_method(*p);

    std::ostringstream out;
    out << "package " << package << ";\n\n"
        << "import java.util.Set;\n"
        << "import javax.annotation.processing.AbstractProcessor;\n"
        << "import javax.annotation.processing.RoundEnvironment;\n"
        << "import javax.annotation.processing.SupportedAnnotationTypes;\n"
        << "import javax.annotation.processing.SupportedSourceVersion;\n"
        << "import javax.lang.model.SourceVersion;\n";
    if (uses_.count("hasAnnotation")) out << "import javax.lang.model.element.AnnotationMirror;\n";
    out << "import javax.lang.model.element.Element;\n"
        << "import javax.lang.model.element.ElementKind;\n"
        << "import javax.lang.model.element.Modifier;\n"
        << "import javax.lang.model.element.TypeElement;\n"
        << "import javax.tools.Diagnostic.Kind;\n\n"
        << "@SupportedAnnotationTypes(\"" << package << "." << def_.name << "\")\n"
        << "@SupportedSourceVersion(SourceVersion.RELEASE_6)\n"
        << "public class " << class_name << " extends AbstractProcessor {\n\n"
        << "    @Override\n"
        << "    public boolean process(Set<? extends TypeElement> annotations,\n"
        << "                           RoundEnvironment objects) {\n"
        << "        // iterate over all objects to check\n"
        << "        for (Element elt : objects.getElementsAnnotatedWith(" << def_.name
        << ".class)) {\n"
        << "            if (!isPlacementValid(elt)) {\n"
        << "                this.processingEnv.getMessager().printMessage(\n"
        << "                    Kind.ERROR,\n"
        << "                    \"" << disallowed_message(def_.name) << "\",\n"
        << "                    elt);\n"
        << "            }\n"
        << "        }\n"
        << "        return true;\n"
        << "    }\n\n"
        << "    private boolean isPlacementValid(Element elt) {\n";
    if (check_targets) {
      out << "        if (!check_allowed_targets(elt)) {\n"
          << "            return false;\n"
          << "        }\n";
    }
    for (const Predicate* p : preds) {
      out << "        if (!" << method_name(*p) << "(elt)) {\n"
          << "            return false;\n"
          << "        }\n";
    }
    out << "        return true;\n"
        << "    }\n\n"
        << body.str() << helpers() << "}\n";
    std::string text = out.str();
    // The last block leaves a blank line that the closing brace must not follow.
    if (text.ends_with("\n\n}\n")) text.erase(text.size() - 3, 1);
    return text;
  }

 private:
  static std::string method_name(const Predicate& p) { return "check_" + p.name; }

  // ElementType.TYPE admits every type kind, so a narrower choice needs its own check.
  static bool target_is_lossy(const AnnotationIR& ann) {
    if (ann.implicit_targets) return false;
    int type_kinds = 0;
    for (TargetType t : {TargetType::kClass, TargetType::kInterface, TargetType::kAnnotation,
                         TargetType::kEnum}) {
      type_kinds += ann.allows(t) ? 1 : 0;
    }
    return type_kinds > 0 && type_kinds < 4;
  }

  std::string allowed_targets_method(const AnnotationIR& ann) const {
    std::ostringstream out;
    out << "    // check: " << kAllowedTargetsPredicate << "\n"
        << "    // " << def_.name << " " << describe_allowed_targets(ann) << "\n"
        << "    private boolean check_allowed_targets(Element elt) {\n"
        << "        return ";
    for (std::size_t i = 0; i < ann.target_order.size(); ++i) {
      if (i) out << "\n            || ";
      out << kind_test("elt", ann.target_order[i]);
    }
    out << ";\n"
        << "    }\n\n";
    return out.str();
  }

  std::string qualified(const std::string& ann) const {
    const AnnotationIR* co = ir_.find(ann);
    if (!co) return ann;
    return package_of(co->source) + "." + ann;
  }

  // Conjunction of the kind, modifier and co-annotation tests of `a` on `e`.
  std::string element_test(const Atom& a, const std::string& e, TargetType type) {
    std::vector<std::string> parts = {kind_test(e, type)};
    if (a.mods.visibility) {
      if (*a.mods.visibility == Visibility::kPackage) {
        uses_.insert("isPackagePrivate");
        parts.push_back("isPackagePrivate(" + e + ")");
      } else {
        std::string mod(to_string(*a.mods.visibility));
        for (char& c : mod) c = static_cast<char>(c - 'a' + 'A');
        parts.push_back(e + ".getModifiers().contains(Modifier." + mod + ")");
      }
    }
    if (a.mods.is_abstract) {
      uses_.insert("isAbstract");
      parts.push_back("isAbstract(" + e + ")");
    }
    if (a.mods.is_static) parts.push_back(e + ".getModifiers().contains(Modifier.STATIC)");
    if (a.mods.is_final) {
      uses_.insert("isFinal");
      parts.push_back("isFinal(" + e + ")");
    }
    if (!a.co_ann.empty()) {
      uses_.insert("hasAnnotation");
      parts.push_back("hasAnnotation(" + e + ", \"" + qualified(a.co_ann) + "\")");
    }
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += "\n                && ";
      s += parts[i];
    }
    return s;
  }

  std::string atom_code(const Atom& a, std::size_t i, bool for_all) {
    std::ostringstream out;
    const std::string var = "atom" + std::to_string(i);
    switch (a.relation) {
      case Relation::kSelf:
        if (!a.type) {
          uses_.insert("hasAnnotation");
          out << "        boolean " << var << " = hasAnnotation(elt, \"" << qualified(a.co_ann)
              << "\");\n";
        } else {
          out << "        boolean " << var << " = " << element_test(a, "elt", *a.type) << ";\n";
        }
        break;
      case Relation::kMember:
        out << "        boolean " << var << " = " << (for_all ? "true" : "false") << ";\n"
            << "        for (Element member : elt.getEnclosedElements()) {\n";
        if (for_all) {
          out << "            if (" << kind_test("member", *a.type) << "\n"
              << "                && !(" << element_test(a, "member", *a.type) << ")) {\n"
              << "                " << var << " = false;\n";
        } else {
          out << "            if (" << element_test(a, "member", *a.type) << ") {\n"
              << "                " << var << " = true;\n";
        }
        out << "            }\n"
            << "        }\n";
        break;
      case Relation::kOwner:
        out << "        Element owner" << i << " = elt.getEnclosingElement();\n"
            << "        boolean " << var << " = owner" << i << " != null\n"
            << "                && " << element_test(a, "owner" + std::to_string(i), *a.type)
            << ";\n";
        break;
    }
    return out.str();
  }

  std::string check_method(const Predicate& p) {
    std::ostringstream out;
    const bool require = p.polarity == Polarity::kRequire;
    out << "    // check: " << p.name << "\n"
        << "    // " << def_.name << " " << describe(p) << "\n"
        << "    private boolean " << method_name(p) << "(Element elt) {\n";
    if (p.scope) {
      out << "        if (elt.getKind() != ElementKind." << element_kind(*p.scope) << ") {\n"
          << "            return true;\n"
          << "        }\n";
    } else if (require) {
      // Unscoped requirements bind only the element kinds they name.
      std::vector<std::string> named;
      for (const Atom& a : p.atoms) {
        if (!a.type) {
          named.clear();
          break;
        }
        named.push_back(kind_test("elt", *a.type));
      }
      if (!named.empty()) {
        out << "        if (!(";
        for (std::size_t i = 0; i < named.size(); ++i) {
          if (i) out << "\n              || ";
          out << named[i];
        }
        out << ")) {\n"
            << "            return true;\n"
            << "        }\n";
      }
    }
    std::string combined;
    for (std::size_t i = 0; i < p.atoms.size(); ++i) {
      out << atom_code(p.atoms[i], i, require && p.for_all);
      if (i) combined += require ? " || " : " && ";
      combined += "atom" + std::to_string(i);
    }
    out << "        return " << (require ? combined : "!(" + combined + ")") << ";\n"
        << "    }\n\n";
    return out.str();
  }

  std::string helpers() const {
    std::ostringstream out;
    if (uses_.count("isPackagePrivate")) {
      out << "    private static boolean isPackagePrivate(Element e) {\n"
          << "        Set<Modifier> mods = e.getModifiers();\n"
          << "        return !mods.contains(Modifier.PUBLIC)\n"
          << "            && !mods.contains(Modifier.PROTECTED)\n"
          << "            && !mods.contains(Modifier.PRIVATE);\n"
          << "    }\n\n";
    }
    if (uses_.count("isAbstract")) {
      out << "    private static boolean isAbstract(Element e) {\n"
          << "        if (e.getKind() == ElementKind.FIELD) {\n"
          << "            return false;\n"
          << "        }\n"
          << "        if (e.getKind() == ElementKind.INTERFACE\n"
          << "            || e.getKind() == ElementKind.ANNOTATION_TYPE) {\n"
          << "            return true;\n"
          << "        }\n"
          << "        return e.getModifiers().contains(Modifier.ABSTRACT);\n"
          << "    }\n\n";
    }
    if (uses_.count("isFinal")) {
      out << "    private static boolean isFinal(Element e) {\n"
          << "        if (e.getKind() == ElementKind.INTERFACE\n"
          << "            || e.getKind() == ElementKind.ANNOTATION_TYPE) {\n"
          << "            return false;\n"
          << "        }\n"
          << "        return e.getModifiers().contains(Modifier.FINAL);\n"
          << "    }\n\n";
    }
    if (uses_.count("hasAnnotation")) {
      out << "    private static boolean hasAnnotation(Element e, String name) {\n"
          << "        for (AnnotationMirror mirror : e.getAnnotationMirrors()) {\n"
          << "            TypeElement type = (TypeElement) mirror.getAnnotationType().asElement();\n"
          << "            if (type.getQualifiedName().contentEquals(name)) {\n"
          << "                return true;\n"
          << "            }\n"
          << "        }\n"
          << "        return false;\n"
          << "    }\n\n";
    }
    std::string s = out.str();
    if (!s.empty()) s.pop_back();
    return s;
  }

  const AnnotationDef& def_;
  const ConstraintIR& ir_;
  Polarity polarity_;
  std::set<std::string> uses_;
};

}  // namespace

GeneratedUnit gen_annotation_type(const AnnotationDef& def, const ConstraintIR& ir,
                                  const std::string& package) {
  std::set<std::string> imports;
  for (const auto& attr : def.attributes) {
    if (attr.kind != AttributeKind::kExternal) continue;
    if (const AnnotationIR* other = ir.find(attr.external_type)) {
      const std::string pkg = package_of(other->source);
      if (pkg != package) imports.insert(pkg + "." + attr.external_type);
      continue;
    }
    // Any default of this annotation may fix the type, not just the attribute's own.
    bool named_by_default = false;
    auto names_type = [&attr](const DefaultValue& v) {
      if (const auto* e = std::get_if<EnumRef>(&v.value)) return e->type_name == attr.external_type;
      if (const auto* a = std::get_if<AnnLiteral>(&v.value)) return a->name == attr.external_type;
      return false;
    };
    for (const auto& other : def.attributes) {
      if (!other.default_value) continue;
      named_by_default = named_by_default || names_type(*other.default_value);
      if (const auto* arr = std::get_if<ArrayLiteral>(&other.default_value->value)) {
        for (const auto& e : arr->elements) named_by_default = named_by_default || names_type(e);
      }
    }
    if (!named_by_default) {
      throw CodegenError("attribute " + attr.name + " of " + def.name + " has type " +
                         attr.external_type + ", which is neither an annotation of this set "
                         "nor fixed by an enum or annotation default");
    }
  }

  const AnnotationIR* ann = ir.find(def.name);
  std::vector<std::string_view> targets;
  if (ann && !ann->implicit_targets) {
    for (TargetType t : ann->target_order) {
      const std::string_view et = element_type(t);
      if (std::find(targets.begin(), targets.end(), et) == targets.end()) targets.push_back(et);
    }
  }
  const std::string_view retention = retention_policy(def.retention);

  std::ostringstream out;
  out << "package " << package << ";\n\n";
  for (const auto& imp : imports) out << "import " << imp << ";\n";
  if (!targets.empty() || !retention.empty()) out << "import java.lang.annotation.*;\n";
  if (!imports.empty() || !targets.empty() || !retention.empty()) out << "\n";
  if (targets.size() == 1) {
    out << "@Target(ElementType." << targets[0] << ")\n";
  } else if (!targets.empty()) {
    out << "@Target({";
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (i) out << ", ";
      out << "ElementType." << targets[i];
    }
    out << "})\n";
  }
  if (!retention.empty()) out << "@Retention(RetentionPolicy." << retention << ")\n";
  if (def.attributes.empty()) {
    out << "public @interface " << def.name << " { }\n";
  } else {
    out << "public @interface " << def.name << " {\n";
    for (const auto& attr : def.attributes) {
      out << "    " << java_type(attr) << " " << attr.name << "()";
      if (attr.default_value) out << " default " << java_value(*attr.default_value, attr.kind);
      out << ";\n";
    }
    out << "}\n";
  }
  return {path_for(package, def.name), out.str()};
}

std::vector<GeneratedUnit> gen_processors(const AnnotationDef& def, const ConstraintIR& ir,
                                          const std::string& package) {
  const AnnotationIR* ann = ir.find(def.name);
  if (!ann) throw CodegenError("annotation " + def.name + " was not compiled");
  bool any_require = false;
  bool any_forbid = false;
  for (const auto& p : ann->predicates) {
    (p.polarity == Polarity::kRequire ? any_require : any_forbid) = true;
  }
  std::vector<GeneratedUnit> units;
  if (any_require) {
    const std::string name = def.name + "RequireProcessor";
    units.push_back({path_for(package, name),
                     ProcessorWriter(def, ir, Polarity::kRequire).write(package, name)});
  }
  if (any_forbid) {
    const std::string name = def.name + "ForbidProcessor";
    units.push_back({path_for(package, name),
                     ProcessorWriter(def, ir, Polarity::kForbid).write(package, name)});
  }
  return units;
}

std::vector<GeneratedUnit> gen_all(const std::vector<AnnSourceFile>& files,
                                   const ConstraintIR& ir) {
  std::vector<GeneratedUnit> out;
  for (const auto& f : files) {
    for (const auto& def : f.annotations) {
      const std::string package = package_of(def);
      out.push_back(gen_annotation_type(def, ir, package));
      for (auto& u : gen_processors(def, ir, package)) out.push_back(std::move(u));
    }
  }
  return out;
}

}  // namespace annlint
