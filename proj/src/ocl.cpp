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

#include "annlint/ocl.hpp"

#include <sstream>

namespace annlint {

namespace {

std::string capitalized(TargetType t) {
  std::string s(to_string(t));
  s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

std::string_view metaclass(TargetType t) {
  switch (t) {
    case TargetType::kClass: return "JavaClass";
    case TargetType::kInterface: return "JavaInterface";
    case TargetType::kAnnotation: return "JavaAnnotationType";
    case TargetType::kEnum: return "JavaEnum";
    case TargetType::kMethod:
    case TargetType::kConstructor: return "JavaMethod";
    case TargetType::kField: return "JavaField";
  }
  return "JavaClass";
}

std::string ocl_type(const AttributeDef& a) {
  std::string t;
  switch (a.kind) {
    case AttributeKind::kClassRef: t = "JavaClass"; break;
    case AttributeKind::kString:
    case AttributeKind::kChar: t = "String"; break;
    case AttributeKind::kInt:
    case AttributeKind::kLong:
    case AttributeKind::kShort:
    case AttributeKind::kByte: t = "Integer"; break;
    case AttributeKind::kFloat:
    case AttributeKind::kDouble: t = "Real"; break;
    case AttributeKind::kBoolean: t = "Boolean"; break;
    case AttributeKind::kExternal: t = a.external_type; break;
  }
  return a.is_array ? "Sequence(" + t + ")" : t;
}

std::string role(const AnnotationIR& ann, TargetType t) {
  return "self.target" + ann.name() + capitalized(t);
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

class Emitter {
 public:
  explicit Emitter(const ConstraintIR& ir) : ir_(ir) {}

  std::string run() {
    for (const auto& ann : ir_.annotations) emit_class(ann);
    for (const auto& ann : ir_.annotations) emit_associations(ann);
    return out_.str();
  }

 private:
  // Modifier and co-annotation tests on `subject`, and-joined.
  std::vector<std::string> conditions(const Atom& a, const std::string& subject, TargetType type) {
    std::vector<std::string> c;
    if (a.mods.visibility) {
      c.push_back(subject + ".visibility = #" + std::string(to_string(*a.mods.visibility)));
    }
    if (a.mods.is_abstract) c.push_back(subject + ".isAbstract = true");
    if (a.mods.is_static) c.push_back(subject + ".isStatic = true");
    if (a.mods.is_final) c.push_back(subject + ".isFinal = true");
    if (!a.co_ann.empty()) c.push_back(carries(subject, a, type));
    return c;
  }

  // The element `subject` of type `type` bears the atom's co-annotation.
  std::string carries(const std::string& subject, const Atom& a, TargetType type) {
    if (a.co_index < 0) return "false";
    const AnnotationIR& co = ir_.annotations[static_cast<std::size_t>(a.co_index)];
    if (!co.allows(type)) return "false";
    return subject + ".annotations" + co.name() + "->notEmpty()";
  }

  std::string self_atom(const AnnotationIR& ann, const Predicate& p, const Atom& a) {
    if (p.scope) {
      if (!a.type) return "(" + carries(role(ann, *p.scope), a, *p.scope) + ")";
      if (*a.type != *p.scope) return "false";
      auto c = conditions(a, role(ann, *a.type), *a.type);
      return c.empty() ? "true" : "(" + join(c, " and ") + ")";
    }
    if (!a.type) {
      std::vector<std::string> alts;
      for (TargetType t : ann.target_order) {
        const std::string r = role(ann, t);
        const std::string has = carries(r, a, t);
        alts.push_back(ann.single_target() ? has : "(" + r + "->notEmpty() and " + has + ")");
      }
      return "(" + join(alts, " or ") + ")";
    }
    if (!ann.allows(*a.type)) return "false";
    const std::string r = role(ann, *a.type);
    auto c = conditions(a, r, *a.type);
    if (!ann.single_target()) c.insert(c.begin(), r + "->notEmpty()");
    return c.empty() ? "true" : "(" + join(c, " and ") + ")";
  }

  std::string member_atom(const AnnotationIR& ann, const Predicate& p, const Atom& a,
                          bool for_all) {
    const std::string r = role(ann, *p.scope);
    const bool field = *a.type == TargetType::kField;
    std::vector<std::string> kind;
    if (*a.type == TargetType::kConstructor) kind.push_back("e.isConstructor = true");
    if (*a.type == TargetType::kMethod) kind.push_back("e.isConstructor = false");
    auto c = conditions(a, "e", *a.type);
    const std::string coll = r + (field ? ".fields" : ".methods");
    if (for_all) {
      std::string body = c.empty() ? "true" : join(c, " and ");
      if (!kind.empty()) body = kind[0] + " implies (" + body + ")";
      return "(" + coll + "->forAll(e |\n            " + body + "))";
    }
    kind.insert(kind.end(), c.begin(), c.end());
    const std::string body = kind.empty() ? "true" : join(kind, " and ");
    return "(" + coll + "->exists(e |\n            " + body + "))";
  }

  std::string owner_atom(const AnnotationIR& ann, const Predicate& p, const Atom& a) {
    const std::string owner = role(ann, *p.scope) + ".owner";
    std::vector<std::string> parts;
    Atom plain = a;
    plain.co_ann.clear();
    if (!a.co_ann.empty()) {
      if (a.co_index < 0) return "false";
      const AnnotationIR& co = ir_.annotations[static_cast<std::size_t>(a.co_index)];
      if (!co.allows(*a.type)) return "false";
      parts.push_back(co.name() + ".allInstances()->exists(e |\n            e.target" + co.name() +
                      capitalized(*a.type) + " = " + owner + ")");
    } else {
      parts.push_back(owner + ".oclIsTypeOf(" + std::string(metaclass(*a.type)) + ")");
    }
    for (auto& c : conditions(plain, owner, *a.type)) parts.push_back(std::move(c));
    return "(" + join(parts, " and ") + ")";
  }

  std::string atom(const AnnotationIR& ann, const Predicate& p, const Atom& a, bool for_all) {
    switch (a.relation) {
      case Relation::kSelf: return self_atom(ann, p, a);
      case Relation::kMember: return member_atom(ann, p, a, for_all);
      case Relation::kOwner: return owner_atom(ann, p, a);
    }
    return "false";
  }

  // Pure target-type requirements live in the associations instead.
  static bool encoded_by_association(const Predicate& p) {
    if (p.scope || p.polarity != Polarity::kRequire) return false;
    for (const Atom& a : p.atoms) {
      if (!a.type || !a.mods.empty() || !a.co_ann.empty()) return false;
    }
    return true;
  }

  void emit_invariant(const AnnotationIR& ann, const Predicate& p) {
    if (encoded_by_association(p)) return;
    if (p.scope && !ann.allows(*p.scope)) {
      out_ << "    -- " << p.name << ": " << ann.name() << " never annotates "
           << to_string(*p.scope) << " targets\n\n";
      return;
    }
    const bool require = p.polarity == Polarity::kRequire;
    std::vector<std::string> atoms;
    for (const Atom& a : p.atoms) atoms.push_back(atom(ann, p, a, require && p.for_all));
    const std::string body = join(atoms, require ? " or\n        " : " and\n        ");

    std::string guard;
    if (p.scope) {
      guard = role(ann, *p.scope) + "->notEmpty() implies ";
    } else if (require && !ann.single_target()) {
      // An unscoped require only binds uses on the types it names.
      std::vector<std::string> named;
      for (const Atom& a : p.atoms) {
        if (!a.type) {
          named.clear();
          break;
        }
        if (ann.allows(*a.type)) named.push_back(role(ann, *a.type) + "->notEmpty()");
      }
      if (!named.empty()) guard = "(" + join(named, " or ") + ") implies ";
    }
    out_ << "    inv " << p.name << ":\n        " << guard << (require ? "(" : "not (")
         << "\n        " << body << "\n        )\n\n";
  }

  void emit_class(const AnnotationIR& ann) {
    out_ << "class " << ann.name() << " < JavaAnnotation\n";
    if (!ann.source.attributes.empty()) {
      out_ << "attributes\n";
      for (const auto& a : ann.source.attributes) out_ << "    " << a.name << " : " << ocl_type(a) << "\n";
    }
    out_ << "constraints\n    inv redefs : self.target.isUndefined()\n\n";
    // Requirements first, then prohibitions, each in source order.
    for (Polarity pol : {Polarity::kRequire, Polarity::kForbid}) {
      for (const auto& p : ann.predicates) {
        if (p.polarity == pol) emit_invariant(ann, p);
      }
    }
    out_ << "end\n\n";
  }

  // Association name suffix: the first unscoped require statement naming `t`.
  static std::string association_suffix(const AnnotationIR& ann, TargetType t) {
    for (const auto& c : ann.source.constraints) {
      if (c.scope || c.kind != ConstraintKind::kRequire) continue;
      for (const auto& s : c.statements) {
        if (s.target_type == t) return statement_descriptor(s);
      }
    }
    return std::string(to_string(t));
  }

  void emit_associations(const AnnotationIR& ann) {
    const std::string card = ann.single_target() ? "[1..1]" : "[0..1]";
    for (TargetType t : ann.target_order) {
      out_ << "association " << ann.name() << "_target_" << association_suffix(ann, t)
           << " between\n    " << metaclass(t) << ' ' << card << " role target" << ann.name()
           << capitalized(t) << "\n    " << ann.name() << " [0..*] role annotations" << ann.name()
           << "\nend\n\n";
    }
  }

  const ConstraintIR& ir_;
  std::ostringstream out_;
};

}  // namespace

std::string emit_ocl(const ConstraintIR& ir) { return Emitter(ir).run(); }

}  // namespace annlint
