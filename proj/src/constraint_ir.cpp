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

#include "annlint/constraint_ir.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "annlint/predicate_eval.hpp"

namespace annlint {

namespace {

bool type_like(TargetType t) {
  return t == TargetType::kInterface || t == TargetType::kAnnotation;
}

// Evaluator view over a complete model.
class ModelView {
 public:
  using Element = ElementRef;

  explicit ModelView(const ProgramModel& m) : m_(m) {
    for (const auto& use : m.annotations) {
      if (auto ref = resolve_path(m, use.target)) carried_[*ref].insert(use.ann);
    }
  }

  ElementFlags flags(ElementRef e) const { return flags_of(m_, e); }

  Truth carries(ElementRef e, const Atom& a) const {
    auto it = carried_.find(e);
    return truth_of(it != carried_.end() && it->second.count(a.co_ann) > 0);
  }

  std::optional<ElementRef> owner(ElementRef e) const {
    if (e.is_classifier()) return std::nullopt;
    return ElementRef{e.classifier, MemberKind::kNone, 0};
  }

  bool members_open(ElementRef, TargetType) const { return false; }

  template <class F>
  void for_each_member(ElementRef e, F&& f) const {
    if (!e.is_classifier()) return;
    const Classifier& c = m_.classifiers[e.classifier];
    for (std::size_t i = 0; i < c.methods.size(); ++i) f(ElementRef{e.classifier, MemberKind::kMethod, i});
    for (std::size_t i = 0; i < c.fields.size(); ++i) f(ElementRef{e.classifier, MemberKind::kField, i});
  }

 private:
  const ProgramModel& m_;
  std::map<ElementRef, std::set<std::string, std::less<>>> carried_;
};

static_assert(ElementView<ModelView>);

// --- descriptions ---------------------------------------------------------

std::string with_article(const std::string& phrase) {
  if (phrase.empty()) return phrase;
  const char c = phrase.front();
  const bool vowel = c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
  return (vowel ? "an " : "a ") + phrase;
}

// "public final method annotated @Id", without article.
std::string noun_phrase(const Atom& a) {
  std::string s;
  auto add = [&s](std::string_view w) {
    if (!s.empty()) s += ' ';
    s += w;
  };
  if (a.mods.visibility) add(to_string(*a.mods.visibility));
  if (a.mods.is_final) add("final");
  if (a.mods.is_abstract) add("abstract");
  if (a.mods.is_static) add("static");
  add(a.type ? to_string(*a.type) : "element");
  if (!a.co_ann.empty()) add("annotated @" + a.co_ann);
  return s;
}

std::string scope_noun(const Predicate& p) {
  return p.scope ? std::string(to_string(*p.scope)) : std::string("element");
}

std::string require_phrase(const Predicate& p, const Atom& a) {
  const std::string subject = "the annotated " + scope_noun(p);
  switch (a.relation) {
    case Relation::kSelf:
      if (!a.type) return subject + " to also carry @" + a.co_ann;
      return subject + " to be " + with_article(noun_phrase(a));
    case Relation::kMember:
      if (p.for_all) {
        return "every " + std::string(to_string(*a.type)) + " in " + subject + " to be " +
               with_article(noun_phrase(a));
      }
      return with_article(noun_phrase(a)) + " in " + subject;
    case Relation::kOwner:
      return "the type enclosing " + subject + " to be " + with_article(noun_phrase(a));
  }
  return {};
}

std::string forbid_phrase(const Predicate& p, const Atom& a) {
  const std::string subject = "the annotated " + scope_noun(p);
  switch (a.relation) {
    case Relation::kSelf:
      if (!a.type) return subject + " also carrying @" + a.co_ann;
      return subject + " being " + with_article(noun_phrase(a));
    case Relation::kMember:
      return with_article(noun_phrase(a)) + " in " + subject;
    case Relation::kOwner:
      return "the type enclosing " + subject + " being " + with_article(noun_phrase(a));
  }
  return {};
}

}  // namespace

// --- modifiers ------------------------------------------------------------

ModifierTest to_modifier_test(const Modifiers& m) {
  return ModifierTest{m.visibility, m.is_abstract, m.is_static, m.is_final};
}

bool modifiers_hold(const ModifierTest& test, const ElementFlags& flags) {
  if (test.visibility && *test.visibility != flags.visibility) return false;
  if (test.is_abstract) {
    if (flags.type == TargetType::kField) return false;
    if (!type_like(flags.type) && !flags.is_abstract) return false;
  }
  if (test.is_static && !flags.is_static) return false;
  if (test.is_final && (type_like(flags.type) || !flags.is_final)) return false;
  return true;
}

std::string_view to_string(PredicateKind k) {
  switch (k) {
    case PredicateKind::kTargetCondition: return "TargetCondition";
    case PredicateKind::kForbiddenTargetCondition: return "ForbiddenTargetCondition";
    case PredicateKind::kSameElementCoOccurrence: return "SameElementCoOccurrence";
    case PredicateKind::kMemberExists: return "MemberExists";
    case PredicateKind::kMemberForAll: return "MemberForAll";
    case PredicateKind::kMemberForbidden: return "MemberForbidden";
    case PredicateKind::kOwnerCondition: return "OwnerCondition";
  }
  return "?";
}

// --- IR -------------------------------------------------------------------

int ConstraintIR::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < annotations.size(); ++i) {
    if (annotations[i].name() == name) return static_cast<int>(i);
  }
  return -1;
}

const AnnotationIR* ConstraintIR::find(std::string_view name) const {
  int i = index_of(name);
  return i < 0 ? nullptr : &annotations[static_cast<std::size_t>(i)];
}

std::string statement_descriptor(const Statement& s) {
  std::string d;
  if (s.ann_ref) d = "ann" + *s.ann_ref;
  if (s.is_bare()) return d;
  auto add = [&d](std::string_view w) {
    if (!d.empty()) d += '_';
    d += w;
  };
  if (s.modifiers.visibility) add(to_string(*s.modifiers.visibility));
  if (s.modifiers.is_final) add("final");
  if (s.modifiers.is_abstract) add("abstract");
  if (s.modifiers.is_static) add("static");
  add(to_string(*s.target_type));
  return d;
}

std::string predicate_base_name(const ConstraintDef& c) {
  std::string name;
  if (c.scope) name = "at_" + std::string(to_string(*c.scope)) + "__";
  name += c.kind == ConstraintKind::kRequire ? "require" : "forbid";
  if (c.all_quantifier) name += "_all";
  const char* joiner = c.kind == ConstraintKind::kRequire ? "_or_" : "_and_";
  for (std::size_t i = 0; i < c.statements.size(); ++i) {
    name += i == 0 ? "_" : joiner;
    name += statement_descriptor(c.statements[i]);
  }
  return name;
}

Predicate lower_constraint(const ConstraintDef& c, std::size_t origin, const ConstraintIR& ir) {
  Predicate p;
  p.name = predicate_base_name(c);
  p.polarity = c.kind == ConstraintKind::kRequire ? Polarity::kRequire : Polarity::kForbid;
  p.scope = c.scope;
  p.for_all = c.all_quantifier;
  p.origin = origin;

  bool any_member = false;
  bool any_owner = false;
  bool all_bare = true;
  for (const auto& s : c.statements) {
    Atom a;
    a.type = s.target_type;
    a.mods = to_modifier_test(s.modifiers);
    if (s.ann_ref) {
      a.co_ann = *s.ann_ref;
      a.co_index = ir.index_of(a.co_ann);
    }
    if (c.scope && s.target_type) {
      if (is_container(*c.scope) && is_contained(*s.target_type)) {
        a.relation = Relation::kMember;
        any_member = true;
      } else if (is_contained(*c.scope) && is_container(*s.target_type)) {
        a.relation = Relation::kOwner;
        any_owner = true;
      }
    }
    all_bare = all_bare && s.is_bare();
    p.atoms.push_back(std::move(a));
  }

  const bool require = c.kind == ConstraintKind::kRequire;
  if (!c.scope) {
    p.kind = all_bare ? PredicateKind::kSameElementCoOccurrence
             : require ? PredicateKind::kTargetCondition
                       : PredicateKind::kForbiddenTargetCondition;
  } else if (any_member) {
    p.kind = !require      ? PredicateKind::kMemberForbidden
             : c.all_quantifier ? PredicateKind::kMemberForAll
                                : PredicateKind::kMemberExists;
  } else if (any_owner) {
    p.kind = PredicateKind::kOwnerCondition;
  } else {
    p.kind = all_bare ? PredicateKind::kSameElementCoOccurrence
             : require ? PredicateKind::kTargetCondition
                       : PredicateKind::kForbiddenTargetCondition;
  }
  return p;
}

CompileResult compile(std::span<const AnnotationDef> defs) {
  CompileResult result;
  ConstraintIR& ir = result.ir;
  for (const auto& def : defs) {
    AnnotationIR a;
    a.source = def;
    ir.annotations.push_back(std::move(a));
  }

  for (auto& a : ir.annotations) {
    const AnnotationDef& def = a.source;
    for (const auto& c : def.constraints) {
      if (c.scope || c.kind != ConstraintKind::kRequire) continue;
      for (const auto& s : c.statements) {
        if (!s.target_type || a.allowed[index_of(*s.target_type)]) continue;
        a.allowed[index_of(*s.target_type)] = true;
        a.target_order.push_back(*s.target_type);
      }
    }
    a.implicit_targets = a.target_order.empty();
    if (a.implicit_targets) {
      a.allowed.fill(true);
      a.target_order.assign(kAllTargetTypes.begin(), kAllTargetTypes.end());
    }

    std::map<std::string, int> used;
    for (std::size_t i = 0; i < def.constraints.size(); ++i) {
      const ConstraintDef& c = def.constraints[i];
      Predicate p = lower_constraint(c, i, ir);
      if (int n = ++used[p.name]; n > 1) p.name += "_" + std::to_string(n);
      if (c.scope && !a.allows(*c.scope)) {
        result.diagnostics.push_back(make_warning(
            "unreachable-scope",
            def.name + " never annotates " + std::string(to_string(*c.scope)) +
                ", so constraint " + p.name + " can never apply",
            c.location));
      }
      if (c.scope == TargetType::kEnum) {
        result.diagnostics.push_back(make_warning(
            "enum-scope", "'at enum:' constraints are checked like 'at class:' ones",
            c.location));
      }
      a.predicates.push_back(std::move(p));
    }
  }
  return result;
}

// --- evaluation -----------------------------------------------------------

EvaluationResult evaluate(const ConstraintIR& ir, const ProgramModel& model) {
  EvaluationResult result;
  ModelView view(model);
  for (const auto& use : model.annotations) {
    auto ref = resolve_path(model, use.target);
    if (!ref) continue;  // reported by well_formed
    const AnnotationIR* ann = ir.find(use.ann);
    if (!ann) {
      Diagnostic d = make_error("unknown-annotation",
                                "@" + use.ann + " is not defined in the annotation set");
      d.element = use.target;
      result.diagnostics.push_back(std::move(d));
      continue;
    }
    const TargetType type = target_type_of(model, *ref);
    const std::string path = element_path(model, *ref);
    if (!ann->allows(type)) {
      result.violations.push_back(Violation{ann->name(), std::string(kAllowedTargetsPredicate),
                                            path, describe_allowed_targets(*ann)});
      continue;
    }
    for (const auto& p : ann->predicates) {
      if (predicate_truth(p, view, *ref) == Truth::kFalse) {
        result.violations.push_back(Violation{ann->name(), p.name, path, describe(p)});
      }
    }
  }
  std::sort(result.violations.begin(), result.violations.end(),
            [](const Violation& a, const Violation& b) {
              return std::tie(a.target, a.ann, a.predicate) <
                     std::tie(b.target, b.ann, b.predicate);
            });
  return result;
}

std::string describe(const Predicate& p) {
  std::string s;
  if (p.polarity == Polarity::kRequire) {
    s = "requires ";
    for (std::size_t i = 0; i < p.atoms.size(); ++i) {
      if (i) s += " or ";
      s += require_phrase(p, p.atoms[i]);
    }
  } else {
    s = "forbids ";
    for (std::size_t i = 0; i < p.atoms.size(); ++i) {
      if (i) s += " together with ";
      s += forbid_phrase(p, p.atoms[i]);
    }
  }
  return s;
}

std::string describe_allowed_targets(const AnnotationIR& ann) {
  std::string s = "may only annotate ";
  for (std::size_t i = 0; i < ann.target_order.size(); ++i) {
    if (i) s += i + 1 == ann.target_order.size() ? " or " : ", ";
    s += with_article(std::string(to_string(ann.target_order[i])));
  }
  return s;
}

}  // namespace annlint
