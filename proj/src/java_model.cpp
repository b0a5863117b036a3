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

#include "annlint/java_model.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>

namespace annlint {

namespace {

constexpr std::array<std::string_view, 4> kKindNames = {"class", "interface", "annotation",
                                                        "enum"};

std::size_t occurrence_of(const Classifier& c, MemberKind kind, std::size_t index) {
  std::size_t k = 0;
  if (kind == MemberKind::kMethod) {
    for (std::size_t i = 0; i < index; ++i) k += c.methods[i].name == c.methods[index].name;
  } else {
    for (std::size_t i = 0; i < index; ++i) k += c.fields[i].name == c.fields[index].name;
  }
  return k;
}

Diagnostic model_error(std::string rule, std::string message, std::string element) {
  Diagnostic d = make_error("model/" + std::move(rule), std::move(message));
  d.element = std::move(element);
  return d;
}

}  // namespace

std::string_view to_string(ClassifierKind k) { return kKindNames[static_cast<std::size_t>(k)]; }

std::optional<ClassifierKind> classifier_kind_from_string(std::string_view s) {
  auto it = std::find(kKindNames.begin(), kKindNames.end(), s);
  if (it == kKindNames.end()) return std::nullopt;
  return static_cast<ClassifierKind>(it - kKindNames.begin());
}

TargetType to_target_type(ClassifierKind k) {
  switch (k) {
    case ClassifierKind::kClass: return TargetType::kClass;
    case ClassifierKind::kInterface: return TargetType::kInterface;
    case ClassifierKind::kAnnotation: return TargetType::kAnnotation;
    case ClassifierKind::kEnum: return TargetType::kEnum;
  }
  return TargetType::kClass;
}

TargetType target_type_of(const ProgramModel& m, ElementRef e) {
  const Classifier& c = m.classifiers[e.classifier];
  switch (e.member_kind) {
    case MemberKind::kNone: return to_target_type(c.kind);
    case MemberKind::kMethod:
      return c.methods[e.member].is_constructor ? TargetType::kConstructor : TargetType::kMethod;
    case MemberKind::kField: return TargetType::kField;
  }
  return TargetType::kClass;
}

std::string element_path(const ProgramModel& m, ElementRef e) {
  const Classifier& c = m.classifiers[e.classifier];
  if (e.is_classifier()) return c.name;
  const bool method = e.member_kind == MemberKind::kMethod;
  std::string path = c.name + (method ? "#method:" : "#field:") +
                     (method ? c.methods[e.member].name : c.fields[e.member].name);
  if (std::size_t k = occurrence_of(c, e.member_kind, e.member); k > 0) {
    path += "[" + std::to_string(k) + "]";
  }
  return path;
}

std::optional<ElementRef> resolve_path(const ProgramModel& m, std::string_view path) {
  const std::size_t hash = path.find('#');
  const std::string_view cname = path.substr(0, hash);
  std::optional<std::size_t> ci;
  for (std::size_t i = 0; i < m.classifiers.size(); ++i) {
    if (m.classifiers[i].name == cname) {
      ci = i;
      break;
    }
  }
  if (!ci) return std::nullopt;
  if (hash == std::string_view::npos) return ElementRef{*ci, MemberKind::kNone, 0};

  std::string_view rest = path.substr(hash + 1);
  MemberKind kind;
  if (rest.starts_with("method:")) {
    kind = MemberKind::kMethod;
    rest.remove_prefix(7);
  } else if (rest.starts_with("field:")) {
    kind = MemberKind::kField;
    rest.remove_prefix(6);
  } else {
    return std::nullopt;
  }
  std::size_t wanted = 0;
  if (!rest.empty() && rest.back() == ']') {
    const std::size_t open = rest.rfind('[');
    if (open == std::string_view::npos || open + 2 > rest.size() - 1) return std::nullopt;
    std::string_view digits = rest.substr(open + 1, rest.size() - open - 2);
    if (!std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
        digits.size() > 6) {
      return std::nullopt;
    }
    wanted = std::stoul(std::string(digits));
    if (wanted == 0) return std::nullopt;  // the first occurrence carries no suffix
    rest = rest.substr(0, open);
  }
  const Classifier& c = m.classifiers[*ci];
  const std::size_t n = kind == MemberKind::kMethod ? c.methods.size() : c.fields.size();
  std::size_t seen = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& name = kind == MemberKind::kMethod ? c.methods[i].name : c.fields[i].name;
    if (name != rest) continue;
    if (seen++ == wanted) return ElementRef{*ci, kind, i};
  }
  return std::nullopt;
}

ElementFlags flags_of(const ProgramModel& m, ElementRef e) {
  const Classifier& c = m.classifiers[e.classifier];
  ElementFlags f;
  f.type = target_type_of(m, e);
  switch (e.member_kind) {
    case MemberKind::kNone:
      f.visibility = c.visibility;
      f.is_abstract = c.is_abstract;
      f.is_static = c.is_static;
      f.is_final = c.is_final;
      break;
    case MemberKind::kMethod: {
      const Method& md = c.methods[e.member];
      f.visibility = md.visibility;
      f.is_abstract = md.is_abstract;
      f.is_static = md.is_static;
      f.is_final = md.is_final;
      break;
    }
    case MemberKind::kField: {
      const Field& fd = c.fields[e.member];
      f.visibility = fd.visibility;
      f.is_static = fd.is_static;
      f.is_final = fd.is_final;
      break;
    }
  }
  return f;
}

std::vector<Diagnostic> well_formed(const ProgramModel& m) {
  std::vector<Diagnostic> out;
  std::map<std::string_view, std::size_t> by_name;
  for (std::size_t i = 0; i < m.classifiers.size(); ++i) {
    if (!by_name.emplace(m.classifiers[i].name, i).second) {
      out.push_back(model_error("duplicate-classifier",
                                "classifier " + m.classifiers[i].name + " is declared twice",
                                m.classifiers[i].name));
    }
  }

  // Inheritance edges, checked for kind and resolution first.
  std::vector<std::vector<std::size_t>> edges(m.classifiers.size());
  for (std::size_t i = 0; i < m.classifiers.size(); ++i) {
    const Classifier& c = m.classifiers[i];
    auto link = [&](const std::string& target, bool is_super) {
      auto it = by_name.find(target);
      if (it == by_name.end()) {
        out.push_back(model_error("unresolved-reference",
                                  c.name + " refers to unknown classifier " + target, c.name));
        return;
      }
      const ClassifierKind tk = m.classifiers[it->second].kind;
      if (is_super ? (c.kind != ClassifierKind::kClass || tk != ClassifierKind::kClass)
                   : (tk != ClassifierKind::kInterface ||
                      c.kind == ClassifierKind::kAnnotation)) {
        out.push_back(model_error("inheritance-kind",
                                  std::string(to_string(c.kind)) + " " + c.name +
                                      (is_super ? " cannot extend " : " cannot implement ") +
                                      std::string(to_string(tk)) + " " + target,
                                  c.name));
      }
      edges[i].push_back(it->second);
    };
    if (c.superclass) link(*c.superclass, true);
    for (const auto& itf : c.interfaces) link(itf, false);
  }

  // Rule 3: one diagnostic per strongly connected component that forms a cycle.
  {
    const std::size_t n = m.classifiers.size();
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    int counter = 0;
    std::function<void(std::size_t)> strongconnect = [&](std::size_t v) {
      index[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack[v] = true;
      for (std::size_t w : edges[v]) {
        if (index[w] < 0) {
          strongconnect(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      }
      if (low[v] != index[v]) return;
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      const bool self_loop =
          std::find(edges[v].begin(), edges[v].end(), v) != edges[v].end();
      if (comp.size() > 1 || self_loop) {
        std::sort(comp.begin(), comp.end());
        std::string names;
        for (std::size_t c : comp) {
          if (!names.empty()) names += ", ";
          names += m.classifiers[c].name;
        }
        out.push_back(model_error("inheritance-cycle", "inheritance cycle among " + names,
                                  m.classifiers[comp.front()].name));
      }
    };
    for (std::size_t v = 0; v < n; ++v) {
      if (index[v] < 0) strongconnect(v);
    }
  }

  for (std::size_t ci = 0; ci < m.classifiers.size(); ++ci) {
    const Classifier& c = m.classifiers[ci];
    const bool type_like =
        c.kind == ClassifierKind::kInterface || c.kind == ClassifierKind::kAnnotation;

    // Rule 1.
    if (c.visibility != Visibility::kPublic && c.visibility != Visibility::kPackage) {
      out.push_back(model_error("top-level-visibility",
                                "top-level " + std::string(to_string(c.kind)) + " " + c.name +
                                    " must be public or package-private",
                                c.name));
    }
    // Rule 5, classifier part.
    if (type_like && c.is_final) {
      out.push_back(model_error("modifiers", std::string(to_string(c.kind)) + " " + c.name +
                                                 " cannot be final",
                                c.name));
    }
    if (c.kind == ClassifierKind::kEnum && c.is_abstract) {
      out.push_back(model_error("modifiers", "enum " + c.name + " cannot be abstract", c.name));
    }
    if (c.kind == ClassifierKind::kClass && c.is_abstract && c.is_final) {
      out.push_back(
          model_error("modifiers", "class " + c.name + " cannot be both abstract and final",
                      c.name));
    }

    for (std::size_t mi = 0; mi < c.methods.size(); ++mi) {
      const Method& md = c.methods[mi];
      const std::string path = element_path(m, {ci, MemberKind::kMethod, mi});
      // Rule 2.
      const bool abstract_owner =
          type_like || (c.kind == ClassifierKind::kClass && c.is_abstract);
      if (md.is_abstract && !md.is_constructor && !abstract_owner) {
        out.push_back(model_error("abstract-method",
                                  "abstract method " + md.name + " in non-abstract " +
                                      std::string(to_string(c.kind)) + " " + c.name,
                                  path));
      }
      if (md.is_abstract && !md.is_constructor && (md.is_final || md.is_static)) {
        out.push_back(model_error("modifiers",
                                  "abstract method " + md.name + " cannot be final or static",
                                  path));
      }
      if (md.is_constructor) {
        // Rule 4.
        if (type_like) {
          out.push_back(model_error("constructor-in-interface",
                                    std::string(to_string(c.kind)) + " " + c.name +
                                        " cannot declare a constructor",
                                    path));
        }
        // Rule 5.
        if (md.is_abstract || md.is_static || md.is_final || md.name != c.name) {
          out.push_back(model_error("modifiers",
                                    "constructor " + md.name + " of " + c.name +
                                        " must be named after its class and be neither "
                                        "abstract, static nor final",
                                    path));
        }
      }
    }
    if (c.kind == ClassifierKind::kAnnotation && !c.fields.empty()) {
      out.push_back(model_error("field-in-annotation",
                                "annotation type " + c.name + " cannot declare fields", c.name));
    }
  }

  // Rule 6 plus resolution of annotation targets.
  std::set<std::pair<std::string_view, ElementRef>> uses;
  for (const auto& use : m.annotations) {
    auto ref = resolve_path(m, use.target);
    if (!ref) {
      out.push_back(model_error("unresolved-target",
                                "@" + use.ann + " targets unknown element " + use.target,
                                use.target));
      continue;
    }
    if (!uses.emplace(use.ann, *ref).second) {
      out.push_back(model_error("duplicate-annotation",
                                "@" + use.ann + " appears more than once on " + use.target,
                                use.target));
    }
  }
  return out;
}

std::vector<ElementRef> elements_of(const ProgramModel& m, TargetType t) {
  std::vector<ElementRef> out;
  for (std::size_t ci = 0; ci < m.classifiers.size(); ++ci) {
    const Classifier& c = m.classifiers[ci];
    if (is_container(t)) {
      if (to_target_type(c.kind) == t) out.push_back({ci, MemberKind::kNone, 0});
      continue;
    }
    if (t == TargetType::kField) {
      for (std::size_t i = 0; i < c.fields.size(); ++i) out.push_back({ci, MemberKind::kField, i});
      continue;
    }
    const bool want_ctor = t == TargetType::kConstructor;
    for (std::size_t i = 0; i < c.methods.size(); ++i) {
      if (c.methods[i].is_constructor == want_ctor) out.push_back({ci, MemberKind::kMethod, i});
    }
  }
  return out;
}

}  // namespace annlint
