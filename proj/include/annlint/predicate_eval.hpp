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

#pragma once

#include <concepts>
#include <cstdint>
#include <optional>

#include "annlint/constraint_ir.hpp"

namespace annlint {

// Kleene three-valued truth. Complete models only ever produce kTrue/kFalse;
// the model finder evaluates partial candidates where undecided parts yield
// kUnknown.
enum class Truth : std::uint8_t { kFalse, kTrue, kUnknown };

constexpr Truth truth_of(bool b) { return b ? Truth::kTrue : Truth::kFalse; }

constexpr Truth operator!(Truth t) {
  if (t == Truth::kUnknown) return t;
  return t == Truth::kTrue ? Truth::kFalse : Truth::kTrue;
}

constexpr Truth operator&&(Truth a, Truth b) {
  if (a == Truth::kFalse || b == Truth::kFalse) return Truth::kFalse;
  if (a == Truth::kTrue && b == Truth::kTrue) return Truth::kTrue;
  return Truth::kUnknown;
}

constexpr Truth operator||(Truth a, Truth b) {
  if (a == Truth::kTrue || b == Truth::kTrue) return Truth::kTrue;
  if (a == Truth::kFalse && b == Truth::kFalse) return Truth::kFalse;
  return Truth::kUnknown;
}

/// What the evaluator needs to know about a (possibly partial) model.
///   flags(e)                 element kind and modifiers (always decided)
///   carries(e, atom)         whether e bears atom.co_ann
///   owner(e)                 enclosing classifier of a member
///   for_each_member(e, f)    decided members of classifier e
///   members_open(e, t)       more members answering to `t` may still appear
template <class V>
concept ElementView = requires(const V& v, typename V::Element e, const Atom& a) {
  { v.flags(e) } -> std::same_as<ElementFlags>;
  { v.carries(e, a) } -> std::same_as<Truth>;
  { v.owner(e) } -> std::same_as<std::optional<typename V::Element>>;
  { v.members_open(e, TargetType::kMethod) } -> std::same_as<bool>;
  v.for_each_member(e, [](typename V::Element) {});
};

namespace detail {

template <ElementView V>
Truth element_matches(const Atom& a, const V& view, typename V::Element x, TargetType want) {
  ElementFlags f = view.flags(x);
  if (f.type != want || !modifiers_hold(a.mods, f)) return Truth::kFalse;
  if (a.co_ann.empty()) return Truth::kTrue;
  return view.carries(x, a);
}

}  // namespace detail

/// Truth of a single lowered statement for the annotated element `e`.
template <ElementView V>
Truth atom_truth(const Atom& a, bool for_all, const V& view, typename V::Element e) {
  switch (a.relation) {
    case Relation::kSelf: {
      if (!a.type) {
        return a.co_ann.empty() ? Truth::kTrue : view.carries(e, a);
      }
      return detail::element_matches(a, view, e, *a.type);
    }
    case Relation::kMember: {
      if (!is_container(view.flags(e).type) || !a.type) return Truth::kFalse;
      const TargetType want = *a.type;
      Truth acc = for_all ? Truth::kTrue : Truth::kFalse;
      view.for_each_member(e, [&](typename V::Element m) {
        if (view.flags(m).type != want) return;
        Truth t = detail::element_matches(a, view, m, want);
        acc = for_all ? (acc && t) : (acc || t);
      });
      if (view.members_open(e, want)) {
        // An open member list can still add a witness or a counterexample.
        if (for_all && acc == Truth::kTrue) acc = Truth::kUnknown;
        if (!for_all && acc == Truth::kFalse) acc = Truth::kUnknown;
      }
      return acc;
    }
    case Relation::kOwner: {
      auto owner = view.owner(e);
      if (!owner || !a.type) return Truth::kFalse;
      return detail::element_matches(a, view, *owner, *a.type);
    }
  }
  return Truth::kFalse;
}

/// Truth of a predicate for one use whose annotated element is `e`.
/// Predicates scoped to another target type hold vacuously, as do unscoped
/// requirements none of whose statements name the element's type.
template <ElementView V>
Truth predicate_truth(const Predicate& p, const V& view, typename V::Element e) {
  const TargetType type = view.flags(e).type;
  if (p.scope && *p.scope != type) return Truth::kTrue;
  if (!p.scope && p.polarity == Polarity::kRequire) {
    bool relevant = false;
    for (const Atom& a : p.atoms) {
      if (a.relation != Relation::kSelf || !a.type || *a.type == type) relevant = true;
    }
    if (!relevant) return Truth::kTrue;
  }
  if (p.polarity == Polarity::kRequire) {
    Truth acc = Truth::kFalse;
    for (const Atom& a : p.atoms) {
      acc = acc || atom_truth(a, p.for_all, view, e);
      if (acc == Truth::kTrue) break;
    }
    return acc;
  }
  Truth all_hold = Truth::kTrue;
  for (const Atom& a : p.atoms) {
    all_hold = all_hold && atom_truth(a, false, view, e);
    if (all_hold == Truth::kFalse) break;
  }
  return !all_hold;
}

}  // namespace annlint
