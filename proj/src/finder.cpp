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

#include "annlint/finder.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "annlint/predicate_eval.hpp"

namespace annlint {

namespace {

using Clock = std::chrono::steady_clock;

// --- element shapes -------------------------------------------------------

struct ClassShape {
  ClassifierKind kind;
  Visibility vis;
  bool is_abstract, is_static, is_final;
};

struct MethodShape {
  bool ctor;
  Visibility vis;
  bool is_abstract, is_static, is_final;
};

struct FieldShape {
  Visibility vis;
  bool is_static, is_final;
};

// One element under construction. `mask` marks decided annotation bits.
struct Slot {
  int shape = -1;
  std::uint64_t bits = 0;
  std::uint64_t mask = 0;
};

struct Building {
  Slot header;
  int n_methods = -1;
  std::vector<Slot> methods;
  int n_fields = -1;
  std::vector<Slot> fields;
};

// Which modifier words, visibilities, kinds and member types any statement
// mentions. Everything unmentioned is indistinguishable to the predicates,
// which keeps the candidate space small without losing witnesses.
struct Vocabulary {
  bool abstract_ = false, static_ = false, final_ = false;
  std::array<bool, 4> vis{};
  std::array<bool, kTargetTypeCount> type{};
};

Vocabulary vocabulary_of(const ConstraintIR& ir, const std::vector<ExtraPredicate>& extra) {
  Vocabulary v;
  auto visit_atom = [&v](const Atom& a) {
    if (a.mods.visibility) v.vis[static_cast<std::size_t>(*a.mods.visibility)] = true;
    v.abstract_ |= a.mods.is_abstract;
    v.static_ |= a.mods.is_static;
    v.final_ |= a.mods.is_final;
    if (a.type) v.type[index_of(*a.type)] = true;
  };
  auto visit_pred = [&](const Predicate& p) {
    if (p.scope) v.type[index_of(*p.scope)] = true;
    for (const auto& a : p.atoms) visit_atom(a);
  };
  for (const auto& ann : ir.annotations) {
    for (const auto& p : ann.predicates) visit_pred(p);
    for (TargetType t : kAllTargetTypes) v.type[index_of(t)] |= ann.allows(t);
  }
  for (const auto& e : extra) visit_pred(e.predicate);
  return v;
}

std::vector<bool> flag_domain(bool mentioned) {
  return mentioned ? std::vector<bool>{false, true} : std::vector<bool>{false};
}

class Search {
 public:
  Search(const ConstraintIR& ir, const Scope& scope, const std::vector<ExtraPredicate>& extra,
         FinderOptions options)
      : ir_(ir), scope_(scope), pruning_(!options.disable_pruning) {
    n_ann_ = ir.annotations.size();
    if (n_ann_ > 64) throw std::invalid_argument("the finder supports at most 64 annotations");
    preds_.resize(n_ann_);
    for (std::size_t i = 0; i < n_ann_; ++i) preds_[i] = ir.annotations[i].predicates;
    for (const auto& e : extra) {
      int i = ir.index_of(e.ann);
      if (i < 0) throw std::invalid_argument("extra predicate for unknown annotation " + e.ann);
      preds_[static_cast<std::size_t>(i)].push_back(e.predicate);
    }
    build_domains(vocabulary_of(ir, extra));
    if (!pruning_) {
      with_extra_ = ir;
      for (std::size_t a = 0; a < n_ann_; ++a) with_extra_.annotations[a].predicates = preds_[a];
    }
    if (scope.deadline_ms) deadline_ = start_ + std::chrono::milliseconds(*scope.deadline_ms);
  }

  FinderResult run() {
    counts_.assign(n_ann_, 0);

    if (pruning_) {
      // An annotation that fits on no single classifier can never be covered.
      for (std::size_t a = 0; a < n_ann_; ++a) {
        if (scope_.min_for(ir_.annotations[a].name()) == 0) continue;
        need_.assign(n_ann_, 0);
        need_[a] = 1;
        if (!search_with(1)) {
          if (timed_out_) return Timeout{finish()};
          return UnsatWithinScope{finish()};
        }
      }
    }

    need_.assign(n_ann_, 0);
    for (std::size_t a = 0; a < n_ann_; ++a) need_[a] = scope_.min_for(ir_.annotations[a].name());
    const bool nothing_needed = std::all_of(need_.begin(), need_.end(), [](int n) { return n == 0; });
    if (nothing_needed) return Sat{ProgramModel{}, finish()};

    for (int n = 1; n <= scope_.max_classifiers; ++n) {
      if (search_with(n)) return Sat{std::move(witness_), finish()};
      if (timed_out_) return Timeout{finish()};
    }
    return UnsatWithinScope{finish()};
  }

 private:
  // --- setup --------------------------------------------------------------

  void build_domains(const Vocabulary& v) {
    for (Visibility vis : kAllVisibilities) {
      if (v.vis[static_cast<std::size_t>(vis)]) member_vis_.push_back(vis);
    }
    for (Visibility vis : kAllVisibilities) {
      if (!v.vis[static_cast<std::size_t>(vis)]) {
        member_vis_.push_back(vis);
        break;
      }
    }
    std::sort(member_vis_.begin(), member_vis_.end());

    std::vector<ClassifierKind> kinds = {ClassifierKind::kClass};
    if (scope_.allow_interfaces) kinds.push_back(ClassifierKind::kInterface);
    if (scope_.allow_annotation_types) {
      // An interface can do everything an unmentioned annotation type can.
      const bool needed = v.type[index_of(TargetType::kAnnotation)] || !scope_.allow_interfaces;
      if (needed || !pruning_) kinds.push_back(ClassifierKind::kAnnotation);
    }
    if (scope_.allow_enums) kinds.push_back(ClassifierKind::kEnum);

    methods_on_ = v.type[index_of(TargetType::kMethod)];
    ctors_on_ = v.type[index_of(TargetType::kConstructor)];
    fields_on_ = v.type[index_of(TargetType::kField)];

    std::vector<Visibility> class_vis = {Visibility::kPublic, Visibility::kPackage};
    if (!pruning_) {
      for (Visibility vis : member_vis_) {
        if (std::find(class_vis.begin(), class_vis.end(), vis) == class_vis.end()) {
          class_vis.push_back(vis);
        }
      }
    }
    for (ClassifierKind k : kinds) {
      for (Visibility vis : class_vis) {
        for (bool ab : flag_domain(v.abstract_)) {
          for (bool st : flag_domain(v.static_)) {
            for (bool fi : flag_domain(v.final_)) {
              ClassShape s{k, vis, ab, st, fi};
              if (pruning_ && !class_shape_ok(s)) continue;
              class_shapes_.push_back(s);
            }
          }
        }
      }
    }
    for (bool ctor : {false, true}) {
      if (ctor ? !ctors_on_ : !methods_on_) continue;
      for (Visibility vis : member_vis_) {
        for (bool ab : flag_domain(v.abstract_)) {
          for (bool st : flag_domain(v.static_)) {
            for (bool fi : flag_domain(v.final_)) {
              method_shapes_.push_back(MethodShape{ctor, vis, ab, st, fi});
            }
          }
        }
      }
    }
    if (fields_on_) {
      for (Visibility vis : member_vis_) {
        for (bool st : flag_domain(v.static_)) {
          for (bool fi : flag_domain(v.final_)) field_shapes_.push_back(FieldShape{vis, st, fi});
        }
      }
    }
  }

  static bool class_shape_ok(const ClassShape& s) {
    switch (s.kind) {
      case ClassifierKind::kClass: return !(s.is_abstract && s.is_final);
      case ClassifierKind::kInterface:
      case ClassifierKind::kAnnotation: return !s.is_final && !s.is_abstract;
      case ClassifierKind::kEnum: return !s.is_abstract;
    }
    return true;
  }

  bool method_shape_ok(const MethodShape& m, const ClassShape& owner) const {
    const bool type_like =
        owner.kind == ClassifierKind::kInterface || owner.kind == ClassifierKind::kAnnotation;
    if (m.ctor) return !type_like && !m.is_abstract && !m.is_static && !m.is_final;
    if (m.is_abstract) {
      if (m.is_static || m.is_final) return false;
      return type_like || (owner.kind == ClassifierKind::kClass && owner.is_abstract);
    }
    return true;
  }

  // --- partial-model view ---------------------------------------------------

  // Element ids: -1 is the classifier, [0, kFieldBase) methods, kFieldBase.. fields.
  static constexpr int kFieldBase = 1 << 20;

  struct View {
    using Element = int;
    const Search* s;

    ElementFlags flags(int e) const { return s->flags_of_slot(e); }

    Truth carries(int e, const Atom& a) const {
      if (a.co_index < 0) return Truth::kFalse;
      const Slot& slot = s->slot(e);
      const std::uint64_t bit = std::uint64_t{1} << a.co_index;
      if (!(slot.mask & bit)) return Truth::kUnknown;
      return truth_of(slot.bits & bit);
    }

    std::optional<int> owner(int e) const {
      if (e < 0) return std::nullopt;
      return -1;
    }

    bool members_open(int, TargetType t) const {
      const Building& b = s->cur_;
      if (t == TargetType::kField) {
        if (b.n_fields < 0) return true;
        for (const Slot& f : b.fields) {
          if (f.shape < 0) return true;
        }
        return false;
      }
      if (b.n_methods < 0) return true;
      for (const Slot& m : b.methods) {
        if (m.shape < 0) return true;
      }
      return false;
    }

    template <class F>
    void for_each_member(int e, F&& f) const {
      if (e >= 0) return;
      const Building& b = s->cur_;
      for (std::size_t i = 0; i < b.methods.size(); ++i) {
        if (b.methods[i].shape >= 0) f(static_cast<int>(i));
      }
      for (std::size_t i = 0; i < b.fields.size(); ++i) {
        if (b.fields[i].shape >= 0) f(kFieldBase + static_cast<int>(i));
      }
    }
  };
  friend struct View;

  const Slot& slot(int e) const {
    if (e < 0) return cur_.header;
    if (e < kFieldBase) return cur_.methods[static_cast<std::size_t>(e)];
    return cur_.fields[static_cast<std::size_t>(e - kFieldBase)];
  }
  Slot& slot(int e) { return const_cast<Slot&>(std::as_const(*this).slot(e)); }

  ElementFlags flags_of_slot(int e) const {
    ElementFlags f;
    const Slot& s = slot(e);
    if (e < 0) {
      const ClassShape& c = class_shapes_[static_cast<std::size_t>(s.shape)];
      f = {to_target_type(c.kind), c.vis, c.is_abstract, c.is_static, c.is_final};
    } else if (e < kFieldBase) {
      const MethodShape& m = method_shapes_[static_cast<std::size_t>(s.shape)];
      f = {m.ctor ? TargetType::kConstructor : TargetType::kMethod, m.vis, m.is_abstract,
           m.is_static, m.is_final};
    } else {
      const FieldShape& fs = field_shapes_[static_cast<std::size_t>(s.shape)];
      f = {TargetType::kField, fs.vis, false, fs.is_static, fs.is_final};
    }
    return f;
  }

  // --- pruning --------------------------------------------------------------

  bool uses_hold(int e) const {
    const Slot& s = slot(e);
    if (s.shape < 0) return true;
    const std::uint64_t present = s.bits & s.mask;
    if (!present) return true;
    View view{this};
    for (std::size_t a = 0; a < n_ann_; ++a) {
      if (!(present & (std::uint64_t{1} << a))) continue;
      for (const Predicate& p : preds_[a]) {
        if (predicate_truth(p, view, e) == Truth::kFalse) return false;
      }
    }
    return true;
  }

  bool predicates_viable() const {
    if (!uses_hold(-1)) return false;
    for (std::size_t i = 0; i < cur_.methods.size(); ++i) {
      if (!uses_hold(static_cast<int>(i))) return false;
    }
    for (std::size_t i = 0; i < cur_.fields.size(); ++i) {
      if (!uses_hold(kFieldBase + static_cast<int>(i))) return false;
    }
    return true;
  }

  // Can annotation `a` still gain a use inside the current classifier?
  bool has_capacity(std::size_t a) const {
    const std::uint64_t bit = std::uint64_t{1} << a;
    const AnnotationIR& ann = ir_.annotations[a];
    if (cur_.header.shape < 0) return true;
    if (!(cur_.header.mask & bit)) return true;
    const bool on_methods = (methods_on_ && ann.allows(TargetType::kMethod)) ||
                            (ctors_on_ && ann.allows(TargetType::kConstructor));
    if (on_methods) {
      if (cur_.n_methods < 0) {
        if (scope_.max_methods > 0) return true;
      } else {
        for (const Slot& m : cur_.methods) {
          if (!(m.mask & bit)) return true;
        }
      }
    }
    if (fields_on_ && ann.allows(TargetType::kField)) {
      if (cur_.n_fields < 0) return scope_.max_fields > 0;
      for (const Slot& f : cur_.fields) {
        if (!(f.mask & bit)) return true;
      }
    }
    return false;
  }

  bool coverage_viable() const {
    if (depth_ + 1 < n_target_) return true;
    for (std::size_t a = 0; a < n_ann_; ++a) {
      if (counts_[a] < need_[a] && !has_capacity(a)) return false;
    }
    return true;
  }

  bool viable() {
    ++stats_.nodes;
    if (deadline_ && (stats_.nodes & 255) == 0 && Clock::now() > *deadline_) timed_out_ = true;
    if (timed_out_) return false;
    if (!pruning_) return true;
    if (!predicates_viable() || !coverage_viable()) {
      ++stats_.pruned;
      return false;
    }
    return true;
  }

  // --- search ---------------------------------------------------------------

  bool search_with(int n) {
    n_target_ = n;
    depth_ = 0;
    done_.clear();
    failed_.clear();
    cur_ = Building{};
    return choose_class();
  }

  bool choose_class() {
    for (std::size_t i = 0; i < class_shapes_.size(); ++i) {
      cur_.header = Slot{};
      cur_.header.shape = static_cast<int>(i);
      if (pruning_) {
        // Annotations that may not sit on this kind are decided absent up front.
        const TargetType t = to_target_type(class_shapes_[i].kind);
        for (std::size_t a = 0; a < n_ann_; ++a) {
          if (!ir_.annotations[a].allows(t)) cur_.header.mask |= std::uint64_t{1} << a;
        }
      }
      if (viable() && header_bits()) return true;
      if (timed_out_) return false;
    }
    cur_.header = Slot{};
    return false;
  }

  // Decides the lowest undecided bit of `s`, present first, then continues with `next`.
  template <class Next>
  bool decide_bits(Slot& s, Next&& next) {
    std::size_t a = 0;
    while (a < n_ann_ && (s.mask & (std::uint64_t{1} << a))) ++a;
    if (a == n_ann_) return next();
    const std::uint64_t bit = std::uint64_t{1} << a;
    s.mask |= bit;
    const bool may_add = !pruning_ || counts_[a] < scope_.ann_max;
    if (may_add) {
      s.bits |= bit;
      ++counts_[a];
      const bool ok = viable() && decide_bits(s, next);
      --counts_[a];
      s.bits &= ~bit;
      if (ok) return true;
      if (timed_out_) {
        s.mask &= ~bit;
        return false;
      }
    }
    const bool ok = viable() && decide_bits(s, next);
    s.mask &= ~bit;
    return ok;
  }

  bool header_bits() {
    return decide_bits(cur_.header, [this] { return method_count(); });
  }

  bool method_count() {
    const int max = (methods_on_ || ctors_on_) ? scope_.max_methods : 0;
    for (int k = 0; k <= max; ++k) {
      cur_.n_methods = k;
      cur_.methods.assign(static_cast<std::size_t>(k), Slot{});
      if (viable() && method_at(0)) return true;
      if (timed_out_) break;
    }
    cur_.n_methods = -1;
    cur_.methods.clear();
    return false;
  }

  bool method_at(std::size_t j) {
    if (j == cur_.methods.size()) return field_count();
    const ClassShape& owner = class_shapes_[static_cast<std::size_t>(cur_.header.shape)];
    std::size_t first = 0;
    if (pruning_ && j > 0) first = static_cast<std::size_t>(cur_.methods[j - 1].shape);
    for (std::size_t i = first; i < method_shapes_.size(); ++i) {
      if (pruning_ && !method_shape_ok(method_shapes_[i], owner)) continue;
      Slot& s = cur_.methods[j];
      s = Slot{};
      s.shape = static_cast<int>(i);
      if (pruning_) {
        const TargetType t =
            method_shapes_[i].ctor ? TargetType::kConstructor : TargetType::kMethod;
        for (std::size_t a = 0; a < n_ann_; ++a) {
          if (!ir_.annotations[a].allows(t)) s.mask |= std::uint64_t{1} << a;
        }
      }
      if (viable() && decide_bits(s, [this, j] { return method_done(j); })) return true;
      if (timed_out_) break;
    }
    cur_.methods[j] = Slot{};
    return false;
  }

  // Members of equal shape are kept in non-decreasing bit order.
  bool method_done(std::size_t j) {
    if (pruning_ && j > 0 && cur_.methods[j].shape == cur_.methods[j - 1].shape &&
        cur_.methods[j].bits < cur_.methods[j - 1].bits) {
      ++stats_.pruned;
      return false;
    }
    return method_at(j + 1);
  }

  bool field_count() {
    const ClassShape& owner = class_shapes_[static_cast<std::size_t>(cur_.header.shape)];
    int max = fields_on_ ? scope_.max_fields : 0;
    if (pruning_ && owner.kind == ClassifierKind::kAnnotation) max = 0;
    for (int k = 0; k <= max; ++k) {
      cur_.n_fields = k;
      cur_.fields.assign(static_cast<std::size_t>(k), Slot{});
      if (viable() && field_at(0)) return true;
      if (timed_out_) break;
    }
    cur_.n_fields = -1;
    cur_.fields.clear();
    return false;
  }

  bool field_at(std::size_t j) {
    if (j == cur_.fields.size()) return close_classifier();
    std::size_t first = 0;
    if (pruning_ && j > 0) first = static_cast<std::size_t>(cur_.fields[j - 1].shape);
    for (std::size_t i = first; i < field_shapes_.size(); ++i) {
      Slot& s = cur_.fields[j];
      s = Slot{};
      s.shape = static_cast<int>(i);
      if (pruning_) {
        for (std::size_t a = 0; a < n_ann_; ++a) {
          if (!ir_.annotations[a].allows(TargetType::kField)) s.mask |= std::uint64_t{1} << a;
        }
      }
      if (viable() && decide_bits(s, [this, j] { return field_done(j); })) return true;
      if (timed_out_) break;
    }
    cur_.fields[j] = Slot{};
    return false;
  }

  bool field_done(std::size_t j) {
    if (pruning_ && j > 0 && cur_.fields[j].shape == cur_.fields[j - 1].shape &&
        cur_.fields[j].bits < cur_.fields[j - 1].bits) {
      ++stats_.pruned;
      return false;
    }
    return field_at(j + 1);
  }

  std::string memo_key() const {
    std::string key(1, static_cast<char>(depth_));
    for (int c : counts_) key.push_back(static_cast<char>(c));
    return key;
  }

  bool close_classifier() {
    if (depth_ + 1 == n_target_) {
      ++stats_.candidates;
      for (std::size_t a = 0; a < n_ann_; ++a) {
        if (counts_[a] < need_[a]) return false;
        if (!pruning_ && counts_[a] > scope_.ann_max) return false;
      }
      done_.push_back(cur_);
      ProgramModel model = materialize();
      if (!pruning_ && !complete_model_ok(model)) {
        done_.pop_back();
        return false;
      }
      witness_ = std::move(model);
      return true;
    }
    std::string key;
    if (pruning_) {
      // Later classifiers only see the usage counts, so a failed
      // (position, counts) pair fails again.
      ++depth_;
      key = memo_key();
      --depth_;
      if (failed_.count(key)) {
        ++stats_.pruned;
        return false;
      }
    }
    done_.push_back(cur_);
    Building saved = std::move(cur_);
    cur_ = Building{};
    ++depth_;
    const bool ok = choose_class();
    --depth_;
    cur_ = std::move(saved);
    if (ok) return true;
    done_.pop_back();
    if (pruning_ && !timed_out_) failed_.insert(std::move(key));
    return false;
  }

  bool complete_model_ok(const ProgramModel& m) const {
    if (!well_formed(m).empty()) return false;
    return evaluate(with_extra_, m).violations.empty();
  }

  ProgramModel materialize() const {
    ProgramModel m;
    std::vector<std::pair<std::string, const Slot*>> placed;
    for (std::size_t ci = 0; ci < done_.size(); ++ci) {
      const Building& b = done_[ci];
      const ClassShape& cs = class_shapes_[static_cast<std::size_t>(b.header.shape)];
      Classifier c;
      c.name = "C" + std::to_string(ci + 1);
      c.kind = cs.kind;
      c.visibility = cs.vis;
      c.is_abstract = cs.is_abstract;
      c.is_static = cs.is_static;
      c.is_final = cs.is_final;
      int next_method = 1;
      for (const Slot& s : b.methods) {
        const MethodShape& ms = method_shapes_[static_cast<std::size_t>(s.shape)];
        Method md;
        md.name = ms.ctor ? c.name : "m" + std::to_string(next_method++);
        md.visibility = ms.vis;
        md.is_abstract = ms.is_abstract;
        md.is_static = ms.is_static;
        md.is_final = ms.is_final;
        md.is_constructor = ms.ctor;
        c.methods.push_back(std::move(md));
      }
      for (std::size_t i = 0; i < b.fields.size(); ++i) {
        const FieldShape& fs = field_shapes_[static_cast<std::size_t>(b.fields[i].shape)];
        c.fields.push_back(Field{"f" + std::to_string(i + 1), fs.vis, fs.is_static, fs.is_final});
      }
      m.classifiers.push_back(std::move(c));
    }
    auto add_uses = [&](const Slot& s, ElementRef ref) {
      for (std::size_t a = 0; a < n_ann_; ++a) {
        if (s.bits & (std::uint64_t{1} << a)) {
          m.annotations.push_back(AnnotationUse{ir_.annotations[a].name(), element_path(m, ref), {}});
        }
      }
    };
    for (std::size_t ci = 0; ci < done_.size(); ++ci) {
      const Building& b = done_[ci];
      add_uses(b.header, {ci, MemberKind::kNone, 0});
      for (std::size_t i = 0; i < b.methods.size(); ++i) add_uses(b.methods[i], {ci, MemberKind::kMethod, i});
      for (std::size_t i = 0; i < b.fields.size(); ++i) add_uses(b.fields[i], {ci, MemberKind::kField, i});
    }
    return m;
  }

  FinderStats finish() {
    stats_.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
    return stats_;
  }

  const ConstraintIR& ir_;
  const Scope& scope_;
  const bool pruning_;
  std::size_t n_ann_ = 0;
  std::vector<std::vector<Predicate>> preds_;
  ConstraintIR with_extra_;

  std::vector<Visibility> member_vis_;
  std::vector<ClassShape> class_shapes_;
  std::vector<MethodShape> method_shapes_;
  std::vector<FieldShape> field_shapes_;
  bool methods_on_ = false, ctors_on_ = false, fields_on_ = false;

  std::vector<int> need_;
  std::vector<int> counts_;
  int n_target_ = 0;
  int depth_ = 0;
  Building cur_;
  std::vector<Building> done_;
  std::unordered_set<std::string> failed_;
  ProgramModel witness_;

  FinderStats stats_;
  Clock::time_point start_ = Clock::now();
  std::optional<Clock::time_point> deadline_;
  bool timed_out_ = false;
};

int parse_int_value(std::string_view key, std::string_view value) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw std::invalid_argument("scope key " + std::string(key) + ": '" + std::string(value) +
                                "' is not an integer");
  }
  return v;
}

bool parse_bool_value(std::string_view key, std::string_view value) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw std::invalid_argument("scope key " + std::string(key) + ": '" + std::string(value) +
                              "' is not true or false");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string Scope::validate() const {
  if (ann_min < 1) return "ann_min must be at least 1";
  if (ann_max < ann_min) return "ann_max must be at least ann_min";
  if (ann_max > 100) return "ann_max must be at most 100";
  if (max_classifiers < 1) return "max_classifiers must be at least 1";
  if (max_classifiers > 100) return "max_classifiers must be at most 100";
  if (max_methods < 0 || max_fields < 0) return "member bounds must not be negative";
  if (deadline_ms && *deadline_ms < 0) return "deadline_ms must not be negative";
  return {};
}

Scope parse_scope_config(std::string_view text, Scope base) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("scope config line " + std::to_string(line_no) +
                                  ": expected key = value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "ann_min") base.ann_min = parse_int_value(key, value);
    else if (key == "ann_max") base.ann_max = parse_int_value(key, value);
    else if (key == "max_classifiers") base.max_classifiers = parse_int_value(key, value);
    else if (key == "max_methods") base.max_methods = parse_int_value(key, value);
    else if (key == "max_fields") base.max_fields = parse_int_value(key, value);
    else if (key == "deadline_ms") base.deadline_ms = parse_int_value(key, value);
    else if (key == "allow_interfaces") base.allow_interfaces = parse_bool_value(key, value);
    else if (key == "allow_enums") base.allow_enums = parse_bool_value(key, value);
    else if (key == "allow_annotation_types") base.allow_annotation_types = parse_bool_value(key, value);
    else throw std::invalid_argument("unknown scope key '" + std::string(key) + "'");
  }
  return base;
}

const FinderStats& stats_of(const FinderResult& r) {
  return std::visit([](const auto& v) -> const FinderStats& { return v.stats; }, r);
}

std::string_view verdict_name(const FinderResult& r) {
  if (std::holds_alternative<Sat>(r)) return "sat";
  if (std::holds_alternative<UnsatWithinScope>(r)) return "unsat";
  return "timeout";
}

FinderResult find(const ConstraintIR& ir, const Scope& scope,
                  const std::vector<ExtraPredicate>& extra, FinderOptions options) {
  if (std::string problem = scope.validate(); !problem.empty()) {
    throw std::invalid_argument("invalid scope: " + problem);
  }
  return Search(ir, scope, extra, options).run();
}

std::string explain_scope(const FinderResult& result, const Scope& scope) {
  std::ostringstream out;
  const FinderStats& st = stats_of(result);
  const std::string bounds =
      "at most " + std::to_string(scope.max_classifiers) + " classifier(s), " +
      std::to_string(scope.max_methods) + " method(s) and " + std::to_string(scope.max_fields) +
      " field(s) per classifier, " + std::to_string(scope.ann_min) + ".." +
      std::to_string(scope.ann_max) + " use(s) per annotation";
  const std::string effort = std::to_string(st.nodes) + " search nodes, " +
                             std::to_string(st.candidates) + " complete candidates, " +
                             std::to_string(st.elapsed_ms) + " ms";
  if (const auto* sat = std::get_if<Sat>(&result)) {
    std::size_t members = 0;
    for (const auto& c : sat->witness.classifiers) members += c.methods.size() + c.fields.size();
    out << "SAT: the annotation set is consistent. Witness: "
        << sat->witness.classifiers.size() << " classifier(s), " << members << " member(s), "
        << sat->witness.annotations.size() << " annotation use(s).\n"
        << "Scope: " << bounds << ". Effort: " << effort << ".\n";
  } else if (std::holds_alternative<UnsatWithinScope>(result)) {
    out << "UNSAT within scope: no model with " << bounds
        << " satisfies every constraint. The constraints conflict at least within these "
           "bounds; a larger scope could still admit a model.\n"
        << "Effort: " << effort << ".\n";
  } else {
    out << "TIMEOUT: no verdict after " << st.elapsed_ms << " ms (budget "
        << scope.deadline_ms.value_or(0) << " ms). Scope: " << bounds << ". Effort: " << effort
        << ".\n";
  }
  return out.str();
}

}  // namespace annlint
