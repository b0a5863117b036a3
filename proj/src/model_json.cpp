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

#include "annlint/model_json.hpp"

#include <initializer_list>

#include "json.hpp"

namespace annlint {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) { throw ModelFormatError(what); }

void check_keys(const Json& obj, std::initializer_list<std::string_view> allowed,
                std::string_view context) {
  if (!obj.is_object()) bad(std::string(context) + " must be an object");
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (std::string_view a : allowed) ok = ok || key == a;
    if (!ok) bad("unknown key '" + key + "' in " + std::string(context));
  }
}

std::string get_string(const Json& obj, const char* key, std::string_view context) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    bad(std::string(context) + " needs a string '" + key + "'");
  }
  return it->get<std::string>();
}

bool get_bool(const Json& obj, const char* key, std::string_view context) {
  auto it = obj.find(key);
  if (it == obj.end()) return false;
  if (!it->is_boolean()) bad(std::string(context) + ": '" + key + "' must be a boolean");
  return it->get<bool>();
}

Visibility get_visibility(const Json& obj, std::string_view context) {
  auto it = obj.find("visibility");
  if (it == obj.end()) return Visibility::kPackage;
  if (!it->is_string()) bad(std::string(context) + ": 'visibility' must be a string");
  auto v = visibility_from_string(it->get<std::string>());
  if (!v) bad(std::string(context) + ": unknown visibility '" + it->get<std::string>() + "'");
  return *v;
}

Json encode_value(const AnnotationValue& v) {
  return std::visit([](const auto& x) { return Json(x); }, v);
}

AnnotationValue decode_value(const Json& j, std::string_view context) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  bad(std::string(context) + ": annotation values must be strings, numbers or booleans");
}

}  // namespace

std::string encode_model(const ProgramModel& m) {
  Json root = Json::object();
  Json classifiers = Json::array();
  for (const auto& c : m.classifiers) {
    Json jc = Json::object();
    jc["name"] = c.name;
    jc["kind"] = std::string(to_string(c.kind));
    jc["visibility"] = std::string(to_string(c.visibility));
    jc["abstract"] = c.is_abstract;
    jc["final"] = c.is_final;
    jc["static"] = c.is_static;
    if (c.superclass) jc["extends"] = *c.superclass;
    jc["implements"] = c.interfaces;
    Json methods = Json::array();
    for (const auto& md : c.methods) {
      Json jm = Json::object();
      jm["name"] = md.name;
      jm["visibility"] = std::string(to_string(md.visibility));
      jm["abstract"] = md.is_abstract;
      jm["static"] = md.is_static;
      jm["final"] = md.is_final;
      jm["constructor"] = md.is_constructor;
      methods.push_back(std::move(jm));
    }
    jc["methods"] = std::move(methods);
    Json fields = Json::array();
    for (const auto& f : c.fields) {
      Json jf = Json::object();
      jf["name"] = f.name;
      jf["visibility"] = std::string(to_string(f.visibility));
      jf["static"] = f.is_static;
      jf["final"] = f.is_final;
      fields.push_back(std::move(jf));
    }
    jc["fields"] = std::move(fields);
    classifiers.push_back(std::move(jc));
  }
  root["classifiers"] = std::move(classifiers);
  Json uses = Json::array();
  for (const auto& u : m.annotations) {
    Json ju = Json::object();
    ju["ann"] = u.ann;
    ju["target"] = u.target;
    if (!u.values.empty()) {
      Json vals = Json::object();
      for (const auto& [k, v] : u.values) vals[k] = encode_value(v);
      ju["values"] = std::move(vals);
    }
    uses.push_back(std::move(ju));
  }
  root["annotations"] = std::move(uses);
  return root.dump(2) + "\n";
}

ProgramModel decode_model(std::string_view json_text) {
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  check_keys(root, {"classifiers", "annotations"}, "model");

  ProgramModel m;
  if (auto it = root.find("classifiers"); it != root.end()) {
    if (!it->is_array()) bad("'classifiers' must be an array");
    for (const auto& jc : *it) {
      check_keys(jc,
                 {"name", "kind", "visibility", "abstract", "final", "static", "extends",
                  "implements", "methods", "fields"},
                 "classifier");
      Classifier c;
      c.name = get_string(jc, "name", "classifier");
      const std::string ctx = "classifier " + c.name;
      if (jc.contains("kind")) {
        auto k = classifier_kind_from_string(get_string(jc, "kind", ctx));
        if (!k) bad(ctx + ": unknown kind '" + jc["kind"].get<std::string>() + "'");
        c.kind = *k;
      }
      c.visibility = get_visibility(jc, ctx);
      c.is_abstract = get_bool(jc, "abstract", ctx);
      c.is_final = get_bool(jc, "final", ctx);
      c.is_static = get_bool(jc, "static", ctx);
      if (auto e = jc.find("extends"); e != jc.end() && !e->is_null()) {
        if (!e->is_string()) bad(ctx + ": 'extends' must be a string");
        c.superclass = e->get<std::string>();
      }
      if (auto im = jc.find("implements"); im != jc.end()) {
        if (!im->is_array()) bad(ctx + ": 'implements' must be an array");
        for (const auto& s : *im) {
          if (!s.is_string()) bad(ctx + ": 'implements' entries must be strings");
          c.interfaces.push_back(s.get<std::string>());
        }
      }
      if (auto ms = jc.find("methods"); ms != jc.end()) {
        if (!ms->is_array()) bad(ctx + ": 'methods' must be an array");
        for (const auto& jm : *ms) {
          check_keys(jm, {"name", "visibility", "abstract", "static", "final", "constructor"},
                     ctx + " method");
          Method md;
          md.name = get_string(jm, "name", ctx + " method");
          const std::string mctx = ctx + " method " + md.name;
          md.visibility = get_visibility(jm, mctx);
          md.is_abstract = get_bool(jm, "abstract", mctx);
          md.is_static = get_bool(jm, "static", mctx);
          md.is_final = get_bool(jm, "final", mctx);
          md.is_constructor = get_bool(jm, "constructor", mctx);
          c.methods.push_back(std::move(md));
        }
      }
      if (auto fs = jc.find("fields"); fs != jc.end()) {
        if (!fs->is_array()) bad(ctx + ": 'fields' must be an array");
        for (const auto& jf : *fs) {
          check_keys(jf, {"name", "visibility", "static", "final"}, ctx + " field");
          Field f;
          f.name = get_string(jf, "name", ctx + " field");
          const std::string fctx = ctx + " field " + f.name;
          f.visibility = get_visibility(jf, fctx);
          f.is_static = get_bool(jf, "static", fctx);
          f.is_final = get_bool(jf, "final", fctx);
          c.fields.push_back(std::move(f));
        }
      }
      m.classifiers.push_back(std::move(c));
    }
  }
  if (auto it = root.find("annotations"); it != root.end()) {
    if (!it->is_array()) bad("'annotations' must be an array");
    for (const auto& ju : *it) {
      check_keys(ju, {"ann", "target", "values"}, "annotation use");
      AnnotationUse u;
      u.ann = get_string(ju, "ann", "annotation use");
      u.target = get_string(ju, "target", "annotation use @" + u.ann);
      if (!resolve_path(m, u.target)) {
        bad("annotation use @" + u.ann + " targets unknown element '" + u.target + "'");
      }
      if (auto vs = ju.find("values"); vs != ju.end()) {
        if (!vs->is_object()) bad("annotation use @" + u.ann + ": 'values' must be an object");
        for (const auto& [k, v] : vs->items()) {
          u.values.emplace_back(k, decode_value(v, "annotation use @" + u.ann));
        }
      }
      m.annotations.push_back(std::move(u));
    }
  }
  return m;
}

}  // namespace annlint
