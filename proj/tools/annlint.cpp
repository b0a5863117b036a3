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

// annlint: design-time analysis and code generation for Ann annotation sets.

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "annlint/analyzer.hpp"
#include "annlint/bench.hpp"
#include "annlint/checker.hpp"
#include "annlint/codegen.hpp"
#include "annlint/finder.hpp"
#include "annlint/model_json.hpp"
#include "annlint/ocl.hpp"
#include "annlint/parser.hpp"
#include "annlint/printer.hpp"
#include "annlint/serializer.hpp"

namespace fs = std::filesystem;
using namespace annlint;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitErrors = 1;
constexpr int kExitUnsat = 2;
constexpr int kExitTimeout = 3;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

struct IoError {
  std::string message;
};

bool use_color() {
  const char* no_color = std::getenv("NO_COLOR");
  if (no_color && *no_color) return false;
  return isatty(STDERR_FILENO) != 0;
}

std::string paint(Severity s, std::string_view text) {
  if (!use_color()) return std::string(text);
  const char* code = s == Severity::kError ? "\033[31m" : s == Severity::kWarning ? "\033[33m" : "\033[36m";
  return code + std::string(text) + "\033[0m";
}

// Colours the `severity[` part of a formatted diagnostic line.
std::string colorize(Severity s, const std::string& line) {
  const std::string word(to_string(s));
  const std::size_t pos = line.find(": " + word + "[");
  if (pos == std::string::npos) return line;
  return line.substr(0, pos + 2) + paint(s, word) + line.substr(pos + 2 + word.size());
}

void report(const Diagnostic& d) { std::cerr << colorize(d.severity, format(d)) << "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError{"cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& contents) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << contents)) throw IoError{"cannot write " + path.string()};
}

struct LoadedSet {
  std::vector<AnnSourceFile> files;
  bool ok = true;
};

LoadedSet load(const std::vector<std::string>& paths, ProductionCoverage* coverage = nullptr) {
  LoadedSet set;
  for (const auto& p : paths) {
    ParseResult r = parse_source(read_file(p), p, coverage);
    for (const auto& d : r.diagnostics) report(d);
    set.ok = set.ok && r.ok();
    r.file.source_path = p;
    set.files.push_back(std::move(r.file));
  }
  if (!set.ok) return set;
  const std::vector<Diagnostic> diags = analyze(set.files);
  for (const auto& d : diags) report(d);
  set.ok = !has_errors(diags);
  return set;
}

CompileResult compile_set(const LoadedSet& set) {
  CompileResult c = compile(collect_annotations(set.files));
  for (const auto& d : c.diagnostics) report(d);
  return c;
}

struct ScopeFlags {
  std::string config;
  std::optional<int> ann_min, ann_max, max_classifiers, max_methods, max_fields;
  std::optional<std::int64_t> deadline_ms;
  std::vector<std::string> relaxed;
  bool allow_enums = false;
  bool no_interfaces = false;
  bool no_annotation_types = false;

  void attach(CLI::App* app) {
    app->add_option("--scope", config, "key = value scope file");
    app->add_option("--ann-min", ann_min, "minimum uses per annotation");
    app->add_option("--ann-max", ann_max, "maximum uses per annotation");
    app->add_option("--max-classifiers", max_classifiers, "classifier bound");
    app->add_option("--max-methods", max_methods, "methods per classifier");
    app->add_option("--max-fields", max_fields, "fields per classifier");
    app->add_option("--deadline-ms", deadline_ms, "give up after this many milliseconds");
    app->add_option("--relax", relaxed, "annotation exempt from the minimum-use rule");
    app->add_flag("--allow-enums", allow_enums, "let witnesses contain enums");
    app->add_flag("--no-interfaces", no_interfaces, "no interfaces in witnesses");
    app->add_flag("--no-annotation-types", no_annotation_types,
                  "no annotation types in witnesses");
  }

  Scope build() const {
    Scope s;
    if (!config.empty()) s = parse_scope_config(read_file(config), s);
    if (ann_min) s.ann_min = *ann_min;
    if (ann_max) s.ann_max = *ann_max;
    if (max_classifiers) s.max_classifiers = *max_classifiers;
    if (max_methods) s.max_methods = *max_methods;
    if (max_fields) s.max_fields = *max_fields;
    if (deadline_ms) s.deadline_ms = *deadline_ms;
    for (const auto& r : relaxed) s.relaxed.insert(r);
    if (allow_enums) s.allow_enums = true;
    if (no_interfaces) s.allow_interfaces = false;
    if (no_annotation_types) s.allow_annotation_types = false;
    if (std::string problem = s.validate(); !problem.empty()) {
      throw std::invalid_argument("invalid scope: " + problem);
    }
    return s;
  }
};

int cmd_parse(const std::vector<std::string>& paths, bool canonical, bool coverage) {
  ProductionCoverage cov;
  LoadedSet set = load(paths, coverage ? &cov : nullptr);
  if (canonical && set.ok) {
    for (const auto& f : set.files) std::cout << print(f);
  }
  if (coverage) {
    for (std::string_view p : ProductionCoverage::all_productions()) {
      std::cout << p << "," << cov.count(p) << "\n";
    }
  }
  return set.ok ? kExitOk : kExitErrors;
}

int cmd_validate(const std::vector<std::string>& paths, const ScopeFlags& flags, bool example,
                 const std::string& witness_path) {
  const Scope scope = flags.build();
  LoadedSet set = load(paths);
  if (!set.ok) return kExitErrors;
  const CompileResult compiled = compile_set(set);
  const FinderResult result = find(compiled.ir, scope);
  std::cout << verdict_name(result) << "\n";
  std::cerr << explain_scope(result, scope);
  if (const auto* sat = std::get_if<Sat>(&result)) {
    if (example) {
      std::cout << to_java_text(sat->witness);
      write_file(witness_path, encode_model(sat->witness));
      std::cerr << "witness written to " << witness_path << "\n";
    }
    return kExitOk;
  }
  return std::holds_alternative<Timeout>(result) ? kExitTimeout : kExitUnsat;
}

int cmd_check(const std::string& model_path, const std::vector<std::string>& paths) {
  const std::string model_text = read_file(model_path);
  LoadedSet set = load(paths);
  if (!set.ok) return kExitErrors;
  compile_set(set);
  bool errors = false;
  for (const auto& d : check_json(model_text, collect_annotations(set.files))) {
    std::cerr << colorize(d.severity, format(d)) << "\n";
    errors = errors || d.severity == Severity::kError;
  }
  return errors ? kExitErrors : kExitOk;
}

int cmd_gen(const std::string& out_dir, const std::vector<std::string>& paths) {
  LoadedSet set = load(paths);
  if (!set.ok) return kExitErrors;
  const CompileResult compiled = compile_set(set);
  std::vector<GeneratedUnit> units;
  try {
    units = gen_all(set.files, compiled.ir);
  } catch (const CodegenError& e) {
    std::cerr << paint(Severity::kError, "error") << ": " << e.what() << "\n";
    return kExitErrors;
  }
  for (const auto& u : units) {
    write_file(fs::path(out_dir) / u.relative_path, u.contents);
    std::cout << (fs::path(out_dir) / u.relative_path).string() << "\n";
  }
  return kExitOk;
}

int cmd_ocl(const std::string& out_path, const std::vector<std::string>& paths) {
  LoadedSet set = load(paths);
  if (!set.ok) return kExitErrors;
  const std::string text = emit_ocl(compile_set(set).ir);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
  return kExitOk;
}

int cmd_bench(int max_anns, const ScopeFlags& flags, const std::string& out_path) {
  const Scope scope = flags.build();
  std::ostringstream csv;
  csv << kBenchCsvHeader << "\n";
  bool all_expected = true;
  std::int64_t sat_ms = 0, unsat_ms = 0;
  int sat_n = 0, unsat_n = 0;
  for (const BenchCase& c : bench_cases(max_anns)) {
    const BenchRow row = run_bench_case(c, scope);
    csv << to_csv_line(row) << "\n";
    if (!row.as_expected) {
      all_expected = false;
      std::cerr << paint(Severity::kError, "unexpected") << ": " << c.set << " gave "
                << row.verdict << "\n";
    }
    (c.expect_sat ? sat_ms : unsat_ms) += row.ms;
    ++(c.expect_sat ? sat_n : unsat_n);
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << csv.str();
  } else {
    write_file(out_path, csv.str());
  }
  if (sat_n && unsat_n) {
    std::cerr << "total ms: satisfiable " << sat_ms << ", unsatisfiable " << unsat_ms << " ("
              << (unsat_ms <= sat_ms ? "unsatisfiability detected no slower"
                                     : "unsatisfiability detected slower")
              << ")\n";
  }
  return all_expected ? kExitOk : kExitErrors;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"annlint: consistency checking, placement checking and code generation for Ann "
               "annotation sets"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  ScopeFlags scope_flags;

  auto* parse_cmd = app.add_subcommand("parse", "syntax and semantic checks only");
  bool canonical = false, coverage = false;
  parse_cmd->add_option("files", files, ".ann files")->required();
  parse_cmd->add_flag("--canonical", canonical, "print the canonical form of each file");
  parse_cmd->add_flag("--coverage", coverage, "print grammar production hit counts as CSV");

  auto* validate_cmd = app.add_subcommand("validate", "search for a model of the annotation set");
  bool example = false;
  std::string witness_path = "witness.json";
  validate_cmd->add_option("files", files, ".ann files")->required();
  validate_cmd->add_flag("--example", example, "print the witness and write it as JSON");
  validate_cmd->add_option("--witness", witness_path, "witness JSON path");
  scope_flags.attach(validate_cmd);

  auto* check_cmd = app.add_subcommand("check", "check annotation placement in a model");
  std::string model_path;
  check_cmd->add_option("--model", model_path, "program model JSON")->required();
  check_cmd->add_option("files", files, ".ann files")->required();

  auto* gen_cmd = app.add_subcommand("gen", "generate annotation types and processors");
  std::string gen_out;
  gen_cmd->add_option("--out", gen_out, "output directory")->required();
  gen_cmd->add_option("files", files, ".ann files")->required();

  auto* ocl_cmd = app.add_subcommand("ocl", "emit USE/OCL text");
  std::string ocl_out;
  ocl_cmd->add_option("--out", ocl_out, "output file (default: standard output)");
  ocl_cmd->add_option("files", files, ".ann files")->required();

  auto* bench_cmd = app.add_subcommand("bench", "run the synthetic scalability suite");
  int max_anns = 16;
  std::string bench_out;
  bench_cmd->add_option("--max-anns", max_anns, "largest annotation set")
      ->check(CLI::Range(2, 64));
  bench_cmd->add_option("--out", bench_out, "CSV output file (default: standard output)");
  scope_flags.attach(bench_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*parse_cmd) return cmd_parse(files, canonical, coverage);
    if (*validate_cmd) return cmd_validate(files, scope_flags, example, witness_path);
    if (*check_cmd) return cmd_check(model_path, files);
    if (*gen_cmd) return cmd_gen(gen_out, files);
    if (*ocl_cmd) return cmd_ocl(ocl_out, files);
    if (*bench_cmd) return cmd_bench(max_anns, scope_flags, bench_out);
  } catch (const IoError& e) {
    std::cerr << paint(Severity::kError, "error") << ": " << e.message << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << paint(Severity::kError, "error") << ": " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
