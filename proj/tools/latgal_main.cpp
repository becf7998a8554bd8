// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Talks to the core exclusively through the C API in
// latgal/latgal.h; exit codes are 0 (success), 1 (domain/validation failure)
// and 2 (IO, parse or usage errors), with a machine-readable JSON error on
// stderr.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include <latgal/latgal.h>

namespace {

struct StringDeleter {
  void operator()(char* p) const { latgal_string_free(p); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct LatticeDeleter {
  void operator()(latgal_lattice* p) const { latgal_lattice_free(p); }
};
struct AggDeleter {
  void operator()(latgal_aggregation* p) const { latgal_agg_free(p); }
};
struct ContextDeleter {
  void operator()(latgal_context* p) const { latgal_context_free(p); }
};
struct FamilyDeleter {
  void operator()(latgal_family* p) const { latgal_family_free(p); }
};

struct Options {
  std::string out;
  std::string format;
  std::size_t max_elements = 0;
  std::size_t max_concepts = 0;
};

bool color_enabled() {
  const char* env = std::getenv("LATGAL_COLOR");
  if (env != nullptr && std::strcmp(env, "0") == 0) return false;
  return isatty(STDOUT_FILENO) != 0;
}

void print_usage_error(const std::string& message) {
  std::string escaped;
  for (char c : message) {
    if (c == '"' || c == '\\') escaped.push_back('\\');
    if (c == '\n') {
      escaped += "\\n";
      continue;
    }
    escaped.push_back(c);
  }
  std::fprintf(stderr, "{\"error\":{\"kind\":\"Usage\",\"message\":\"%s\"}}\n",
               escaped.c_str());
}

int report_failure(latgal_status status) {
  std::fprintf(stderr, "%s\n", latgal_last_error_json());
  return latgal_status_is_input_error(status) ? 2 : 1;
}

int emit(const Options& opts, const std::string& text) {
  std::string payload = text;
  if (payload.empty() || payload.back() != '\n') payload.push_back('\n');
  if (opts.out.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    return 0;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file || !(file << payload)) {
    print_usage_error("cannot write output file '" + opts.out + "'");
    return 2;
  }
  return 0;
}

int check_format(const Options& opts, std::initializer_list<const char*> allowed) {
  if (opts.format.empty()) return 0;
  for (const char* candidate : allowed) {
    if (opts.format == candidate) return 0;
  }
  print_usage_error("unsupported --format '" + opts.format + "' for this command");
  return 2;
}

int run_lattice(const std::string& action, const std::string& path,
                const Options& opts) {
  latgal_lattice* raw = nullptr;
  latgal_status status = latgal_lattice_load_file(path.c_str(), &raw);
  if (status != LATGAL_OK) return report_failure(status);
  std::unique_ptr<latgal_lattice, LatticeDeleter> lattice(raw);

  if (action == "validate") {
    return emit(opts, "OK");
  }
  char* text = nullptr;
  if (action == "show") {
    if (int rc = check_format(opts, {"table", "json"})) return rc;
    if (opts.format == "json") {
      status = latgal_lattice_tables_json(lattice.get(), &text);
    } else {
      status = latgal_lattice_tables_text(lattice.get(),
                                          color_enabled() ? 1 : 0, &text);
    }
  } else {  // dot
    if (int rc = check_format(opts, {"dot"})) return rc;
    status = latgal_lattice_dot(lattice.get(), &text);
  }
  if (status != LATGAL_OK) return report_failure(status);
  CString owned(text);
  return emit(opts, owned.get());
}

int run_agg(const std::string& action, const std::string& path,
            const std::vector<std::string>& args, const Options& opts) {
  latgal_aggregation* raw = nullptr;
  latgal_status status = latgal_agg_load_file(path.c_str(), &raw);
  if (status != LATGAL_OK) return report_failure(status);
  std::unique_ptr<latgal_aggregation, AggDeleter> agg(raw);

  char* text = nullptr;
  if (action == "build") {
    status = latgal_agg_describe_json(agg.get(), &text);
  } else if (action == "eval") {
    std::size_t arity = 0;
    latgal_agg_arity(agg.get(), &arity);
    if (args.size() != arity) {
      print_usage_error("eval expects " + std::to_string(arity) +
                        " element labels");
      return 2;
    }
    std::vector<const char*> labels;
    labels.reserve(args.size());
    for (const std::string& a : args) labels.push_back(a.c_str());
    status = latgal_agg_eval(agg.get(), labels.data(), labels.size(), &text);
  } else if (action == "table") {
    if (int rc = check_format(opts, {"csv", "table"})) return rc;
    if (opts.format == "table") {
      status = latgal_agg_table_text(agg.get(), opts.max_elements,
                                     color_enabled() ? 1 : 0, &text);
    } else {
      status = latgal_agg_table_csv(agg.get(), opts.max_elements, &text);
    }
  } else if (action == "decompose") {
    status = latgal_agg_decompose_json(agg.get(), opts.max_elements, &text);
  } else {  // subdirect
    status = latgal_agg_subdirect_json(agg.get(), &text);
  }
  if (status != LATGAL_OK) return report_failure(status);
  CString owned(text);
  return emit(opts, owned.get());
}

int run_fca(const std::string& action, const std::string& context_path,
            const std::string& family_path, const Options& opts) {
  latgal_context* raw_ctx = nullptr;
  latgal_status status = latgal_context_load_file(context_path.c_str(), &raw_ctx);
  if (status != LATGAL_OK) return report_failure(status);
  std::unique_ptr<latgal_context, ContextDeleter> ctx(raw_ctx);

  char* text = nullptr;
  if (action == "crisp") {
    status = latgal_fca_crisp_json(ctx.get(), &text);
  } else {
    latgal_family* raw_fam = nullptr;
    status = latgal_family_load_file(family_path.c_str(), &raw_fam);
    if (status != LATGAL_OK) return report_failure(status);
    std::unique_ptr<latgal_family, FamilyDeleter> fam(raw_fam);
    if (action == "concepts") {
      status = latgal_fca_concepts_json(ctx.get(), fam.get(), opts.max_concepts,
                                        &text);
    } else {  // lattice
      status = latgal_fca_lattice_dot(ctx.get(), fam.get(), opts.max_concepts,
                                      &text);
    }
  }
  if (status != LATGAL_OK) return report_failure(status);
  CString owned(text);
  return emit(opts, owned.get());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite lattices, monotone Galois connections and "
               "concept-forming operators"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--out", opts.out, "write output to a file instead of stdout");
  app.add_option("--format", opts.format, "output format (csv, table, json, dot)");
  app.add_option("--max-elements", opts.max_elements,
                 "cap on product/table sizes (default 10^6)");
  app.add_option("--max-concepts", opts.max_concepts,
                 "cap on enumerated concepts (default 10^5)");

  int rc = 0;

  auto* lattice_cmd = app.add_subcommand("lattice", "load and inspect lattice files");
  lattice_cmd->require_subcommand(1);
  lattice_cmd->fallthrough();
  static std::string lattice_path;
  for (const char* action : {"validate", "show", "dot"}) {
    auto* sub = lattice_cmd->add_subcommand(
        action, std::string("lattice ") + action);
    sub->fallthrough();
    sub->add_option("file", lattice_path, "lattice JSON file")->required();
    sub->callback([&rc, &opts, action] {
      rc = run_lattice(action, lattice_path, opts);
    });
  }

  auto* agg_cmd = app.add_subcommand("agg", "build and analyse aggregations");
  agg_cmd->require_subcommand(1);
  agg_cmd->fallthrough();
  static std::string agg_path;
  static std::vector<std::string> agg_args;
  for (const char* action : {"build", "eval", "table", "decompose", "subdirect"}) {
    auto* sub = agg_cmd->add_subcommand(action, std::string("agg ") + action);
    sub->fallthrough();
    sub->add_option("spec", agg_path, "aggregation spec JSON file")->required();
    if (std::string(action) == "eval") {
      sub->add_option("labels", agg_args, "one element label per argument slot");
    }
    sub->callback([&rc, &opts, action] {
      rc = run_agg(action, agg_path, agg_args, opts);
    });
  }

  auto* fca_cmd = app.add_subcommand("fca", "concept analysis over data tables");
  fca_cmd->require_subcommand(1);
  fca_cmd->fallthrough();
  static std::string ctx_path;
  static std::string family_path;
  for (const char* action : {"concepts", "lattice", "crisp"}) {
    auto* sub = fca_cmd->add_subcommand(action, std::string("fca ") + action);
    sub->fallthrough();
    sub->add_option("context", ctx_path, "context CSV file")->required();
    if (std::string(action) != "crisp") {
      sub->add_option("family", family_path, "value-map family JSON file")
          ->required();
    }
    sub->callback([&rc, &opts, action] {
      rc = run_fca(action, ctx_path, family_path, opts);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_usage_error(e.what());
    return 2;
  }
  return rc;
}
