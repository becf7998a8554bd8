// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0
//
// Exercises the shared-library surface only: this binary links liblatgal and
// includes nothing from the C++ core headers.

#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include <latgal/latgal.h>

namespace {

const std::string kData = LATGAL_DATA_DIR;

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { latgal_string_free(ptr); }
  std::string str() const { return ptr == nullptr ? std::string() : ptr; }
};

std::size_t count_substring(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

TEST_CASE("lattice handles") {
  latgal_lattice* lattice = nullptr;
  REQUIRE(latgal_lattice_load_file((kData + "/l6.json").c_str(), &lattice) ==
          LATGAL_OK);
  size_t size = 0;
  CHECK(latgal_lattice_size(lattice, &size) == LATGAL_OK);
  CHECK(size == 6);

  OwnedString bottom, top, join, meet;
  CHECK(latgal_lattice_bottom(lattice, &bottom.ptr) == LATGAL_OK);
  CHECK(bottom.str() == "0");
  CHECK(latgal_lattice_top(lattice, &top.ptr) == LATGAL_OK);
  CHECK(top.str() == "1");
  CHECK(latgal_lattice_join(lattice, "a", "c", &join.ptr) == LATGAL_OK);
  CHECK(join.str() == "d");
  CHECK(latgal_lattice_meet(lattice, "b", "d", &meet.ptr) == LATGAL_OK);
  CHECK(meet.str() == "a");

  int le = 0;
  CHECK(latgal_lattice_leq(lattice, "a", "b", &le) == LATGAL_OK);
  CHECK(le == 1);
  CHECK(latgal_lattice_leq(lattice, "b", "a", &le) == LATGAL_OK);
  CHECK(le == 0);

  OwnedString label;
  CHECK(latgal_lattice_element(lattice, 0, &label.ptr) == LATGAL_OK);
  CHECK(label.str() == "0");

  OwnedString dot;
  CHECK(latgal_lattice_dot(lattice, &dot.ptr) == LATGAL_OK);
  CHECK(count_substring(dot.str(), "->") == 7);

  OwnedString tables;
  CHECK(latgal_lattice_tables_text(lattice, 0, &tables.ptr) == LATGAL_OK);
  CHECK(tables.str().find("join") != std::string::npos);
  CHECK(tables.str().find("\x1b[") == std::string::npos);

  OwnedString tables_json;
  CHECK(latgal_lattice_tables_json(lattice, &tables_json.ptr) == LATGAL_OK);
  auto parsed = nlohmann::json::parse(tables_json.str());
  CHECK(parsed["top"] == "1");
  CHECK(parsed["join"].size() == 6);

  latgal_lattice_free(lattice);
}

TEST_CASE("lattice json strings and error reporting") {
  latgal_lattice* lattice = nullptr;
  CHECK(latgal_lattice_load_json("{\"elements\": [\"0\",\"1\"], \"covers\": "
                                 "[[\"0\",\"1\"]]}",
                                 &lattice) == LATGAL_OK);
  latgal_lattice_free(lattice);

  lattice = nullptr;
  latgal_status st = latgal_lattice_load_json("{oops", &lattice);
  CHECK(st == LATGAL_E_PARSE);
  CHECK(latgal_status_is_input_error(st) == 1);
  CHECK(std::strlen(latgal_last_error_message()) > 0);
  auto err = nlohmann::json::parse(latgal_last_error_json());
  CHECK(err["error"]["kind"] == "ParseError");

  st = latgal_lattice_load_file("/nonexistent/lat.json", &lattice);
  CHECK(st == LATGAL_E_IO);
  CHECK(latgal_status_is_input_error(st) == 1);
  CHECK(std::string(latgal_status_name(st)) == "IoError");

  st = latgal_lattice_load_json(
      "{\"elements\": [\"x\",\"y\",\"z\"], \"covers\": [[\"x\",\"y\"],[\"x\",\"z\"]]}",
      &lattice);
  CHECK(st == LATGAL_E_NOT_A_LATTICE);
  CHECK(latgal_status_is_input_error(st) == 0);

  CHECK(latgal_lattice_load_json(nullptr, &lattice) == LATGAL_E_INVALID_ARGUMENT);
  CHECK(std::string(latgal_version()).size() > 0);
}

TEST_CASE("aggregation handles") {
  latgal_aggregation* agg = nullptr;
  REQUIRE(latgal_agg_load_file((kData + "/example1.json").c_str(), &agg) ==
          LATGAL_OK);
  size_t arity = 0;
  CHECK(latgal_agg_arity(agg, &arity) == LATGAL_OK);
  CHECK(arity == 2);

  const char* tuple[] = {"c", "d"};
  OwnedString value;
  CHECK(latgal_agg_eval(agg, tuple, 2, &value.ptr) == LATGAL_OK);
  CHECK(value.str() == "b");

  const char* corner[] = {"1", "1"};
  OwnedString top_value;
  CHECK(latgal_agg_eval(agg, corner, 2, &top_value.ptr) == LATGAL_OK);
  CHECK(top_value.str() == "1");

  OwnedString bad;
  CHECK(latgal_agg_eval(agg, tuple, 1, &bad.ptr) == LATGAL_E_ARITY_MISMATCH);
  const char* unknown[] = {"q", "d"};
  CHECK(latgal_agg_eval(agg, unknown, 2, &bad.ptr) == LATGAL_E_UNKNOWN_LABEL);

  OwnedString csv;
  CHECK(latgal_agg_table_csv(agg, 0, &csv.ptr) == LATGAL_OK);
  CHECK(csv.str().substr(0, 16) == "x\\y,0,a,b,c,d,1\n");
  CHECK(count_substring(csv.str(), "\n") == 7);

  OwnedString describe;
  CHECK(latgal_agg_describe_json(agg, &describe.ptr) == LATGAL_OK);
  auto desc = nlohmann::json::parse(describe.str());
  CHECK(desc["arity"] == 2);
  CHECK(desc["elements"] == 6);

  OwnedString parts;
  CHECK(latgal_agg_decompose_json(agg, 0, &parts.ptr) == LATGAL_OK);
  auto decomposed = nlohmann::json::parse(parts.str());
  REQUIRE(decomposed.is_array());
  CHECK(decomposed.size() == 2);
  CHECK(decomposed[0]["c"] == "a");
  CHECK(decomposed[1]["b"] == "b");

  OwnedString subdirect;
  CHECK(latgal_agg_subdirect_json(agg, &subdirect.ptr) == LATGAL_OK);
  auto sub = nlohmann::json::parse(subdirect.str());
  CHECK(sub["slots"].size() == 2);
  CHECK(sub["slots"][0].size() == 3);
  CHECK(sub["embedding"]["0"] == "000");

  latgal_agg_free(agg);
}

TEST_CASE("aggregation error codes") {
  latgal_aggregation* agg = nullptr;
  // single second-slot spec: boundary fails
  std::string spec_path = kData + "/example1.json";
  latgal_status st = latgal_agg_load_file("/nonexistent/spec.json", &agg);
  CHECK(st == LATGAL_E_IO);

  // craft a boundary-violating spec next to the data dir via JSON string is
  // not possible through the file-only API; instead check the table limit
  REQUIRE(latgal_agg_load_file(spec_path.c_str(), &agg) == LATGAL_OK);
  OwnedString csv;
  CHECK(latgal_agg_table_csv(agg, 10, &csv.ptr) == LATGAL_E_SIZE_LIMIT);
  CHECK(latgal_status_is_input_error(LATGAL_E_SIZE_LIMIT) == 0);
  latgal_agg_free(agg);
}

TEST_CASE("contexts, families and concepts") {
  latgal_context* ctx = nullptr;
  REQUIRE(latgal_context_load_file((kData + "/context_crisp.csv").c_str(), &ctx) ==
          LATGAL_OK);
  latgal_family* fam = nullptr;
  REQUIRE(latgal_family_load_file((kData + "/family_bool.json").c_str(), &fam) ==
          LATGAL_OK);

  OwnedString concepts;
  CHECK(latgal_fca_concepts_json(ctx, fam, 0, &concepts.ptr) == LATGAL_OK);
  auto parsed = nlohmann::json::parse(concepts.str());
  REQUIRE(parsed.is_array());
  CHECK(parsed.size() == 4);
  CHECK(parsed[0].contains("extent"));
  CHECK(parsed[0].contains("intent"));

  OwnedString dot;
  CHECK(latgal_fca_lattice_dot(ctx, fam, 0, &dot.ptr) == LATGAL_OK);
  CHECK(count_substring(dot.str(), "[label=") == parsed.size());

  OwnedString crisp;
  CHECK(latgal_fca_crisp_json(ctx, &crisp.ptr) == LATGAL_OK);
  auto crisp_parsed = nlohmann::json::parse(crisp.str());
  CHECK(crisp_parsed.size() == 4);

  latgal_family_free(fam);
  latgal_context_free(ctx);

  // non-binary context for the crisp reference
  latgal_context* grades = nullptr;
  REQUIRE(latgal_context_load_file((kData + "/context_grades.csv").c_str(),
                                   &grades) == LATGAL_OK);
  OwnedString bad;
  CHECK(latgal_fca_crisp_json(grades, &bad.ptr) == LATGAL_E_NOT_BINARY);
  latgal_context_free(grades);

  // family without the context's tokens
  latgal_context* l6ctx = nullptr;
  REQUIRE(latgal_context_load_file((kData + "/context_l6.csv").c_str(), &l6ctx) ==
          LATGAL_OK);
  latgal_family* bool_fam = nullptr;
  REQUIRE(latgal_family_load_file((kData + "/family_bool.json").c_str(),
                                  &bool_fam) == LATGAL_OK);
  OwnedString unmapped;
  CHECK(latgal_fca_concepts_json(l6ctx, bool_fam, 0, &unmapped.ptr) ==
        LATGAL_E_UNMAPPED_TOKEN);
  latgal_family_free(bool_fam);
  latgal_context_free(l6ctx);
}

TEST_CASE("fixture family matches its lattice") {
  latgal_context* ctx = nullptr;
  REQUIRE(latgal_context_load_file((kData + "/context_l6.csv").c_str(), &ctx) ==
          LATGAL_OK);
  latgal_family* fam = nullptr;
  REQUIRE(latgal_family_load_file((kData + "/family_l6.json").c_str(), &fam) ==
          LATGAL_OK);
  OwnedString concepts;
  CHECK(latgal_fca_concepts_json(ctx, fam, 0, &concepts.ptr) == LATGAL_OK);
  auto parsed = nlohmann::json::parse(concepts.str());
  CHECK(parsed.is_array());
  CHECK(parsed.size() > 0);
  latgal_family_free(fam);
  latgal_context_free(ctx);
}
