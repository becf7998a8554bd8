// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "latgal/json_io.hpp"
#include "latgal/render.hpp"
#include "support.hpp"

using namespace latgal;

namespace {

#define CHECK_KIND(expr, expected)                   \
  do {                                               \
    try {                                            \
      (void)(expr);                                  \
      FAIL("expected an error from " #expr);         \
    } catch (const Error& e) {                       \
      CHECK(e.kind() == (expected));                 \
    }                                                \
  } while (0)

const std::string kData = LATGAL_DATA_DIR;

std::size_t count_substring(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

const char* kGoldenCsv =
    "x\\y,0,a,b,c,d,1\n"
    "0,0,0,b,b,b,b\n"
    "a,c,c,1,1,1,1\n"
    "b,c,c,1,1,1,1\n"
    "c,a,a,b,b,b,b\n"
    "d,d,d,1,1,1,1\n"
    "1,d,d,1,1,1,1\n";

}  // namespace

TEST_CASE("lattice files") {
  auto L = io::load_lattice_file(kData + "/l6.json");
  CHECK(same_lattice(L, fixture_l6()));
  SUBCASE("serialization round-trips") {
    std::string json = io::lattice_to_json(*L);
    auto back = io::parse_lattice_json(json);
    CHECK(same_lattice(L, back));
  }
  SUBCASE("errors") {
    CHECK_KIND(io::load_lattice_file("/nonexistent.json"), ErrorKind::IoError);
    CHECK_KIND(io::parse_lattice_json("{not json"), ErrorKind::ParseError);
    CHECK_KIND(io::parse_lattice_json("{\"elements\": []}"), ErrorKind::ParseError);
    CHECK_KIND(io::parse_lattice_json(
                   "{\"elements\": [\"x\"], \"covers\": [[\"x\"]]}"),
               ErrorKind::ParseError);
    CHECK_KIND(io::parse_lattice_json(
                   "{\"elements\": [\"x\",\"y\",\"z\"], "
                   "\"covers\": [[\"x\",\"y\"],[\"x\",\"z\"]]}"),
               ErrorKind::NotALattice);
  }
}

TEST_CASE("aggregation spec files") {
  SupAggregation agg = io::load_aggregation_file(kData + "/example1.json");
  auto L = agg.host();
  CHECK(agg.arity() == 2);
  std::vector<Index> tuple{L->index_of("c"), L->index_of("d")};
  CHECK(L->label(agg.evaluate(tuple)) == "b");
  SUBCASE("golden table") {
    CHECK(render::agg_table_csv(agg.full_table()) == kGoldenCsv);
  }
  SUBCASE("boundary-violating spec file fails with the domain error") {
    std::string spec = R"({
      "lattice": ")" + kData + R"(/l6.json",
      "arity": 1,
      "slots": [
        {"closure": ["1", "a"], "interior": ["b", "0"],
         "iso": {"1": "b", "a": "0"}}
      ]
    })";
    CHECK_KIND(io::parse_aggregation_json(spec, ""), ErrorKind::BoundaryViolation);
  }
  SUBCASE("arity must match the slot count") {
    std::string spec = R"({
      "lattice": ")" + kData + R"(/l6.json",
      "arity": 3,
      "slots": [
        {"closure": ["1"], "interior": ["0"], "iso": {"1": "0"}}
      ]
    })";
    CHECK_KIND(io::parse_aggregation_json(spec, ""), ErrorKind::ParseError);
  }
  SUBCASE("iso keys must cover the closure system") {
    std::string spec = R"({
      "lattice": ")" + kData + R"(/l6.json",
      "slots": [
        {"closure": ["1", "a"], "interior": ["b", "0"], "iso": {"1": "b"}}
      ]
    })";
    CHECK_KIND(io::parse_aggregation_json(spec, ""), ErrorKind::NotIso);
  }
}

TEST_CASE("family files") {
  SUBCASE("builtin chain family") {
    ValueMapFamily fam = io::load_family_file(kData + "/family_godel3.json");
    CHECK(fam.host()->size() == 3);
    CHECK(fam.tokens().size() == 3);
  }
  SUBCASE("explicit label tables") {
    ValueMapFamily fam = io::load_family_file(kData + "/family_l6.json");
    CHECK(fam.host()->size() == 6);
    CHECK(fam.has_token("t1"));
    CHECK(fam.has_token("t2"));
    const LatticePtr& L = fam.host();
    CHECK(fam.map_for("t1")(L->index_of("c")) == L->index_of("a"));
  }
  SUBCASE("unknown builtin") {
    CHECK_KIND(io::parse_family_json("{\"builtin\": \"nope\", \"k\": 3}", ""),
               ErrorKind::ParseError);
  }
}

TEST_CASE("map and matrix serialization") {
  auto L = fixture_l6();
  std::string json = io::map_to_json(LatticeMap::identity(L));
  CHECK(count_substring(json, "\"0\": \"0\"") == 1);
  CHECK(count_substring(json, "\"d\": \"d\"") == 1);
  SupAggregation agg = io::load_aggregation_file(kData + "/example1.json");
  std::string parts = io::maps_to_json(agg.components());
  CHECK(count_substring(parts, "{") >= 2);
  SubdirectEmbedding e = SubdirectEmbedding::birkhoff(L);
  std::string emb = io::embedding_to_json(e);
  CHECK(count_substring(emb, "\"0\": \"000\"") == 1);
  CHECK(count_substring(emb, "\"1\": \"111\"") == 1);
  SubdirectDecomposition d = subdirect_decompose_aggregation(agg, e);
  std::string sub = io::subdirect_to_json(d);
  CHECK(count_substring(sub, "\"slots\"") == 1);
  CHECK(count_substring(sub, "\"irreducibles\"") == 1);
}

TEST_CASE("dot rendering") {
  auto L = fixture_l6();
  std::string dot = render::lattice_dot(*L);
  CHECK(count_substring(dot, "->") == 7);
  CHECK(count_substring(dot, "rankdir=BT") == 1);
  CHECK(count_substring(dot, "\"0\"") >= 1);
  SUBCASE("concept lattice nodes match the concept count") {
    ManyValuedContext ctx = ManyValuedContext::parse_csv(",a1,a2\no1,1,0\no2,0,1\n");
    ValueMapFamily fam = ValueMapFamily::godel_chain(2);
    auto concepts = enumerate_concepts(ctx, fam);
    ConceptLattice cl = ConceptLattice::build(fam.host(), concepts);
    std::string cdot = render::concept_lattice_dot(ctx, cl);
    CHECK(count_substring(cdot, "[label=") == concepts.size());
  }
}

TEST_CASE("table text rendering") {
  SupAggregation agg = io::load_aggregation_file(kData + "/example1.json");
  std::string plain = render::agg_table_text(agg.full_table(), false);
  CHECK(plain.find("\x1b[") == std::string::npos);
  CHECK(plain.find("x\\y") != std::string::npos);
  std::string ansi = render::agg_table_text(agg.full_table(), true);
  CHECK(ansi.find("\x1b[1m") != std::string::npos);
  std::string tables = render::lattice_tables_text(*agg.host(), false);
  CHECK(tables.find("join") != std::string::npos);
  CHECK(tables.find("meet") != std::string::npos);
  CHECK(tables.find("bottom: 0") != std::string::npos);
}

TEST_CASE("csv layouts for other arities") {
  auto C2 = FiniteLattice::chain(2);
  std::vector<Index> all{0, 1};
  auto S = ClosureSystem::validate(C2, all);
  auto T = InteriorSystem::validate(C2, all);
  SystemIso id = SystemIso::validated(S.poset(), T.poset(), all);
  SupAggSpec spec{C2, {AggSlot{S, T, id}}};
  SupAggregation agg = SupAggregation::build(std::move(spec));
  std::string csv = render::agg_table_csv(agg.full_table());
  CHECK(csv == "x1,f\n0,0\n1,1\n");
}
