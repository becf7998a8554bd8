// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "support.hpp"

using namespace latgal;
using namespace latgal::testsupport;

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

Index el(const LatticePtr& L, const char* label) { return L->index_of(label); }

}  // namespace

TEST_CASE("two-chain from covers") {
  auto L = FiniteLattice::from_covers({"0", "1"}, {{"0", "1"}});
  CHECK(L->size() == 2);
  CHECK(L->label(L->bottom()) == "0");
  CHECK(L->label(L->top()) == "1");
  CHECK(L->leq(0, 1));
  CHECK_FALSE(L->leq(1, 0));
}

TEST_CASE("six-element fixture order facts") {
  auto L = fixture_l6();
  CHECK(L->size() == 6);
  CHECK(L->label(L->top()) == "1");
  CHECK(L->label(L->bottom()) == "0");
  CHECK(L->join(el(L, "a"), el(L, "c")) == el(L, "d"));
  CHECK(L->meet(el(L, "b"), el(L, "d")) == el(L, "a"));
  CHECK(L->leq(el(L, "a"), el(L, "b")));
  CHECK(L->join(el(L, "a"), el(L, "b")) == el(L, "b"));
  CHECK(L->cover_pairs().size() == 7);
}

TEST_CASE("cover input validation") {
  CHECK_KIND(FiniteLattice::from_covers({"x", "y", "z"}, {{"x", "y"}, {"x", "z"}}),
             ErrorKind::NotALattice);
  CHECK_KIND(FiniteLattice::from_covers({"x", "y"}, {{"x", "y"}, {"y", "x"}}),
             ErrorKind::CycleError);
  CHECK_KIND(FiniteLattice::from_covers({"x"}, {{"x", "x"}}), ErrorKind::CycleError);
  CHECK_KIND(FiniteLattice::from_covers({}, {}), ErrorKind::NoBounds);
  CHECK_KIND(FiniteLattice::from_covers({"x", "x"}, {}), ErrorKind::InvalidArgument);
  CHECK_KIND(FiniteLattice::from_covers({"x"}, {{"x", "nope"}}),
             ErrorKind::UnknownLabel);
  // two isolated points: no join
  CHECK_KIND(FiniteLattice::from_covers({"x", "y"}, {}), ErrorKind::NotALattice);
}

TEST_CASE("joins and meets of subsets") {
  auto L = fixture_l6();
  std::vector<Index> ac{el(L, "a"), el(L, "c")};
  CHECK(L->join_all(ac) == el(L, "d"));
  std::vector<Index> db{el(L, "d"), el(L, "b")};
  CHECK(L->join_all(db) == el(L, "1"));
  CHECK(L->join_all({}) == L->bottom());
  CHECK(L->meet_all({}) == L->top());
}

TEST_CASE("products are coordinatewise") {
  auto [P, codec] = product({FiniteLattice::chain(3), FiniteLattice::chain(2)});
  CHECK(P->size() == 6);
  SUBCASE("codec is a bijection") {
    for (Index x = 0; x < P->size(); ++x) {
      auto coords = codec.decode(x);
      CHECK(codec.encode(coords) == x);
    }
  }
  SUBCASE("order, join and meet act per coordinate") {
    for (Index x = 0; x < P->size(); ++x) {
      for (Index y = 0; y < P->size(); ++y) {
        auto cx = codec.decode(x);
        auto cy = codec.decode(y);
        bool expect = cx[0] <= cy[0] && cx[1] <= cy[1];
        CHECK(P->leq(x, y) == expect);
        auto cj = codec.decode(P->join(x, y));
        CHECK(cj[0] == std::max(cx[0], cy[0]));
        CHECK(cj[1] == std::max(cx[1], cy[1]));
      }
    }
  }
  SUBCASE("isomorphic to the six-element fixture") {
    auto L6 = fixture_l6();
    SubPoset whole_p(P, [&] {
      std::vector<Index> all(P->size());
      for (Index i = 0; i < P->size(); ++i) all[i] = i;
      return all;
    }());
    SubPoset whole_l(L6, [&] {
      std::vector<Index> all(L6->size());
      for (Index i = 0; i < L6->size(); ++i) all[i] = i;
      return all;
    }());
    auto isos = enumerate_isos(whole_l, whole_p);
    CHECK(isos.size() == 1);
  }
}

TEST_CASE("boolean cubes") {
  auto B3 = FiniteLattice::boolean_cube(3);
  CHECK(B3->size() == 8);
  CHECK(B3->label(B3->bottom()) == "000");
  CHECK(B3->label(B3->top()) == "111");
  CHECK(B3->upper_covers(B3->bottom()).size() == 3);  // three atoms
  CHECK(B3->find("101").has_value());
  CHECK_FALSE(B3->find("2x1").has_value());
  auto B0 = FiniteLattice::boolean_cube(0);
  CHECK(B0->size() == 1);
  CHECK_KIND(FiniteLattice::boolean_cube(30, 1000), ErrorKind::SizeLimit);
}

TEST_CASE("product size limit") {
  std::vector<LatticePtr> factors(3, FiniteLattice::chain(101));
  CHECK_KIND(product(std::move(factors)), ErrorKind::SizeLimit);
  std::vector<LatticePtr> small(2, FiniteLattice::chain(4));
  CHECK_KIND(product(std::move(small), 10), ErrorKind::SizeLimit);
}

TEST_CASE("dual reverses everything and is an involution") {
  auto L = fixture_l6();
  auto D = dual(L);
  CHECK(D->bottom() == L->top());
  CHECK(D->top() == L->bottom());
  for (Index x = 0; x < L->size(); ++x) {
    for (Index y = 0; y < L->size(); ++y) {
      CHECK(D->leq(x, y) == L->leq(y, x));
      CHECK(D->join(x, y) == L->meet(x, y));
      CHECK(D->meet(x, y) == L->join(x, y));
    }
  }
  CHECK(same_lattice(dual(D), L));
}

TEST_CASE("chains") {
  auto C2 = FiniteLattice::chain(2);
  CHECK(C2->size() == 2);
  CHECK(C2->label(0) == "0");
  CHECK(C2->label(1) == "1");
  auto C5 = FiniteLattice::chain(5);
  auto jis = C5->join_irreducibles();
  CHECK(jis.size() == 4);  // every non-bottom element
  CHECK_KIND(FiniteLattice::chain(0), ErrorKind::InvalidArgument);
}

TEST_CASE("ideals, filters and down-sets") {
  auto L = fixture_l6();
  auto ideal = L->principal_ideal(el(L, "d"));
  std::vector<Index> expect{el(L, "0"), el(L, "a"), el(L, "c"), el(L, "d")};
  std::sort(expect.begin(), expect.end());
  CHECK(ideal == expect);
  CHECK(L->principal_ideal(L->top()).size() == L->size());
  CHECK(L->principal_filter(el(L, "b")) ==
        std::vector<Index>{el(L, "b"), el(L, "1")});
  std::vector<Index> not_down{el(L, "0"), el(L, "b")};
  CHECK_FALSE(L->is_down_set(not_down));
  std::vector<Index> down{el(L, "0"), el(L, "a"), el(L, "b")};
  CHECK(L->is_down_set(down));
}

TEST_CASE("join irreducibles and distributivity") {
  auto L = fixture_l6();
  auto jis = L->join_irreducibles();
  std::vector<Index> expect{el(L, "a"), el(L, "b"), el(L, "c")};
  CHECK(jis == expect);
  CHECK(L->is_distributive());
  CHECK_FALSE(diamond_m3()->is_distributive());
  CHECK_FALSE(pentagon_n5()->is_distributive());
}

TEST_CASE("heights") {
  auto L = fixture_l6();
  auto h = L->heights();
  CHECK(h[el(L, "0")] == 0);
  CHECK(h[el(L, "a")] == 1);
  CHECK(h[el(L, "c")] == 1);
  CHECK(h[el(L, "b")] == 2);
  CHECK(h[el(L, "d")] == 2);
  CHECK(h[el(L, "1")] == 3);
}

TEST_CASE("fixture matches the product of a three-chain and a two-chain") {
  auto L = fixture_l6();
  CHECK(L->label(L->top()) == "1");
  CHECK(L->leq(el(L, "a"), el(L, "b")));
  auto [P, codec] = product({FiniteLattice::chain(3), FiniteLattice::chain(2)});
  std::vector<Index> all_l(L->size()), all_p(P->size());
  for (Index i = 0; i < L->size(); ++i) all_l[i] = i;
  for (Index i = 0; i < P->size(); ++i) all_p[i] = i;
  CHECK_FALSE(enumerate_isos(SubPoset(L, all_l), SubPoset(P, all_p)).empty());
}

TEST_CASE("order is equivalent to join and meet absorption") {
  for (const LatticePtr& L : small_corpus()) {
    for (Index x = 0; x < L->size(); ++x) {
      for (Index y = 0; y < L->size(); ++y) {
        bool le = L->leq(x, y);
        CHECK(le == (L->join(x, y) == y));
        CHECK(le == (L->meet(x, y) == x));
      }
    }
  }
}

TEST_CASE("tables agree with brute-force bounds from the order") {
  for (const LatticePtr& L : small_corpus()) {
    for (Index x = 0; x < L->size(); ++x) {
      for (Index y = 0; y < L->size(); ++y) {
        auto lub = brute_lub(*L, x, y);
        auto glb = brute_glb(*L, x, y);
        REQUIRE(lub.has_value());
        REQUIRE(glb.has_value());
        CHECK(L->join(x, y) == *lub);
        CHECK(L->meet(x, y) == *glb);
      }
    }
  }
}

TEST_CASE("lattice algebra laws hold on the corpus") {
  for (const LatticePtr& L : small_corpus()) {
    for (Index x = 0; x < L->size(); ++x) {
      CHECK(L->join(x, x) == x);
      CHECK(L->meet(x, x) == x);
      CHECK(L->leq(L->bottom(), x));
      CHECK(L->leq(x, L->top()));
      for (Index y = 0; y < L->size(); ++y) {
        CHECK(L->join(x, y) == L->join(y, x));
        CHECK(L->meet(x, y) == L->meet(y, x));
        CHECK(L->join(x, L->meet(x, y)) == x);  // absorption
        CHECK(L->meet(x, L->join(x, y)) == x);
        for (Index z = 0; z < L->size(); ++z) {
          CHECK(L->join(L->join(x, y), z) == L->join(x, L->join(y, z)));
          CHECK(L->meet(L->meet(x, y), z) == L->meet(x, L->meet(y, z)));
        }
      }
    }
  }
}

TEST_CASE("labels survive find round-trips") {
  for (const LatticePtr& L : small_corpus()) {
    for (Index x = 0; x < L->size(); ++x) {
      auto found = L->find(L->label(x));
      REQUIRE(found.has_value());
      CHECK(*found == x);
    }
  }
  auto L = fixture_l6();
  CHECK_KIND(L->index_of("zzz"), ErrorKind::UnknownLabel);
}

TEST_CASE("from_order validates partial orders") {
  std::vector<std::uint8_t> not_reflexive{0, 1, 0, 1};
  CHECK_KIND(FiniteLattice::from_order({"x", "y"}, not_reflexive),
             ErrorKind::InvalidArgument);
  std::vector<std::uint8_t> symmetric{1, 1, 1, 1};
  CHECK_KIND(FiniteLattice::from_order({"x", "y"}, symmetric),
             ErrorKind::CycleError);
}
