#include "catbase/topology.hpp"

#include <algorithm>

#include "catbase/classify.hpp"
#include "catbase/search.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace catbase;
using namespace testing;

namespace {

Topology sierpinski() { return topology(2, {{}, {1}, {0, 1}}); }
Topology indiscrete2() { return topology(2, {{}, {0, 1}}); }

}  // namespace

TEST_CASE("topology validation examples") {
  CHECK(validate_topology(2, family(2, {{}, {1}, {0, 1}})).valid());
  auto missing = validate_topology(2, family(2, {{}, {0}, {1}}));
  REQUIRE(missing.violation.has_value());
  CHECK(missing.violation->kind == TopologyViolation::Kind::MissingFull);
  auto no_union = validate_topology(3, family(3, {{}, {0}, {1}, {0, 1, 2}}));
  REQUIRE(no_union.violation.has_value());
  CHECK(no_union.violation->kind == TopologyViolation::Kind::UnionNotOpen);
  CHECK(no_union.violation->first == ps(3, {0}));
  CHECK(no_union.violation->second == ps(3, {1}));
  auto no_empty = validate_topology(2, family(2, {{0, 1}}));
  CHECK(no_empty.violation->kind == TopologyViolation::Kind::MissingEmpty);
}

TEST_CASE("nowhere dense and first category examples") {
  CHECK(is_nowhere_dense(sierpinski(), ps(2, {0})));
  CHECK(is_first_category(sierpinski(), ps(2, {0})));
  CHECK_FALSE(is_nowhere_dense(sierpinski(), ps(2, {1})));
  CHECK(is_nowhere_dense(sierpinski(), PointSet::empty(2)));
  CHECK(is_first_category(sierpinski(), PointSet::empty(2)));
  CHECK(closure(sierpinski(), ps(2, {0})) == ps(2, {0}));
  CHECK(closure(sierpinski(), ps(2, {1})) == PointSet::full(2));
}

TEST_CASE("baire decomposition examples") {
  CHECK_FALSE(has_baire_property(indiscrete2(), ps(2, {0})).has_value());
  auto d = has_baire_property(sierpinski(), ps(2, {0}));
  REQUIRE(d.has_value());
  CHECK(*d == BaireDecomposition{PointSet::empty(2), PointSet::empty(2), ps(2, {0})});
  CHECK(d->degenerate());
  auto x = has_baire_property(indiscrete2(), PointSet::full(2));
  REQUIRE(x.has_value());
  CHECK(*x == BaireDecomposition{PointSet::full(2), PointSet::empty(2), PointSet::empty(2)});
}

TEST_CASE("meager and baire classes of small topologies") {
  CHECK(meager_class(sierpinski()) == family(2, {{}, {0}}));
  CHECK(baire_class(sierpinski()).size() == 4);
  CHECK(meager_class(indiscrete2()) == family(2, {{}}));
  CHECK(baire_class(indiscrete2()) == family(2, {{}, {0, 1}}));
  const auto all = enumerate_topologies(3);
  auto discrete = *std::find_if(all.begin(), all.end(), [](const Topology& t) { return t.opens().size() == 8; });
  CHECK(discrete.opens().size() == 8);
  CHECK(meager_class(discrete) == family(3, {{}}));
  CHECK(baire_class(discrete).size() == 8);
}

TEST_CASE("topology counts match brute force") {
  CHECK(enumerate_topologies(1).size() == 1);
  for (int n = 1; n <= 4; ++n) {
    const auto mine = enumerate_topologies(n);
    const auto theirs = oracle::topologies(n);
    CHECK(mine.size() == theirs.size());
  }
  CHECK(enumerate_topologies(2).size() == 4);
  CHECK(enumerate_topologies(3).size() == 29);
  CHECK(enumerate_topologies(4).size() == 355);
  CHECK_THROWS_AS(enumerate_topologies(5), CapacityError);
}

TEST_CASE("interior and closure laws") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& t : enumerate_topologies(n)) {
      const auto opens = to_opens(t);
      for (auto s : power_set_iter(n)) {
        const auto i = interior(t, s);
        const auto c = closure(t, s);
        CHECK(i.subset_of(s));
        CHECK(s.subset_of(c));
        CHECK(interior(t, i) == i);
        CHECK(closure(t, c) == c);
        CHECK(t.is_open(i));
        CHECK(to_set(i) == oracle::interior(opens, to_set(s)));
        CHECK(to_set(c) == oracle::closure(opens, to_set(s), n));
        for (auto u : power_set_iter(n)) {
          if (s.subset_of(u)) {
            CHECK(i.subset_of(interior(t, u)));
            CHECK(c.subset_of(closure(t, u)));
          }
        }
      }
    }
  }
}

TEST_CASE("first category and baire property agree with the cover-search oracles") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& t : enumerate_topologies(n)) {
      const auto opens = to_opens(t);
      for (auto s : power_set_iter(n)) {
        const auto o = to_set(s);
        CHECK(is_nowhere_dense(t, s) == oracle::nowhere_dense(opens, o, n));
        CHECK(is_first_category(t, s) == oracle::first_category(opens, o, n));
        const auto d = has_baire_property(t, s);
        CHECK(d.has_value() == oracle::baire_property(opens, o, n));
        if (d) {
          CHECK(d->recompose() == s);
          CHECK(t.is_open(d->h));
          CHECK(is_first_category(t, d->q));
          CHECK(is_first_category(t, d->r));
          CHECK(d->degenerate() == is_first_category(t, s));
        }
      }
    }
  }
}

TEST_CASE("first category sets form an ideal; baire sets an algebra containing opens") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& t : enumerate_topologies(n)) {
      const auto m = meager_class(t);
      const auto b = baire_class(t);
      for (const auto& u : t.opens()) CHECK(b.contains(u));
      for (const auto& s : m) {
        CHECK(b.contains(s));
        for (auto sub : power_set_iter(n)) {
          if (sub.subset_of(s)) CHECK(m.contains(sub));
        }
        for (const auto& r : m) CHECK(m.contains(s | r));
      }
      for (const auto& s : b) {
        CHECK(b.contains(s.complement()));
        for (const auto& r : b) CHECK(b.contains(s | r));
      }
    }
  }
}

TEST_CASE("non-empty open sets as regions give the same meager and baire classes") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& t : enumerate_topologies(n)) {
      std::vector<PointSet> regions;
      for (const auto& u : t.opens()) {
        if (!u.is_empty()) regions.push_back(u);
      }
      auto r = validate_base(n, SetFamily(n, regions));
      REQUIRE(r.valid());
      const auto c = classify_all(*r.base);
      CHECK(c.meager_class() == meager_class(t));
      CHECK(c.baire_class() == baire_class(t));
    }
  }
}
