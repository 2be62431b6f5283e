#include "catbase/search.hpp"

#include "catbase/classify.hpp"
#include "catbase/equiv.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace catbase;
using namespace testing;

namespace {

SweepConfig exhaustive(int n) {
  SweepConfig cfg;
  cfg.n = n;
  cfg.mode = SweepMode::Exhaustive;
  return cfg;
}

std::uint64_t oracle_base_count(int n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= candidate_count(n); ++k) {
    if (oracle::is_base(n, to_family(candidate_family(n, k)))) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("candidate enumeration") {
  CHECK(candidate_count(1) == 1);
  CHECK(candidate_count(2) == 7);
  CHECK(candidate_count(3) == 127);
  CHECK(candidate_family(2, 5) == sets(2, {{0}, {0, 1}}));
}

TEST_CASE("valid base counts are frozen and match the literal axiom check") {
  auto one = enumerate_bases(exhaustive(1));
  REQUIRE(one.size() == 1);
  CHECK(one.front().regions() == family(1, {{0}}));
  CHECK(enumerate_bases(exhaustive(2)).size() == 5);
  CHECK(enumerate_bases(exhaustive(3)).size() == 83);
  CHECK(oracle_base_count(2) == 5);
  CHECK(oracle_base_count(3) == 83);
}

TEST_CASE("exhaustive enumeration needs the large flag at four points") {
  CHECK_THROWS_AS(enumerate_bases(exhaustive(4)), CapacityError);
}

TEST_CASE("exhaustive sweeps at two and three points find nothing") {
  for (int n : {2, 3}) {
    auto r = sweep(exhaustive(n));
    CHECK(r.passed());
    CHECK(r.violations.empty());
    CHECK(r.counts.equivalence_true == r.counts.valid_bases);
    CHECK(r.counts.hypothesis_true == r.counts.valid_bases);
    CHECK(r.counts.minimal_regions_ok == r.counts.valid_bases);
  }
  auto two = sweep(exhaustive(2));
  CHECK(two.counts.candidates == 7);
  CHECK(two.counts.valid_bases == 5);
  CHECK(two.counts.degenerate_bases == 1);
}

TEST_CASE("random sweep at five points") {
  SweepConfig cfg;
  cfg.n = 5;
  cfg.sample_count = 1000;
  cfg.seed = 7;
  auto r = sweep(cfg);
  CHECK(r.violations.empty());
  CHECK(r.counts.candidates == 1000);
  CHECK(r.elapsed_seconds >= 0.0);
}

TEST_CASE("sweep results do not depend on the worker count") {
  SweepConfig cfg = exhaustive(3);
  cfg.operators_per_base = 10;
  cfg.seed = 9;
  auto one = sweep(cfg);
  cfg.workers = 4;
  auto four = sweep(cfg);
  CHECK(one.counts == four.counts);
  REQUIRE(one.violations.size() == four.violations.size());
  for (std::size_t i = 0; i < one.violations.size(); ++i) {
    CHECK(one.violations[i].job == four.violations[i].job);
    CHECK(one.violations[i].op == four.violations[i].op);
    CHECK(one.violations[i].witness == four.violations[i].witness);
  }

  SweepConfig rnd;
  rnd.n = 4;
  rnd.sample_count = 300;
  rnd.seed = 21;
  auto a = sweep(rnd);
  rnd.workers = 3;
  CHECK(sweep(rnd).counts == a.counts);
}

TEST_CASE("canonical sweeps reproduce the full counts when weighted by orbit size") {
  for (int n : {2, 3}) {
    auto full = sweep(exhaustive(n));
    auto cfg = exhaustive(n);
    cfg.canonicalize = true;
    auto canon = sweep(cfg);
    REQUIRE(canon.weighted.has_value());
    CHECK(*canon.weighted == full.counts);
    CHECK(canon.counts.candidates < full.counts.candidates);
  }
}

TEST_CASE("canonical form is a permutation invariant") {
  for (std::uint64_t k = 1; k <= candidate_count(3); ++k) {
    const SetFamily f(3, candidate_family(3, k));
    const auto masks = f.masks();
    const auto canon = canonical_form(3, masks);
    std::vector<int> perm{0, 1, 2};
    std::set<std::vector<Mask>> images;
    do {
      std::vector<Mask> image;
      for (const auto& s : f) image.push_back(permute(s, perm).bits());
      std::sort(image.begin(), image.end());
      images.insert(image);
      CHECK(canonical_form(3, image) == canon);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(orbit_size(3, masks) == images.size());
    CHECK(canon == *images.begin());
  }
}

TEST_CASE("raising the budget only removes truncation") {
  const int n = 3;
  for (std::uint64_t k = 1; k <= candidate_count(n); ++k) {
    const SetFamily regions(n, candidate_family(n, k));
    const bool verdict = validate_base(n, regions).valid();
    bool truncated_before = true;
    for (std::uint64_t budget : {0, 1, 2, 4, 8, 16, 64}) {
      std::optional<bool> got;
      try {
        got = validate_base(n, regions, {budget, true}).valid();
      } catch (const CapacityError&) {
      }
      const bool truncated = !got.has_value();
      if (got) CHECK(*got == verdict);
      if (!truncated_before) CHECK_FALSE(truncated);
      truncated_before = truncated;
    }
  }
  std::uint64_t last = ~std::uint64_t{0};
  std::uint64_t last_valid = 0;
  for (std::uint64_t budget : {1, 2, 4, 8, 64}) {
    auto cfg = exhaustive(n);
    cfg.budget = budget;
    auto r = sweep(cfg);
    CHECK(r.counts.truncated <= last);
    CHECK(r.counts.valid_bases >= last_valid);
    last = r.counts.truncated;
    last_valid = r.counts.valid_bases;
  }
  CHECK(last == 0);
}

TEST_CASE("random valid bases and operators are reproducible") {
  std::mt19937_64 a(77);
  std::mt19937_64 b(77);
  for (int i = 0; i < 20; ++i) {
    auto x = random_valid_base(4, a);
    auto y = random_valid_base(4, b);
    CHECK(x.regions() == y.regions());
    CHECK(random_operator(x, i) == random_operator(y, i));
  }
  CHECK(mix_seed(1, 2) == mix_seed(1, 2));
  CHECK(mix_seed(1, 2) != mix_seed(1, 3));
}

TEST_CASE("every small base matches some topology") {
  for (int n = 1; n <= 3; ++n) {
    const auto tops = enumerate_topologies(n);
    for (const auto& b : all_bases(n)) {
      auto t = find_equivalent_topology(b, tops);
      REQUIRE(t.has_value());
      const auto c = classify_all(b);
      CHECK(c.meager_class() == meager_class(*t));
      CHECK(c.baire_class() == baire_class(*t));
    }
  }
}

TEST_CASE("general operators produce listed equivalence failures") {
  auto cfg = exhaustive(2);
  cfg.operators_per_base = 20;
  cfg.seed = 1;
  auto r = sweep(cfg);
  CHECK(r.counts.operators_checked == 100);
  CHECK(r.counts.operator_equivalence_true <= r.counts.operator_hypothesis_true);
  const auto failures = r.counts.operator_hypothesis_true - r.counts.operator_equivalence_true;
  CHECK(r.violations.size() == failures);
  CHECK(r.counts.operator_failures_open_sets_ok == 0);
  for (const auto& v : r.violations) {
    CHECK(v.theorem == theorem::kEquivalence);
    CHECK(v.op.rfind("random:", 0) == 0);
  }
}
