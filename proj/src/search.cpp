#include "catbase/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

#include "catbase/classify.hpp"
#include "catbase/equiv.hpp"

namespace catbase {

SweepCounts& SweepCounts::operator+=(const SweepCounts& o) {
  candidates += o.candidates;
  valid_bases += o.valid_bases;
  degenerate_bases += o.degenerate_bases;
  truncated += o.truncated;
  hypothesis_true += o.hypothesis_true;
  equivalence_true += o.equivalence_true;
  minimal_regions_ok += o.minimal_regions_ok;
  operators_checked += o.operators_checked;
  operator_hypothesis_true += o.operator_hypothesis_true;
  operator_equivalence_true += o.operator_equivalence_true;
  operator_open_set_failures += o.operator_open_set_failures;
  operator_failures_open_sets_ok += o.operator_failures_open_sets_ok;
  no_equivalent_topology += o.no_equivalent_topology;
  return *this;
}

SweepCounts SweepCounts::scaled(std::uint64_t factor) const {
  SweepCounts out;
  for (std::uint64_t i = 0; i < factor; ++i) out += *this;
  return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t candidate_count(int n) {
  check_ground_size(n);
  const std::uint64_t subsets = (std::uint64_t{1} << n) - 1;
  if (subsets >= 63) throw CapacityError("exhaustive candidate count overflows for n=" + std::to_string(n));
  return (std::uint64_t{1} << subsets) - 1;
}

std::vector<PointSet> candidate_family(int n, std::uint64_t k) {
  check_ground_size(n);
  std::vector<PointSet> out;
  for (Mask s = 1; s <= full_mask(n); ++s) {
    if (((k >> (s - 1)) & 1U) != 0) out.emplace_back(n, s);
  }
  return out;
}

namespace {

Mask random_nonempty(int n, std::mt19937_64& rng) {
  Mask m = 0;
  while (m == 0) m = static_cast<Mask>(rng()) & full_mask(n);
  return m;
}

// Up-closed sets of a random preorder; reach[x] is the up-closure of x.
std::vector<Mask> random_preorder_reach(int n, std::mt19937_64& rng) {
  std::vector<Mask> reach(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    reach[x] = Mask{1} << x;
    for (int y = 0; y < n; ++y) {
      if (y != x && rng() % 4 == 0) reach[x] |= Mask{1} << y;
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      Mask next = reach[x];
      for (int y = 0; y < n; ++y) {
        if (((reach[x] >> y) & 1U) != 0) next |= reach[y];
      }
      if (next != reach[x]) {
        reach[x] = next;
        changed = true;
      }
    }
  }
  return reach;
}

}  // namespace

std::vector<PointSet> random_candidate(int n, std::mt19937_64& rng) {
  check_ground_size(n);
  if (n == 0) throw InputError("random candidates need n >= 1");
  std::vector<PointSet> out;
  switch (rng() % 3) {
    case 0: {
      const std::uint64_t subsets = full_mask(n);
      const std::uint64_t k = 1 + rng() % std::min<std::uint64_t>(subsets, 2 * static_cast<std::uint64_t>(n));
      for (std::uint64_t i = 0; i < k; ++i) out.emplace_back(n, random_nonempty(n, rng));
      if (rng() % 2 == 0) out.push_back(PointSet::full(n));
      break;
    }
    case 1: {
      const auto reach = random_preorder_reach(n, rng);
      for (Mask s = 1; s <= full_mask(n); ++s) {
        bool open = true;
        for (int x = 0; x < n && open; ++x) {
          if (((s >> x) & 1U) != 0 && (reach[x] & ~s) != 0) open = false;
        }
        if (open) out.emplace_back(n, s);
      }
      break;
    }
    default: {
      for (Mask r : random_preorder_reach(n, rng)) out.emplace_back(n, r);
      out.push_back(PointSet::full(n));
      break;
    }
  }
  SetFamily family(n, std::move(out));
  return family.members();
}

CategoryBase random_valid_base(int n, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    auto candidate = random_candidate(n, rng);
    auto result = validate_base(n, std::span<const PointSet>(candidate), {kDefaultFamilyBudget, false});
    if (result.valid()) return std::move(*result.base);
  }
  throw CapacityError("no valid random base found");
}

std::vector<Mask> canonical_form(int n, std::span<const Mask> family) {
  check_ground_size(n);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> best(family.begin(), family.end());
  std::sort(best.begin(), best.end());
  std::vector<Mask> image(family.size());
  do {
    for (std::size_t i = 0; i < family.size(); ++i) {
      Mask m = 0;
      for (int x = 0; x < n; ++x) {
        if (((family[i] >> x) & 1U) != 0) m |= Mask{1} << perm[x];
      }
      image[i] = m;
    }
    std::sort(image.begin(), image.end());
    if (image < best) best = image;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::uint64_t orbit_size(int n, std::span<const Mask> family) {
  check_ground_size(n);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Mask>> images;
  do {
    std::vector<Mask> image(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
      Mask m = 0;
      for (int x = 0; x < n; ++x) {
        if (((family[i] >> x) & 1U) != 0) m |= Mask{1} << perm[x];
      }
      image[i] = m;
    }
    std::sort(image.begin(), image.end());
    images.push_back(std::move(image));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(images.begin(), images.end());
  return static_cast<std::uint64_t>(std::unique(images.begin(), images.end()) - images.begin());
}

std::vector<Topology> enumerate_topologies(int n) {
  if (n < 1 || n > 4) throw CapacityError("topology enumeration supports 1 <= n <= 4, got " + std::to_string(n));
  const Mask full = full_mask(n);
  const std::uint64_t inner = full - 1;  // subsets other than ∅ and X
  std::vector<Topology> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << inner); ++pick) {
    std::vector<PointSet> opens{PointSet::empty(n), PointSet::full(n)};
    for (Mask s = 1; s < full; ++s) {
      if (((pick >> (s - 1)) & 1U) != 0) opens.emplace_back(n, s);
    }
    auto result = validate_topology(n, SetFamily(n, std::move(opens)));
    if (result.valid()) out.push_back(std::move(*result.topology));
  }
  std::sort(out.begin(), out.end(),
            [](const Topology& a, const Topology& b) { return a.opens().members() < b.opens().members(); });
  return out;
}

OperatorTable random_operator(const CategoryBase& base, std::uint64_t seed) {
  const int n = base.n();
  const Mask full = full_mask(n);
  const Mask sp = detail::singular_points_mask(base);
  std::mt19937_64 rng(seed);
  std::vector<Mask> images(static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < kRandomOperatorAttempts; ++attempt) {
    Mask cover = 0;
    for (int x = 0; x < n; ++x) {
      images[x] = ((sp >> x) & 1U) != 0 ? 0 : static_cast<Mask>(rng()) & full;
      cover |= images[x];
    }
    if (cover == full) return OperatorTable::from_singletons(n, images);
  }
  return cluster_operator(base);
}

std::optional<Topology> find_equivalent_topology(const CategoryBase& base, const std::vector<Topology>& topologies) {
  const auto classes = classify_all(base);
  const auto meager = classes.meager_class();
  const auto baire = classes.baire_class();
  for (const auto& t : topologies) {
    if (t.n() == base.n() && meager_class(t) == meager && baire_class(t) == baire) return t;
  }
  return std::nullopt;
}

std::vector<CategoryBase> enumerate_bases(const SweepConfig& cfg) {
  if (cfg.n < 1 || cfg.n > 4 || (cfg.n == 4 && !cfg.allow_large)) {
    throw CapacityError("exhaustive base enumeration supports n <= 3 (n = 4 with the large flag), got n=" +
                        std::to_string(cfg.n));
  }
  std::vector<CategoryBase> out;
  const std::uint64_t count = candidate_count(cfg.n);
  for (std::uint64_t k = 1; k <= count; ++k) {
    auto family = candidate_family(cfg.n, k);
    if (cfg.canonicalize) {
      std::vector<Mask> masks;
      for (const auto& s : family) masks.push_back(s.bits());
      if (canonical_form(cfg.n, masks) != masks) continue;
    }
    auto result = validate_base(cfg.n, std::span<const PointSet>(family), {cfg.budget, false});
    if (result.valid()) out.push_back(std::move(*result.base));
  }
  return out;
}

namespace {

struct JobResult {
  SweepCounts counts;
  SweepCounts weighted;
  std::vector<TheoremFailure> violations;
};

std::vector<PointSet> witness_sets(const EquivalenceReport& report) {
  std::vector<PointSet> out;
  for (const auto& m : report.mismatches) out.push_back(m.set);
  return out;
}

std::string mismatch_summary(const EquivalenceReport& report) {
  std::string out;
  for (std::size_t k = 0; k < report.mismatch_counts.size(); ++k) {
    if (report.mismatch_counts[k] == 0) continue;
    if (!out.empty()) out += ", ";
    out += std::string(to_string(static_cast<MismatchDirection>(k))) + "=" + std::to_string(report.mismatch_counts[k]);
  }
  return out;
}

class JobRunner {
 public:
  JobRunner(const SweepConfig& cfg, const std::vector<Topology>& topologies) : cfg_(cfg), topologies_(topologies) {}

  JobResult run(std::uint64_t job) const {
    JobResult out;
    std::vector<PointSet> family;
    std::uint64_t weight = 1;
    if (cfg_.mode == SweepMode::Exhaustive) {
      family = candidate_family(cfg_.n, job + 1);
      if (cfg_.canonicalize) {
        std::vector<Mask> masks;
        for (const auto& s : family) masks.push_back(s.bits());
        if (canonical_form(cfg_.n, masks) != masks) return out;
        weight = orbit_size(cfg_.n, masks);
      }
    } else {
      std::mt19937_64 rng(mix_seed(cfg_.seed, job));
      family = random_candidate(cfg_.n, rng);
    }
    out.counts.candidates = 1;
    try {
      auto result = validate_base(cfg_.n, std::span<const PointSet>(family), {cfg_.budget, false});
      if (result.valid()) check_base(job, *result.base, out);
    } catch (const CapacityError&) {
      out.counts.truncated += 1;
    }
    out.weighted = out.counts.scaled(weight);
    return out;
  }

 private:
  void check_base(std::uint64_t job, const CategoryBase& base, JobResult& out) const {
    auto& c = out.counts;
    c.valid_bases = 1;
    c.degenerate_bases = base.degenerate() ? 1 : 0;
    const int n = base.n();
    const auto masks = base.region_masks();
    auto fail = [&](const char* theorem, std::string op, std::vector<PointSet> witness, std::string detail) {
      out.violations.push_back({job, base.regions().members(), theorem, std::move(op), std::move(witness),
                                std::move(detail)});
    };

    const auto classes = classify_all(base);

    for (std::size_t a = 0; a < masks.size(); ++a) {
      for (std::size_t b = a + 1; b < masks.size(); ++b) {
        const Mask inter = masks[a] & masks[b];
        if (!base.contains_region_mask(inter) && !classes.singular(inter)) {
          fail(theorem::kRegionIntersection, "", {base.regions()[a], base.regions()[b]},
               "intersection contains no region and is not singular");
        }
      }
    }

    for (const auto s : power_set_iter(n)) {
      if (classes.meager(s)) continue;
      try {
        (void)fundamental_witness(base, s);
      } catch (const TheoremViolation& e) {
        fail(theorem::kFundamental, "", {s}, e.what());
      }
      if (!classes.baire(s)) continue;
      try {
        (void)comeager_region(base, s);
      } catch (const TheoremViolation& e) {
        fail(theorem::kComeagerRegion, "", {s}, e.what());
      }
    }

    if (every_region_has_minimal(base)) {
      c.minimal_regions_ok = 1;
    } else {
      fail(theorem::kMinimalRegions, "", {}, "some region contains no minimal region");
    }

    std::optional<OperatorTable> cluster;
    try {
      cluster = cluster_operator(base);
    } catch (const TheoremViolation& e) {
      fail(theorem::kClusterOperator, "cluster", {}, e.what());
    }
    if (cluster) {
      try {
        const auto report = check_equivalence(base, classes, *cluster);
        c.hypothesis_true = report.hypothesis_holds ? 1 : 0;
        c.equivalence_true = report.equivalent() ? 1 : 0;
        if (!report.hypothesis_holds) {
          fail(theorem::kBasicHypothesis, "cluster", {}, "a region contains no non-empty basic-open set");
        }
        if (report.hypothesis_holds && !report.equivalent()) {
          fail(theorem::kEquivalence, "cluster", witness_sets(report), mismatch_summary(report));
        }
        if (!report.open_sets_abundant_baire) {
          fail(theorem::kOpenSetsAbundantBaire, "cluster", {*report.open_set_witness},
               "non-empty basic-open set is meager or not Baire");
        }
        const auto basic = d_topology(base, *cluster);
        if (auto w = minimal_union_open_check(base, basic)) {
          fail(theorem::kMinimalUnionOpen, "cluster", {*w}, "union of minimal regions is not basic-open");
        }
      } catch (const TheoremViolation& e) {
        fail(theorem::kDTopology, "cluster", {}, e.what());
      } catch (const CapacityError&) {
        c.truncated += 1;
      }
    }

    const std::uint64_t op_stream = mix_seed(cfg_.seed ^ 0xD1B54A32D192ED03ULL, job);
    for (unsigned k = 0; k < cfg_.operators_per_base; ++k) {
      const std::uint64_t seed = mix_seed(op_stream, k);
      const std::string label = "random:" + std::to_string(seed);
      const auto d = random_operator(base, seed);
      c.operators_checked += 1;
      try {
        const auto report = check_equivalence(base, classes, d);
        if (report.hypothesis_holds) c.operator_hypothesis_true += 1;
        if (report.equivalent()) c.operator_equivalence_true += 1;
        if (report.hypothesis_holds && !report.equivalent()) {
          fail(theorem::kEquivalence, label, witness_sets(report),
               mismatch_summary(report) + (report.open_sets_abundant_baire ? "; open sets abundant and Baire"
                                                                : "; open set " + report.open_set_witness->str() +
                                                                      " is meager or not Baire"));
          if (report.open_sets_abundant_baire) c.operator_failures_open_sets_ok += 1;
        }
        if (report.hypothesis_holds && !report.open_sets_abundant_baire) c.operator_open_set_failures += 1;
      } catch (const TheoremViolation& e) {
        fail(theorem::kDTopology, label, {}, e.what());
      }
    }

    if (cfg_.hunt && !find_equivalent_topology(base, topologies_)) {
      c.no_equivalent_topology = 1;
      fail(theorem::kNoEquivalentTopology, "", {}, "no topology on the ground set has the same meager and Baire classes");
    }
  }

  const SweepConfig& cfg_;
  const std::vector<Topology>& topologies_;
};

void check_config(const SweepConfig& cfg) {
  if (cfg.n < 1 || cfg.n > kMaxPoints) {
    throw CapacityError("sweep ground size must be in [1, " + std::to_string(kMaxPoints) + "]");
  }
  if (cfg.mode == SweepMode::Exhaustive && (cfg.n > 4 || (cfg.n == 4 && !cfg.allow_large))) {
    throw CapacityError("exhaustive sweeps support n <= 3 (n = 4 with the large flag), got n=" +
                        std::to_string(cfg.n));
  }
  if (cfg.hunt && (cfg.mode != SweepMode::Exhaustive || cfg.n > 4)) {
    throw InputError("the topology hunt needs an exhaustive sweep with n <= 4");
  }
}

}  // namespace

SweepReport sweep(const SweepConfig& cfg) {
  check_config(cfg);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Topology> topologies = cfg.hunt ? enumerate_topologies(cfg.n) : std::vector<Topology>{};
  const JobRunner runner(cfg, topologies);
  const std::uint64_t jobs = cfg.mode == SweepMode::Exhaustive ? candidate_count(cfg.n) : cfg.sample_count;

  SweepReport report;
  report.config = cfg;
  SweepCounts weighted;
  constexpr std::uint64_t kBlock = 4096;
  const unsigned workers = std::max(1U, cfg.workers);
  std::vector<JobResult> block;
  for (std::uint64_t first = 0; first < jobs; first += kBlock) {
    const std::uint64_t size = std::min(kBlock, jobs - first);
    block.assign(size, JobResult{});
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
      for (std::uint64_t i = next.fetch_add(1); i < size; i = next.fetch_add(1)) block[i] = runner.run(first + i);
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::exception_ptr> errors(workers);
      std::vector<std::thread> threads;
      for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
          try {
            work();
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : threads) t.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    for (auto& r : block) {
      report.counts += r.counts;
      weighted += r.weighted;
      for (auto& v : r.violations) report.violations.push_back(std::move(v));
    }
  }
  if (cfg.canonicalize && cfg.mode == SweepMode::Exhaustive) report.weighted = weighted;
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace catbase
