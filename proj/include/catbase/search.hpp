#pragma once

// Exhaustive and randomized generation of category bases, topologies and
// operators, and the sweep harness that runs every checker over them.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "catbase/axioms.hpp"
#include "catbase/core.hpp"
#include "catbase/doperator.hpp"
#include "catbase/topology.hpp"

namespace catbase {

enum class SweepMode { Exhaustive, Random };

struct SweepConfig {
  int n = kDefaultSearchPoints;
  SweepMode mode = SweepMode::Random;
  std::uint64_t sample_count = 1000;
  std::uint64_t seed = 0;
  /// Exhaustive mode only: sweep one representative per point-permutation orbit.
  bool canonicalize = false;
  std::uint64_t budget = kDefaultFamilyBudget;
  /// Random operator tables checked per valid base, on top of the cluster operator.
  unsigned operators_per_base = 0;
  /// Exhaustive mode only: test each base against every topology on n points.
  bool hunt = false;
  /// Allows exhaustive base enumeration at n = 4.
  bool allow_large = false;
  unsigned workers = 1;
};

/// Checker identifiers used in violation lists.
namespace theorem {
inline constexpr const char* kRegionIntersection = "region-intersection";
inline constexpr const char* kFundamental = "fundamental-theorem";
inline constexpr const char* kComeagerRegion = "comeager-region";
inline constexpr const char* kClusterOperator = "cluster-operator";
inline constexpr const char* kDTopology = "d-topology";
inline constexpr const char* kOpenSetsAbundantBaire = "open-sets-abundant-baire";
inline constexpr const char* kEquivalence = "equivalence";
inline constexpr const char* kBasicHypothesis = "basic-hypothesis";
inline constexpr const char* kMinimalRegions = "minimal-regions";
inline constexpr const char* kMinimalUnionOpen = "minimal-union-open";
inline constexpr const char* kNoEquivalentTopology = "no-equivalent-topology";
}  // namespace theorem

struct TheoremFailure {
  std::uint64_t job = 0;
  std::vector<PointSet> regions;
  std::string theorem;
  /// "cluster" or "random:<seed>".
  std::string op;
  std::vector<PointSet> witness;
  std::string detail;
};

struct SweepCounts {
  std::uint64_t candidates = 0;
  std::uint64_t valid_bases = 0;
  std::uint64_t degenerate_bases = 0;
  std::uint64_t truncated = 0;
  std::uint64_t hypothesis_true = 0;
  std::uint64_t equivalence_true = 0;
  std::uint64_t minimal_regions_ok = 0;
  std::uint64_t operators_checked = 0;
  std::uint64_t operator_hypothesis_true = 0;
  std::uint64_t operator_equivalence_true = 0;
  /// Random operators whose τ(D) satisfies the hypothesis but has a non-empty
  /// open set that is meager or not Baire.
  std::uint64_t operator_open_set_failures = 0;
  /// Random operators with the hypothesis, every non-empty open set abundant
  /// and Baire, and still no equivalence.
  std::uint64_t operator_failures_open_sets_ok = 0;
  std::uint64_t no_equivalent_topology = 0;

  SweepCounts& operator+=(const SweepCounts& o);
  SweepCounts scaled(std::uint64_t factor) const;
  friend bool operator==(const SweepCounts&, const SweepCounts&) = default;
};

struct SweepReport {
  SweepConfig config;
  SweepCounts counts;
  /// Canonical mode: counts weighted by orbit size, comparable with a
  /// non-canonical sweep.
  std::optional<SweepCounts> weighted;
  std::vector<TheoremFailure> violations;
  /// Wall-clock time; not part of the serialized report unless requested.
  double elapsed_seconds = 0.0;

  bool truncated() const noexcept { return counts.truncated > 0; }
  bool passed() const noexcept { return violations.empty() && !truncated(); }
};

/// splitmix64 finalizer, used to derive independent per-job seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Families of non-empty subsets in exhaustive order: candidate k (k ≥ 1)
/// uses the non-empty subsets whose rank bits are set in k.
std::vector<PointSet> candidate_family(int n, std::uint64_t k);
std::uint64_t candidate_count(int n);

/// Random candidate family: either arbitrary random subsets or the non-empty
/// open sets of a random finite (Alexandrov) topology.
std::vector<PointSet> random_candidate(int n, std::mt19937_64& rng);
/// Draws random candidates until one validates.
CategoryBase random_valid_base(int n, std::mt19937_64& rng);

/// Validated bases in candidate order (canonical representatives only when
/// cfg.canonicalize is set).
std::vector<CategoryBase> enumerate_bases(const SweepConfig& cfg);

/// Every topology on n ≤ 4 points, ascending by sorted open-set list.
std::vector<Topology> enumerate_topologies(int n);

/// Deterministic in seed. Singular singletons map to ∅, the others to random
/// subsets, extended additively; redrawn until D(X) = X, falling back to the
/// cluster operator after a bounded number of attempts.
OperatorTable random_operator(const CategoryBase& base, std::uint64_t seed);
inline constexpr int kRandomOperatorAttempts = 256;

/// Lexicographically least sorted mask list over all point permutations.
std::vector<Mask> canonical_form(int n, std::span<const Mask> family);
/// Number of distinct images of the family under point permutations.
std::uint64_t orbit_size(int n, std::span<const Mask> family);

/// First topology t with M(C) = M(t) and B(C) = Ba(t).
std::optional<Topology> find_equivalent_topology(const CategoryBase& base, const std::vector<Topology>& topologies);

SweepReport sweep(const SweepConfig& cfg);

}  // namespace catbase
