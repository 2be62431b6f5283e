#pragma once

// Executable checks for the equivalence of a category base with the topology
// induced by a D-operator, and for the minimal-region condition.

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "catbase/classify.hpp"
#include "catbase/core.hpp"
#include "catbase/doperator.hpp"
#include "catbase/topology.hpp"

namespace catbase {

inline constexpr std::size_t kDefaultWitnessCap = 8;

/// Every region contains a non-empty open set of t.
bool hypothesis_holds(const CategoryBase& base, const Topology& t);

/// First non-empty open set that is meager or not Baire in the base;
/// nullopt when every non-empty open set is an abundant Baire set.
std::optional<PointSet> open_sets_check(const CategoryBase& base, const Topology& t);
std::optional<PointSet> open_sets_check(const CategoryBase& base, const SetClass& classes, const Topology& t);

enum class MismatchDirection { MeagerBaseOnly, MeagerTopologyOnly, BaireBaseOnly, BaireTopologyOnly };

std::string_view to_string(MismatchDirection direction);

struct Mismatch {
  MismatchDirection direction;
  PointSet set;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct EquivalenceReport {
  bool meager_equal = false;
  bool baire_equal = false;
  bool hypothesis_holds = false;
  bool minimal_regions_ok = false;
  bool open_sets_abundant_baire = false;
  std::optional<PointSet> open_set_witness;
  /// The base has a single region (disjoint-family axiom vacuous).
  bool degenerate_base = false;
  /// Up to the witness cap per direction, ascending.
  std::vector<Mismatch> mismatches;
  /// Full mismatch count per direction, indexed by MismatchDirection.
  std::array<std::size_t, 4> mismatch_counts{};
  std::vector<PointSet> topology;

  bool equivalent() const noexcept { return meager_equal && baire_equal; }
  bool all_checks_pass() const noexcept {
    return equivalent() && hypothesis_holds && minimal_regions_ok && open_sets_abundant_baire;
  }
};

/// Builds τ(D) and compares M(C), B(C) with M(τ), Ba(τ) set by set. Both
/// inclusions are always evaluated. witness_cap = 0 keeps every mismatch.
EquivalenceReport check_equivalence(const CategoryBase& base, const OperatorTable& d,
                                    std::size_t witness_cap = kDefaultWitnessCap);
EquivalenceReport check_equivalence(const CategoryBase& base, const SetClass& classes, const OperatorTable& d,
                                    std::size_t witness_cap = kDefaultWitnessCap);

/// Regions with no proper subregion.
SetFamily minimal_regions(const CategoryBase& base);
/// Every region contains a minimal region.
bool every_region_has_minimal(const CategoryBase& base);

inline constexpr int kMaxMinimalRegionsForUnionCheck = 20;

/// First union of minimal regions (by union bitmask over the minimal-region
/// list) that is not open in the basic topology; nullopt when all are open.
std::optional<PointSet> minimal_union_open_check(const CategoryBase& base);
std::optional<PointSet> minimal_union_open_check(const CategoryBase& base, const Topology& basic);

}  // namespace catbase
