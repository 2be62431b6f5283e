#pragma once

// Finite topologies: interior/closure, nowhere-dense and first-category sets,
// and the Baire property.

#include <optional>
#include <string_view>
#include <vector>

#include "catbase/core.hpp"

namespace catbase {

class Topology {
 public:
  int n() const noexcept { return n_; }
  const SetFamily& opens() const noexcept { return opens_; }
  bool is_open(Mask s) const { return member_[s] != 0; }
  bool is_open(const PointSet& s) const;

  friend bool operator==(const Topology& a, const Topology& b) { return a.opens_ == b.opens_; }

 private:
  friend struct TopologyFactory;
  Topology(int n, SetFamily opens);

  int n_;
  SetFamily opens_;
  std::vector<std::uint8_t> member_;
};

struct TopologyViolation {
  enum class Kind { MissingEmpty, MissingFull, UnionNotOpen, IntersectionNotOpen };
  Kind kind;
  std::optional<PointSet> first;
  std::optional<PointSet> second;
};

std::string_view to_string(TopologyViolation::Kind kind);

struct TopologyResult {
  std::optional<Topology> topology;
  std::optional<TopologyViolation> violation;

  bool valid() const noexcept { return topology.has_value(); }
};

/// Checks ∅, X ∈ opens and closure under pairwise union and intersection.
/// The first failing pair (ascending) is reported.
TopologyResult validate_topology(int n, const SetFamily& opens);

/// Largest open subset of s.
PointSet interior(const Topology& t, const PointSet& s);
PointSet closure(const Topology& t, const PointSet& s);

bool is_nowhere_dense(const Topology& t, const PointSet& s);
/// Every singleton of s is nowhere dense (finite unions of nowhere-dense sets
/// are nowhere dense).
bool is_first_category(const Topology& t, const PointSet& s);
/// Points whose singletons are nowhere dense.
PointSet nowhere_dense_points(const Topology& t);

/// s = (h − q) ∪ r with h open and q, r of first category.
struct BaireDecomposition {
  PointSet h;
  PointSet q;
  PointSet r;

  /// h = ∅ happens exactly for first-category sets.
  bool degenerate() const noexcept { return h.is_empty(); }
  PointSet recompose() const { return (h - q) | r; }

  friend bool operator==(const BaireDecomposition&, const BaireDecomposition&) = default;
};

/// Looks for an open U with s Δ U of first category, preferring the smallest
/// symmetric difference and then the smallest mask. Emits h = U, q = U − s,
/// r = s − U.
std::optional<BaireDecomposition> has_baire_property(const Topology& t, const PointSet& s);

SetFamily meager_class(const Topology& t);
SetFamily baire_class(const Topology& t);

}  // namespace catbase
