#pragma once

// D-operators on a category base: total maps on subsets with D(X) = X,
// D(S) = ∅ for singular S, and D(S ∪ T) = D(S) ∪ D(T). The cluster-point
// operator is the one intensional instance; everything else is a table.

#include <optional>
#include <string_view>
#include <vector>

#include "catbase/core.hpp"
#include "catbase/topology.hpp"

namespace catbase {

class OperatorTable {
 public:
  /// table[s] is D(s) for every mask s < 2^n.
  OperatorTable(int n, std::vector<Mask> table);
  /// Extends D({x}) = images[x] additively, D(∅) = ∅.
  static OperatorTable from_singletons(int n, std::span<const Mask> images);

  int n() const noexcept { return n_; }
  Mask apply(Mask s) const { return table_[s]; }
  PointSet operator()(const PointSet& s) const;
  const std::vector<Mask>& table() const noexcept { return table_; }

  friend bool operator==(const OperatorTable&, const OperatorTable&) = default;

 private:
  int n_;
  std::vector<Mask> table_;
};

struct OperatorViolation {
  enum class Kind { FullSetNotFixed, SingularNotEmpty, NotAdditive };
  Kind kind;
  PointSet s;
  /// Second member of the failing pair for NotAdditive.
  std::optional<PointSet> t;
};

std::string_view to_string(OperatorViolation::Kind kind);

/// Cluster points of s: x such that some region A ∋ x has s ∩ B abundant for
/// every subregion B of A containing x.
PointSet cluster_points(const CategoryBase& base, const PointSet& s);

/// Pointwise cluster_points for every subset, then checked against the
/// operator conditions; a failing table raises TheoremViolation.
OperatorTable cluster_operator(const CategoryBase& base);

/// Empty result means valid. By default additivity is checked on the pairs
/// (s − {max s}, {max s}), which is equivalent to checking all pairs; with
/// paranoid = true every pair s ≤ t is checked.
std::vector<OperatorViolation> validate_operator(const CategoryBase& base, const OperatorTable& d,
                                                 bool paranoid = false);

/// τ(D) = { s : D(X − s) ⊆ X − s }. d must be valid for the base.
Topology d_topology(const CategoryBase& base, const OperatorTable& d);

Topology basic_topology(const CategoryBase& base);

}  // namespace catbase
