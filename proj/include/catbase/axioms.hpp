#pragma once

// Validation of the category-base axioms on a finite ground set.
//
// Axiom 1: the regions cover X.
// Axiom 2: for every region A and every non-empty family D of pairwise
// disjoint regions with |D| < |C|,
//   (i)  if A ∩ ∪D contains a region, some member of D meets A in a region;
//   (ii) otherwise some subregion of A is disjoint from every member of D.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "catbase/core.hpp"

namespace catbase {

inline constexpr std::uint64_t kDefaultFamilyBudget = 10'000'000;

enum class ViolationKind { Axiom1, Axiom2i, Axiom2ii, EmptyRegion, DuplicateRegion };

std::string_view to_string(ViolationKind kind);

struct AxiomViolation {
  ViolationKind kind;
  std::optional<PointSet> witness_region;
  std::optional<SetFamily> witness_family;
  std::optional<int> witness_point;

  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

struct ValidateOptions {
  /// Maximum number of disjoint subfamilies examined before CapacityError.
  std::uint64_t budget = kDefaultFamilyBudget;
  /// false: stop at the first violation (verdict only).
  bool collect_all = true;
};

struct ValidationResult {
  std::optional<CategoryBase> base;
  std::vector<AxiomViolation> violations;

  bool valid() const noexcept { return base.has_value(); }
};

/// Checks every axiom and returns either a validated base or the violations,
/// ordered by witness region then by enumeration order of the family D.
/// Throws CapacityError when the disjoint-family budget runs out.
ValidationResult validate_base(int n, std::span<const PointSet> regions, const ValidateOptions& options = {});
ValidationResult validate_base(int n, const SetFamily& regions, const ValidateOptions& options = {});

/// Visits every non-empty family of pairwise-disjoint members of `regions`
/// with at most max_size members. A family is passed as ascending indices into
/// `regions`. Families are produced by ordered extension: depth-first, only
/// adding members with a higher index that are disjoint from all chosen ones.
/// Returning false from the visitor stops the enumeration.
void for_each_disjoint_subfamily(std::span<const Mask> regions, std::size_t max_size,
                                 const std::function<bool(std::span<const std::size_t>)>& visit);

std::vector<SetFamily> disjoint_subfamilies(const SetFamily& regions, std::size_t max_size);

}  // namespace catbase
