#pragma once

// Singular, meager and Baire sets of a category base, with witness-producing
// checks for the fundamental theorem and its corollary.
//
// On a finite ground set a set is meager iff each of its singletons is
// singular. Singularity is hereditary, so any cover of S by singular sets
// refines to the singleton cover, and the singleton cover is itself a finite
// union of singular sets.

#include <cstdint>
#include <optional>
#include <vector>

#include "catbase/core.hpp"

namespace catbase {

bool is_singular(const CategoryBase& base, const PointSet& s);

/// Points x whose singleton {x} is singular.
PointSet singular_points(const CategoryBase& base);

bool is_meager(const CategoryBase& base, const PointSet& s);
inline bool is_abundant(const CategoryBase& base, const PointSet& s) { return !is_meager(base, s); }

/// s ∩ D is abundant for every subregion D of the region c.
bool is_abundant_everywhere_in(const CategoryBase& base, const PointSet& s, const PointSet& c);

/// First region (ascending) in which s is abundant everywhere, or nullopt when
/// s is meager. An abundant s without such a region raises TheoremViolation.
std::optional<PointSet> fundamental_witness(const CategoryBase& base, const PointSet& s);

bool is_baire(const CategoryBase& base, const PointSet& s);

/// First region c with c − b meager. b must be abundant and Baire
/// (InputError otherwise); a missing witness raises TheoremViolation.
PointSet comeager_region(const CategoryBase& base, const PointSet& b);

/// Verdicts for all 2^n subsets, indexed by mask.
class SetClass {
 public:
  enum Flag : std::uint8_t { kSingular = 1, kMeager = 2, kBaire = 4 };

  SetClass(int n, std::vector<std::uint8_t> flags, Mask singular_points);

  int n() const noexcept { return n_; }
  Mask singular_points() const noexcept { return singular_points_; }
  bool singular(Mask s) const { return (flags_[s] & kSingular) != 0; }
  bool meager(Mask s) const { return (flags_[s] & kMeager) != 0; }
  bool baire(Mask s) const { return (flags_[s] & kBaire) != 0; }
  bool singular(const PointSet& s) const { return singular(s.bits()); }
  bool meager(const PointSet& s) const { return meager(s.bits()); }
  bool baire(const PointSet& s) const { return baire(s.bits()); }

  SetFamily singular_class() const { return collect(kSingular); }
  SetFamily meager_class() const { return collect(kMeager); }
  SetFamily baire_class() const { return collect(kBaire); }

  friend bool operator==(const SetClass&, const SetClass&) = default;

 private:
  SetFamily collect(std::uint8_t flag) const;

  int n_;
  std::vector<std::uint8_t> flags_;
  Mask singular_points_;
};

/// Classifies every subset. The mask space is split into contiguous ranges
/// across `workers` threads; the result does not depend on the worker count.
SetClass classify_all(const CategoryBase& base, unsigned workers = 1);

namespace detail {

// Mask-level kernels shared with the operator and equivalence modules.
bool singular_mask(const CategoryBase& base, Mask s);
Mask singular_points_mask(const CategoryBase& base);
inline bool meager_mask(Mask singular_points, Mask s) { return (s & ~singular_points) == 0; }
bool baire_mask(const CategoryBase& base, Mask singular_points, Mask s);

}  // namespace detail

}  // namespace catbase
