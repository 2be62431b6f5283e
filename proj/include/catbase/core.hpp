#pragma once

// Ground-set and set-family algebra for finite category bases.
//
// Points of the ground set X are the indices 0..n-1 and every subset is a
// bitmask. All ordering is ascending by mask value so reports and golden
// files stay reproducible.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace catbase {

using Mask = std::uint32_t;

/// Largest ground set the library accepts. Classification touches 2^n sets.
inline constexpr int kMaxPoints = 24;
/// Default ground-set size for randomized sweeps.
inline constexpr int kDefaultSearchPoints = 5;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (size mismatch, unknown region, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A size cap or enumeration budget was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A checked theorem produced no witness where one is guaranteed. Either the
/// base is not a category base or the implementation is wrong; the search
/// harness treats it as a counterexample candidate.
class TheoremViolation : public Error {
 public:
  TheoremViolation(std::string theorem, const std::string& detail)
      : Error(theorem + ": " + detail), theorem_(std::move(theorem)) {}

  const std::string& theorem() const noexcept { return theorem_; }

 private:
  std::string theorem_;
};

constexpr Mask full_mask(int n) noexcept { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Throws CapacityError when n is outside [0, kMaxPoints].
void check_ground_size(int n);

/// A subset of X = {0..n-1}.
class PointSet {
 public:
  constexpr PointSet() = default;
  PointSet(int n, Mask bits);

  static PointSet empty(int n) { return PointSet(n, 0); }
  static PointSet full(int n) { return PointSet(n, full_mask(n)); }
  static PointSet singleton(int n, int x);
  static PointSet of(int n, std::initializer_list<int> elements);
  static PointSet of(int n, std::span<const int> elements);

  constexpr int n() const noexcept { return n_; }
  constexpr Mask bits() const noexcept { return bits_; }

  bool is_empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == full_mask(n_); }
  int size() const noexcept;
  bool contains(int x) const noexcept { return x >= 0 && x < n_ && ((bits_ >> x) & 1U) != 0; }
  bool subset_of(const PointSet& other) const;
  bool intersects(const PointSet& other) const;
  PointSet complement() const noexcept { return {n_, full_mask(n_) & ~bits_, Unchecked{}}; }

  std::vector<int> elements() const;
  /// Canonical text form: strictly ascending JSON array, e.g. "[0,2]".
  std::string str() const;

  friend PointSet operator|(const PointSet& a, const PointSet& b);
  friend PointSet operator&(const PointSet& a, const PointSet& b);
  friend PointSet operator-(const PointSet& a, const PointSet& b);
  friend PointSet operator^(const PointSet& a, const PointSet& b);

  friend constexpr bool operator==(const PointSet&, const PointSet&) = default;
  friend constexpr auto operator<=>(const PointSet& a, const PointSet& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  struct Unchecked {};
  constexpr PointSet(int n, Mask bits, Unchecked) : n_(n), bits_(bits) {}

  int n_ = 0;
  Mask bits_ = 0;
};

/// Ordered, duplicate-free family of subsets of one ground set.
class SetFamily {
 public:
  using const_iterator = std::vector<PointSet>::const_iterator;

  SetFamily() = default;
  explicit SetFamily(int n) : n_(n) { check_ground_size(n); }
  /// Sorts ascending and drops duplicates. Every member must live on n points.
  SetFamily(int n, std::vector<PointSet> members);
  static SetFamily from_masks(int n, std::span<const Mask> masks);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const PointSet& operator[](std::size_t i) const { return members_[i]; }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }
  const std::vector<PointSet>& members() const noexcept { return members_; }

  bool contains(const PointSet& s) const;
  std::optional<std::size_t> index_of(const PointSet& s) const;
  std::vector<Mask> masks() const;
  /// Union of all members.
  PointSet cover() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  int n_ = 0;
  std::vector<PointSet> members_;
};

/// The pair (X, C): ground-set size plus the family of regions.
///
/// Instances come from validate_base() (axioms checked) or from unchecked(),
/// which only enforces that regions are non-empty subsets of X.
class CategoryBase {
 public:
  static CategoryBase unchecked(int n, SetFamily regions);

  int n() const noexcept { return n_; }
  PointSet ground() const { return PointSet::full(n_); }
  const SetFamily& regions() const noexcept { return regions_; }
  std::size_t region_count() const noexcept { return masks_.size(); }
  std::span<const Mask> region_masks() const noexcept { return masks_; }
  /// Indices (ascending) of the regions contained in region i, including i.
  std::span<const std::size_t> subregion_indices(std::size_t i) const { return subregions_[i]; }
  std::optional<std::size_t> index_of(const PointSet& region) const { return regions_.index_of(region); }
  bool validated() const noexcept { return validated_; }
  /// |C| = 1: the disjoint-family axiom is vacuous.
  bool degenerate() const noexcept { return masks_.size() == 1; }

  bool contains_region_mask(Mask s) const noexcept {
    for (Mask r : masks_) {
      if ((r & ~s) == 0) return true;
    }
    return false;
  }

 private:
  friend struct BaseFactory;
  CategoryBase(int n, SetFamily regions, bool validated);

  int n_ = 0;
  SetFamily regions_;
  std::vector<Mask> masks_;
  std::vector<std::vector<std::size_t>> subregions_;
  bool validated_ = false;
};

/// true iff some region R of the base satisfies R ⊆ s.
bool contains_region(const CategoryBase& base, const PointSet& s);

/// All regions contained in region a, ascending; a itself is always included.
SetFamily subregions(const CategoryBase& base, const PointSet& a);

/// Ascending enumeration of all 2^n subsets of X.
class PowerSet {
 public:
  explicit PowerSet(int n);

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = PointSet;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = PointSet;

    iterator() = default;
    iterator(int n, std::uint64_t pos) : n_(n), pos_(pos) {}
    PointSet operator*() const { return PointSet(n_, static_cast<Mask>(pos_)); }
    iterator& operator++() {
      ++pos_;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++pos_;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.pos_ == b.pos_; }

   private:
    int n_ = 0;
    std::uint64_t pos_ = 0;
  };

  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, std::uint64_t{1} << n_}; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << n_; }

 private:
  int n_;
};

inline PowerSet power_set_iter(int n) { return PowerSet(n); }

}  // namespace catbase
