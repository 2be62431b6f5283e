#include "catbase/core.hpp"

#include <algorithm>
#include <bit>

#include "base_factory.hpp"

namespace catbase {

void check_ground_size(int n) {
  if (n < 0 || n > kMaxPoints) {
    throw CapacityError("ground-set size " + std::to_string(n) + " outside [0, " + std::to_string(kMaxPoints) + "]");
  }
}

namespace {

void require_same_size(const PointSet& a, const PointSet& b) {
  if (a.n() != b.n()) {
    throw InputError("ground-set size mismatch: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
  }
}

}  // namespace

PointSet::PointSet(int n, Mask bits) : n_(n), bits_(bits) {
  check_ground_size(n);
  if ((bits & ~full_mask(n)) != 0) {
    throw InputError("subset mask " + std::to_string(bits) + " has elements outside a ground set of size " +
                     std::to_string(n));
  }
}

PointSet PointSet::singleton(int n, int x) {
  check_ground_size(n);
  if (x < 0 || x >= n) {
    throw InputError("element " + std::to_string(x) + " out of range for n=" + std::to_string(n));
  }
  return {n, Mask{1} << x, Unchecked{}};
}

PointSet PointSet::of(int n, std::initializer_list<int> elements) {
  return of(n, std::span<const int>(elements.begin(), elements.size()));
}

PointSet PointSet::of(int n, std::span<const int> elements) {
  check_ground_size(n);
  Mask bits = 0;
  for (int x : elements) {
    if (x < 0 || x >= n) {
      throw InputError("element " + std::to_string(x) + " out of range for n=" + std::to_string(n));
    }
    bits |= Mask{1} << x;
  }
  return {n, bits, Unchecked{}};
}

int PointSet::size() const noexcept { return std::popcount(bits_); }

bool PointSet::subset_of(const PointSet& other) const {
  require_same_size(*this, other);
  return (bits_ & ~other.bits_) == 0;
}

bool PointSet::intersects(const PointSet& other) const {
  require_same_size(*this, other);
  return (bits_ & other.bits_) != 0;
}

std::vector<int> PointSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string PointSet::str() const {
  std::string out = "[";
  bool first = true;
  for (int x : elements()) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  out += ']';
  return out;
}

PointSet operator|(const PointSet& a, const PointSet& b) {
  require_same_size(a, b);
  return {a.n_, a.bits_ | b.bits_, PointSet::Unchecked{}};
}

PointSet operator&(const PointSet& a, const PointSet& b) {
  require_same_size(a, b);
  return {a.n_, a.bits_ & b.bits_, PointSet::Unchecked{}};
}

PointSet operator-(const PointSet& a, const PointSet& b) {
  require_same_size(a, b);
  return {a.n_, a.bits_ & ~b.bits_, PointSet::Unchecked{}};
}

PointSet operator^(const PointSet& a, const PointSet& b) {
  require_same_size(a, b);
  return {a.n_, a.bits_ ^ b.bits_, PointSet::Unchecked{}};
}

SetFamily::SetFamily(int n, std::vector<PointSet> members) : n_(n), members_(std::move(members)) {
  check_ground_size(n);
  for (const auto& m : members_) {
    if (m.n() != n) {
      throw InputError("family member " + m.str() + " lives on " + std::to_string(m.n()) + " points, expected " +
                       std::to_string(n));
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SetFamily SetFamily::from_masks(int n, std::span<const Mask> masks) {
  std::vector<PointSet> members;
  members.reserve(masks.size());
  for (Mask m : masks) members.emplace_back(n, m);
  return SetFamily(n, std::move(members));
}

bool SetFamily::contains(const PointSet& s) const { return std::binary_search(members_.begin(), members_.end(), s); }

std::optional<std::size_t> SetFamily::index_of(const PointSet& s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it == members_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

std::vector<Mask> SetFamily::masks() const {
  std::vector<Mask> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(m.bits());
  return out;
}

PointSet SetFamily::cover() const {
  Mask bits = 0;
  for (const auto& m : members_) bits |= m.bits();
  return PointSet(n_, bits);
}

CategoryBase::CategoryBase(int n, SetFamily regions, bool validated)
    : n_(n), regions_(std::move(regions)), validated_(validated) {
  check_ground_size(n);
  if (regions_.n() != n) throw InputError("region family ground size does not match n");
  masks_ = regions_.masks();
  for (Mask r : masks_) {
    if (r == 0) throw InputError("regions must be non-empty");
  }
  subregions_.resize(masks_.size());
  for (std::size_t i = 0; i < masks_.size(); ++i) {
    for (std::size_t j = 0; j < masks_.size(); ++j) {
      if ((masks_[j] & ~masks_[i]) == 0) subregions_[i].push_back(j);
    }
  }
}

CategoryBase CategoryBase::unchecked(int n, SetFamily regions) { return CategoryBase(n, std::move(regions), false); }

bool contains_region(const CategoryBase& base, const PointSet& s) {
  if (s.n() != base.n()) {
    throw InputError("set " + s.str() + " has ground size " + std::to_string(s.n()) + ", base has " +
                     std::to_string(base.n()));
  }
  return base.contains_region_mask(s.bits());
}

SetFamily subregions(const CategoryBase& base, const PointSet& a) {
  auto idx = base.index_of(a);
  if (!idx) throw InputError(a.str() + " is not a region");
  std::vector<PointSet> out;
  for (std::size_t j : base.subregion_indices(*idx)) out.push_back(base.regions()[j]);
  return SetFamily(base.n(), std::move(out));
}

PowerSet::PowerSet(int n) : n_(n) { check_ground_size(n); }

}  // namespace catbase
