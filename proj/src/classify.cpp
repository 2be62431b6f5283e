#include "catbase/classify.hpp"

#include "parallel.hpp"

namespace catbase {

namespace {

void require_size(const CategoryBase& base, const PointSet& s) {
  if (s.n() != base.n()) {
    throw InputError("set " + s.str() + " has ground size " + std::to_string(s.n()) + ", base has " +
                     std::to_string(base.n()));
  }
}

std::size_t require_region(const CategoryBase& base, const PointSet& c) {
  require_size(base, c);
  auto idx = base.index_of(c);
  if (!idx) throw InputError(c.str() + " is not a region");
  return *idx;
}

bool abundant_everywhere(const CategoryBase& base, Mask singular_points, Mask s, std::size_t region) {
  const auto masks = base.region_masks();
  for (std::size_t d : base.subregion_indices(region)) {
    if (detail::meager_mask(singular_points, s & masks[d])) return false;
  }
  return true;
}

}  // namespace

namespace detail {

bool singular_mask(const CategoryBase& base, Mask s) {
  const auto masks = base.region_masks();
  for (std::size_t a = 0; a < masks.size(); ++a) {
    bool avoided = false;
    for (std::size_t b : base.subregion_indices(a)) {
      if ((masks[b] & s) == 0) {
        avoided = true;
        break;
      }
    }
    if (!avoided) return false;
  }
  return true;
}

Mask singular_points_mask(const CategoryBase& base) {
  Mask out = 0;
  for (int x = 0; x < base.n(); ++x) {
    if (singular_mask(base, Mask{1} << x)) out |= Mask{1} << x;
  }
  return out;
}

bool baire_mask(const CategoryBase& base, Mask singular_points, Mask s) {
  const auto masks = base.region_masks();
  for (std::size_t a = 0; a < masks.size(); ++a) {
    bool decided = false;
    for (std::size_t b : base.subregion_indices(a)) {
      if (meager_mask(singular_points, masks[b] & s) || meager_mask(singular_points, masks[b] & ~s)) {
        decided = true;
        break;
      }
    }
    if (!decided) return false;
  }
  return true;
}

}  // namespace detail

bool is_singular(const CategoryBase& base, const PointSet& s) {
  require_size(base, s);
  return detail::singular_mask(base, s.bits());
}

PointSet singular_points(const CategoryBase& base) { return PointSet(base.n(), detail::singular_points_mask(base)); }

bool is_meager(const CategoryBase& base, const PointSet& s) {
  require_size(base, s);
  return detail::meager_mask(detail::singular_points_mask(base), s.bits());
}

bool is_abundant_everywhere_in(const CategoryBase& base, const PointSet& s, const PointSet& c) {
  require_size(base, s);
  const std::size_t region = require_region(base, c);
  return abundant_everywhere(base, detail::singular_points_mask(base), s.bits(), region);
}

std::optional<PointSet> fundamental_witness(const CategoryBase& base, const PointSet& s) {
  require_size(base, s);
  const Mask sp = detail::singular_points_mask(base);
  if (detail::meager_mask(sp, s.bits())) return std::nullopt;
  for (std::size_t c = 0; c < base.region_count(); ++c) {
    if (abundant_everywhere(base, sp, s.bits(), c)) return base.regions()[c];
  }
  throw TheoremViolation("fundamental-theorem", "abundant set " + s.str() + " is abundant everywhere in no region");
}

bool is_baire(const CategoryBase& base, const PointSet& s) {
  require_size(base, s);
  return detail::baire_mask(base, detail::singular_points_mask(base), s.bits());
}

PointSet comeager_region(const CategoryBase& base, const PointSet& b) {
  require_size(base, b);
  const Mask sp = detail::singular_points_mask(base);
  if (detail::meager_mask(sp, b.bits())) throw InputError(b.str() + " is meager; a comeager region needs an abundant set");
  if (!detail::baire_mask(base, sp, b.bits())) throw InputError(b.str() + " is not a Baire set");
  const auto masks = base.region_masks();
  for (std::size_t c = 0; c < masks.size(); ++c) {
    if (detail::meager_mask(sp, masks[c] & ~b.bits())) return base.regions()[c];
  }
  throw TheoremViolation("comeager-region", "abundant Baire set " + b.str() + " has no region C with C - B meager");
}

SetClass::SetClass(int n, std::vector<std::uint8_t> flags, Mask singular_points)
    : n_(n), flags_(std::move(flags)), singular_points_(singular_points) {
  check_ground_size(n);
  if (flags_.size() != (std::size_t{1} << n)) throw InputError("SetClass needs one entry per subset");
}

SetFamily SetClass::collect(std::uint8_t flag) const {
  std::vector<PointSet> out;
  for (std::size_t s = 0; s < flags_.size(); ++s) {
    if ((flags_[s] & flag) != 0) out.emplace_back(n_, static_cast<Mask>(s));
  }
  return SetFamily(n_, std::move(out));
}

SetClass classify_all(const CategoryBase& base, unsigned workers) {
  const int n = base.n();
  check_ground_size(n);
  const Mask sp = detail::singular_points_mask(base);
  std::vector<std::uint8_t> flags(std::size_t{1} << n, 0);
  detail::parallel_ranges(flags.size(), workers, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const Mask s = static_cast<Mask>(i);
      std::uint8_t f = 0;
      if (detail::meager_mask(sp, s)) {
        f |= SetClass::kMeager | SetClass::kBaire;
        if (detail::singular_mask(base, s)) f |= SetClass::kSingular;
      } else if (detail::baire_mask(base, sp, s)) {
        f |= SetClass::kBaire;
      }
      flags[i] = f;
    }
  });
  return SetClass(n, std::move(flags), sp);
}

}  // namespace catbase
