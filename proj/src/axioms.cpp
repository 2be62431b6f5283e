#include "catbase/axioms.hpp"

#include <algorithm>
#include <set>

#include "base_factory.hpp"

namespace catbase {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Axiom1:
      return "axiom1";
    case ViolationKind::Axiom2i:
      return "axiom2i";
    case ViolationKind::Axiom2ii:
      return "axiom2ii";
    case ViolationKind::EmptyRegion:
      return "empty_region";
    case ViolationKind::DuplicateRegion:
      return "duplicate_region";
  }
  return "unknown";
}

namespace {

void extend(std::span<const Mask> regions, std::size_t max_size, std::vector<std::size_t>& chosen, Mask used,
            std::size_t next, const std::function<bool(std::span<const std::size_t>)>& visit, bool& stop) {
  for (std::size_t i = next; i < regions.size() && !stop; ++i) {
    if ((regions[i] & used) != 0) continue;
    chosen.push_back(i);
    if (!visit(chosen)) {
      stop = true;
    } else if (chosen.size() < max_size) {
      extend(regions, max_size, chosen, used | regions[i], i + 1, visit, stop);
    }
    chosen.pop_back();
  }
}

bool contains_region_in(std::span<const Mask> regions, Mask s) {
  return std::any_of(regions.begin(), regions.end(), [s](Mask r) { return (r & ~s) == 0; });
}

}  // namespace

void for_each_disjoint_subfamily(std::span<const Mask> regions, std::size_t max_size,
                                 const std::function<bool(std::span<const std::size_t>)>& visit) {
  if (max_size == 0) return;
  std::vector<std::size_t> chosen;
  chosen.reserve(std::min(max_size, regions.size()));
  bool stop = false;
  extend(regions, max_size, chosen, 0, 0, visit, stop);
}

std::vector<SetFamily> disjoint_subfamilies(const SetFamily& regions, std::size_t max_size) {
  std::vector<SetFamily> out;
  auto masks = regions.masks();
  for_each_disjoint_subfamily(masks, max_size, [&](std::span<const std::size_t> idx) {
    std::vector<PointSet> members;
    for (std::size_t i : idx) members.push_back(regions[i]);
    out.emplace_back(regions.n(), std::move(members));
    return true;
  });
  return out;
}

ValidationResult validate_base(int n, const SetFamily& regions, const ValidateOptions& options) {
  return validate_base(n, std::span<const PointSet>(regions.members()), options);
}

ValidationResult validate_base(int n, std::span<const PointSet> regions, const ValidateOptions& options) {
  check_ground_size(n);
  if (n == 0) throw InputError("the ground set must be non-empty (n >= 1)");

  ValidationResult result;
  auto& violations = result.violations;
  auto done = [&] { return !options.collect_all && !violations.empty(); };

  std::set<Mask> seen;
  std::vector<PointSet> cleaned;
  for (const auto& r : regions) {
    if (r.n() != n) {
      throw InputError("region " + r.str() + " lives on " + std::to_string(r.n()) + " points, expected " +
                       std::to_string(n));
    }
    if (r.is_empty()) {
      violations.push_back({ViolationKind::EmptyRegion, r, std::nullopt, std::nullopt});
      continue;
    }
    if (!seen.insert(r.bits()).second) {
      violations.push_back({ViolationKind::DuplicateRegion, r, std::nullopt, std::nullopt});
      continue;
    }
    cleaned.push_back(r);
  }
  if (done()) return result;

  SetFamily family(n, std::move(cleaned));
  const auto masks = family.masks();

  Mask covered = 0;
  for (Mask r : masks) covered |= r;
  for (int x = 0; x < n && !done(); ++x) {
    if (((covered >> x) & 1U) == 0) violations.push_back({ViolationKind::Axiom1, std::nullopt, std::nullopt, x});
  }
  if (done()) return result;

  // Axiom 2 ranges over D with |D| < |C|.
  if (masks.size() >= 2) {
    struct Pending {
      std::size_t region;
      std::uint64_t order;
      AxiomViolation violation;
    };
    std::vector<Pending> pending;
    std::vector<std::vector<std::size_t>> subregions(masks.size());
    for (std::size_t i = 0; i < masks.size(); ++i) {
      for (std::size_t j = 0; j < masks.size(); ++j) {
        if ((masks[j] & ~masks[i]) == 0) subregions[i].push_back(j);
      }
    }

    std::uint64_t visited = 0;
    auto make_family = [&](std::span<const std::size_t> idx) {
      std::vector<PointSet> members;
      for (std::size_t i : idx) members.push_back(family[i]);
      return SetFamily(n, std::move(members));
    };

    for_each_disjoint_subfamily(masks, masks.size() - 1, [&](std::span<const std::size_t> d) {
      if (++visited > options.budget) {
        throw CapacityError("disjoint-subfamily budget of " + std::to_string(options.budget) + " exceeded");
      }
      Mask u = 0;
      for (std::size_t i : d) u |= masks[i];
      for (std::size_t a = 0; a < masks.size(); ++a) {
        const Mask inter = masks[a] & u;
        std::optional<ViolationKind> kind;
        if (contains_region_in(masks, inter)) {
          bool ok = std::any_of(d.begin(), d.end(),
                                [&](std::size_t j) { return contains_region_in(masks, masks[a] & masks[j]); });
          if (!ok) kind = ViolationKind::Axiom2i;
        } else {
          bool ok = std::any_of(subregions[a].begin(), subregions[a].end(),
                                [&](std::size_t b) { return (masks[b] & u) == 0; });
          if (!ok) kind = ViolationKind::Axiom2ii;
        }
        if (kind) {
          pending.push_back({a, visited, {*kind, family[a], make_family(d), std::nullopt}});
          if (!options.collect_all) {
            return false;
          }
        }
      }
      return true;
    });

    std::stable_sort(pending.begin(), pending.end(), [](const Pending& x, const Pending& y) {
      return x.region != y.region ? x.region < y.region : x.order < y.order;
    });
    for (auto& p : pending) violations.push_back(std::move(p.violation));
  }

  if (violations.empty()) result.base = BaseFactory::validated(n, std::move(family));
  return result;
}

}  // namespace catbase
