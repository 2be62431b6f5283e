#include "catbase/doperator.hpp"

#include <bit>

#include "catbase/classify.hpp"

namespace catbase {

namespace {

void require_size(const CategoryBase& base, int n) {
  if (n != base.n()) {
    throw InputError("ground size " + std::to_string(n) + " does not match base size " + std::to_string(base.n()));
  }
}

Mask cluster_mask(const CategoryBase& base, Mask singular_points, Mask s) {
  const auto masks = base.region_masks();
  Mask out = 0;
  for (int x = 0; x < base.n(); ++x) {
    const Mask bit = Mask{1} << x;
    for (std::size_t a = 0; a < masks.size(); ++a) {
      if ((masks[a] & bit) == 0) continue;
      bool abundant_in_all = true;
      for (std::size_t b : base.subregion_indices(a)) {
        if ((masks[b] & bit) != 0 && detail::meager_mask(singular_points, s & masks[b])) {
          abundant_in_all = false;
          break;
        }
      }
      if (abundant_in_all) {
        out |= bit;
        break;
      }
    }
  }
  return out;
}

}  // namespace

OperatorTable::OperatorTable(int n, std::vector<Mask> table) : n_(n), table_(std::move(table)) {
  check_ground_size(n);
  if (table_.size() != (std::size_t{1} << n)) {
    throw InputError("operator table needs " + std::to_string(std::size_t{1} << n) + " entries, got " +
                     std::to_string(table_.size()));
  }
  for (Mask m : table_) {
    if ((m & ~full_mask(n)) != 0) throw InputError("operator image outside the ground set");
  }
}

OperatorTable OperatorTable::from_singletons(int n, std::span<const Mask> images) {
  check_ground_size(n);
  if (images.size() != static_cast<std::size_t>(n)) throw InputError("need one singleton image per point");
  std::vector<Mask> table(std::size_t{1} << n, 0);
  for (std::size_t s = 1; s < table.size(); ++s) {
    const int top = std::bit_width(static_cast<Mask>(s)) - 1;
    table[s] = table[s & ~(std::size_t{1} << top)] | images[static_cast<std::size_t>(top)];
  }
  return OperatorTable(n, std::move(table));
}

PointSet OperatorTable::operator()(const PointSet& s) const {
  if (s.n() != n_) throw InputError("operator applied to a set of the wrong ground size");
  return PointSet(n_, table_[s.bits()]);
}

std::string_view to_string(OperatorViolation::Kind kind) {
  switch (kind) {
    case OperatorViolation::Kind::FullSetNotFixed:
      return "full_set_not_fixed";
    case OperatorViolation::Kind::SingularNotEmpty:
      return "singular_not_empty";
    case OperatorViolation::Kind::NotAdditive:
      return "not_additive";
  }
  return "unknown";
}

PointSet cluster_points(const CategoryBase& base, const PointSet& s) {
  require_size(base, s.n());
  return PointSet(base.n(), cluster_mask(base, detail::singular_points_mask(base), s.bits()));
}

OperatorTable cluster_operator(const CategoryBase& base) {
  const Mask sp = detail::singular_points_mask(base);
  std::vector<Mask> table(std::size_t{1} << base.n());
  for (std::size_t s = 0; s < table.size(); ++s) table[s] = cluster_mask(base, sp, static_cast<Mask>(s));
  OperatorTable d(base.n(), std::move(table));
  if (auto violations = validate_operator(base, d); !violations.empty()) {
    const auto& v = violations.front();
    throw TheoremViolation("cluster-operator", "cluster operator fails " + std::string(to_string(v.kind)) + " at " +
                                                   v.s.str() + (v.t ? " with " + v.t->str() : std::string()));
  }
  return d;
}

std::vector<OperatorViolation> validate_operator(const CategoryBase& base, const OperatorTable& d, bool paranoid) {
  require_size(base, d.n());
  const int n = d.n();
  const Mask full = full_mask(n);
  const std::size_t count = std::size_t{1} << n;
  std::vector<OperatorViolation> out;
  using Kind = OperatorViolation::Kind;

  if (d.apply(full) != full) out.push_back({Kind::FullSetNotFixed, PointSet::full(n), std::nullopt});

  for (std::size_t s = 0; s < count; ++s) {
    const Mask m = static_cast<Mask>(s);
    if (d.apply(m) != 0 && detail::singular_mask(base, m)) {
      out.push_back({Kind::SingularNotEmpty, PointSet(n, m), std::nullopt});
    }
  }

  if (paranoid) {
    for (std::size_t s = 0; s < count; ++s) {
      for (std::size_t t = s; t < count; ++t) {
        const Mask a = static_cast<Mask>(s);
        const Mask b = static_cast<Mask>(t);
        if (d.apply(a | b) != (d.apply(a) | d.apply(b))) {
          out.push_back({Kind::NotAdditive, PointSet(n, a), PointSet(n, b)});
        }
      }
    }
  } else {
    for (std::size_t s = 1; s < count; ++s) {
      const Mask m = static_cast<Mask>(s);
      const Mask top = Mask{1} << (std::bit_width(m) - 1);
      const Mask rest = m & ~top;
      if (d.apply(m) != (d.apply(rest) | d.apply(top))) {
        out.push_back({Kind::NotAdditive, PointSet(n, rest), PointSet(n, top)});
      }
    }
  }
  return out;
}

Topology d_topology(const CategoryBase& base, const OperatorTable& d) {
  if (auto violations = validate_operator(base, d); !violations.empty()) {
    throw InputError("operator is not valid for the base: " + std::string(to_string(violations.front().kind)) +
                     " at " + violations.front().s.str());
  }
  const int n = d.n();
  const Mask full = full_mask(n);
  std::vector<PointSet> opens;
  for (std::size_t s = 0; s < (std::size_t{1} << n); ++s) {
    const Mask closed = full & ~static_cast<Mask>(s);
    if ((d.apply(closed) & ~closed) == 0) opens.emplace_back(n, static_cast<Mask>(s));
  }
  auto result = validate_topology(n, SetFamily(n, std::move(opens)));
  if (!result.valid()) {
    const auto& v = *result.violation;
    throw TheoremViolation("d-topology", "tau(D) is not a topology: " + std::string(to_string(v.kind)) +
                                             (v.first ? " at " + v.first->str() : std::string()) +
                                             (v.second ? " with " + v.second->str() : std::string()));
  }
  return std::move(*result.topology);
}

Topology basic_topology(const CategoryBase& base) { return d_topology(base, cluster_operator(base)); }

}  // namespace catbase
