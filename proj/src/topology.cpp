#include "catbase/topology.hpp"

#include <bit>

namespace catbase {

struct TopologyFactory {
  static Topology make(int n, SetFamily opens) { return Topology(n, std::move(opens)); }
};

namespace {

void require_size(const Topology& t, const PointSet& s) {
  if (s.n() != t.n()) {
    throw InputError("set " + s.str() + " has ground size " + std::to_string(s.n()) + ", topology has " +
                     std::to_string(t.n()));
  }
}

Mask interior_mask(const Topology& t, Mask s) {
  Mask out = 0;
  for (const auto& u : t.opens()) {
    if ((u.bits() & ~s) == 0) out |= u.bits();
  }
  return out;
}

Mask closure_mask(const Topology& t, Mask s) {
  const Mask full = full_mask(t.n());
  return full & ~interior_mask(t, full & ~s);
}

Mask nowhere_dense_mask(const Topology& t) {
  Mask out = 0;
  for (int x = 0; x < t.n(); ++x) {
    const Mask single = Mask{1} << x;
    if (interior_mask(t, closure_mask(t, single)) == 0) out |= single;
  }
  return out;
}

}  // namespace

Topology::Topology(int n, SetFamily opens) : n_(n), opens_(std::move(opens)), member_(std::size_t{1} << n, 0) {
  for (const auto& u : opens_) member_[u.bits()] = 1;
}

bool Topology::is_open(const PointSet& s) const {
  require_size(*this, s);
  return is_open(s.bits());
}

std::string_view to_string(TopologyViolation::Kind kind) {
  switch (kind) {
    case TopologyViolation::Kind::MissingEmpty:
      return "missing_empty";
    case TopologyViolation::Kind::MissingFull:
      return "missing_full";
    case TopologyViolation::Kind::UnionNotOpen:
      return "union_not_open";
    case TopologyViolation::Kind::IntersectionNotOpen:
      return "intersection_not_open";
  }
  return "unknown";
}

TopologyResult validate_topology(int n, const SetFamily& opens) {
  check_ground_size(n);
  if (opens.n() != n && !opens.empty()) throw InputError("open-set family ground size does not match n");
  TopologyResult result;
  std::vector<std::uint8_t> member(std::size_t{1} << n, 0);
  for (const auto& u : opens) member[u.bits()] = 1;

  using Kind = TopologyViolation::Kind;
  if (member[0] == 0) {
    result.violation = TopologyViolation{Kind::MissingEmpty, PointSet::empty(n), std::nullopt};
    return result;
  }
  if (member[full_mask(n)] == 0) {
    result.violation = TopologyViolation{Kind::MissingFull, PointSet::full(n), std::nullopt};
    return result;
  }
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      const Mask a = opens[i].bits();
      const Mask b = opens[j].bits();
      if (member[a | b] == 0) {
        result.violation = TopologyViolation{Kind::UnionNotOpen, opens[i], opens[j]};
        return result;
      }
      if (member[a & b] == 0) {
        result.violation = TopologyViolation{Kind::IntersectionNotOpen, opens[i], opens[j]};
        return result;
      }
    }
  }
  result.topology = TopologyFactory::make(n, opens);
  return result;
}

PointSet interior(const Topology& t, const PointSet& s) {
  require_size(t, s);
  return PointSet(t.n(), interior_mask(t, s.bits()));
}

PointSet closure(const Topology& t, const PointSet& s) {
  require_size(t, s);
  return PointSet(t.n(), closure_mask(t, s.bits()));
}

bool is_nowhere_dense(const Topology& t, const PointSet& s) {
  require_size(t, s);
  return interior_mask(t, closure_mask(t, s.bits())) == 0;
}

PointSet nowhere_dense_points(const Topology& t) { return PointSet(t.n(), nowhere_dense_mask(t)); }

bool is_first_category(const Topology& t, const PointSet& s) {
  require_size(t, s);
  return (s.bits() & ~nowhere_dense_mask(t)) == 0;
}

std::optional<BaireDecomposition> has_baire_property(const Topology& t, const PointSet& s) {
  require_size(t, s);
  const Mask nd = nowhere_dense_mask(t);
  std::optional<Mask> best;
  for (const auto& u : t.opens()) {
    const Mask diff = s.bits() ^ u.bits();
    if ((diff & ~nd) != 0) continue;
    if (!best || std::popcount(diff) < std::popcount(s.bits() ^ *best)) best = u.bits();
  }
  if (!best) return std::nullopt;
  const PointSet h(t.n(), *best);
  return BaireDecomposition{h, h - s, s - h};
}

SetFamily meager_class(const Topology& t) {
  const Mask nd = nowhere_dense_mask(t);
  std::vector<PointSet> out;
  for (const auto s : power_set_iter(t.n())) {
    if ((s.bits() & ~nd) == 0) out.push_back(s);
  }
  return SetFamily(t.n(), std::move(out));
}

SetFamily baire_class(const Topology& t) {
  const Mask nd = nowhere_dense_mask(t);
  // s has the Baire property iff s and some open U agree outside the
  // nowhere-dense points.
  std::vector<std::uint8_t> cores(std::size_t{1} << t.n(), 0);
  for (const auto& u : t.opens()) cores[u.bits() & ~nd] = 1;
  std::vector<PointSet> out;
  for (const auto s : power_set_iter(t.n())) {
    if (cores[s.bits() & ~nd] != 0) out.push_back(s);
  }
  return SetFamily(t.n(), std::move(out));
}

}  // namespace catbase
