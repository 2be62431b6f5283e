#include "catbase/equiv.hpp"

namespace catbase {

namespace {

void require_same(const CategoryBase& base, const Topology& t) {
  if (base.n() != t.n()) {
    throw InputError("topology lives on " + std::to_string(t.n()) + " points, base on " + std::to_string(base.n()));
  }
}

std::vector<std::uint8_t> membership(int n, const SetFamily& family) {
  std::vector<std::uint8_t> out(std::size_t{1} << n, 0);
  for (const auto& s : family) out[s.bits()] = 1;
  return out;
}

}  // namespace

std::string_view to_string(MismatchDirection direction) {
  switch (direction) {
    case MismatchDirection::MeagerBaseOnly:
      return "meager_base_only";
    case MismatchDirection::MeagerTopologyOnly:
      return "meager_topology_only";
    case MismatchDirection::BaireBaseOnly:
      return "baire_base_only";
    case MismatchDirection::BaireTopologyOnly:
      return "baire_topology_only";
  }
  return "unknown";
}

bool hypothesis_holds(const CategoryBase& base, const Topology& t) {
  require_same(base, t);
  for (const auto& a : base.regions()) {
    if (interior(t, a).is_empty()) return false;
  }
  return true;
}

std::optional<PointSet> open_sets_check(const CategoryBase& base, const Topology& t) {
  return open_sets_check(base, classify_all(base), t);
}

std::optional<PointSet> open_sets_check(const CategoryBase& base, const SetClass& classes, const Topology& t) {
  require_same(base, t);
  for (const auto& u : t.opens()) {
    if (u.is_empty()) continue;
    if (classes.meager(u) || !classes.baire(u)) return u;
  }
  return std::nullopt;
}

EquivalenceReport check_equivalence(const CategoryBase& base, const OperatorTable& d, std::size_t witness_cap) {
  return check_equivalence(base, classify_all(base), d, witness_cap);
}

EquivalenceReport check_equivalence(const CategoryBase& base, const SetClass& classes, const OperatorTable& d,
                                    std::size_t witness_cap) {
  if (classes.n() != base.n()) throw InputError("classification does not belong to this base");
  const Topology t = d_topology(base, d);
  const int n = base.n();
  const auto meager_t = membership(n, meager_class(t));
  const auto baire_t = membership(n, baire_class(t));

  EquivalenceReport report;
  report.degenerate_base = base.degenerate();
  report.hypothesis_holds = hypothesis_holds(base, t);
  report.minimal_regions_ok = every_region_has_minimal(base);
  report.open_set_witness = open_sets_check(base, classes, t);
  report.open_sets_abundant_baire = !report.open_set_witness.has_value();
  report.topology = t.opens().members();

  std::array<std::vector<Mismatch>, 4> found;
  auto record = [&](MismatchDirection dir, Mask s) {
    const auto k = static_cast<std::size_t>(dir);
    ++report.mismatch_counts[k];
    if (witness_cap == 0 || found[k].size() < witness_cap) found[k].push_back({dir, PointSet(n, s)});
  };
  for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) {
    const Mask s = static_cast<Mask>(i);
    const bool mc = classes.meager(s);
    const bool mt = meager_t[i] != 0;
    const bool bc = classes.baire(s);
    const bool bt = baire_t[i] != 0;
    if (mc && !mt) record(MismatchDirection::MeagerBaseOnly, s);
    if (mt && !mc) record(MismatchDirection::MeagerTopologyOnly, s);
    if (bc && !bt) record(MismatchDirection::BaireBaseOnly, s);
    if (bt && !bc) record(MismatchDirection::BaireTopologyOnly, s);
  }
  report.meager_equal = report.mismatch_counts[0] == 0 && report.mismatch_counts[1] == 0;
  report.baire_equal = report.mismatch_counts[2] == 0 && report.mismatch_counts[3] == 0;
  for (auto& group : found) {
    report.mismatches.insert(report.mismatches.end(), group.begin(), group.end());
  }
  return report;
}

SetFamily minimal_regions(const CategoryBase& base) {
  std::vector<PointSet> out;
  for (std::size_t i = 0; i < base.region_count(); ++i) {
    if (base.subregion_indices(i).size() == 1) out.push_back(base.regions()[i]);
  }
  return SetFamily(base.n(), std::move(out));
}

bool every_region_has_minimal(const CategoryBase& base) {
  for (std::size_t i = 0; i < base.region_count(); ++i) {
    bool has_minimal = false;
    for (std::size_t j : base.subregion_indices(i)) {
      if (base.subregion_indices(j).size() == 1) {
        has_minimal = true;
        break;
      }
    }
    if (!has_minimal) return false;
  }
  return true;
}

std::optional<PointSet> minimal_union_open_check(const CategoryBase& base) {
  return minimal_union_open_check(base, basic_topology(base));
}

std::optional<PointSet> minimal_union_open_check(const CategoryBase& base, const Topology& basic) {
  require_same(base, basic);
  const auto minimal = minimal_regions(base).masks();
  if (minimal.size() > static_cast<std::size_t>(kMaxMinimalRegionsForUnionCheck)) {
    throw CapacityError(std::to_string(minimal.size()) + " minimal regions exceed the union-check cap of " +
                        std::to_string(kMaxMinimalRegionsForUnionCheck));
  }
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << minimal.size()); ++pick) {
    Mask u = 0;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      if (((pick >> i) & 1U) != 0) u |= minimal[i];
    }
    if (!basic.is_open(u)) return PointSet(base.n(), u);
  }
  return std::nullopt;
}

}  // namespace catbase
