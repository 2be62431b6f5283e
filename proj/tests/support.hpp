#pragma once

#include <initializer_list>
#include <map>
#include <set>
#include <vector>

#include "catbase/axioms.hpp"
#include "catbase/core.hpp"
#include "catbase/doperator.hpp"
#include "catbase/search.hpp"
#include "catbase/topology.hpp"
#include "oracles.hpp"

namespace testing {

using catbase::CategoryBase;
using catbase::Mask;
using catbase::PointSet;
using catbase::SetFamily;

inline PointSet ps(int n, std::initializer_list<int> xs) { return PointSet::of(n, xs); }

inline std::vector<PointSet> sets(int n, std::initializer_list<std::initializer_list<int>> lists) {
  std::vector<PointSet> out;
  for (auto l : lists) out.push_back(PointSet::of(n, l));
  return out;
}

inline SetFamily family(int n, std::initializer_list<std::initializer_list<int>> lists) {
  return SetFamily(n, sets(n, lists));
}

inline CategoryBase base(int n, std::initializer_list<std::initializer_list<int>> lists) {
  auto result = catbase::validate_base(n, family(n, lists));
  if (!result.valid()) throw catbase::InputError("fixture is not a category base");
  return std::move(*result.base);
}

inline CategoryBase sierpinski_base() { return base(2, {{1}, {0, 1}}); }
inline CategoryBase indiscrete_base() { return base(2, {{0, 1}}); }
inline CategoryBase discrete_base() { return base(3, {{0}, {1}, {2}, {0, 1, 2}}); }

/// D(∅) = ∅, D(s) = X otherwise.
inline catbase::OperatorTable constant_full(int n) {
  std::vector<Mask> t(std::size_t{1} << n, catbase::full_mask(n));
  t[0] = 0;
  return catbase::OperatorTable(n, std::move(t));
}

inline catbase::OperatorTable identity(int n) {
  std::vector<Mask> t(std::size_t{1} << n);
  for (std::size_t s = 0; s < t.size(); ++s) t[s] = static_cast<Mask>(s);
  return catbase::OperatorTable(n, std::move(t));
}

inline oracle::Set to_set(const PointSet& s) {
  auto e = s.elements();
  return oracle::Set(e.begin(), e.end());
}

inline oracle::Set to_set(int n, Mask m) { return to_set(PointSet(n, m)); }

inline PointSet from_set(int n, const oracle::Set& s) {
  Mask m = 0;
  for (int x : s) m |= Mask{1} << x;
  return PointSet(n, m);
}

inline oracle::Family to_family(const SetFamily& f) {
  oracle::Family out;
  for (const auto& s : f) out.push_back(to_set(s));
  return out;
}

inline oracle::Family to_family(const std::vector<PointSet>& f) {
  oracle::Family out;
  for (const auto& s : f) out.push_back(to_set(s));
  return out;
}

inline std::set<oracle::Set> to_opens(const catbase::Topology& t) {
  std::set<oracle::Set> out;
  for (const auto& u : t.opens()) out.insert(to_set(u));
  return out;
}

inline std::map<oracle::Set, oracle::Set> to_map(const catbase::OperatorTable& d) {
  std::map<oracle::Set, oracle::Set> out;
  for (std::size_t s = 0; s < d.table().size(); ++s) {
    out[to_set(d.n(), static_cast<Mask>(s))] = to_set(d.n(), d.table()[s]);
  }
  return out;
}

inline catbase::Topology topology(int n, const std::set<oracle::Set>& opens) {
  std::vector<PointSet> members;
  for (const auto& u : opens) members.push_back(from_set(n, u));
  auto result = catbase::validate_topology(n, SetFamily(n, std::move(members)));
  if (!result.valid()) throw catbase::InputError("fixture is not a topology");
  return std::move(*result.topology);
}

/// Every validated base on n points, in candidate order.
inline std::vector<CategoryBase> all_bases(int n) {
  catbase::SweepConfig cfg;
  cfg.n = n;
  cfg.mode = catbase::SweepMode::Exhaustive;
  return catbase::enumerate_bases(cfg);
}

/// Relabels points by perm.
inline PointSet permute(const PointSet& s, const std::vector<int>& perm) {
  Mask m = 0;
  for (int x : s.elements()) m |= Mask{1} << perm[x];
  return PointSet(s.n(), m);
}

}  // namespace testing
