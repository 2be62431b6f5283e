#pragma once

// Brute-force reference implementations. These deliberately avoid the
// library's bitmask kernels and shortcuts: sets are std::set<int>, every
// definition is evaluated literally, covers are searched instead of reduced
// to singletons.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Set = std::set<int>;
using Family = std::vector<Set>;

inline Set ground(int n) {
  Set s;
  for (int i = 0; i < n; ++i) s.insert(i);
  return s;
}

inline bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline Set meet(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline Set join(const Set& a, const Set& b) {
  Set out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline Set minus(const Set& a, const Set& b) {
  Set out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline bool disjoint(const Set& a, const Set& b) { return meet(a, b).empty(); }

inline Family all_subsets(int n) {
  Family out{Set{}};
  for (int x = 0; x < n; ++x) {
    const std::size_t k = out.size();
    for (std::size_t i = 0; i < k; ++i) {
      Set s = out[i];
      s.insert(x);
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Family subsets_of(const Set& s) {
  Family out{Set{}};
  for (int x : s) {
    const std::size_t k = out.size();
    for (std::size_t i = 0; i < k; ++i) {
      Set t = out[i];
      t.insert(x);
      out.push_back(std::move(t));
    }
  }
  return out;
}

inline Family dedup(Family f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

// ---------------------------------------------------------------- bases

inline bool has_region_inside(const Family& regions, const Set& s) {
  return std::any_of(regions.begin(), regions.end(), [&](const Set& r) { return subset(r, s); });
}

/// Every subfamily of `regions` (by index subset), filtered to non-empty,
/// pairwise disjoint and |D| < |C|.
inline std::vector<Family> disjoint_families(const Family& regions) {
  std::vector<Family> out;
  const std::size_t m = regions.size();
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << m); ++pick) {
    Family d;
    for (std::size_t i = 0; i < m; ++i) {
      if ((pick >> i) & 1U) d.push_back(regions[i]);
    }
    if (d.size() >= m) continue;
    bool ok = true;
    for (std::size_t i = 0; i < d.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < d.size() && ok; ++j) ok = disjoint(d[i], d[j]);
    }
    if (ok) out.push_back(std::move(d));
  }
  return out;
}

inline Family subregions(const Family& regions, const Set& a) {
  Family out;
  for (const auto& r : regions) {
    if (subset(r, a)) out.push_back(r);
  }
  return out;
}

inline bool is_base(int n, Family regions) {
  regions = dedup(std::move(regions));
  for (const auto& r : regions) {
    if (r.empty()) return false;
  }
  Set covered;
  for (const auto& r : regions) covered = join(covered, r);
  if (covered != ground(n)) return false;
  for (const auto& a : regions) {
    for (const auto& d : disjoint_families(regions)) {
      Set u;
      for (const auto& r : d) u = join(u, r);
      if (has_region_inside(regions, meet(a, u))) {
        const bool some = std::any_of(d.begin(), d.end(),
                                      [&](const Set& r) { return has_region_inside(regions, meet(a, r)); });
        if (!some) return false;
      } else {
        bool some = false;
        for (const auto& b : subregions(regions, a)) {
          if (std::all_of(d.begin(), d.end(), [&](const Set& r) { return disjoint(b, r); })) some = true;
        }
        if (!some) return false;
      }
    }
  }
  return true;
}

// ------------------------------------------------------- category notions

inline bool singular(const Family& regions, const Set& s) {
  for (const auto& a : regions) {
    bool found = false;
    for (const auto& b : subregions(regions, a)) {
      if (disjoint(b, s)) found = true;
    }
    if (!found) return false;
  }
  return true;
}

/// A finite union of singular sets equal to s, searched over the singular
/// subsets of s by reachability on unions.
inline bool meager(const Family& regions, const Set& s) {
  Family pieces;
  for (const auto& p : subsets_of(s)) {
    if (singular(regions, p)) pieces.push_back(p);
  }
  std::set<Set> reach{Set{}};
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& have : std::vector<Set>(reach.begin(), reach.end())) {
      for (const auto& p : pieces) {
        if (reach.insert(join(have, p)).second) grew = true;
      }
    }
  }
  return reach.count(s) > 0;
}

inline bool baire(const Family& regions, const Set& s, int n) {
  const Set rest = minus(ground(n), s);
  for (const auto& a : regions) {
    bool found = false;
    for (const auto& b : subregions(regions, a)) {
      if (meager(regions, meet(s, b)) || meager(regions, meet(b, rest))) found = true;
    }
    if (!found) return false;
  }
  return true;
}

inline Set cluster(const Family& regions, const Set& s, int n) {
  Set out;
  for (int x = 0; x < n; ++x) {
    for (const auto& a : regions) {
      if (!a.count(x)) continue;
      bool all = true;
      for (const auto& b : subregions(regions, a)) {
        if (b.count(x) && meager(regions, meet(s, b))) all = false;
      }
      if (all) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

// --------------------------------------------------------------- topology

inline bool is_topology(int n, const std::set<Set>& opens) {
  if (!opens.count(Set{}) || !opens.count(ground(n))) return false;
  for (const auto& a : opens) {
    for (const auto& b : opens) {
      if (!opens.count(join(a, b)) || !opens.count(meet(a, b))) return false;
    }
  }
  return true;
}

/// Every topology on n points, by filtering all families of subsets.
inline std::vector<std::set<Set>> topologies(int n) {
  const Family subs = all_subsets(n);
  std::vector<std::set<Set>> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << subs.size()); ++pick) {
    std::set<Set> opens;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if ((pick >> i) & 1U) opens.insert(subs[i]);
    }
    if (is_topology(n, opens)) out.push_back(std::move(opens));
  }
  return out;
}

inline Set interior(const std::set<Set>& opens, const Set& s) {
  Set out;
  for (const auto& u : opens) {
    if (subset(u, s)) out = join(out, u);
  }
  return out;
}

inline Set closure(const std::set<Set>& opens, const Set& s, int n) {
  return minus(ground(n), interior(opens, minus(ground(n), s)));
}

inline bool nowhere_dense(const std::set<Set>& opens, const Set& s, int n) {
  return interior(opens, closure(opens, s, n)).empty();
}

/// Cover of s by nowhere-dense subsets of s, by reachability on unions.
inline bool first_category(const std::set<Set>& opens, const Set& s, int n) {
  Family pieces;
  for (const auto& p : subsets_of(s)) {
    if (nowhere_dense(opens, p, n)) pieces.push_back(p);
  }
  std::set<Set> reach{Set{}};
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& have : std::vector<Set>(reach.begin(), reach.end())) {
      for (const auto& p : pieces) {
        if (reach.insert(join(have, p)).second) grew = true;
      }
    }
  }
  return reach.count(s) > 0;
}

inline bool baire_property(const std::set<Set>& opens, const Set& s, int n) {
  for (const auto& u : opens) {
    if (first_category(opens, join(minus(s, u), minus(u, s)), n)) return true;
  }
  return false;
}

/// {s : D(X − s) ⊆ X − s} for an operator given as a map.
inline std::set<Set> d_open_sets(const std::map<Set, Set>& d, int n) {
  std::set<Set> out;
  for (const auto& s : all_subsets(n)) {
    const Set rest = minus(ground(n), s);
    if (subset(d.at(rest), rest)) out.insert(s);
  }
  return out;
}

}  // namespace oracle
