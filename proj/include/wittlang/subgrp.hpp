#ifndef WITTLANG_SUBGRP_HPP
#define WITTLANG_SUBGRP_HPP

// Subgroup lattices of small finite groups: closure, exhaustive enumeration,
// normality, quotients, and the per-level signature set of the subgroup
// completion.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wittlang/errors.hpp"
#include "wittlang/group_table.hpp"

namespace wittlang {

using Index = GroupTable::Index;

struct Subgroup {
  std::vector<Index> members;  // sorted, contains the identity

  std::size_t order() const { return members.size(); }
  bool contains(Index x) const { return std::binary_search(members.begin(), members.end(), x); }

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

inline constexpr std::size_t kClosureCap = 10000;
inline constexpr std::size_t kSubgroupGroupCap = 2000;
inline constexpr std::size_t kSubgroupCountCap = 200000;

// Smallest subgroup containing `gens`: breadth-first right multiplication by
// the generators.
inline Subgroup closure(const GroupTable& g, std::span<const Index> gens, std::size_t cap = kClosureCap) {
  require_within_cap(g.order(), cap, "closure parent order");
  for (Index x : gens) {
    if (x >= g.order()) throw DomainError("generator outside the parent group");
  }
  std::vector<char> seen(g.order(), 0);
  std::deque<Index> queue;
  seen[g.identity()] = 1;
  queue.push_back(g.identity());
  std::vector<Index> members;
  while (!queue.empty()) {
    const Index x = queue.front();
    queue.pop_front();
    members.push_back(x);
    for (Index s : gens) {
      const Index y = g.mul(x, s);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return {std::move(members)};
}

inline Subgroup closure(const GroupTable& g, std::initializer_list<Index> gens, std::size_t cap = kClosureCap) {
  return closure(g, std::span<const Index>(gens.begin(), gens.size()), cap);
}

inline Subgroup whole_group(const GroupTable& g) {
  Subgroup s;
  s.members.resize(g.order());
  std::iota(s.members.begin(), s.members.end(), Index{0});
  return s;
}

inline Subgroup trivial_subgroup(const GroupTable& g) { return {{g.identity()}}; }

inline bool is_subgroup(const GroupTable& g, const Subgroup& s) {
  if (s.members.empty() || !std::is_sorted(s.members.begin(), s.members.end())) return false;
  if (!s.contains(g.identity())) return false;
  for (Index a : s.members) {
    if (!s.contains(g.inverse(a))) return false;
    for (Index b : s.members) {
      if (!s.contains(g.mul(a, b))) return false;
    }
  }
  return true;
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup out;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(out.members));
  return out;
}

// Every subgroup exactly once, sorted by (order, members). Seeds with the
// cyclic subgroups, then joins each known subgroup with every cyclic subgroup
// it does not contain until nothing new appears.
inline std::vector<Subgroup> all_subgroups(const GroupTable& g, std::size_t cap = kSubgroupGroupCap,
                                           std::size_t max_subgroups = kSubgroupCountCap) {
  require_within_cap(g.order(), cap, "subgroup enumeration");
  std::map<std::vector<Index>, std::vector<Index>> found;  // members -> generators
  std::vector<Index> cyclic_gens;
  std::set<std::vector<Index>> cyclic_seen;
  for (Index x = 0; x < g.order(); ++x) {
    Subgroup c = closure(g, {x}, cap);
    if (cyclic_seen.insert(c.members).second) {
      cyclic_gens.push_back(x);
      found.emplace(c.members, std::vector<Index>{x});
    }
  }
  std::deque<std::vector<Index>> work;
  for (const auto& [members, gens] : found) work.push_back(members);
  while (!work.empty()) {
    const std::vector<Index> members = work.front();
    work.pop_front();
    const std::vector<Index> gens = found.at(members);
    for (Index c : cyclic_gens) {
      if (std::binary_search(members.begin(), members.end(), c)) continue;
      std::vector<Index> join_gens = gens;
      join_gens.push_back(c);
      Subgroup j = closure(g, join_gens, cap);
      if (found.emplace(j.members, join_gens).second) {
        require_within_cap(found.size(), max_subgroups, "subgroup count");
        work.push_back(j.members);
      }
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& [members, gens] : found) out.push_back({members});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.members < b.members;
  });
  return out;
}

// First (g, n) with g n g^{-1} outside s, if any.
inline std::optional<std::pair<Index, Index>> normality_violation(const GroupTable& g, const Subgroup& s) {
  for (Index x = 0; x < g.order(); ++x) {
    for (Index n : s.members) {
      if (!s.contains(g.mul(g.mul(x, n), g.inverse(x)))) return std::make_pair(x, n);
    }
  }
  return std::nullopt;
}

inline bool is_normal(const GroupTable& g, const Subgroup& s) { return !normality_violation(g, s).has_value(); }

struct Quotient {
  GroupTable group;
  std::vector<Index> projection;       // parent index -> coset index
  std::vector<Index> representatives;  // coset index -> least member of the coset
};

inline Quotient quotient(const GroupTable& g, const Subgroup& n) {
  if (!is_subgroup(g, n)) throw DomainError("quotient by a set that is not a subgroup");
  if (auto v = normality_violation(g, n)) {
    const Index conj = g.mul(g.mul(v->first, v->second), g.inverse(v->first));
    throw DomainError("subgroup is not normal: " + g.label(v->first) + " * " + g.label(v->second) + " * " +
                      g.label(v->first) + "^-1 = " + g.label(conj) + " lies outside it");
  }
  constexpr Index kUnset = static_cast<Index>(-1);
  std::vector<Index> projection(g.order(), kUnset);
  std::vector<Index> reps;
  for (Index x = 0; x < g.order(); ++x) {
    if (projection[x] != kUnset) continue;
    const Index coset = reps.size();
    reps.push_back(x);
    for (Index m : n.members) projection[g.mul(x, m)] = coset;
  }
  const std::size_t k = reps.size();
  std::vector<std::uint32_t> table(k * k);
  std::vector<std::string> labels(k);
  for (Index a = 0; a < k; ++a) {
    labels[a] = g.label(reps[a]) + "N";
    for (Index b = 0; b < k; ++b) table[a * k + b] = static_cast<std::uint32_t>(projection[g.mul(reps[a], reps[b])]);
  }
  return {GroupTable::from_cayley(k, std::move(table), std::move(labels)), std::move(projection), std::move(reps)};
}

// True iff `map` (indices of g -> indices of h) is a homomorphism; exhaustive.
inline bool is_homomorphism(const GroupTable& g, const GroupTable& h, std::span<const Index> map) {
  if (map.size() != g.order()) return false;
  for (Index a = 0; a < g.order(); ++a) {
    for (Index b = 0; b < g.order(); ++b) {
      if (map[g.mul(a, b)] != h.mul(map[a], map[b])) return false;
    }
  }
  return true;
}

// Isomorphism-invariant fingerprint: order plus element-order profile.
struct Signature {
  std::size_t order = 0;
  std::map<std::uint64_t, std::size_t> profile;  // element order -> count

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

inline Signature signature(const GroupTable& g, const Subgroup& s) {
  Signature sig;
  sig.order = s.order();
  for (Index x : s.members) ++sig.profile[g.element_order(x)];
  return sig;
}

inline std::string to_string(const Signature& sig) {
  std::string out = std::to_string(sig.order) + ":{";
  bool first = true;
  for (const auto& [ord, count] : sig.profile) {
    out += (first ? "" : ",") + std::to_string(ord) + ":" + std::to_string(count);
    first = false;
  }
  return out + "}";
}

struct ProSubLevel {
  std::size_t group_order = 0;
  std::size_t subgroup_count = 0;
  std::set<Signature> signatures;

  std::set<std::size_t> orders() const {
    std::set<std::size_t> out;
    for (const auto& s : signatures) out.insert(s.order);
    return out;
  }
};

// One level of the subgroup completion: the signatures of all subgroups of g.
inline ProSubLevel prosub_level(const GroupTable& g, std::size_t cap = kSubgroupGroupCap) {
  const auto subs = all_subgroups(g, cap);
  ProSubLevel level;
  level.group_order = g.order();
  level.subgroup_count = subs.size();
  for (const auto& s : subs) level.signatures.insert(signature(g, s));
  return level;
}

inline Subgroup push_forward(const GroupTable& target, const Subgroup& s, std::span<const Index> projection) {
  std::set<Index> image;
  for (Index x : s.members) image.insert(projection[x]);
  Subgroup out{std::vector<Index>(image.begin(), image.end())};
  if (!is_subgroup(target, out)) throw VerificationError("image of a subgroup is not a subgroup");
  return out;
}

// Transition check between two levels G -> G/N: the image of every subgroup
// of G is a listed subgroup of G/N, and every subgroup of G/N is hit.
inline bool transition_compatible(const GroupTable& g, const Quotient& q, std::size_t cap = kSubgroupGroupCap) {
  const auto upper = all_subgroups(g, cap);
  const auto lower = all_subgroups(q.group, cap);
  std::set<Subgroup> lower_set(lower.begin(), lower.end());
  std::set<Subgroup> hit;
  for (const auto& s : upper) {
    Subgroup img = push_forward(q.group, s, q.projection);
    if (!lower_set.contains(img)) return false;
    hit.insert(std::move(img));
  }
  return hit.size() == lower_set.size();
}

}  // namespace wittlang

#endif  // WITTLANG_SUBGRP_HPP
