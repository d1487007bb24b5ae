#ifndef WITTLANG_COVERS_HPP
#define WITTLANG_COVERS_HPP

// Counting Z/p-covers of the affine line two ways.
//
// Cover side: y^p - y = f(t) with f in t F_p[t] of degree <= D, up to
// f ~ f + g^p - g and up to scaling by F_p^x. Witt side: index-p subgroups of
// the truncated big Witt group L_{1,D}(F_p) = (1 + s F_p[[s]])^x mod s^{D+1}.
// The tame part of the punctured line contributes the cyclic subgroups of F_q^x.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wittlang/errors.hpp"
#include "wittlang/gf.hpp"
#include "wittlang/group_table.hpp"
#include "wittlang/lgroup.hpp"
#include "wittlang/subgrp.hpp"

namespace wittlang {

inline constexpr int kMaxCoverDegree = 12;

inline void require_cover_prime(int p) {
  if (p != 2 && p != 3 && p != 5) throw DomainError("cover counting supports p in {2, 3, 5}");
}

// f = sum coeffs[k] t^k over F_p, coeffs[0] = 0, coeffs.size() = D + 1.
struct ASPoly {
  int p = 2;
  std::vector<int> coeffs;

  int bound() const { return static_cast<int>(coeffs.size()) - 1; }

  int degree() const {
    for (int k = bound(); k >= 1; --k) {
      if (coeffs[k] != 0) return k;
    }
    return 0;
  }

  friend bool operator==(const ASPoly&, const ASPoly&) = default;
  friend auto operator<=>(const ASPoly&, const ASPoly&) = default;
};

inline ASPoly make_as_poly(int p, std::vector<int> coeffs) {
  if (!gf::is_prime(p)) throw DomainError("characteristic must be prime");
  if (coeffs.empty()) coeffs.push_back(0);
  if (coeffs[0] % p != 0) throw DomainError("Artin-Schreier polynomials have no constant term");
  for (auto& c : coeffs) c = ((c % p) + p) % p;
  return {p, std::move(coeffs)};
}

inline std::string to_string(const ASPoly& f) {
  std::string out;
  for (int k = f.bound(); k >= 1; --k) {
    const int c = f.coeffs[k];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c);
    out += k == 1 ? "t" : "t^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

// Canonical representative: no monomial of degree divisible by p.
struct ASClass {
  ASPoly representative;

  friend bool operator==(const ASClass&, const ASClass&) = default;
};

// One reduction step at degree k (p | k): c t^k -> c t^{k/p}, i.e. subtract
// ℘(c t^{k/p}) = c t^k - c t^{k/p}; c^{1/p} = c over F_p.
inline ASPoly as_reduce_step(ASPoly f, int k) {
  if (k < 1 || k > f.bound() || k % f.p != 0) throw DomainError("no reduction step at this degree");
  const int c = f.coeffs[k];
  f.coeffs[k] = 0;
  f.coeffs[k / f.p] = (f.coeffs[k / f.p] + c) % f.p;
  return f;
}

inline ASClass as_reduce(ASPoly f) {
  for (int k = f.bound(); k >= f.p; --k) {
    if (k % f.p == 0 && f.coeffs[k] != 0) f = as_reduce_step(std::move(f), k);
  }
  return {std::move(f)};
}

// ℘(g) = g^p - g on t F_p[t], truncated to the bound of the result.
inline ASPoly wp(const ASPoly& g, int bound) {
  ASPoly out{g.p, std::vector<int>(bound + 1, 0)};
  for (int k = 1; k <= g.bound(); ++k) {
    if (g.coeffs[k] == 0) continue;
    if (k * g.p > bound) throw DomainError("g^p exceeds the degree bound");
    out.coeffs[k * g.p] = (out.coeffs[k * g.p] + g.coeffs[k]) % g.p;
    if (k <= bound) out.coeffs[k] = (out.coeffs[k] - g.coeffs[k] + g.p) % g.p;
  }
  return out;
}

inline ASPoly as_add(const ASPoly& a, const ASPoly& b) {
  if (a.p != b.p || a.bound() != b.bound()) throw SpecError("Artin-Schreier polynomials of different shape");
  ASPoly out = a;
  for (int k = 0; k <= a.bound(); ++k) out.coeffs[k] = (a.coeffs[k] + b.coeffs[k]) % a.p;
  return out;
}

inline std::vector<ASPoly> enumerate_as_polys(int p, int bound, std::uint64_t cap = size_cap()) {
  const std::uint64_t count = checked_pow(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(bound));
  require_within_cap(count, cap, "Artin-Schreier polynomial enumeration");
  std::vector<ASPoly> out;
  out.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    ASPoly f{p, std::vector<int>(bound + 1, 0)};
    std::uint64_t c = code;
    for (int k = 1; k <= bound; ++k) {
      f.coeffs[k] = static_cast<int>(c % p);
      c /= p;
    }
    out.push_back(std::move(f));
  }
  return out;
}

inline std::uint64_t as_code(const ASPoly& f) {
  std::uint64_t code = 0;
  for (int k = f.bound(); k >= 1; --k) code = code * f.p + f.coeffs[k];
  return code;
}

struct CoverCount {
  std::uint64_t formula = 0;      // (p^k - 1)/(p - 1), k = #{m <= D : p does not divide m}
  std::uint64_t brute_force = 0;  // F_p^x-orbits of nonzero classes of V / ℘(W)
  std::uint64_t classes = 0;      // |V / ℘(W)|
};

// Brute force over all f of degree <= D modulo the ℘-image, without using
// the canonical form.
inline CoverCount count_as_covers(int p, int bound, std::uint64_t cap = size_cap()) {
  require_cover_prime(p);
  if (bound < 0 || bound > kMaxCoverDegree) throw DomainError("degree bound outside [0, 12]");
  CoverCount out;
  int k = 0;
  for (int m = 1; m <= bound; ++m) k += m % p != 0 ? 1 : 0;
  out.formula = (checked_pow(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(k)) - 1) /
                static_cast<std::uint64_t>(p - 1);
  if (bound == 0) {
    out.classes = 1;
    return out;
  }

  const auto polys = enumerate_as_polys(p, bound, cap);
  // Image of ℘ on g with p * deg g <= D.
  std::vector<ASPoly> image;
  for (const auto& g : enumerate_as_polys(p, bound / p, cap)) {
    ASPoly padded{p, std::vector<int>(bound + 1, 0)};
    std::copy(g.coeffs.begin(), g.coeffs.end(), padded.coeffs.begin());
    image.push_back(wp(padded, bound));
  }
  // Class id = least code in the coset f + image.
  std::vector<std::uint64_t> class_of(polys.size());
  std::set<std::uint64_t> classes;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    std::uint64_t least = UINT64_MAX;
    for (const auto& w : image) least = std::min(least, as_code(as_add(polys[i], w)));
    class_of[i] = least;
    classes.insert(least);
  }
  out.classes = classes.size();
  // Orbits of nonzero classes under scaling.
  std::set<std::uint64_t> orbit_reps;
  for (std::uint64_t cls : classes) {
    if (cls == 0) continue;
    std::uint64_t least = cls;
    ASPoly rep = polys[cls];  // enumeration index equals code
    for (int c = 2; c < p; ++c) {
      ASPoly scaled = rep;
      for (auto& x : scaled.coeffs) x = x * c % p;
      least = std::min(least, class_of[as_code(scaled)]);
    }
    orbit_reps.insert(least);
  }
  out.brute_force = orbit_reps.size();
  if (out.brute_force != out.formula) {
    throw VerificationError("cover count mismatch for p=" + std::to_string(p) + ", D=" + std::to_string(bound) +
                            ": formula " + std::to_string(out.formula) + " vs enumeration " +
                            std::to_string(out.brute_force));
  }
  return out;
}

struct WittIndexCount {
  std::uint64_t group_order = 0;
  std::uint64_t p_torsion = 0;  // |G[p]|
  std::uint64_t count = 0;      // (|G[p]| - 1)/(p - 1)
  std::optional<std::uint64_t> subgroup_tally;  // index-p subgroups from the lattice, when run
};

inline GroupTable witt_group_table(const FieldPtr& field, int d, std::uint64_t cap = size_cap()) {
  const auto elems = enumerate_group(field, 1, d, cap);
  return GroupTable::from_elements(
      elems, [](const TruncElem& a, const TruncElem& b) { return lmul(a, b); },
      [](const TruncElem& a) { return index_of(a); }, [](const TruncElem& a) { return a.to_string(); });
}

inline constexpr std::uint64_t kWittCap = std::uint64_t{1} << 16;
inline constexpr std::uint64_t kDefaultLatticeCrossCheck = 256;

// Index-p subgroups of L_{1,d}(F_p). The lattice cross-check runs when
// |G| <= lattice_limit.
inline WittIndexCount count_witt_index_p(int p, int d, std::uint64_t lattice_limit = kDefaultLatticeCrossCheck) {
  require_cover_prime(p);
  WittIndexCount out;
  if (d == 0) {
    out.group_order = 1;
    out.p_torsion = 1;
    return out;
  }
  const FieldPtr field = gf::make_field(p, 1);
  out.group_order = group_order(*field, 1, d);
  require_within_cap(out.group_order, kWittCap, "Witt group enumeration");
  for (const auto& x : enumerate_group(field, 1, d, kWittCap)) {
    if (lpow(x, static_cast<std::uint64_t>(p)).is_identity()) ++out.p_torsion;
  }
  out.count = (out.p_torsion - 1) / static_cast<std::uint64_t>(p - 1);
  if (out.group_order <= std::min<std::uint64_t>(lattice_limit, kSubgroupGroupCap)) {
    const GroupTable g = witt_group_table(field, d);
    std::uint64_t tally = 0;
    for (const auto& s : all_subgroups(g)) tally += s.order() * static_cast<std::uint64_t>(p) == g.order() ? 1 : 0;
    out.subgroup_tally = tally;
    if (tally != out.count) {
      throw VerificationError("index-p subgroup tally " + std::to_string(tally) + " differs from torsion count " +
                              std::to_string(out.count));
    }
  }
  return out;
}

struct FiltrationRow {
  int degree = 0;
  std::uint64_t as_count = 0;
  std::uint64_t witt_count = 0;
  bool equal() const { return as_count == witt_count; }
};

// Conductor bound D on the cover side against truncation level d = D.
inline FiltrationRow match_row(int p, int degree) {
  return {degree, count_as_covers(p, degree).brute_force, count_witt_index_p(p, degree).count};
}

// Rows D = 1..max_degree; max_degree = 0 yields the single empty-case row.
inline std::vector<FiltrationRow> match_filtrations(int p, int max_degree) {
  require_cover_prime(p);
  if (max_degree < 0 || max_degree > kMaxCoverDegree) throw DomainError("degree bound outside [0, 12]");
  if (max_degree == 0) return {match_row(p, 0)};
  std::vector<FiltrationRow> rows;
  for (int degree = 1; degree <= max_degree; ++degree) rows.push_back(match_row(p, degree));
  return rows;
}

// Orders of the cyclic subgroups of F_q^x, from a scan of element orders.
inline std::vector<std::uint64_t> tame_count(std::uint64_t q) {
  if (q < 2 || q > (std::uint64_t{1} << 16)) throw DomainError("tame count needs 2 <= q <= 2^16");
  const FieldPtr field = gf::make_field_of_size(q);
  const Field& f = *field;
  // Candidate orders: divisors of q - 1 (the group order), tested ascending.
  std::vector<std::uint64_t> candidates;
  for (std::uint64_t k = 1; k <= q - 1; ++k) {
    if ((q - 1) % k == 0) candidates.push_back(k);
  }
  std::set<std::uint64_t> orders;
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    const Coeffs x = f.element(i);
    if (f.is_zero(x)) continue;
    for (std::uint64_t k : candidates) {
      if (f.pow(x, k) == f.one()) {
        orders.insert(k);
        break;
      }
    }
  }
  return {orders.begin(), orders.end()};
}

}  // namespace wittlang

#endif  // WITTLANG_COVERS_HPP
