#ifndef WITTLANG_LANG_HPP
#define WITTLANG_LANG_HPP

// The Lang map x -> x^{-1} Frob_q(x) on L_{n,d} over a finite work field
// F_{q^m}, its kernel and fibers, and the quotient map
// alpha: G(F_q) -> Gamma induced by a cover gamma: H -> G with kernel Gamma:
// lift x to h with gamma(h) = x, then alpha(x) = lang(h).

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wittlang/errors.hpp"
#include "wittlang/gf.hpp"
#include "wittlang/lgroup.hpp"

namespace wittlang {

struct LangContext {
  FieldPtr work_field;
  std::uint64_t base_q = 0;
  int n = 1;
  int d = 1;
};

// base_q must be p^e with e dividing the degree of the work field.
inline LangContext make_lang_context(FieldPtr work_field, std::uint64_t base_q, int n, int d) {
  if (!work_field) throw SpecError("lang context needs a work field");
  const std::uint64_t e = frobenius_exponent(*work_field, base_q);
  if (static_cast<std::uint64_t>(work_field->degree()) % e != 0) {
    throw DomainError("work field of size " + std::to_string(work_field->size()) + " is not an extension of F_" +
                      std::to_string(base_q));
  }
  if (n < 1 || d < 1) throw DomainError("group shape must have n, d >= 1");
  return {std::move(work_field), base_q, n, d};
}

inline TruncElem lang(const TruncElem& x, std::uint64_t base_q) { return lmul(linv(x), frob_elem(x, base_q)); }

inline void require_context(const TruncElem& x, const LangContext& ctx) {
  if (!x.field()->same_as(*ctx.work_field) || x.n() != ctx.n || x.d() != ctx.d) {
    throw SpecError("element does not live in the lang context's group");
  }
}

inline TruncElem lang(const TruncElem& x, const LangContext& ctx) {
  require_context(x, ctx);
  return lang(x, ctx.base_q);
}

// Fixed by Frob_q, i.e. all coefficients in F_q.
inline bool is_rational(const TruncElem& x, std::uint64_t base_q) { return frob_elem(x, base_q) == x; }

inline std::vector<TruncElem> lang_kernel(const LangContext& ctx, std::uint64_t cap = size_cap()) {
  std::vector<TruncElem> out;
  for (auto& x : enumerate_group(ctx.work_field, ctx.n, ctx.d, cap)) {
    if (lang(x, ctx.base_q).is_identity()) out.push_back(std::move(x));
  }
  return out;
}

struct FiberStats {
  std::uint64_t group_size = 0;
  std::uint64_t kernel_size = 0;
  std::uint64_t fiber_count = 0;  // size of the image
  std::uint64_t min_fiber = 0;
  std::uint64_t max_fiber = 0;

  bool uniform() const { return min_fiber == max_fiber && min_fiber == kernel_size; }
};

inline FiberStats lang_fibers(const LangContext& ctx, std::uint64_t cap = size_cap()) {
  std::map<std::uint64_t, std::uint64_t> fibers;
  FiberStats stats;
  for (const auto& x : enumerate_group(ctx.work_field, ctx.n, ctx.d, cap)) {
    const TruncElem y = lang(x, ctx.base_q);
    ++fibers[index_of(y)];
    ++stats.group_size;
    if (y.is_identity()) ++stats.kernel_size;
  }
  stats.fiber_count = fibers.size();
  stats.min_fiber = UINT64_MAX;
  for (const auto& [code, size] : fibers) {
    stats.min_fiber = std::min(stats.min_fiber, size);
    stats.max_fiber = std::max(stats.max_fiber, size);
  }
  return stats;
}

// ---------------------------------------------------------------------------
// Covers gamma: H -> G and the induced alpha

// Either the Lang map of H itself (H = G) or an explicit homomorphism that is
// tabulated over the work field. Explicit maps must be defined over F_q so
// that they commute with Frobenius; build_cover checks this.
struct Isogeny {
  enum class Kind { LangSelf, Table };

  Kind kind = Kind::LangSelf;
  std::string name;
  int h_n = 1;
  int h_d = 1;
  int g_n = 1;
  int g_d = 1;
  std::function<TruncElem(const TruncElem&)> map;  // Table only

  static Isogeny lang_self(int n, int d) { return {Kind::LangSelf, "lang-self", n, d, n, d, {}}; }

  static Isogeny table(std::string name, int h_n, int h_d, int g_n, int g_d,
                       std::function<TruncElem(const TruncElem&)> map) {
    if (!map) throw SpecError("table isogeny needs a map");
    return {Kind::Table, std::move(name), h_n, h_d, g_n, g_d, std::move(map)};
  }
};

// gamma tabulated over one work field.
struct CoverTable {
  FieldPtr work_field;
  std::uint64_t base_q = 0;
  Isogeny isogeny;
  std::vector<TruncElem> h_elements;
  std::map<std::uint64_t, std::vector<std::size_t>> fibers;  // index_of(gamma(h)) -> h positions
  std::vector<TruncElem> kernel;                             // Gamma = ker gamma over the work field
  bool homomorphism = false;
  bool commutes_with_frobenius = false;

  TruncElem apply(const TruncElem& h) const {
    return isogeny.kind == Isogeny::Kind::LangSelf ? lang(h, base_q) : isogeny.map(h);
  }
};

inline constexpr std::uint64_t kExhaustivePairCap = std::uint64_t{1} << 16;

inline CoverTable build_cover(const Isogeny& iso, FieldPtr work_field, std::uint64_t base_q,
                              std::uint64_t cap = size_cap(), std::uint64_t seed = 0x5eed) {
  CoverTable cover{std::move(work_field), base_q, iso, {}, {}, {}, false, false};
  cover.h_elements = enumerate_group(cover.work_field, iso.h_n, iso.h_d, cap);
  std::vector<TruncElem> images;
  images.reserve(cover.h_elements.size());
  cover.commutes_with_frobenius = true;
  for (std::size_t i = 0; i < cover.h_elements.size(); ++i) {
    const TruncElem& h = cover.h_elements[i];
    TruncElem g = cover.apply(h);
    if (g.n() != iso.g_n || g.d() != iso.g_d || !g.field()->same_as(*cover.work_field)) {
      throw SpecError("isogeny " + iso.name + " produced an element of the wrong shape");
    }
    if (g.is_identity()) cover.kernel.push_back(h);
    if (cover.apply(frob_elem(h, base_q)) != frob_elem(g, base_q)) cover.commutes_with_frobenius = false;
    cover.fibers[index_of(g)].push_back(i);
    images.push_back(std::move(g));
  }
  // Homomorphism: exhaustive on pairs when affordable, else seeded sample.
  const std::uint64_t size = cover.h_elements.size();
  cover.homomorphism = true;
  auto check = [&](std::size_t a, std::size_t b) {
    const TruncElem lhs = cover.apply(lmul(cover.h_elements[a], cover.h_elements[b]));
    if (lhs != lmul(images[a], images[b])) cover.homomorphism = false;
  };
  if (size * size <= kExhaustivePairCap) {
    for (std::size_t a = 0; a < size && cover.homomorphism; ++a)
      for (std::size_t b = 0; b < size && cover.homomorphism; ++b) check(a, b);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dist(0, size - 1);
    for (int t = 0; t < 10000 && cover.homomorphism; ++t) check(dist(rng), dist(rng));
  }
  return cover;
}

struct AlphaValue {
  TruncElem value;                       // lang(h) for the first lift h
  std::vector<TruncElem> fiber_values;   // lang(h') over every lift h'
  bool in_gamma = false;
  bool well_defined = false;             // all fiber values agree
};

// nullopt when x has no preimage over the work field.
inline std::optional<AlphaValue> step2_alpha(const TruncElem& x, const CoverTable& cover) {
  if (!x.field()->same_as(*cover.work_field) || x.n() != cover.isogeny.g_n || x.d() != cover.isogeny.g_d) {
    throw SpecError("point does not live in the cover's target group");
  }
  if (!is_rational(x, cover.base_q)) throw DomainError("alpha is evaluated on F_q-rational points only");
  auto it = cover.fibers.find(index_of(x));
  if (it == cover.fibers.end()) return std::nullopt;
  std::set<TruncElem> distinct;
  std::vector<TruncElem> values;
  for (std::size_t pos : it->second) {
    TruncElem v = lang(cover.h_elements[pos], cover.base_q);
    if (distinct.insert(v).second) values.push_back(std::move(v));
  }
  AlphaValue out{values.front(), values, false, values.size() == 1};
  out.in_gamma = cover.apply(out.value).is_identity();
  return out;
}

struct AlphaReport {
  std::string isogeny;
  std::uint64_t base_q = 0;
  int work_degree = 0;  // [F_{q^m} : F_q]
  std::uint64_t work_size = 0;
  std::uint64_t rational_points = 0;
  std::uint64_t gamma_size = 0;
  bool cover_homomorphism = false;
  bool cover_frobenius_equivariant = false;
  bool all_lifted = false;
  bool all_in_gamma = false;
  bool well_defined = false;
  bool homomorphic = false;
  bool surjective = false;
  std::vector<std::pair<TruncElem, TruncElem>> values;  // (x, alpha(x))

  bool passed() const {
    return cover_homomorphism && cover_frobenius_equivariant && all_lifted && all_in_gamma && well_defined &&
           homomorphic && surjective;
  }
};

inline constexpr int kMaxWorkDegree = 12;

// Evaluates alpha on all of G(F_q). Starts with [F_{q^m} : F_q] = work_degree
// and doubles it (up to 12) while some rational point has no lift.
inline AlphaReport step2_alpha_report(const Isogeny& iso, const FieldPtr& base_field, int work_degree,
                                      std::uint64_t cap = size_cap()) {
  if (work_degree < 1) throw DomainError("work degree must be >= 1");
  const std::uint64_t q = base_field->size();
  for (int m = work_degree; m <= kMaxWorkDegree; m *= 2) {
    const int total = base_field->degree() * m;
    if (total > gf::kMaxDegree) break;
    const FieldPtr work = gf::make_field(base_field->p(), total);
    const CoverTable cover = build_cover(iso, work, q, cap);

    AlphaReport report;
    report.isogeny = iso.name;
    report.base_q = q;
    report.work_degree = m;
    report.work_size = work->size();
    report.gamma_size = cover.kernel.size();
    report.cover_homomorphism = cover.homomorphism;
    report.cover_frobenius_equivariant = cover.commutes_with_frobenius;

    const auto rational = enumerate_group(base_field, iso.g_n, iso.g_d, cap);
    report.rational_points = rational.size();
    std::vector<TruncElem> points;
    std::vector<TruncElem> alphas;
    bool lifted = true;
    report.all_in_gamma = true;
    report.well_defined = true;
    for (const auto& x0 : rational) {
      TruncElem x = embed_elem(x0, work);
      auto a = step2_alpha(x, cover);
      if (!a) {
        lifted = false;
        break;
      }
      report.all_in_gamma = report.all_in_gamma && a->in_gamma;
      report.well_defined = report.well_defined && a->well_defined;
      points.push_back(x);
      alphas.push_back(a->value);
    }
    if (!lifted) continue;
    report.all_lifted = true;

    std::map<std::uint64_t, std::size_t> position;
    for (std::size_t i = 0; i < points.size(); ++i) position[index_of(points[i])] = i;
    report.homomorphic = true;
    for (std::size_t i = 0; i < points.size() && report.homomorphic; ++i) {
      for (std::size_t j = 0; j < points.size() && report.homomorphic; ++j) {
        const std::size_t k = position.at(index_of(lmul(points[i], points[j])));
        if (alphas[k] != lmul(alphas[i], alphas[j])) report.homomorphic = false;
      }
    }
    std::set<TruncElem> image(alphas.begin(), alphas.end());
    std::set<TruncElem> gamma(cover.kernel.begin(), cover.kernel.end());
    report.surjective = image == gamma;
    for (std::size_t i = 0; i < points.size(); ++i) report.values.emplace_back(points[i], alphas[i]);
    return report;
  }
  throw DomainError("work field too small: some rational point has no lift up to degree " +
                    std::to_string(kMaxWorkDegree));
}

}  // namespace wittlang

#endif  // WITTLANG_LANG_HPP
