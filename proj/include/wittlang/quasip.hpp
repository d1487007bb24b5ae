#ifndef WITTLANG_QUASIP_HPP
#define WITTLANG_QUASIP_HPP

// Quotient maps from L_{n,d} onto groups generated by transvections
// T_i = I + Delta_i with Delta_i^2 = 0. theta_i reads the coefficient of
// Delta_i in A_1 (with respect to a basis of gl_n that starts with the
// Delta's) and returns I + a Delta_i; theta multiplies these in a chosen order.
//
// Also: unit groups of group algebras F_q[Gamma] and the quasi-p test
// (generated by elements of p-power order).

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wittlang/errors.hpp"
#include "wittlang/gf.hpp"
#include "wittlang/group_table.hpp"
#include "wittlang/lgroup.hpp"
#include "wittlang/matrix.hpp"
#include "wittlang/subgrp.hpp"

namespace wittlang {

struct TransvectionTarget {
  FieldPtr field;
  int n = 0;
  std::vector<Mat> deltas;
  std::vector<std::string> names;
  std::vector<Mat> basis;  // basis of gl_n; the first deltas.size() entries are the deltas
  Mat to_coordinates;      // vec(A) * to_coordinates = coordinates of A in `basis`

  std::size_t size() const { return deltas.size(); }

  Mat transvection(std::size_t i) const { return mat::add(*field, mat::identity(*field, n), deltas.at(i)); }

  std::vector<Mat> transvections() const {
    std::vector<Mat> out;
    for (std::size_t i = 0; i < deltas.size(); ++i) out.push_back(transvection(i));
    return out;
  }

  // Coordinate of A on basis vector b.
  Coeffs coordinate(const Mat& a, std::size_t b) const {
    const Field& f = *field;
    Coeffs acc = f.zero();
    for (std::size_t t = 0; t < a.a.size(); ++t) {
      if (f.is_zero(a.a[t])) continue;
      acc = f.add(acc, f.mul(a.a[t], to_coordinates.at(static_cast<int>(t), static_cast<int>(b))));
    }
    return acc;
  }
};

// Validates the deltas and extends them to a basis of gl_n: first by the
// candidates that are still independent (in order), then by E_ij row-major.
inline TransvectionTarget make_target(FieldPtr field, int n, std::vector<Mat> deltas, std::vector<std::string> names,
                                      const std::vector<Mat>& candidates = {}) {
  const Field& f = *field;
  if (names.empty()) {
    for (std::size_t i = 0; i < deltas.size(); ++i) names.push_back(std::to_string(i + 1));
  }
  if (names.size() != deltas.size()) throw SpecError("one name per delta");
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const Mat& d = deltas[i];
    if (d.rows != n || d.cols != n) throw SpecError("delta " + std::to_string(i) + " has the wrong size");
    if (mat::is_zero(f, d)) throw DomainError("generator " + std::to_string(i) + " is the identity");
    if (!mat::is_zero(f, mat::mul(f, d, d))) {
      throw DomainError("generator " + std::to_string(i) + " does not satisfy (g - 1)^2 = 0");
    }
    std::vector<Mat> prefix(deltas.begin(), deltas.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    if (mat::rank(f, prefix) != static_cast<int>(i) + 1) {
      throw DomainError("generator " + std::to_string(i) + " is linearly dependent on the earlier ones");
    }
  }
  std::vector<Mat> basis = deltas;
  auto try_add = [&](const Mat& m) {
    if (static_cast<int>(basis.size()) == n * n) return;
    basis.push_back(m);
    if (mat::rank(f, basis) != static_cast<int>(basis.size())) basis.pop_back();
  };
  for (const auto& c : candidates) try_add(c);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) try_add(mat::unit(f, n, i, j));
  if (static_cast<int>(basis.size()) != n * n) throw VerificationError("basis extension did not span gl_n");
  auto inv = mat::inverse(f, mat::stack_rows(basis));
  if (!inv) throw VerificationError("basis matrix is singular");
  return {std::move(field), n, std::move(deltas), std::move(names), std::move(basis), std::move(*inv)};
}

// Targets from transvection generators g_i with (g_i - 1)^2 = 0.
inline TransvectionTarget general_target(const FieldPtr& field, const std::vector<Mat>& generators,
                                         std::vector<std::string> names = {}) {
  if (generators.empty()) throw DomainError("at least one generator required");
  const int n = generators.front().rows;
  std::vector<Mat> deltas;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].rows != n || generators[i].cols != n) {
      throw DomainError("generator " + std::to_string(i) + " is not " + std::to_string(n) + "x" + std::to_string(n));
    }
    deltas.push_back(mat::sub(*field, generators[i], mat::identity(*field, n)));
  }
  return make_target(field, n, std::move(deltas), std::move(names));
}

namespace s3 {

inline Mat t12(const Field& f) { return mat::from_ints(f, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}); }
inline Mat t23(const Field& f) { return mat::from_ints(f, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}); }
inline Mat t13(const Field& f) { return mat::from_ints(f, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}); }

// The nine products listed alongside the S_3 permutation representation:
// D12, D23, D13, D12 D23, D23 D12, D12 D13, D13 D12, D23 D13, D13 D23.
// They span only a 4-dimensional subspace of gl_3(F_2) (each kills (1,1,1)^T).
inline std::vector<Mat> listed_family(const Field& f) {
  const Mat id = mat::identity(f, 3);
  const Mat d12 = mat::sub(f, t12(f), id);
  const Mat d23 = mat::sub(f, t23(f), id);
  const Mat d13 = mat::sub(f, t13(f), id);
  return {d12,
          d23,
          d13,
          mat::mul(f, d12, d23),
          mat::mul(f, d23, d12),
          mat::mul(f, d12, d13),
          mat::mul(f, d13, d12),
          mat::mul(f, d23, d13),
          mat::mul(f, d13, d23)};
}

}  // namespace s3

// S_3 inside GL_3(F_2) by permutation matrices, deltas D12, D23, D13. The
// basis continues with whichever listed products are independent, then E_ij.
inline TransvectionTarget build_s3_f2() {
  const FieldPtr f2 = gf::make_field(2, 1);
  const auto family = s3::listed_family(*f2);
  std::vector<Mat> deltas(family.begin(), family.begin() + 3);
  std::vector<Mat> products(family.begin() + 3, family.end());
  return make_target(f2, 3, std::move(deltas), {"12", "23", "13"}, products);
}

// SL_2(F_2) = S_3 through its three transvections I + E12, I + E21 and the
// swap I + (E11 + E12 + E21 + E22). Two components alone reach at most
// |{I, T1} {I, T2}| = 4 elements.
inline TransvectionTarget build_sl2_f2() {
  const FieldPtr f2 = gf::make_field(2, 1);
  return general_target(f2,
                        {mat::from_ints(*f2, {{1, 1}, {0, 1}}), mat::from_ints(*f2, {{1, 0}, {1, 1}}),
                         mat::from_ints(*f2, {{0, 1}, {1, 0}})},
                        {"12", "21", "sw"});
}

inline void require_target_shape(const TruncElem& m, const TransvectionTarget& target) {
  if (m.n() != target.n || !m.field()->same_as(*target.field)) {
    throw SpecError("element does not match the target's matrix size or field");
  }
}

inline Mat theta_component(const TruncElem& m, const TransvectionTarget& target, std::size_t i) {
  require_target_shape(m, target);
  if (i >= target.size()) throw DomainError("theta component index out of range");
  const Field& f = *target.field;
  const Coeffs a = target.coordinate(m.coeff(1), i);
  return mat::add(f, mat::identity(f, target.n), mat::scale(f, a, target.deltas[i]));
}

inline std::vector<std::size_t> default_order(const TransvectionTarget& target) {
  std::vector<std::size_t> order(target.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

inline void require_permutation(const std::vector<std::size_t>& order, std::size_t k) {
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw DomainError("composition order is not a permutation of the components");
  }
  if (sorted.size() != k) throw DomainError("composition order must list every component once");
}

inline Mat theta(const TruncElem& m, const TransvectionTarget& target, const std::vector<std::size_t>& order) {
  require_permutation(order, target.size());
  const Field& f = *target.field;
  Mat out = mat::identity(f, target.n);
  for (std::size_t i : order) out = mat::mul(f, out, theta_component(m, target, i));
  return out;
}

inline Mat theta(const TruncElem& m, const TransvectionTarget& target) {
  return theta(m, target, default_order(target));
}

// Maps names like "13" to component positions.
inline std::vector<std::size_t> parse_order(const TransvectionTarget& target, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  for (const auto& name : names) {
    auto it = std::find(target.names.begin(), target.names.end(), name);
    if (it == target.names.end()) throw DomainError("unknown theta component '" + name + "'");
    out.push_back(static_cast<std::size_t>(it - target.names.begin()));
  }
  require_permutation(out, target.size());
  return out;
}

struct ThetaImage {
  std::vector<std::size_t> order;
  std::uint64_t domain_size = 0;
  std::set<Mat> image;
};

inline ThetaImage theta_image(const TransvectionTarget& target, int d, const std::vector<std::size_t>& order,
                              std::uint64_t cap = size_cap()) {
  ThetaImage out{order, 0, {}};
  for (const auto& m : enumerate_group(target.field, target.n, d, cap)) {
    out.image.insert(theta(m, target, order));
    ++out.domain_size;
  }
  return out;
}

// Subgroup of GL_n generated by the given invertible matrices, by BFS.
inline std::set<Mat> matrix_closure(const Field& f, const std::vector<Mat>& gens, std::size_t cap = 100000) {
  if (gens.empty()) throw DomainError("closure of an empty generator list");
  std::set<Mat> seen{mat::identity(f, gens.front().rows)};
  std::deque<Mat> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    const Mat x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Mat y = mat::mul(f, x, g);
      if (seen.insert(y).second) {
        require_within_cap(seen.size(), cap, "matrix group closure");
        queue.push_back(std::move(y));
      }
    }
  }
  return seen;
}

inline GroupTable matrix_group_table(const FieldPtr& field, const std::set<Mat>& elements) {
  std::vector<Mat> elems(elements.begin(), elements.end());
  return GroupTable::from_elements(
      elems, [field](const Mat& a, const Mat& b) { return mat::mul(*field, a, b); }, [](const Mat& a) { return a; },
      [field](const Mat& a) { return mat::to_string(*field, a); });
}

// Checks T_i^p = I for every transvection.
inline bool transvections_have_order_p(const TransvectionTarget& target) {
  const Field& f = *target.field;
  for (std::size_t i = 0; i < target.size(); ++i) {
    const Mat t = target.transvection(i);
    if (mat::power(f, t, static_cast<std::uint64_t>(f.p())) != mat::identity(f, target.n)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Quasi-p test

inline bool is_prime_power_of(std::uint64_t k, std::uint64_t p) {
  while (k % p == 0) k /= p;
  return k == 1;
}

inline constexpr std::size_t kQuasiPCap = 10000;

// True iff the elements of p-power order generate gamma.
inline bool quasi_p_check(const GroupTable& gamma, int p) {
  require_within_cap(gamma.order(), kQuasiPCap, "quasi-p check");
  if (!gf::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  std::vector<Index> gens;
  Subgroup current = trivial_subgroup(gamma);
  for (Index x = 0; x < gamma.order(); ++x) {
    if (current.contains(x) || !is_prime_power_of(gamma.element_order(x), static_cast<std::uint64_t>(p))) continue;
    gens.push_back(x);
    current = closure(gamma, gens, kQuasiPCap);
  }
  return current.order() == gamma.order();
}

// ---------------------------------------------------------------------------
// Unit group of F_q[Gamma]

struct UnitGroup {
  GroupTable units;
  std::vector<std::vector<Coeffs>> elements;  // unit index -> coefficients indexed by gamma
  std::vector<Index> embedding;               // gamma index -> unit index of the basis vector
  std::uint64_t algebra_size = 0;
};

namespace detail {

// Product in F_q[Gamma]: (ab)_z = sum_{xy=z} a_x b_y.
inline std::vector<Coeffs> convolve(const GroupTable& gamma, const Field& f, const std::vector<Coeffs>& a,
                                    const std::vector<Coeffs>& b) {
  std::vector<Coeffs> out(gamma.order(), Coeffs{});
  for (Index x = 0; x < gamma.order(); ++x) {
    if (f.is_zero(a[x])) continue;
    for (Index y = 0; y < gamma.order(); ++y) {
      if (f.is_zero(b[y])) continue;
      const Index xy = gamma.mul(x, y);
      out[xy] = f.add(out[xy], f.mul(a[x], b[y]));
    }
  }
  return out;
}

}  // namespace detail

// Scans F_q[Gamma] for elements whose left-regular matrix is invertible.
inline UnitGroup group_algebra_units(const GroupTable& gamma, const FieldPtr& field, std::uint64_t cap = size_cap()) {
  const Field& f = *field;
  const std::size_t g = gamma.order();
  const std::uint64_t total = checked_pow(f.size(), g);
  require_within_cap(total, cap, "group algebra scan");

  auto decode = [&](std::uint64_t code) {
    std::vector<Coeffs> v(g);
    for (std::size_t k = g; k-- > 0;) {
      v[k] = f.element(code % f.size());
      code /= f.size();
    }
    return v;
  };
  auto encode = [&f](const std::vector<Coeffs>& v) {
    std::uint64_t code = 0;
    for (const auto& c : v) code = code * f.size() + f.index(c);
    return code;
  };

  auto elements = std::make_shared<std::vector<std::vector<Coeffs>>>();
  auto lookup = std::make_shared<std::unordered_map<std::uint64_t, Index>>();
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Coeffs> a = decode(code);
    // Column h of the left-regular matrix holds a_x at row x*h.
    Mat regular = Mat::square(static_cast<int>(g));
    for (Index h = 0; h < g; ++h)
      for (Index x = 0; x < g; ++x) regular.at(static_cast<int>(gamma.mul(x, h)), static_cast<int>(h)) = a[x];
    if (f.is_zero(mat::det(f, regular))) continue;
    lookup->emplace(code, elements->size());
    elements->push_back(std::move(a));
  }

  std::vector<std::string> labels;
  labels.reserve(elements->size());
  for (const auto& e : *elements) {
    std::string s = "(";
    for (std::size_t k = 0; k < e.size(); ++k) s += (k ? "," : "") + f.to_string(e[k]);
    labels.push_back(s + ")");
  }
  // Captures keep the group and field alive when the oracle is not materialized.
  auto gamma_copy = std::make_shared<const GroupTable>(gamma);
  GroupTable::MulFn mul = [elements, lookup, gamma_copy, field](Index a, Index b) -> Index {
    const auto prod = detail::convolve(*gamma_copy, *field, (*elements)[a], (*elements)[b]);
    std::uint64_t code = 0;
    for (const auto& c : prod) code = code * field->size() + field->index(c);
    return lookup->at(code);
  };

  UnitGroup out{GroupTable::from_oracle(elements->size(), std::move(mul), std::move(labels)), *elements, {}, total};
  for (Index x = 0; x < g; ++x) {
    std::vector<Coeffs> basis(g, Coeffs{});
    basis[x] = f.one();
    out.embedding.push_back(lookup->at(encode(basis)));
  }
  return out;
}

}  // namespace wittlang

#endif  // WITTLANG_QUASIP_HPP
