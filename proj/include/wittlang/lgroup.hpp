#ifndef WITTLANG_LGROUP_HPP
#define WITTLANG_LGROUP_HPP

// The truncated groups L_{n,d}(F) = (1 + s gl_n(F)[s] / (s^{d+1}))^x, the
// punctured-line product Z x L_{n,d}, and the membership predicates for
// polynomial matrices over F[t] and F[t, 1/t].
//
// A TruncElem stores only A_1..A_d of I + sum A_i s^i, flattened coefficient by
// coefficient, each matrix row-major. That flat order is also the enumeration
// and serialization order.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wittlang/errors.hpp"
#include "wittlang/gf.hpp"
#include "wittlang/matrix.hpp"

namespace wittlang {

class TruncElem {
 public:
  TruncElem(FieldPtr field, int n, int d) : field_(std::move(field)), n_(n), d_(d) {
    if (!field_) throw SpecError("TruncElem needs a field");
    if (n < 1) throw DomainError("matrix size must be >= 1");
    if (d < 1) throw DomainError("truncation level must be >= 1");
    data_.assign(static_cast<std::size_t>(n) * n * d, Coeffs{});
  }

  TruncElem(FieldPtr field, int n, int d, const std::vector<Mat>& coeffs) : TruncElem(std::move(field), n, d) {
    if (static_cast<int>(coeffs.size()) != d) throw SpecError("expected d coefficient matrices");
    for (int k = 1; k <= d; ++k) set_coeff(k, coeffs[k - 1]);
  }

  static TruncElem identity(FieldPtr field, int n, int d) { return TruncElem(std::move(field), n, d); }

  const FieldPtr& field() const { return field_; }
  int n() const { return n_; }
  int d() const { return d_; }
  std::size_t block() const { return static_cast<std::size_t>(n_) * n_; }

  // k in [1, d]; i, j zero-based.
  const Coeffs& entry(int k, int i, int j) const { return data_[(k - 1) * block() + i * n_ + j]; }
  Coeffs& entry(int k, int i, int j) { return data_[(k - 1) * block() + i * n_ + j]; }

  Mat coeff(int k) const {
    if (k < 1 || k > d_) throw DomainError("coefficient index out of range");
    Mat m = Mat::square(n_);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) m.at(i, j) = entry(k, i, j);
    }
    return m;
  }

  void set_coeff(int k, const Mat& m) {
    if (k < 1 || k > d_) throw DomainError("coefficient index out of range");
    if (m.rows != n_ || m.cols != n_) throw SpecError("coefficient matrix has wrong size");
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) entry(k, i, j) = m.at(i, j);
    }
  }

  std::span<const Coeffs> raw() const { return data_; }
  std::span<Coeffs> raw() { return data_; }

  bool is_identity() const {
    for (const auto& c : data_) {
      if (!field_->is_zero(c)) return false;
    }
    return true;
  }

  bool same_shape(const TruncElem& o) const { return n_ == o.n_ && d_ == o.d_ && field_->same_as(*o.field_); }

  void require_same_shape(const TruncElem& o) const {
    if (!same_shape(o)) {
      throw SpecError("shape mismatch: L_{" + std::to_string(n_) + "," + std::to_string(d_) + "} vs L_{" +
                      std::to_string(o.n_) + "," + std::to_string(o.d_) + "}");
    }
  }

  friend bool operator==(const TruncElem& a, const TruncElem& b) { return a.same_shape(b) && a.data_ == b.data_; }
  friend bool operator<(const TruncElem& a, const TruncElem& b) { return a.data_ < b.data_; }

  std::string to_string() const {
    std::string out = "I";
    for (int k = 1; k <= d_; ++k) {
      const Mat m = coeff(k);
      if (mat::is_zero(*field_, m)) continue;
      out += " + " + mat::to_string(*field_, m) + "s";
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  FieldPtr field_;
  int n_;
  int d_;
  std::vector<Coeffs> data_;
};

namespace detail {

// out_k += sum_{i+j=k, i,j>=1} X_i Y_j, all blocks n x n.
inline void nil_mul_acc(const Field& f, int n, int d, std::span<const Coeffs> x, std::span<const Coeffs> y,
                        std::span<Coeffs> out) {
  const std::size_t blk = static_cast<std::size_t>(n) * n;
  for (int i = 1; i < d; ++i) {
    const Coeffs* xi = x.data() + (i - 1) * blk;
    for (int j = 1; i + j <= d; ++j) {
      const Coeffs* yj = y.data() + (j - 1) * blk;
      Coeffs* ok = out.data() + (i + j - 1) * blk;
      for (int r = 0; r < n; ++r) {
        for (int l = 0; l < n; ++l) {
          const Coeffs& xrl = xi[r * n + l];
          if (f.is_zero(xrl)) continue;
          for (int c = 0; c < n; ++c) ok[r * n + c] = f.add(ok[r * n + c], f.mul(xrl, yj[l * n + c]));
        }
      }
    }
  }
}

}  // namespace detail

inline TruncElem lmul(const TruncElem& a, const TruncElem& b) {
  a.require_same_shape(b);
  const Field& f = *a.field();
  TruncElem out(a.field(), a.n(), a.d());
  auto o = out.raw();
  auto x = a.raw();
  auto y = b.raw();
  for (std::size_t k = 0; k < o.size(); ++k) o[k] = f.add(x[k], y[k]);
  detail::nil_mul_acc(f, a.n(), a.d(), x, y, o);
  return out;
}

// Geometric series sum_{k<=d} (-N)^k for a = I + N.
inline TruncElem linv(const TruncElem& a) {
  const Field& f = *a.field();
  const int n = a.n();
  const int d = a.d();
  std::vector<Coeffs> minus_n(a.raw().size());
  for (std::size_t k = 0; k < minus_n.size(); ++k) minus_n[k] = f.neg(a.raw()[k]);

  TruncElem out(a.field(), n, d);
  std::vector<Coeffs> power = minus_n;
  for (int k = 1; k <= d; ++k) {
    for (std::size_t t = 0; t < power.size(); ++t) out.raw()[t] = f.add(out.raw()[t], power[t]);
    if (k == d) break;
    std::vector<Coeffs> next(power.size(), Coeffs{});
    detail::nil_mul_acc(f, n, d, power, minus_n, next);
    power = std::move(next);
  }
  return out;
}

inline TruncElem lpow(const TruncElem& a, std::uint64_t e) {
  TruncElem result = TruncElem::identity(a.field(), a.n(), a.d());
  TruncElem base = a;
  while (e > 0) {
    if (e & 1) result = lmul(result, base);
    base = lmul(base, base);
    e >>= 1;
  }
  return result;
}

// Smallest k >= 1 with a^k = identity. Every element has p-power order.
inline std::uint64_t element_order(const TruncElem& a) {
  std::uint64_t order = 1;
  TruncElem x = a;
  const auto p = static_cast<std::uint64_t>(a.field()->p());
  while (!x.is_identity()) {
    x = lpow(x, p);
    order *= p;
  }
  return order;
}

// Truncated power series sum_{k=0..d} c_k s^k over a field.
using Series = std::vector<Coeffs>;

namespace detail {

inline Series series_mul(const Field& f, const Series& x, const Series& y) {
  Series out(x.size(), Coeffs{});
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (f.is_zero(x[i])) continue;
    for (std::size_t j = 0; i + j < x.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(x[i], y[j]));
  }
  return out;
}

inline Series series_inv(const Field& f, const Series& x) {
  if (f.is_zero(x[0])) throw DomainError("series with zero constant term is not a unit");
  Series out(x.size(), Coeffs{});
  const Coeffs c0 = f.inv(x[0]);
  out[0] = c0;
  for (std::size_t k = 1; k < x.size(); ++k) {
    Coeffs acc{};
    for (std::size_t i = 1; i <= k; ++i) acc = f.add(acc, f.mul(x[i], out[k - i]));
    out[k] = f.neg(f.mul(c0, acc));
  }
  return out;
}

}  // namespace detail

// Determinant of I + sum A_i s^i over F[s]/(s^{d+1}), as an element of L_{1,d}.
// Elimination never needs pivoting: diagonal entries stay units and
// off-diagonal entries stay in the ideal (s).
inline TruncElem det_map(const TruncElem& a) {
  const Field& f = *a.field();
  const int n = a.n();
  const int d = a.d();
  std::vector<Series> m(static_cast<std::size_t>(n) * n, Series(d + 1, Coeffs{}));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Series& s = m[i * n + j];
      if (i == j) s[0] = f.one();
      for (int k = 1; k <= d; ++k) s[k] = a.entry(k, i, j);
    }
  }
  Series det(d + 1, Coeffs{});
  det[0] = f.one();
  for (int c = 0; c < n; ++c) {
    const Series& pivot = m[c * n + c];
    det = detail::series_mul(f, det, pivot);
    const Series pivot_inv = detail::series_inv(f, pivot);
    for (int i = c + 1; i < n; ++i) {
      const Series factor = detail::series_mul(f, m[i * n + c], pivot_inv);
      for (int j = c; j < n; ++j) {
        const Series t = detail::series_mul(f, factor, m[c * n + j]);
        for (int k = 0; k <= d; ++k) m[i * n + j][k] = f.sub(m[i * n + j][k], t[k]);
      }
    }
  }
  TruncElem out(a.field(), 1, d);
  for (int k = 1; k <= d; ++k) out.entry(k, 0, 0) = det[k];
  return out;
}

// Returns e with q = p^e, or throws.
inline std::uint64_t frobenius_exponent(const Field& f, std::uint64_t q) {
  const auto p = static_cast<std::uint64_t>(f.p());
  std::uint64_t e = 0;
  std::uint64_t v = 1;
  while (v < q) {
    v *= p;
    ++e;
  }
  if (v != q || e == 0) {
    throw DomainError(std::to_string(q) + " is not a positive power of the characteristic " + std::to_string(p));
  }
  return e;
}

// Entrywise x -> x^q on every A_i; s is fixed.
inline TruncElem frob_elem(const TruncElem& a, std::uint64_t q) {
  const Field& f = *a.field();
  const std::uint64_t e = frobenius_exponent(f, q);
  TruncElem out = a;
  for (auto& c : out.raw()) c = f.frobenius(c, e);
  return out;
}

inline TruncElem truncate(const TruncElem& a, int level) {
  if (level < 1 || level > a.d()) {
    throw DomainError("truncation level " + std::to_string(level) + " outside [1, " + std::to_string(a.d()) + "]");
  }
  TruncElem out(a.field(), a.n(), level);
  std::copy_n(a.raw().begin(), out.raw().size(), out.raw().begin());
  return out;
}

// Upper-left m x m block of every A_i. A set map only; see corner_hom_probe.
inline TruncElem corner_restrict(const TruncElem& a, int m) {
  if (m < 1 || m >= a.n()) {
    throw DomainError("corner size " + std::to_string(m) + " outside [1, " + std::to_string(a.n() - 1) + "]");
  }
  TruncElem out(a.field(), m, a.d());
  for (int k = 1; k <= a.d(); ++k) {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) out.entry(k, i, j) = a.entry(k, i, j);
    }
  }
  return out;
}

struct CornerProbe {
  bool homomorphic = false;
  TruncElem restricted_product;        // corner(a * b)
  TruncElem product_of_restrictions;   // corner(a) * corner(b)
};

inline CornerProbe corner_hom_probe(const TruncElem& a, const TruncElem& b, int m) {
  CornerProbe probe{false, corner_restrict(lmul(a, b), m), lmul(corner_restrict(a, m), corner_restrict(b, m))};
  probe.homomorphic = probe.restricted_product == probe.product_of_restrictions;
  return probe;
}

inline std::uint64_t group_order(const Field& f, int n, int d) {
  return checked_pow(f.size(), static_cast<std::uint64_t>(n) * n * d);
}

// Position of a in the lexicographic enumeration (first coefficient most significant).
inline std::uint64_t index_of(const TruncElem& a) {
  const Field& f = *a.field();
  std::uint64_t idx = 0;
  for (const auto& c : a.raw()) idx = idx * f.size() + f.index(c);
  return idx;
}

inline TruncElem element_at(const FieldPtr& field, int n, int d, std::uint64_t idx) {
  TruncElem out(field, n, d);
  auto raw = out.raw();
  const std::uint64_t q = field->size();
  for (std::size_t k = raw.size(); k-- > 0;) {
    raw[k] = field->element(idx % q);
    idx /= q;
  }
  return out;
}

inline std::vector<TruncElem> enumerate_group(const FieldPtr& field, int n, int d, std::uint64_t cap = size_cap()) {
  const std::uint64_t count = group_order(*field, n, d);
  require_within_cap(count, cap, "enumeration of L_{" + std::to_string(n) + "," + std::to_string(d) + "}");
  std::vector<TruncElem> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(element_at(field, n, d, i));
  return out;
}

template <class Rng>
TruncElem random_element(const FieldPtr& field, int n, int d, Rng& rng) {
  TruncElem out(field, n, d);
  std::uniform_int_distribution<std::uint64_t> dist(0, field->size() - 1);
  for (auto& c : out.raw()) c = field->element(dist(rng));
  return out;
}

// Lifts an element over a subfield into a larger field via the fixed embedding.
inline TruncElem embed_elem(const TruncElem& a, const FieldPtr& target) {
  const gf::Embedding& e = gf::embedding_for(a.field(), target);
  TruncElem out(target, a.n(), a.d());
  for (std::size_t k = 0; k < a.raw().size(); ++k) out.raw()[k] = e.apply(a.raw()[k]);
  return out;
}

// ---------------------------------------------------------------------------
// Punctured line: Z x L_{n,d}

struct PuncturedElem {
  std::int64_t nu = 0;
  TruncElem body;

  friend bool operator==(const PuncturedElem&, const PuncturedElem&) = default;
};

inline PuncturedElem punctured_mul(const PuncturedElem& a, const PuncturedElem& b) {
  return {a.nu + b.nu, lmul(a.body, b.body)};
}

inline PuncturedElem punctured_inv(const PuncturedElem& a) { return {-a.nu, linv(a.body)}; }

inline PuncturedElem punctured_identity(const FieldPtr& field, int n, int d) {
  return {0, TruncElem::identity(field, n, d)};
}

inline constexpr std::int64_t kDefaultNuBound = 8;

// All (nu, M) with |nu| <= nu_bound, nu ascending, M in enumeration order.
inline std::vector<PuncturedElem> enumerate_punctured(const FieldPtr& field, int n, int d,
                                                      std::int64_t nu_bound = kDefaultNuBound,
                                                      std::uint64_t cap = size_cap()) {
  if (nu_bound < 0) throw DomainError("nu bound must be non-negative");
  const std::uint64_t body = group_order(*field, n, d);
  const auto window = static_cast<std::uint64_t>(2 * nu_bound + 1);
  require_within_cap(body > UINT64_MAX / window ? UINT64_MAX : body * window, cap, "punctured enumeration");
  const auto bodies = enumerate_group(field, n, d, cap);
  std::vector<PuncturedElem> out;
  out.reserve(bodies.size() * window);
  for (std::int64_t nu = -nu_bound; nu <= nu_bound; ++nu) {
    for (const auto& m : bodies) out.push_back({nu, m});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial matrices over F[t] and F[t, 1/t]

// sum_k coeffs[k] t^{low + k}. Normalized: no zero coefficients at either end;
// the zero polynomial has empty coeffs.
struct LaurentPoly {
  int low = 0;
  std::vector<Coeffs> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  int high() const { return low + static_cast<int>(coeffs.size()) - 1; }
};

namespace laurent {

inline LaurentPoly normalize(const Field& f, LaurentPoly x) {
  while (!x.coeffs.empty() && f.is_zero(x.coeffs.back())) x.coeffs.pop_back();
  std::size_t lead = 0;
  while (lead < x.coeffs.size() && f.is_zero(x.coeffs[lead])) ++lead;
  if (lead == x.coeffs.size()) return {};
  x.coeffs.erase(x.coeffs.begin(), x.coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
  x.low += static_cast<int>(lead);
  return x;
}

// From integer coefficients of t^low, t^{low+1}, ...
inline LaurentPoly from_ints(const Field& f, std::vector<int> cs, int low = 0) {
  LaurentPoly out{low, {}};
  for (int c : cs) out.coeffs.push_back(f.from_int(c));
  return normalize(f, std::move(out));
}

inline LaurentPoly constant(const Field& f, const Coeffs& c) { return normalize(f, {0, {c}}); }

inline LaurentPoly add(const Field& f, const LaurentPoly& x, const LaurentPoly& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const int lo = std::min(x.low, y.low);
  const int hi = std::max(x.high(), y.high());
  LaurentPoly out{lo, std::vector<Coeffs>(static_cast<std::size_t>(hi - lo + 1), Coeffs{})};
  for (std::size_t k = 0; k < x.coeffs.size(); ++k) {
    auto& c = out.coeffs[x.low - lo + k];
    c = f.add(c, x.coeffs[k]);
  }
  for (std::size_t k = 0; k < y.coeffs.size(); ++k) {
    auto& c = out.coeffs[y.low - lo + k];
    c = f.add(c, y.coeffs[k]);
  }
  return normalize(f, std::move(out));
}

inline LaurentPoly neg(const Field& f, LaurentPoly x) {
  for (auto& c : x.coeffs) c = f.neg(c);
  return x;
}

inline LaurentPoly mul(const Field& f, const LaurentPoly& x, const LaurentPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  LaurentPoly out{x.low + y.low, std::vector<Coeffs>(x.coeffs.size() + y.coeffs.size() - 1, Coeffs{})};
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < y.coeffs.size(); ++j) {
      out.coeffs[i + j] = f.add(out.coeffs[i + j], f.mul(x.coeffs[i], y.coeffs[j]));
    }
  }
  return normalize(f, std::move(out));
}

// Value at t = x (x nonzero when negative exponents are present).
inline Coeffs evaluate(const Field& f, const LaurentPoly& poly, const Coeffs& x) {
  if (poly.is_zero()) return f.zero();
  if (poly.low < 0 && f.is_zero(x)) throw DomainError("Laurent polynomial evaluated at a pole");
  Coeffs acc = f.zero();
  for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
  const Coeffs shift = poly.low >= 0 ? f.pow(x, static_cast<std::uint64_t>(poly.low))
                                     : f.inv(f.pow(x, static_cast<std::uint64_t>(-poly.low)));
  return f.mul(acc, shift);
}

}  // namespace laurent

struct PolyMatrix {
  FieldPtr field;
  int n = 0;
  std::vector<LaurentPoly> entries;  // row-major

  PolyMatrix(FieldPtr f, int size) : field(std::move(f)), n(size), entries(static_cast<std::size_t>(size) * size) {
    if (!field) throw SpecError("PolyMatrix needs a field");
    if (size < 1) throw SpecError("PolyMatrix size must be >= 1");
  }

  static PolyMatrix identity(FieldPtr f, int size) {
    PolyMatrix m(f, size);
    for (int i = 0; i < size; ++i) m.at(i, i) = laurent::constant(*f, f->one());
    return m;
  }

  LaurentPoly& at(int i, int j) { return entries[static_cast<std::size_t>(i) * n + j]; }
  const LaurentPoly& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
};

inline PolyMatrix poly_matrix_mul(const PolyMatrix& x, const PolyMatrix& y) {
  if (x.n != y.n || !x.field->same_as(*y.field)) throw SpecError("polynomial matrix shape mismatch");
  const Field& f = *x.field;
  PolyMatrix out(x.field, x.n);
  for (int i = 0; i < x.n; ++i) {
    for (int j = 0; j < x.n; ++j) {
      LaurentPoly acc;
      for (int l = 0; l < x.n; ++l) acc = laurent::add(f, acc, laurent::mul(f, x.at(i, l), y.at(l, j)));
      out.at(i, j) = acc;
    }
  }
  return out;
}

inline constexpr int kMaxPolyMatrixSize = 8;

// Laplace expansion along the first row; exact over F[t, 1/t].
inline LaurentPoly poly_det(const PolyMatrix& m) {
  if (m.n > kMaxPolyMatrixSize) throw ResourceError("polynomial determinant limited to n <= 8");
  const Field& f = *m.field;
  // Columns consumed so far are tracked by a bitmask; row index = depth.
  auto rec = [&](auto&& self, int depth, unsigned used) -> LaurentPoly {
    if (depth == m.n) return laurent::constant(f, f.one());
    LaurentPoly acc;
    int sign_pos = 0;
    for (int c = 0; c < m.n; ++c) {
      if (used & (1u << c)) continue;
      const LaurentPoly& e = m.at(depth, c);
      if (!e.is_zero()) {
        LaurentPoly term = laurent::mul(f, e, self(self, depth + 1, used | (1u << c)));
        if (sign_pos % 2 == 1) term = laurent::neg(f, term);
        acc = laurent::add(f, acc, term);
      }
      ++sign_pos;
    }
    return acc;
  };
  return rec(rec, 0, 0u);
}

enum class AutfVariant { AffineLine, PuncturedLine };

// Affine line: polynomial entries, M(0) = I, det a nonzero constant.
// Punctured line: M(1) = I and det = c t^m with c != 0.
inline bool autf_member(const PolyMatrix& m, AutfVariant variant) {
  const Field& f = *m.field;
  if (static_cast<int>(m.entries.size()) != m.n * m.n) throw SpecError("malformed polynomial matrix");
  const Coeffs base = variant == AutfVariant::AffineLine ? f.zero() : f.one();
  if (variant == AutfVariant::AffineLine) {
    for (const auto& e : m.entries) {
      if (!e.is_zero() && e.low < 0) return false;
    }
  }
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      const Coeffs v = laurent::evaluate(f, m.at(i, j), base);
      if (v != (i == j ? f.one() : f.zero())) return false;
    }
  }
  const LaurentPoly det = poly_det(m);
  if (det.is_zero()) return false;
  if (variant == AutfVariant::AffineLine) return det.coeffs.size() == 1 && det.low == 0;
  return det.coeffs.size() == 1;
}

}  // namespace wittlang

#endif  // WITTLANG_LGROUP_HPP
