#ifndef WITTLANG_GF_HPP
#define WITTLANG_GF_HPP

// Exact arithmetic in F_{p^r} = F_p[x]/(modulus) for small p and r.
//
// Elements are dense coefficient vectors (constant term first) stored inline in
// a fixed-size array so that matrices and series over the field stay cheap to
// copy. A Field owns the presentation; FieldElem pairs a value with its Field
// for the checked public API, while the hot paths (matrices, group laws) carry
// one FieldPtr per object and operate on raw Coeffs.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wittlang/errors.hpp"

namespace wittlang::gf {

inline constexpr int kMaxDegree = 16;
inline constexpr int kMaxPrime = 97;

using Coeffs = std::array<std::uint8_t, kMaxDegree>;

struct FieldSpec {
  int p = 2;
  int r = 1;
  std::vector<int> modulus;  // monic, degree r, constant term first

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
  friend auto operator<=>(const FieldSpec&, const FieldSpec&) = default;
};

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace detail {

// Dense polynomials over F_p with constant term first; no trailing zeros.
using IntPoly = std::vector<int>;

inline void trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int inv_mod(int a, int p) {
  // p is prime and small; Fermat.
  int result = 1;
  int base = ((a % p) + p) % p;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

inline IntPoly poly_mod(IntPoly a, const IntPoly& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  const int lead_inv = inv_mod(m.back(), p);
  while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int factor = a.back() * lead_inv % p;
    for (int i = 0; i <= dm; ++i) {
      a[shift + i] = ((a[shift + i] - factor * m[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

inline IntPoly poly_mulmod(const IntPoly& a, const IntPoly& b, const IntPoly& m, int p) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(out), m, p);
}

inline IntPoly poly_gcd(IntPoly a, IntPoly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    IntPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace detail

// Ben-Or: a monic f of degree r is irreducible over F_p iff
// gcd(x^{p^k} - x mod f, f) = 1 for every k <= r/2, i.e. no factor of degree k.
inline bool is_irreducible(int p, const std::vector<int>& modulus) {
  detail::IntPoly f = modulus;
  detail::trim(f);
  const int r = static_cast<int>(f.size()) - 1;
  if (r < 1) return false;
  if (r == 1) return true;
  const detail::IntPoly x = {0, 1};
  detail::IntPoly h = x;
  for (int k = 1; k <= r / 2; ++k) {
    detail::IntPoly acc = {1};
    for (int i = 0; i < p; ++i) acc = detail::poly_mulmod(acc, h, f, p);
    h = acc;
    detail::IntPoly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    detail::trim(diff);
    const detail::IntPoly g = detail::poly_gcd(diff, f, p);
    if (g.size() > 1) return false;
  }
  return true;
}

// Presentations shipped with the library for p in {2,3,5}, r <= 4. Mostly Conway
// polynomials; F_9 uses x^2 + 1.
inline std::optional<std::vector<int>> builtin_modulus(int p, int r) {
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 1}, {0, 1}},          {{2, 2}, {1, 1, 1}},       {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}}, {{3, 1}, {0, 1}},          {{3, 2}, {1, 0, 1}},
      {{3, 3}, {1, 2, 0, 1}},    {{3, 4}, {2, 0, 0, 2, 1}}, {{5, 1}, {0, 1}},
      {{5, 2}, {2, 4, 1}},       {{5, 3}, {3, 3, 0, 1}},    {{5, 4}, {2, 4, 4, 0, 1}},
  };
  if (auto it = table.find({p, r}); it != table.end()) return it->second;
  return std::nullopt;
}

// Least monic irreducible of degree r, ordering candidates by their
// lower coefficients read as a base-p integer (constant term least significant).
inline std::vector<int> least_irreducible(int p, int r) {
  if (r == 1) return {0, 1};
  const std::uint64_t count = checked_pow(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(r));
  require_within_cap(count, std::uint64_t{1} << 24, "irreducible search");
  std::vector<int> f(r + 1, 0);
  f[r] = 1;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < r; ++i) {
      f[i] = static_cast<int>(c % p);
      c /= p;
    }
    if (f[0] != 0 && is_irreducible(p, f)) return f;
  }
  throw DomainError("no irreducible polynomial of degree " + std::to_string(r) + " over F_" +
                    std::to_string(p));
}

inline void validate(const FieldSpec& spec) {
  if (spec.p > kMaxPrime) {
    throw DomainError("characteristic " + std::to_string(spec.p) + " above supported bound " +
                      std::to_string(kMaxPrime));
  }
  if (!is_prime(spec.p)) throw DomainError("characteristic " + std::to_string(spec.p) + " is not prime");
  if (spec.r < 1 || spec.r > kMaxDegree) {
    throw DomainError("extension degree " + std::to_string(spec.r) + " outside [1, " +
                      std::to_string(kMaxDegree) + "]");
  }
  if (static_cast<int>(spec.modulus.size()) != spec.r + 1) {
    throw SpecError("modulus must have r+1 coefficients");
  }
  for (int c : spec.modulus) {
    if (c < 0 || c >= spec.p) throw SpecError("modulus coefficient out of range");
  }
  if (spec.modulus.back() != 1) throw SpecError("modulus must be monic");
  if (!is_irreducible(spec.p, spec.modulus)) throw DomainError("modulus is reducible over F_p");
}

// Default presentation: built-in table, else least irreducible.
inline FieldSpec make_field_spec(int p, int r) {
  if (!is_prime(p) || p > kMaxPrime) throw DomainError("unsupported characteristic " + std::to_string(p));
  if (r < 1 || r > kMaxDegree) throw DomainError("unsupported extension degree " + std::to_string(r));
  FieldSpec spec{p, r, builtin_modulus(p, r).value_or(std::vector<int>{})};
  if (spec.modulus.empty()) spec.modulus = least_irreducible(p, r);
  validate(spec);
  return spec;
}

class Field {
 public:
  explicit Field(FieldSpec spec) : spec_(std::move(spec)) {
    validate(spec_);
    size_ = checked_pow(static_cast<std::uint64_t>(spec_.p), static_cast<std::uint64_t>(spec_.r));
  }

  const FieldSpec& spec() const { return spec_; }
  int p() const { return spec_.p; }
  int degree() const { return spec_.r; }
  std::uint64_t size() const { return size_; }

  bool same_as(const Field& other) const { return this == &other || spec_ == other.spec_; }

  Coeffs zero() const { return Coeffs{}; }
  Coeffs one() const { return from_int(1); }

  Coeffs from_int(long long c) const {
    Coeffs out{};
    const long long p = spec_.p;
    out[0] = static_cast<std::uint8_t>(((c % p) + p) % p);
    return out;
  }

  // The class of x; equals from_int(0) when r = 1 and the modulus is x.
  Coeffs generator() const {
    if (spec_.r == 1) return from_int(-spec_.modulus[0]);
    Coeffs out{};
    out[1] = 1;
    return out;
  }

  Coeffs from_vector(std::span<const int> v) const {
    if (static_cast<int>(v.size()) > spec_.r) throw SpecError("coefficient vector longer than field degree");
    Coeffs out{};
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0 || v[i] >= spec_.p) throw SpecError("coefficient out of range for F_" + std::to_string(spec_.p));
      out[i] = static_cast<std::uint8_t>(v[i]);
    }
    return out;
  }

  std::vector<int> to_vector(const Coeffs& a) const {
    return std::vector<int>(a.begin(), a.begin() + spec_.r);
  }

  bool is_zero(const Coeffs& a) const {
    return std::all_of(a.begin(), a.begin() + spec_.r, [](std::uint8_t c) { return c == 0; });
  }

  Coeffs add(const Coeffs& a, const Coeffs& b) const {
    Coeffs out{};
    for (int i = 0; i < spec_.r; ++i) {
      const int s = a[i] + b[i];
      out[i] = static_cast<std::uint8_t>(s >= spec_.p ? s - spec_.p : s);
    }
    return out;
  }

  Coeffs neg(const Coeffs& a) const {
    Coeffs out{};
    for (int i = 0; i < spec_.r; ++i) out[i] = static_cast<std::uint8_t>(a[i] == 0 ? 0 : spec_.p - a[i]);
    return out;
  }

  Coeffs sub(const Coeffs& a, const Coeffs& b) const { return add(a, neg(b)); }

  Coeffs scale(const Coeffs& a, int c) const {
    const int cc = ((c % spec_.p) + spec_.p) % spec_.p;
    Coeffs out{};
    for (int i = 0; i < spec_.r; ++i) out[i] = static_cast<std::uint8_t>(a[i] * cc % spec_.p);
    return out;
  }

  Coeffs mul(const Coeffs& a, const Coeffs& b) const {
    const int r = spec_.r;
    const int p = spec_.p;
    if (r == 1) {
      Coeffs out{};
      out[0] = static_cast<std::uint8_t>(a[0] * b[0] % p);
      return out;
    }
    std::array<std::uint32_t, 2 * kMaxDegree> prod{};
    for (int i = 0; i < r; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < r; ++j) prod[i + j] += static_cast<std::uint32_t>(a[i]) * b[j];
    }
    for (int k = 0; k < 2 * r - 1; ++k) prod[k] %= static_cast<std::uint32_t>(p);
    // x^r = -(m_0 + ... + m_{r-1} x^{r-1}); reduce from the top.
    for (int k = 2 * r - 2; k >= r; --k) {
      const std::uint32_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (int i = 0; i < r; ++i) {
        const std::uint32_t m = static_cast<std::uint32_t>(spec_.modulus[i]);
        if (m == 0) continue;
        prod[k - r + i] = (prod[k - r + i] + c * (static_cast<std::uint32_t>(p) - m)) % static_cast<std::uint32_t>(p);
      }
    }
    Coeffs out{};
    for (int i = 0; i < r; ++i) out[i] = static_cast<std::uint8_t>(prod[i]);
    return out;
  }

  Coeffs pow(Coeffs a, std::uint64_t e) const {
    Coeffs result = one();
    while (e > 0) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  Coeffs inv(const Coeffs& a) const {
    if (is_zero(a)) throw DomainError("inverse of zero");
    return pow(a, size_ - 2);
  }

  // a^{p^e}. Exponents are reduced mod r since a^{p^r} = a.
  Coeffs frobenius(const Coeffs& a, std::uint64_t e) const {
    Coeffs out = a;
    for (std::uint64_t i = 0; i < e % static_cast<std::uint64_t>(spec_.r); ++i) {
      out = pow(out, static_cast<std::uint64_t>(spec_.p));
    }
    return out;
  }

  // Position in the lexicographic order of coefficient vectors (constant term
  // most significant).
  std::uint64_t index(const Coeffs& a) const {
    std::uint64_t idx = 0;
    for (int i = 0; i < spec_.r; ++i) idx = idx * spec_.p + a[i];
    return idx;
  }

  Coeffs element(std::uint64_t idx) const {
    if (idx >= size_) throw DomainError("field element index out of range");
    Coeffs out{};
    for (int i = spec_.r - 1; i >= 0; --i) {
      out[i] = static_cast<std::uint8_t>(idx % spec_.p);
      idx /= spec_.p;
    }
    return out;
  }

  std::string to_string(const Coeffs& a) const {
    std::string out;
    for (int i = spec_.r - 1; i >= 0; --i) {
      if (a[i] == 0) continue;
      if (!out.empty()) out += "+";
      if (i == 0 || a[i] != 1) out += std::to_string(a[i]);
      if (i >= 1) out += "g";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  FieldSpec spec_;
  std::uint64_t size_ = 0;
};

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr make_field(FieldSpec spec) { return std::make_shared<const Field>(std::move(spec)); }
inline FieldPtr make_field(int p, int r = 1) { return make_field(make_field_spec(p, r)); }

// Field of size q = p^e with the default presentation.
inline FieldPtr make_field_of_size(std::uint64_t q) {
  for (int p = 2; p <= kMaxPrime; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t v = 1;
    for (int e = 1; e <= kMaxDegree; ++e) {
      v *= static_cast<std::uint64_t>(p);
      if (v == q) return make_field(p, e);
      if (v > q) break;
    }
  }
  throw DomainError("no supported field of size " + std::to_string(q));
}

// Element bundled with its field, for the checked API.
class FieldElem {
 public:
  FieldElem(FieldPtr field, Coeffs value) : field_(std::move(field)), value_(value) {}
  FieldElem(FieldPtr field, std::span<const int> coeffs) : field_(std::move(field)) {
    value_ = field_->from_vector(coeffs);
  }

  static FieldElem from_int(FieldPtr field, long long c) {
    const Coeffs v = field->from_int(c);
    return {std::move(field), v};
  }

  const FieldPtr& field() const { return field_; }
  const Coeffs& value() const { return value_; }
  std::vector<int> coeffs() const { return field_->to_vector(value_); }
  bool is_zero() const { return field_->is_zero(value_); }
  std::string to_string() const { return field_->to_string(value_); }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    a.check(b);
    return {a.field_, a.field_->add(a.value_, b.value_)};
  }
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    a.check(b);
    return {a.field_, a.field_->sub(a.value_, b.value_)};
  }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    a.check(b);
    return {a.field_, a.field_->mul(a.value_, b.value_)};
  }
  FieldElem operator-() const { return {field_, field_->neg(value_)}; }
  FieldElem inverse() const { return {field_, field_->inv(value_)}; }
  FieldElem pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.field_->same_as(*b.field_) && a.value_ == b.value_;
  }

 private:
  void check(const FieldElem& other) const {
    if (!field_->same_as(*other.field_)) throw SpecError("field elements belong to different fields");
  }

  FieldPtr field_;
  Coeffs value_{};
};

enum class ArithOp { Add, Mul, Inv };

inline FieldElem field_arith(const FieldElem& a, const FieldElem& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Mul:
      return a * b;
    case ArithOp::Inv:
      return a.inverse();
  }
  throw DomainError("unknown arithmetic op");
}

inline FieldElem frobenius(const FieldElem& a, std::uint64_t e) {
  return {a.field(), a.field()->frobenius(a.value(), e)};
}

inline std::vector<FieldElem> enumerate_field(const FieldPtr& field) {
  require_within_cap(field->size(), kDefaultSizeCap, "field enumeration");
  std::vector<FieldElem> out;
  out.reserve(field->size());
  for (std::uint64_t i = 0; i < field->size(); ++i) out.emplace_back(field, field->element(i));
  return out;
}

// Fixed embedding F_{p^a} -> F_{p^b} for a | b: the source generator goes to
// the least (by index) root of the source modulus in the target.
class Embedding {
 public:
  Embedding(FieldPtr source, FieldPtr target) : source_(std::move(source)), target_(std::move(target)) {
    const auto& s = source_->spec();
    const auto& t = target_->spec();
    if (s.p != t.p) throw DomainError("embedding between different characteristics");
    if (t.r % s.r != 0) {
      throw DomainError("source degree " + std::to_string(s.r) + " does not divide target degree " +
                        std::to_string(t.r));
    }
    image_of_generator_ = least_root(*target_, s.modulus);
  }

  const FieldPtr& source() const { return source_; }
  const FieldPtr& target() const { return target_; }
  const Coeffs& image_of_generator() const { return image_of_generator_; }

  Coeffs apply(const Coeffs& a) const {
    Coeffs acc = target_->zero();
    Coeffs power = target_->one();
    for (int i = 0; i < source_->degree(); ++i) {
      if (a[i] != 0) acc = target_->add(acc, target_->scale(power, a[i]));
      power = target_->mul(power, image_of_generator_);
    }
    return acc;
  }

  FieldElem operator()(const FieldElem& a) const {
    if (!a.field()->same_as(*source_)) throw SpecError("element is not in the embedding source");
    return {target_, apply(a.value())};
  }

  static Coeffs least_root(const Field& field, const std::vector<int>& poly) {
    require_within_cap(field.size(), kDefaultSizeCap, "root search");
    for (std::uint64_t i = 0; i < field.size(); ++i) {
      const Coeffs x = field.element(i);
      Coeffs acc = field.zero();
      for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
        acc = field.add(field.mul(acc, x), field.from_int(*it));
      }
      if (field.is_zero(acc)) return x;
    }
    throw DomainError("modulus inconsistency: no root of the source modulus in the target field");
  }

 private:
  FieldPtr source_;
  FieldPtr target_;
  Coeffs image_of_generator_{};
};

// Cached embedding lookup, one per (source, target) presentation pair.
inline const Embedding& embedding_for(const FieldPtr& source, const FieldPtr& target) {
  static std::mutex mu;
  static std::map<std::pair<FieldSpec, FieldSpec>, std::unique_ptr<Embedding>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(source->spec(), target->spec());
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::make_unique<Embedding>(source, target)).first;
  }
  return *it->second;
}

inline FieldElem embed(const FieldElem& a, const FieldPtr& target) {
  const Embedding& e = embedding_for(a.field(), target);
  return {target, e.apply(a.value())};
}

}  // namespace wittlang::gf

#endif  // WITTLANG_GF_HPP
