#ifndef WITTLANG_HOPF_HPP
#define WITTLANG_HOPF_HPP

// Coordinate ring of L_{n,d}: the polynomial algebra on X_{ij lambda}
// (1 <= i,j <= n, 1 <= lambda <= d) with the convolution comultiplication
//
//   X_{ij lambda} -> sum_{l, mu+nu=lambda} X_{il nu} (x) X_{lj mu},  X_{ij0} = delta_ij,
//
// counit "evaluate at the identity", and evaluation against TruncElem points,
// where X_{ij lambda}(I + sum A_k s^k) = (A_lambda)_{ij}.

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "wittlang/errors.hpp"
#include "wittlang/gf.hpp"
#include "wittlang/lgroup.hpp"

namespace wittlang {

// X_{i j lambda}, indices 1-based.
struct Generator {
  int i = 1;
  int j = 1;
  int lambda = 1;

  friend bool operator==(const Generator&, const Generator&) = default;
  // Canonical factor order: (lambda, i, j).
  friend auto operator<=>(const Generator& a, const Generator& b) {
    return std::tie(a.lambda, a.i, a.j) <=> std::tie(b.lambda, b.i, b.j);
  }
};

inline std::string to_string(const Generator& g) {
  return "X" + std::to_string(g.i) + std::to_string(g.j) + std::to_string(g.lambda);
}

class HopfMonomial {
 public:
  HopfMonomial(int n, int d) : n_(n), d_(d) {
    if (n < 1 || d < 1) throw DomainError("monomial shape must have n, d >= 1");
  }
  HopfMonomial(int n, int d, std::vector<Generator> factors) : HopfMonomial(n, d) {
    for (const auto& g : factors) check(g);
    factors_ = std::move(factors);
    std::sort(factors_.begin(), factors_.end());
  }

  static HopfMonomial unit(int n, int d) { return HopfMonomial(n, d); }
  static HopfMonomial generator(int n, int d, Generator g) { return HopfMonomial(n, d, {g}); }

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<Generator>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  std::size_t degree() const { return factors_.size(); }

  friend HopfMonomial operator*(const HopfMonomial& a, const HopfMonomial& b) {
    if (a.n_ != b.n_ || a.d_ != b.d_) throw SpecError("monomials of different shapes");
    std::vector<Generator> f = a.factors_;
    f.insert(f.end(), b.factors_.begin(), b.factors_.end());
    return HopfMonomial(a.n_, a.d_, std::move(f));
  }

  friend bool operator==(const HopfMonomial&, const HopfMonomial&) = default;
  friend auto operator<=>(const HopfMonomial& a, const HopfMonomial& b) {
    if (auto c = std::tie(a.n_, a.d_) <=> std::tie(b.n_, b.d_); c != 0) return c;
    if (auto c = a.factors_.size() <=> b.factors_.size(); c != 0) return c;
    return a.factors_ <=> b.factors_;
  }

  std::string to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& g : factors_) out += (out.empty() ? "" : "*") + wittlang::to_string(g);
    return out;
  }

 private:
  void check(const Generator& g) const {
    if (g.i < 1 || g.i > n_ || g.j < 1 || g.j > n_ || g.lambda < 1 || g.lambda > d_) {
      throw DomainError("generator " + wittlang::to_string(g) + " out of range for n=" + std::to_string(n_) +
                        ", d=" + std::to_string(d_));
    }
  }

  int n_;
  int d_;
  std::vector<Generator> factors_;
};

inline std::vector<Generator> all_generators(int n, int d) {
  std::vector<Generator> out;
  for (int lambda = 1; lambda <= d; ++lambda)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) out.push_back({i, j, lambda});
  return out;
}

// F-linear combination of K-fold tensors of monomials. Zero coefficients are
// never stored, so equality of term maps is equality of tensors.
template <std::size_t K>
class Tensor {
 public:
  using Key = std::array<HopfMonomial, K>;

  explicit Tensor(FieldPtr field) : field_(std::move(field)) {}

  const FieldPtr& field() const { return field_; }
  const std::map<Key, Coeffs>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(const Key& key, const Coeffs& c) {
    if (field_->is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (inserted) return;
    it->second = field_->add(it->second, c);
    if (field_->is_zero(it->second)) terms_.erase(it);
  }

  void add(const Tensor& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, c);
  }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.field_->same_as(*b.field_) && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : terms_) {
      if (!out.empty()) out += " + ";
      if (c != field_->one()) out += field_->to_string(c) + "*";
      for (std::size_t k = 0; k < K; ++k) out += (k ? "(x)" : "") + key[k].to_string();
    }
    return out;
  }

 private:
  FieldPtr field_;
  std::map<Key, Coeffs> terms_;
};

using HopfPoly = Tensor<1>;
using TensorPoly = Tensor<2>;
using TripleTensor = Tensor<3>;

// (a (x) b)(c (x) d) = ac (x) bd.
inline TensorPoly tensor_mul(const TensorPoly& x, const TensorPoly& y) {
  const Field& f = *x.field();
  TensorPoly out(x.field());
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) out.add_term({kx[0] * ky[0], kx[1] * ky[1]}, f.mul(cx, cy));
  }
  return out;
}

// The displayed convolution sum with X_{ij0} replaced by delta_ij.
inline TensorPoly comult(const FieldPtr& field, int n, int d, const Generator& g) {
  static_cast<void>(HopfMonomial::generator(n, d, g));  // validates the indices
  const HopfMonomial one = HopfMonomial::unit(n, d);
  auto factor = [&](int i, int j, int lambda) -> std::optional<HopfMonomial> {
    if (lambda == 0) {
      if (i != j) return std::nullopt;
      return one;
    }
    return HopfMonomial::generator(n, d, {i, j, lambda});
  };
  TensorPoly out(field);
  for (int l = 1; l <= n; ++l) {
    for (int nu = 0; nu <= g.lambda; ++nu) {
      const int mu = g.lambda - nu;
      auto left = factor(g.i, l, nu);
      auto right = factor(l, g.j, mu);
      if (left && right) out.add_term({*left, *right}, field->one());
    }
  }
  return out;
}

// Extends comult multiplicatively to monomials.
inline TensorPoly comult(const FieldPtr& field, const HopfMonomial& m) {
  TensorPoly out(field);
  out.add_term({HopfMonomial::unit(m.n(), m.d()), HopfMonomial::unit(m.n(), m.d())}, field->one());
  for (const auto& g : m.factors()) out = tensor_mul(out, comult(field, m.n(), m.d(), g));
  return out;
}

// (comult (x) id)
inline TripleTensor comult_left(const TensorPoly& t) {
  const Field& f = *t.field();
  TripleTensor out(t.field());
  for (const auto& [key, c] : t.terms()) {
    const TensorPoly inner_t = comult(t.field(), key[0]);
    for (const auto& [inner, ci] : inner_t.terms()) {
      out.add_term({inner[0], inner[1], key[1]}, f.mul(c, ci));
    }
  }
  return out;
}

// (id (x) comult)
inline TripleTensor comult_right(const TensorPoly& t) {
  const Field& f = *t.field();
  TripleTensor out(t.field());
  for (const auto& [key, c] : t.terms()) {
    const TensorPoly inner_t = comult(t.field(), key[1]);
    for (const auto& [inner, ci] : inner_t.terms()) {
      out.add_term({key[0], inner[0], inner[1]}, f.mul(c, ci));
    }
  }
  return out;
}

// Evaluation at the identity: 1 on the unit monomial, 0 on anything else.
inline Coeffs counit(const Field& f, const HopfMonomial& m) { return m.is_unit() ? f.one() : f.zero(); }

inline gf::FieldElem counit(const FieldPtr& field, const HopfMonomial& m) { return {field, counit(*field, m)}; }

// (counit (x) id)
inline HopfPoly counit_left(const TensorPoly& t) {
  const Field& f = *t.field();
  HopfPoly out(t.field());
  for (const auto& [key, c] : t.terms()) out.add_term({key[1]}, f.mul(c, counit(f, key[0])));
  return out;
}

// (id (x) counit)
inline HopfPoly counit_right(const TensorPoly& t) {
  const Field& f = *t.field();
  HopfPoly out(t.field());
  for (const auto& [key, c] : t.terms()) out.add_term({key[0]}, f.mul(c, counit(f, key[1])));
  return out;
}

inline HopfPoly as_poly(const FieldPtr& field, const HopfMonomial& m) {
  HopfPoly out(field);
  out.add_term({m}, field->one());
  return out;
}

inline void require_shape(const HopfMonomial& m, const TruncElem& a) {
  if (m.n() != a.n() || m.d() != a.d()) throw SpecError("monomial and group element have different shapes");
}

inline Coeffs evaluate_raw(const HopfMonomial& m, const TruncElem& a) {
  require_shape(m, a);
  const Field& f = *a.field();
  Coeffs acc = f.one();
  for (const auto& g : m.factors()) acc = f.mul(acc, a.entry(g.lambda, g.i - 1, g.j - 1));
  return acc;
}

inline gf::FieldElem evaluate(const HopfMonomial& m, const TruncElem& a) { return {a.field(), evaluate_raw(m, a)}; }

// sum over terms of c * left(a) * right(b).
inline Coeffs evaluate_tensor(const TensorPoly& t, const TruncElem& a, const TruncElem& b) {
  a.require_same_shape(b);
  const Field& f = *a.field();
  Coeffs acc = f.zero();
  for (const auto& [key, c] : t.terms()) {
    acc = f.add(acc, f.mul(c, f.mul(evaluate_raw(key[0], a), evaluate_raw(key[1], b))));
  }
  return acc;
}

// Comultiplication dualizes multiplication: X(a*b) = comult(X)(a, b).
inline bool pairing_check(const Generator& g, const TruncElem& a, const TruncElem& b) {
  a.require_same_shape(b);
  const TensorPoly t = comult(a.field(), a.n(), a.d(), g);
  return evaluate_raw(HopfMonomial::generator(a.n(), a.d(), g), lmul(a, b)) == evaluate_tensor(t, a, b);
}

// Antipode realized pointwise: S(m)(a) = m(a^{-1}).
inline gf::FieldElem antipode_eval(const HopfMonomial& m, const TruncElem& a) {
  require_shape(m, a);
  return evaluate(m, linv(a));
}

// sum S(x_(1))(a) * x_(2)(a) == counit(x).
inline bool antipode_check(const HopfMonomial& m, const TruncElem& a) {
  require_shape(m, a);
  const Field& f = *a.field();
  const TruncElem inv = linv(a);
  Coeffs acc = f.zero();
  const TensorPoly t = comult(a.field(), m);
  for (const auto& [key, c] : t.terms()) {
    acc = f.add(acc, f.mul(c, f.mul(evaluate_raw(key[0], inv), evaluate_raw(key[1], a))));
  }
  return acc == counit(f, m);
}

// Coassociativity on one generator, compared as canonical triple tensors.
inline bool coassociative(const FieldPtr& field, int n, int d, const Generator& g) {
  const TensorPoly t = comult(field, n, d, g);
  return comult_left(t) == comult_right(t);
}

inline bool counit_law(const FieldPtr& field, int n, int d, const Generator& g) {
  const TensorPoly t = comult(field, n, d, g);
  const HopfPoly x = as_poly(field, HopfMonomial::generator(n, d, g));
  return counit_left(t) == x && counit_right(t) == x;
}

}  // namespace wittlang

#endif  // WITTLANG_HOPF_HPP
