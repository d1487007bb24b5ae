#ifndef WITTLANG_TESTS_ORACLES_HPP
#define WITTLANG_TESTS_ORACLES_HPP

// Brute-force reference computations for the test suite. Nothing here calls
// the library's arithmetic: field elements are plain coefficient vectors,
// products are schoolbook with long division, and group elements are full
// matrix power series.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Poly = std::vector<int>;  // constant term first

inline int mod(long long a, int p) { return static_cast<int>(((a % p) + p) % p); }

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of a modulo a monic-or-not m over F_p.
inline Poly rem(Poly a, const Poly& m, int p) {
  Poly mm = m;
  trim(mm);
  trim(a);
  int lead_inv = 1;
  while (lead_inv * mm.back() % p != 1) ++lead_inv;
  while (a.size() >= mm.size()) {
    const int shift = static_cast<int>(a.size() - mm.size());
    const int c = a.back() * lead_inv % p;
    for (std::size_t k = 0; k < mm.size(); ++k) a[shift + k] = mod(a[shift + k] - c * mm[k], p);
    trim(a);
  }
  return a;
}

inline bool divides(const Poly& g, const Poly& f, int p) { return rem(f, g, p).empty(); }

// Every monic polynomial of degree k over F_p.
inline std::vector<Poly> monic_of_degree(int p, int k) {
  std::vector<Poly> out;
  long long count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (long long code = 0; code < count; ++code) {
    Poly f(k + 1, 0);
    long long c = code;
    for (int i = 0; i < k; ++i) {
      f[i] = static_cast<int>(c % p);
      c /= p;
    }
    f[k] = 1;
    out.push_back(f);
  }
  return out;
}

// No monic factor of degree 1..deg/2.
inline bool irreducible_by_factor_search(int p, const Poly& f) {
  const int r = static_cast<int>(f.size()) - 1;
  for (int k = 1; 2 * k <= r; ++k) {
    for (const auto& g : monic_of_degree(p, k)) {
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

// Arithmetic in F_p[x]/(modulus) on length-r vectors.
struct FieldOracle {
  int p;
  Poly modulus;

  int r() const { return static_cast<int>(modulus.size()) - 1; }

  Poly norm(Poly a) const {
    a = rem(std::move(a), modulus, p);
    a.resize(r(), 0);
    return a;
  }
  Poly add(const Poly& a, const Poly& b) const {
    Poly out(r(), 0);
    for (int k = 0; k < r(); ++k) out[k] = mod(a[k] + b[k], p);
    return out;
  }
  Poly neg(const Poly& a) const {
    Poly out(r(), 0);
    for (int k = 0; k < r(); ++k) out[k] = mod(-a[k], p);
    return out;
  }
  Poly mul(const Poly& a, const Poly& b) const {
    Poly prod(2 * r(), 0);
    for (int i = 0; i < r(); ++i)
      for (int j = 0; j < r(); ++j) prod[i + j] = mod(prod[i + j] + a[i] * b[j], p);
    return norm(prod);
  }
  Poly zero() const { return Poly(r(), 0); }
  Poly one() const {
    Poly o(r(), 0);
    o[0] = 1;
    return o;
  }
  bool is_zero(const Poly& a) const {
    return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
  }
  Poly pow(const Poly& a, std::uint64_t e) const {
    Poly out = one();
    for (std::uint64_t k = 0; k < e; ++k) out = mul(out, a);
    return out;
  }
  std::vector<Poly> elements() const {
    std::vector<Poly> out;
    long long count = 1;
    for (int i = 0; i < r(); ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      Poly a(r(), 0);
      long long c = code;
      for (int i = 0; i < r(); ++i) {
        a[i] = static_cast<int>(c % p);
        c /= p;
      }
      out.push_back(a);
    }
    return out;
  }
  // Inverse by search.
  Poly inv(const Poly& a) const {
    for (const auto& b : elements()) {
      if (mul(a, b) == one()) return b;
    }
    return zero();
  }
};

// A full matrix power series: m[k][i][j] is the s^k coefficient, k = 0..d.
using Entry = Poly;
using SeriesMatrix = std::vector<std::vector<std::vector<Entry>>>;

inline SeriesMatrix series_identity(const FieldOracle& f, int n, int d) {
  SeriesMatrix m(d + 1, std::vector<std::vector<Entry>>(n, std::vector<Entry>(n, f.zero())));
  for (int i = 0; i < n; ++i) m[0][i][i] = f.one();
  return m;
}

// (sum X_a s^a)(sum Y_b s^b) truncated at s^d, entrywise triple sum.
inline SeriesMatrix series_mul(const FieldOracle& f, const SeriesMatrix& x, const SeriesMatrix& y) {
  const int d = static_cast<int>(x.size()) - 1;
  const int n = static_cast<int>(x[0].size());
  SeriesMatrix out(d + 1, std::vector<std::vector<Entry>>(n, std::vector<Entry>(n, f.zero())));
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int l = 0; l < n; ++l) out[a + b][i][j] = f.add(out[a + b][i][j], f.mul(x[a][i][l], y[b][l][j]));
  return out;
}

// Determinant of a matrix with entries in F[s]/(s^{d+1}) by the Leibniz sum.
inline std::vector<Entry> series_det(const FieldOracle& f, const SeriesMatrix& m) {
  const int d = static_cast<int>(m.size()) - 1;
  const int n = static_cast<int>(m[0].size());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<Entry> total(d + 1, f.zero());
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    std::vector<Entry> term(d + 1, f.zero());
    term[0] = f.one();
    for (int i = 0; i < n; ++i) {
      std::vector<Entry> next(d + 1, f.zero());
      for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b) next[a + b] = f.add(next[a + b], f.mul(term[a], m[b][i][perm[i]]));
      term = next;
    }
    for (int k = 0; k <= d; ++k) total[k] = inversions % 2 ? f.add(total[k], f.neg(term[k])) : f.add(total[k], term[k]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 1; k <= m; ++k) {
    if (m % k == 0) out.push_back(k);
  }
  return out;
}

// Z/p-cover classes by canonical representatives: f with no monomial of
// degree divisible by p. Counts F_p^x-orbits of the nonzero ones.
inline std::uint64_t cover_count_canonical(int p, int bound) {
  std::vector<int> free_degrees;
  for (int m = 1; m <= bound; ++m) {
    if (m % p != 0) free_degrees.push_back(m);
  }
  std::uint64_t classes = 1;
  for (std::size_t i = 0; i < free_degrees.size(); ++i) classes *= static_cast<std::uint64_t>(p);
  return (classes - 1) / static_cast<std::uint64_t>(p - 1);
}

// Elements of order exactly p in (1 + s F_p[[s]])^x mod s^{d+1}, with
// integer series arithmetic.
inline std::uint64_t witt_order_p_elements(int p, int d) {
  std::uint64_t total = 1;
  for (int k = 0; k < d; ++k) total *= static_cast<std::uint64_t>(p);
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<int> a(d + 1, 0);
    a[0] = 1;
    std::uint64_t c = code;
    for (int k = 1; k <= d; ++k) {
      a[k] = static_cast<int>(c % p);
      c /= p;
    }
    std::vector<int> pw(d + 1, 0);
    pw[0] = 1;
    for (int e = 0; e < p; ++e) {
      std::vector<int> next(d + 1, 0);
      for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) next[i + j] = mod(next[i + j] + pw[i] * a[j], p);
      pw = next;
    }
    bool one = pw[0] == 1;
    for (int k = 1; k <= d; ++k) one = one && pw[k] == 0;
    if (one && code != 0) ++count;
  }
  return count;
}

}  // namespace oracle

#endif  // WITTLANG_TESTS_ORACLES_HPP
