#ifndef WITTLANG_TESTS_HELPERS_HPP
#define WITTLANG_TESTS_HELPERS_HPP

// Conversions between library values and the oracle representation.

#include <vector>

#include "oracles.hpp"
#include "wittlang/wittlang.hpp"

namespace testing_support {

using namespace wittlang;

inline oracle::FieldOracle oracle_for(const gf::Field& f) { return {f.p(), f.spec().modulus}; }

inline oracle::SeriesMatrix to_series(const TruncElem& a) {
  const gf::Field& f = *a.field();
  const auto o = oracle_for(f);
  oracle::SeriesMatrix m = oracle::series_identity(o, a.n(), a.d());
  for (int k = 1; k <= a.d(); ++k)
    for (int i = 0; i < a.n(); ++i)
      for (int j = 0; j < a.n(); ++j) m[k][i][j] = f.to_vector(a.entry(k, i, j));
  return m;
}

inline TruncElem from_series(const FieldPtr& field, const oracle::SeriesMatrix& m) {
  const int d = static_cast<int>(m.size()) - 1;
  const int n = static_cast<int>(m[0].size());
  TruncElem out(field, n, d);
  for (int k = 1; k <= d; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.entry(k, i, j) = field->from_vector(m[k][i][j]);
  return out;
}

inline TruncElem oracle_mul(const TruncElem& a, const TruncElem& b) {
  const auto o = oracle_for(*a.field());
  return from_series(a.field(), oracle::series_mul(o, to_series(a), to_series(b)));
}

// Element from explicit integer matrices A_1..A_d.
inline TruncElem make_elem(const FieldPtr& field, const std::vector<std::vector<std::vector<int>>>& coeffs) {
  std::vector<Mat> ms;
  for (const auto& rows : coeffs) ms.push_back(mat::from_ints(*field, rows));
  const int n = ms.empty() ? 1 : ms.front().rows;
  return TruncElem(field, n, static_cast<int>(ms.size()), ms);
}

}  // namespace testing_support

#endif  // WITTLANG_TESTS_HELPERS_HPP
