#ifndef WITTLANG_MATRIX_HPP
#define WITTLANG_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wittlang/errors.hpp"
#include "wittlang/gf.hpp"

namespace wittlang {

using gf::Coeffs;
using gf::Field;
using gf::FieldPtr;

// Dense rows x cols matrix of raw field values, row-major. The field is
// supplied by the caller on every operation.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<Coeffs> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Coeffs{}) {}

  static Mat square(int n) { return Mat(n, n); }

  Coeffs& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Coeffs& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  friend bool operator==(const Mat&, const Mat&) = default;
  friend auto operator<=>(const Mat& x, const Mat& y) {
    if (auto c = x.rows <=> y.rows; c != 0) return c;
    if (auto c = x.cols <=> y.cols; c != 0) return c;
    return x.a <=> y.a;
  }
};

namespace mat {

inline Mat identity(const Field& f, int n) {
  Mat m = Mat::square(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

// Builds a matrix from small integers (reduced mod p into the prime field).
inline Mat from_ints(const Field& f, const std::vector<std::vector<int>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  Mat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw SpecError("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

inline Mat unit(const Field& f, int n, int i, int j) {
  Mat m = Mat::square(n);
  m.at(i, j) = f.one();
  return m;
}

inline void require_same_shape(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw SpecError("matrix shape mismatch");
}

inline Mat add(const Field& f, const Mat& x, const Mat& y) {
  require_same_shape(x, y);
  Mat out(x.rows, x.cols);
  for (std::size_t k = 0; k < x.a.size(); ++k) out.a[k] = f.add(x.a[k], y.a[k]);
  return out;
}

inline Mat sub(const Field& f, const Mat& x, const Mat& y) {
  require_same_shape(x, y);
  Mat out(x.rows, x.cols);
  for (std::size_t k = 0; k < x.a.size(); ++k) out.a[k] = f.sub(x.a[k], y.a[k]);
  return out;
}

inline Mat scale(const Field& f, const Coeffs& c, const Mat& x) {
  Mat out(x.rows, x.cols);
  for (std::size_t k = 0; k < x.a.size(); ++k) out.a[k] = f.mul(c, x.a[k]);
  return out;
}

inline Mat mul(const Field& f, const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw SpecError("matrix product shape mismatch");
  Mat out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int k = 0; k < x.cols; ++k) {
      const Coeffs& xik = x.at(i, k);
      if (f.is_zero(xik)) continue;
      for (int j = 0; j < y.cols; ++j) out.at(i, j) = f.add(out.at(i, j), f.mul(xik, y.at(k, j)));
    }
  }
  return out;
}

inline Mat frobenius(const Field& f, const Mat& x, std::uint64_t e) {
  Mat out(x.rows, x.cols);
  for (std::size_t k = 0; k < x.a.size(); ++k) out.a[k] = f.frobenius(x.a[k], e);
  return out;
}

inline bool is_zero(const Field& f, const Mat& x) {
  for (const auto& c : x.a) {
    if (!f.is_zero(c)) return false;
  }
  return true;
}

inline Mat power(const Field& f, const Mat& x, std::uint64_t e) {
  Mat result = identity(f, x.rows);
  Mat base = x;
  while (e > 0) {
    if (e & 1) result = mul(f, result, base);
    base = mul(f, base, base);
    e >>= 1;
  }
  return result;
}

// Row reduction in place; returns the rank and the pivot columns.
inline std::pair<int, std::vector<int>> row_reduce(const Field& f, Mat& m) {
  int rank = 0;
  std::vector<int> pivots;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < m.rows; ++i) {
      if (!f.is_zero(m.at(i, col))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
    const Coeffs inv = f.inv(m.at(rank, col));
    for (int j = 0; j < m.cols; ++j) m.at(rank, j) = f.mul(inv, m.at(rank, j));
    for (int i = 0; i < m.rows; ++i) {
      if (i == rank || f.is_zero(m.at(i, col))) continue;
      const Coeffs factor = m.at(i, col);
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(rank, j)));
    }
    pivots.push_back(col);
    ++rank;
  }
  return {rank, pivots};
}

inline Coeffs det(const Field& f, Mat m) {
  if (m.rows != m.cols) throw SpecError("determinant of a non-square matrix");
  Coeffs result = f.one();
  const int n = m.rows;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i) {
      if (!f.is_zero(m.at(i, col))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return f.zero();
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(col, j), m.at(pivot, j));
      result = f.neg(result);
    }
    result = f.mul(result, m.at(col, col));
    const Coeffs inv = f.inv(m.at(col, col));
    for (int i = col + 1; i < n; ++i) {
      if (f.is_zero(m.at(i, col))) continue;
      const Coeffs factor = f.mul(m.at(i, col), inv);
      for (int j = col; j < n; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(col, j)));
    }
  }
  return result;
}

inline std::optional<Mat> inverse(const Field& f, const Mat& m) {
  if (m.rows != m.cols) throw SpecError("inverse of a non-square matrix");
  const int n = m.rows;
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = f.one();
  }
  auto [rank, pivots] = row_reduce(f, aug);
  if (rank < n || pivots.back() >= n) return std::nullopt;
  Mat out = Mat::square(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  }
  return out;
}

// Flattens each matrix row-major into one row of the result.
inline Mat stack_rows(const std::vector<Mat>& ms) {
  if (ms.empty()) return {};
  const int len = ms.front().rows * ms.front().cols;
  Mat out(static_cast<int>(ms.size()), len);
  for (std::size_t k = 0; k < ms.size(); ++k) {
    if (ms[k].rows * ms[k].cols != len) throw SpecError("matrices of different sizes");
    for (int j = 0; j < len; ++j) out.at(static_cast<int>(k), j) = ms[k].a[j];
  }
  return out;
}

inline int rank(const Field& f, const std::vector<Mat>& family) {
  if (family.empty()) return 0;
  Mat m = stack_rows(family);
  return row_reduce(f, m).first;
}

inline std::string to_string(const Field& f, const Mat& m) {
  std::string out = "[";
  for (int i = 0; i < m.rows; ++i) {
    out += i == 0 ? "[" : ",[";
    for (int j = 0; j < m.cols; ++j) {
      if (j > 0) out += ",";
      out += f.to_string(m.at(i, j));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace mat
}  // namespace wittlang

#endif  // WITTLANG_MATRIX_HPP
