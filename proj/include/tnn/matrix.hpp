#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tnn/rational.hpp"

namespace tnn {

// Dense matrix over an exact field (or ring, for the integer lattice actions).
template <typename T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> a;  // row-major

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, T(0)) {}

  T& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator*(const Mat& o) const {
    assert(cols == o.rows);
    Mat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const T& v = (*this)(i, k);
        if (v == T(0)) continue;
        for (int j = 0; j < o.cols; ++j) r(i, j) += v * o(k, j);
      }
    return r;
  }

  Mat operator+(const Mat& o) const {
    assert(rows == o.rows && cols == o.cols);
    Mat r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
  }

  Mat transpose() const {
    Mat r(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_identity() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if ((*this)(i, j) != (i == j ? T(1) : T(0))) return false;
    return true;
  }
};

using RatMat = Mat<Rat>;
using IntMat = Mat<long long>;

// Determinant by fraction-free-ish Gaussian elimination over the field.
template <typename T>
T det(Mat<T> m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  T d(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m(r, c) != T(0)) { piv = r; break; }
    if (piv < 0) return T(0);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    T inv = T(1) / m(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (m(r, c) == T(0)) continue;
      T f = m(r, c) * inv;
      for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return d;
}

template <typename T>
int rank(Mat<T> m) {
  int rk = 0;
  for (int c = 0; c < m.cols && rk < m.rows; ++c) {
    int piv = -1;
    for (int r = rk; r < m.rows; ++r)
      if (m(r, c) != T(0)) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != rk)
      for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(rk, j));
    T inv = T(1) / m(rk, c);
    for (int r = rk + 1; r < m.rows; ++r) {
      if (m(r, c) == T(0)) continue;
      T f = m(r, c) * inv;
      for (int j = c; j < m.cols; ++j) m(r, j) -= f * m(rk, j);
    }
    ++rk;
  }
  return rk;
}

template <typename T>
Mat<T> inverse(const Mat<T>& m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  Mat<T> w = m, inv = Mat<T>::identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (w(r, c) != T(0)) { piv = r; break; }
    if (piv < 0) throw std::domain_error("inverse of singular matrix");
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(w(piv, j), w(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    T f = T(1) / w(c, c);
    for (int j = 0; j < n; ++j) { w(c, j) *= f; inv(c, j) *= f; }
    for (int r = 0; r < n; ++r) {
      if (r == c || w(r, c) == T(0)) continue;
      T g = w(r, c);
      for (int j = 0; j < n; ++j) {
        w(r, j) -= g * w(c, j);
        inv(r, j) -= g * inv(c, j);
      }
    }
  }
  return inv;
}

// k-th leading principal minor, k = 1..n.
template <typename T>
T leading_minor(const Mat<T>& m, int k) {
  Mat<T> sub(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub(i, j) = m(i, j);
  return det(sub);
}

template <typename T>
bool all_leading_minors_nonzero(const Mat<T>& m) {
  for (int k = 1; k <= m.rows; ++k)
    if (leading_minor(m, k) == T(0)) return false;
  return true;
}

// M = L*D*U with L unit lower-triangular, D diagonal, U unit upper-triangular.
// Exists iff all leading principal minors are nonzero.
template <typename T>
struct LDU {
  Mat<T> L, D, U;
};

template <typename T>
std::optional<LDU<T>> ldu_factor(const Mat<T>& m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  Mat<T> L = Mat<T>::identity(n), U = m, D(n, n);
  for (int c = 0; c < n; ++c) {
    if (U(c, c) == T(0)) return std::nullopt;
    T inv = T(1) / U(c, c);
    for (int r = c + 1; r < n; ++r) {
      T f = U(r, c) * inv;
      L(r, c) = f;
      if (f == T(0)) continue;
      for (int j = c; j < n; ++j) U(r, j) -= f * U(c, j);
    }
  }
  for (int i = 0; i < n; ++i) {
    D(i, i) = U(i, i);
    T inv = T(1) / U(i, i);
    for (int j = i; j < n; ++j) U(i, j) *= inv;
  }
  return LDU<T>{L, D, U};
}

// M = U*D*L with U unit upper-triangular, D diagonal, L unit lower-triangular
// (fields keep their shapes: .L unit lower, .U unit upper, product U·D·L).
template <typename T>
std::optional<LDU<T>> udl_factor(const Mat<T>& m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  // Flip through the antidiagonal exchange: J*M*J has reversed-index entries,
  // and its LDU gives the UDL of M after flipping each factor back.
  Mat<T> f(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) f(i, j) = m(n - 1 - i, n - 1 - j);
  auto ldu = ldu_factor(f);
  if (!ldu) return std::nullopt;
  auto flip = [n](const Mat<T>& x) {
    Mat<T> r(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r(i, j) = x(n - 1 - i, n - 1 - j);
    return r;
  };
  // Flipping swaps shapes: flip(L) is unit upper, flip(U) is unit lower.
  return LDU<T>{flip(ldu->U), flip(ldu->D), flip(ldu->L)};
}

// Solve A x = b exactly; nullopt if inconsistent, arbitrary free vars set to 0.
template <typename T>
std::optional<std::vector<T>> solve_linear(Mat<T> A, std::vector<T> b) {
  assert(static_cast<int>(b.size()) == A.rows);
  int n = A.rows, m = A.cols, rk = 0;
  std::vector<int> pivcol;
  for (int c = 0; c < m && rk < n; ++c) {
    int piv = -1;
    for (int r = rk; r < n; ++r)
      if (A(r, c) != T(0)) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != rk) {
      for (int j = 0; j < m; ++j) std::swap(A(piv, j), A(rk, j));
      std::swap(b[piv], b[rk]);
    }
    T inv = T(1) / A(rk, c);
    for (int j = c; j < m; ++j) A(rk, j) *= inv;
    b[rk] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == rk || A(r, c) == T(0)) continue;
      T f = A(r, c);
      for (int j = c; j < m; ++j) A(r, j) -= f * A(rk, j);
      b[r] -= f * b[rk];
    }
    pivcol.push_back(c);
    ++rk;
  }
  for (int r = rk; r < n; ++r)
    if (b[r] != T(0)) return std::nullopt;
  std::vector<T> x(m, T(0));
  for (int r = 0; r < rk; ++r) x[pivcol[r]] = b[r];
  return x;
}

template <typename T>
bool is_upper_triangular(const Mat<T>& m) {
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < i && j < m.cols; ++j)
      if (m(i, j) != T(0)) return false;
  return true;
}

template <typename T>
bool is_lower_triangular(const Mat<T>& m) {
  for (int i = 0; i < m.rows; ++i)
    for (int j = i + 1; j < m.cols; ++j)
      if (m(i, j) != T(0)) return false;
  return true;
}

template <typename T>
bool is_unipotent_upper(const Mat<T>& m) {
  if (!is_upper_triangular(m)) return false;
  for (int i = 0; i < m.rows; ++i)
    if (m(i, i) != T(1)) return false;
  return true;
}

template <typename T>
bool is_unipotent_lower(const Mat<T>& m) {
  if (!is_lower_triangular(m)) return false;
  for (int i = 0; i < m.rows; ++i)
    if (m(i, i) != T(1)) return false;
  return true;
}

}  // namespace tnn
