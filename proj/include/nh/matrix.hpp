#pragma once
#include <initializer_list>
#include <vector>

#include "nh/exact.hpp"

namespace nh {

template <class T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
  Mat(int r, int c, const T& fill) : rows(r), cols(c), a(size_t(r) * c, fill) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  T& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
  const T& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  Mat transpose() const {
    Mat t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    require(x.cols == y.rows, "matrix product shape mismatch");
    Mat z(x.rows, y.cols, T(0));
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const T& v = x(i, k);
        if (v == T(0)) continue;
        for (int j = 0; j < y.cols; ++j) z(i, j) += v * y(k, j);
      }
    return z;
  }

  friend Mat operator+(const Mat& x, const Mat& y) {
    require(x.rows == y.rows && x.cols == y.cols, "matrix sum shape mismatch");
    Mat z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
  }

  friend Mat operator-(const Mat& x, const Mat& y) {
    require(x.rows == y.rows && x.cols == y.cols, "matrix difference shape mismatch");
    Mat z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
    return z;
  }

  std::vector<T> mul_vec(const std::vector<T>& v) const {
    require(int(v.size()) == cols, "matrix-vector shape mismatch");
    std::vector<T> r(rows, T(0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  bool is_symmetric() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
      for (int j = i + 1; j < cols; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }
};

using MatI = Mat<i64>;
using MatZ = Mat<Int>;
using MatQ = Mat<Rat>;

MatZ to_mpz(const MatI& m);
MatI to_i64(const MatZ& m);
MatQ to_rat(const MatZ& m);

// Fraction-free determinant; input copied.
Int det_bareiss(MatZ m);
inline Int det_bareiss(const MatI& m) { return det_bareiss(to_mpz(m)); }

// Reduced row echelon form in place over a field (T = Rat or Quad);
// returns pivot column per row. Rank = number of pivots.
template <class T>
std::vector<int> rref(Mat<T>& m);

// Right kernel basis over a field, as columns of the result.
template <class T>
Mat<T> kernel_basis(const Mat<T>& m);

// Solve m*x = b over a field; nullopt when inconsistent. m need not be square;
// when the solution is not unique the free variables are set to zero.
template <class T>
std::optional<std::vector<T>> solve(const Mat<T>& m, const std::vector<T>& b);

template <class T>
Mat<T> inverse(const Mat<T>& m);

// Characteristic polynomial of an integer matrix, coefficients low to high,
// monic of degree n; computed fraction-free by evaluation and interpolation.
std::vector<Int> charpoly(const MatZ& m);

extern template std::vector<int> rref<Rat>(Mat<Rat>&);
extern template std::vector<int> rref<Quad>(Mat<Quad>&);
extern template Mat<Rat> kernel_basis<Rat>(const Mat<Rat>&);
extern template Mat<Quad> kernel_basis<Quad>(const Mat<Quad>&);
extern template std::optional<std::vector<Rat>> solve<Rat>(const Mat<Rat>&, const std::vector<Rat>&);
extern template std::optional<std::vector<Quad>> solve<Quad>(const Mat<Quad>&, const std::vector<Quad>&);
extern template Mat<Rat> inverse<Rat>(const Mat<Rat>&);
extern template Mat<Quad> inverse<Quad>(const Mat<Quad>&);

}  // namespace nh
