#include "nh/matrix.hpp"

namespace nh {

MatZ to_mpz(const MatI& m) {
  MatZ z(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) z.a[i] = Int(static_cast<long>(m.a[i]));
  return z;
}

MatI to_i64(const MatZ& m) {
  MatI z(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) z.a[i] = to_i64(m.a[i]);
  return z;
}

MatQ to_rat(const MatZ& m) {
  MatQ z(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) z.a[i] = Rat(m.a[i]);
  return z;
}

Int det_bareiss(MatZ m) {
  require(m.rows == m.cols, "determinant of a non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (int j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

template <class T>
std::vector<int> rref(Mat<T>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (!(m(i, c) == T(0))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m(r, j), m(piv, j));
    T inv = T(1) / m(r, c);
    for (int j = c; j < m.cols; ++j) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == T(0)) continue;
      T f = m(i, c);
      for (int j = c; j < m.cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
Mat<T> kernel_basis(const Mat<T>& m) {
  Mat<T> w = m;
  std::vector<int> piv = rref(w);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<int> free;
  for (int c = 0; c < m.cols; ++c)
    if (!is_piv[c]) free.push_back(c);
  Mat<T> k(m.cols, int(free.size()), T(0));
  for (size_t f = 0; f < free.size(); ++f) {
    k(free[f], int(f)) = T(1);
    for (size_t r = 0; r < piv.size(); ++r) k(piv[r], int(f)) = -w(int(r), free[f]);
  }
  return k;
}

template <class T>
std::optional<std::vector<T>> solve(const Mat<T>& m, const std::vector<T>& b) {
  require(int(b.size()) == m.rows, "solve shape mismatch");
  Mat<T> w(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) w(i, j) = m(i, j);
    w(i, m.cols) = b[i];
  }
  std::vector<int> piv = rref(w);
  if (!piv.empty() && piv.back() == m.cols) return std::nullopt;
  std::vector<T> x(m.cols, T(0));
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = w(int(r), m.cols);
  return x;
}

template <class T>
Mat<T> inverse(const Mat<T>& m) {
  require(m.rows == m.cols, "inverse of a non-square matrix");
  int n = m.rows;
  Mat<T> w(n, 2 * n, T(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w(i, j) = m(i, j);
    w(i, n + i) = T(1);
  }
  std::vector<int> piv = rref(w);
  require(int(piv.size()) == n && piv[n - 1] == n - 1, "singular matrix");
  Mat<T> r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = w(i, n + j);
  return r;
}

std::vector<Int> charpoly(const MatZ& m) {
  require(m.rows == m.cols, "charpoly of a non-square matrix");
  int n = m.rows;
  // det(xI - m) at x = 0..n, then exact Lagrange interpolation.
  std::vector<Int> ys(n + 1);
  for (int x = 0; x <= n; ++x) {
    MatZ w(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) w(i, j) = -m(i, j);
    for (int i = 0; i < n; ++i) w(i, i) += x;
    ys[x] = det_bareiss(w);
  }
  // Newton's divided differences keep everything rational with small depth.
  std::vector<Rat> dd(n + 1);
  for (int i = 0; i <= n; ++i) dd[i] = Rat(ys[i]);
  for (int k = 1; k <= n; ++k)
    for (int i = n; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / Rat(k);
  // p(x) = sum dd[k] * x(x-1)...(x-k+1)
  std::vector<Rat> coef(n + 1, Rat(0)), basis{Rat(1)};
  for (int k = 0; k <= n; ++k) {
    for (size_t j = 0; j < basis.size(); ++j) coef[j] += dd[k] * basis[j];
    if (k < n) {
      basis.push_back(Rat(0));
      for (int j = int(basis.size()) - 1; j >= 1; --j)
        basis[j] = basis[j - 1] - Rat(k) * basis[j];
      basis[0] = -Rat(k) * basis[0];
    }
  }
  std::vector<Int> out(n + 1);
  for (int i = 0; i <= n; ++i) out[i] = to_int(coef[i]);
  require(out[n] == 1, "characteristic polynomial is not monic");
  return out;
}

template std::vector<int> rref<Rat>(Mat<Rat>&);
template std::vector<int> rref<Quad>(Mat<Quad>&);
template Mat<Rat> kernel_basis<Rat>(const Mat<Rat>&);
template Mat<Quad> kernel_basis<Quad>(const Mat<Quad>&);
template std::optional<std::vector<Rat>> solve<Rat>(const Mat<Rat>&, const std::vector<Rat>&);
template std::optional<std::vector<Quad>> solve<Quad>(const Mat<Quad>&, const std::vector<Quad>&);
template Mat<Rat> inverse<Rat>(const Mat<Rat>&);
template Mat<Quad> inverse<Quad>(const Mat<Quad>&);

}  // namespace nh
