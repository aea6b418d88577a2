#include "nh/snf.hpp"

namespace nh {

namespace {

void row_op(MatZ& A, MatZ& U, int i, int k, const Int& f) {
  // row_i -= f * row_k, mirrored on U.
  for (int j = 0; j < A.cols; ++j) A(i, j) -= f * A(k, j);
  for (int j = 0; j < U.cols; ++j) U(i, j) -= f * U(k, j);
}

void col_op(MatZ& A, MatZ& V, int j, int k, const Int& f) {
  for (int i = 0; i < A.rows; ++i) A(i, j) -= f * A(i, k);
  for (int i = 0; i < V.rows; ++i) V(i, j) -= f * V(i, k);
}

void swap_rows(MatZ& A, MatZ& U, int i, int k) {
  for (int j = 0; j < A.cols; ++j) std::swap(A(i, j), A(k, j));
  for (int j = 0; j < U.cols; ++j) std::swap(U(i, j), U(k, j));
}

void swap_cols(MatZ& A, MatZ& V, int j, int k) {
  for (int i = 0; i < A.rows; ++i) std::swap(A(i, j), A(i, k));
  for (int i = 0; i < V.rows; ++i) std::swap(V(i, j), V(i, k));
}

}  // namespace

Smith smith_normal_form(const MatZ& A0) {
  Smith s;
  s.S = A0;
  s.U = MatZ::identity(A0.rows);
  s.V = MatZ::identity(A0.cols);
  MatZ& A = s.S;
  int n = std::min(A.rows, A.cols);
  for (int t = 0; t < n; ++t) {
    // Find a nonzero pivot in the lower-right block.
    int pi = -1, pj = -1;
    for (int i = t; i < A.rows && pi < 0; ++i)
      for (int j = t; j < A.cols; ++j)
        if (A(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    if (pi != t) swap_rows(A, s.U, pi, t);
    if (pj != t) swap_cols(A, s.V, pj, t);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < A.rows; ++i) {
        if (A(i, t) == 0) continue;
        Int f = A(i, t) / A(t, t);
        row_op(A, s.U, i, t, f);
        if (A(i, t) != 0) {
          swap_rows(A, s.U, i, t);
          dirty = true;
        }
      }
      for (int j = t + 1; j < A.cols; ++j) {
        if (A(t, j) == 0) continue;
        Int f = A(t, j) / A(t, t);
        col_op(A, s.V, j, t, f);
        if (A(t, j) != 0) {
          swap_cols(A, s.V, j, t);
          dirty = true;
        }
      }
    }
    // Enforce divisibility: fold any non-multiple into the pivot position.
    bool again = true;
    while (again) {
      again = false;
      for (int i = t + 1; i < A.rows && !again; ++i)
        for (int j = t + 1; j < A.cols && !again; ++j) {
          if (A(i, j) % A(t, t) != 0) {
            // Add row i to row t, then re-clear; classic SNF refinement step.
            row_op(A, s.U, t, i, Int(-1));
            again = true;
          }
        }
      if (again) {
        bool dirty2 = true;
        while (dirty2) {
          dirty2 = false;
          for (int i = t + 1; i < A.rows; ++i) {
            if (A(i, t) == 0) continue;
            Int f = A(i, t) / A(t, t);
            row_op(A, s.U, i, t, f);
            if (A(i, t) != 0) {
              swap_rows(A, s.U, i, t);
              dirty2 = true;
            }
          }
          for (int j = t + 1; j < A.cols; ++j) {
            if (A(t, j) == 0) continue;
            Int f = A(t, j) / A(t, t);
            col_op(A, s.V, j, t, f);
            if (A(t, j) != 0) {
              swap_cols(A, s.V, j, t);
              dirty2 = true;
            }
          }
        }
      }
    }
  }
  for (int t = 0; t < n; ++t) {
    if (A(t, t) < 0) {
      for (int j = 0; j < s.V.rows; ++j) s.V(j, t) = -s.V(j, t);
      A(t, t) = -A(t, t);
    }
  }
  return s;
}

MatZ integer_kernel(const MatZ& A) {
  Smith s = smith_normal_form(A);
  int n = std::min(A.rows, A.cols);
  int rank = 0;
  for (int t = 0; t < n; ++t)
    if (s.S(t, t) != 0) ++rank;
  // S = U A V; A (V e_j) = U^-1 S e_j = 0 for j >= rank.
  MatZ K(A.cols, A.cols - rank);
  for (int j = rank; j < A.cols; ++j)
    for (int i = 0; i < A.cols; ++i) K(i, j - rank) = s.V(i, j);
  return K;
}

}  // namespace nh
