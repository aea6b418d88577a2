#include "nh/lll.hpp"

namespace nh {

MatZ hnf_row_basis(const MatZ& C0) {
  MatZ C = C0;
  int rows = C.rows, cols = C.cols;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // Euclidean elimination below row r in column c.
    while (true) {
      int piv = -1;
      for (int i = r; i < rows; ++i)
        if (C(i, c) != 0 && (piv < 0 || abs(C(i, c)) < abs(C(piv, c)))) piv = i;
      if (piv < 0) break;
      if (piv != r)
        for (int j = 0; j < cols; ++j) std::swap(C(r, j), C(piv, j));
      bool clean = true;
      for (int i = r + 1; i < rows; ++i) {
        if (C(i, c) == 0) continue;
        Int q = C(i, c) / C(r, c);  // truncated; remainder shrinks
        for (int j = 0; j < cols; ++j) C(i, j) -= q * C(r, j);
        if (C(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (C(r, c) == 0) continue;
    if (C(r, c) < 0)
      for (int j = 0; j < cols; ++j) C(r, j) = -C(r, j);
    for (int i = 0; i < r; ++i) {
      Int q = C(i, c);
      mpz_fdiv_q(q.get_mpz_t(), q.get_mpz_t(), C(r, c).get_mpz_t());
      if (q != 0)
        for (int j = 0; j < cols; ++j) C(i, j) -= q * C(r, j);
    }
    ++r;
  }
  MatZ H(r, cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < cols; ++j) H(i, j) = C(i, j);
  return H;
}

namespace {

Int round_rat(const Rat& x) {
  // Nearest integer, ties toward +infinity.
  Rat y = x + Rat(1, 2);
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), y.get_num().get_mpz_t(), y.get_den().get_mpz_t());
  return q;
}

struct LllState {
  MatZ M;  // Gram, mutated
  MatZ T;
  int n;
  std::vector<std::vector<Rat>> mu;
  std::vector<Rat> B;

  void gs_row(int k) {
    for (int j = 0; j <= k; ++j) {
      Rat t(M(k, j));
      for (int i = 0; i < j; ++i) t -= mu[j][i] * mu[k][i] * B[i];
      if (j < k)
        mu[k][j] = t / B[j];
      else {
        B[k] = t;
        require(B[k] > 0, "Gram matrix is not positive definite");
      }
    }
  }

  void red(int k, int l) {
    Int q = round_rat(mu[k][l]);
    if (q == 0) return;
    for (int j = 0; j < n; ++j) M(k, j) -= q * M(l, j);
    for (int j = 0; j < n; ++j) M(j, k) = M(k, j);
    M(k, k) = M(k, k) - q * M(k, l);  // row op already changed M(k,l)
    for (int j = 0; j < n; ++j) T(k, j) -= q * T(l, j);
    mu[k][l] -= Rat(q);
    for (int i = 0; i < l; ++i) mu[k][i] -= Rat(q) * mu[l][i];
  }
};

}  // namespace

GramReduction lll_gram(const MatZ& G) {
  require(G.is_symmetric(), "Gram matrix must be symmetric");
  int n = G.rows;
  GramReduction out;
  if (n == 0) {
    out.gram = G;
    out.T = MatZ(0, 0);
    return out;
  }
  LllState st;
  st.M = G;
  st.T = MatZ::identity(n);
  st.n = n;
  st.mu.assign(n, std::vector<Rat>(n, Rat(0)));
  st.B.assign(n, Rat(0));
  const Rat delta(99, 100);

  st.gs_row(0);
  int k = 1, kmax = 0;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      st.gs_row(k);
    }
    st.red(k, k - 1);
    if (st.B[k] < (delta - st.mu[k][k - 1] * st.mu[k][k - 1]) * st.B[k - 1]) {
      // Swap b_k, b_{k-1} and patch the GS data (Cohen, Alg. 2.6.3).
      for (int j = 0; j < n; ++j) std::swap(st.M(k, j), st.M(k - 1, j));
      for (int j = 0; j < n; ++j) std::swap(st.M(j, k), st.M(j, k - 1));
      for (int j = 0; j < n; ++j) std::swap(st.T(k, j), st.T(k - 1, j));
      Rat u = st.mu[k][k - 1];
      Rat Bp = st.B[k] + u * u * st.B[k - 1];
      st.mu[k][k - 1] = u * st.B[k - 1] / Bp;
      st.B[k] = st.B[k - 1] * st.B[k] / Bp;
      st.B[k - 1] = Bp;
      for (int j = 0; j < k - 1; ++j) std::swap(st.mu[k][j], st.mu[k - 1][j]);
      for (int i = k + 1; i <= kmax; ++i) {
        Rat t = st.mu[i][k];
        st.mu[i][k] = st.mu[i][k - 1] - u * t;
        st.mu[i][k - 1] = t + st.mu[k][k - 1] * st.mu[i][k];
      }
      k = std::max(1, k - 1);
    } else {
      for (int l = k - 2; l >= 0; --l) st.red(k, l);
      ++k;
    }
  }
  out.gram = st.M;
  out.T = st.T;
  return out;
}

LatticeBasis basis_from_generators(const MatQ& gens, const MatZ& ambientGram) {
  require(gens.cols == ambientGram.rows && ambientGram.is_symmetric(),
          "generator/ambient shape mismatch");
  // Scale to integer coordinates, take an HNF basis, then LLL the Gram.
  Int scale(1);
  for (const Rat& v : gens.a) scale = lcm(scale, v.get_den());
  MatZ C(gens.rows, gens.cols);
  for (int i = 0; i < gens.rows; ++i)
    for (int j = 0; j < gens.cols; ++j) C(i, j) = to_int(Rat(scale) * gens(i, j));
  MatZ H = hnf_row_basis(C);
  int r = H.rows;
  MatZ HG = H * ambientGram * H.transpose();
  Int s2 = scale * scale;
  MatZ gram(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      require(HG(i, j) % s2 == 0, "generated lattice is not integral");
      gram(i, j) = HG(i, j) / s2;
    }
  GramReduction red = lll_gram(gram);
  LatticeBasis out;
  out.gram = red.gram;
  MatZ TH = red.T * H;
  out.coords = MatQ(r, gens.cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < gens.cols; ++j) out.coords(i, j) = rat(TH(i, j), scale);
  return out;
}

}  // namespace nh
