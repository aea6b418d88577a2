#include "nh/lattice.hpp"

#include "nh/snf.hpp"

namespace nh {

namespace {

MatI cartan_from_edges(int rank, const std::vector<std::pair<int, int>>& edges) {
  MatI c(rank, rank, 0);
  for (int i = 0; i < rank; ++i) c(i, i) = 2;
  for (auto [a, b] : edges) {
    c(a, b) = -1;
    c(b, a) = -1;
  }
  return c;
}

}  // namespace

MatI gram_ade(char type, int rank) {
  std::vector<std::pair<int, int>> edges;
  switch (type) {
    case 'A':
      require(rank >= 1, "A rank");
      for (int i = 0; i + 1 < rank; ++i) edges.push_back({i, i + 1});
      break;
    case 'D':
      require(rank >= 3, "D rank");
      for (int i = 0; i + 2 < rank; ++i) edges.push_back({i, i + 1});
      edges.push_back({rank - 3, rank - 1});
      break;
    case 'E': {
      require(rank >= 6 && rank <= 8, "E rank");
      for (int i = 0; i + 2 < rank; ++i) edges.push_back({i, i + 1});
      edges.push_back({2, rank - 1});  // branch: arms 2, 1, rank-4 around node 2
      break;
    }
    default:
      fail("unknown root lattice type");
  }
  return cartan_from_edges(rank, edges);
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  int n = a.n() + b.n();
  Lattice s;
  s.gram = MatI(n, n, 0);
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) s.gram(i, j) = a.gram(i, j);
  for (int i = 0; i < b.n(); ++i)
    for (int j = 0; j < b.n(); ++j) s.gram(a.n() + i, a.n() + j) = b.gram(i, j);
  return s;
}

Lattice standard_lattice(int n) {
  require(n >= 7 && (n % 8 == 0 || n % 8 == 1 || n % 8 == 7), "n must be 0 or +-1 mod 8");
  Lattice L;
  L.gram = MatI(0, 0);
  int k = n / 8;
  for (int i = 0; i < k; ++i) L = direct_sum(L, Lattice{gram_ade('E', 8)});
  if (n % 8 == 7) L = direct_sum(L, Lattice{gram_ade('E', 7)});
  if (n % 8 == 1) L = direct_sum(L, Lattice{gram_ade('A', 1)});
  return L;
}

Lattice seed_lattice(int n) {
  if (n <= 17 || n == 24) return standard_lattice(n);
  require(n == 23 || n == 25, "seed dimension must be 7-17, 23, 24 or 25");
  int m = n + 1;      // ambient dimension
  int d = n - 1;      // rank of the D block
  MatQ gens(m, m, Rat(0));
  // D_{n-1}: e0+e1 and the chain of differences on the first d coordinates.
  gens(0, 0) = 1;
  gens(0, 1) = 1;
  for (int i = 1; i < d; ++i) {
    gens(i, i - 1) = 1;
    gens(i, i) = -1;
  }
  // A1 on the last two coordinates.
  gens(d, d) = 1;
  gens(d, d + 1) = 1;
  // Glue vector: half the sum of the first 24 coordinates; for n = 23 this
  // spans both blocks, for n = 25 only the D24 block.
  for (int j = 0; j < 24; ++j) gens(d + 1, j) = Rat(1, 2);
  MatZ ambient = MatZ::identity(m);
  LatticeBasis B = basis_from_generators(gens, ambient);
  require(B.gram.rows == n, "seed lattice has wrong rank");
  Lattice L{to_i64(B.gram)};
  require(is_even(L), "seed lattice is not even");
  require(det(L) == 2, "seed lattice has wrong determinant");
  return L;
}

Int det(const Lattice& L) { return det_bareiss(L.gram); }

bool is_even(const Lattice& L) {
  for (int i = 0; i < L.n(); ++i)
    if (L.gram(i, i) % 2 != 0) return false;
  return true;
}

Lattice even_overlattice(const Lattice& L, bool require_unique) {
  int n = L.n();
  MatZ G = to_mpz(L.gram);
  Smith s = smith_normal_form(G);
  Int disc(1);
  std::vector<int> nontrivial;
  for (int i = 0; i < n; ++i) {
    disc *= s.S(i, i);
    if (s.S(i, i) > 1) nontrivial.push_back(i);
  }
  require(disc == 4, "even_overlattice expects determinant 4");
  // Discriminant group representatives x = V * (a_i / s_i); enumerate it.
  std::vector<std::vector<Rat>> isotropic;
  long total = to_i64(disc);
  for (long code = 1; code < total; ++code) {
    long c = code;
    std::vector<Rat> x(n, Rat(0));
    bool zero = true;
    for (size_t t = 0; t < nontrivial.size(); ++t) {
      int i = nontrivial[t];
      long si = to_i64(s.S(i, i));
      long ai = c % si;
      c /= si;
      if (ai == 0) continue;
      zero = false;
      for (int r = 0; r < n; ++r) x[r] += rat(ai * s.V(r, i), si);
    }
    if (zero) continue;
    // q(x) mod 2Z; skip classes that are already in L.
    bool integral = true;
    for (const Rat& v : x)
      if (!is_integer(v)) integral = false;
    if (integral) continue;
    Rat q(0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) q += x[i] * Rat(G(i, j)) * x[j];
    if (is_integer(q) && to_int(q) % 2 == 0) isotropic.push_back(x);
  }
  require(!isotropic.empty(), "no even overlattice exists");
  if (require_unique)
    require(isotropic.size() == 1, "isotropic glue element is not unique");
  MatQ gens(n + 1, n, Rat(0));
  for (int i = 0; i < n; ++i) gens(i, i) = 1;
  for (int j = 0; j < n; ++j) gens(n, j) = isotropic.front()[j];
  LatticeBasis B = basis_from_generators(gens, G);
  require(B.gram.rows == n, "overlattice rank changed");
  Lattice out{to_i64(B.gram)};
  require(is_even(out), "overlattice is not even");
  require(det(out) == 1, "overlattice determinant is not 1");
  return out;
}

Lattice cross_section(const Lattice& L, const VecI& v) {
  int n = L.n();
  require(int(v.size()) == n, "vector dimension mismatch");
  MatZ G = to_mpz(L.gram);
  MatZ A(1, n);
  for (int j = 0; j < n; ++j) {
    Int t(0);
    for (int i = 0; i < n; ++i) t += Int(static_cast<long>(v[i])) * G(i, j);
    A(0, j) = t;
  }
  MatZ K = integer_kernel(A);
  require(K.cols == n - 1, "cross-section has wrong rank");
  MatZ g = K.transpose() * G * K;
  GramReduction red = lll_gram(g);
  return Lattice{to_i64(red.gram)};
}

}  // namespace nh
