#include "nh/neighbor.hpp"

#include "nh/lll.hpp"

namespace nh {

Int neighbor_count(int n, long p, bool literal) {
  require(n >= 3, "neighbor_count: n too small");
  Int total = 0;
  for (int i = literal ? 1 : 0; i <= n - 2; ++i) total += pow_int(p, i);
  if (n % 2 == 0) total += pow_int(p, n / 2 - 1);
  return total;
}

Int neighbor_count_pk(int n, long p, int k, bool literal) {
  require(k >= 1, "neighbor_count_pk: k must be positive");
  return pow_int(p, u64((k - 1) * (n - 2))) * neighbor_count(n, p, literal);
}

Int neighbor_count_product(int n, const std::vector<std::pair<long, int>>& primes,
                           bool literal) {
  Int total = 1;
  for (auto& [p, k] : primes) total *= neighbor_count_pk(n, p, k, literal);
  return total;
}

IsotropicStream::IsotropicStream(const MatI& G_) : G(G_), n(G_.rows) {
  require(n >= 1 && n <= 30, "IsotropicStream: dimension out of range");
  s.assign(n, 0);
  colmask.assign(n, 0);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      if (G(j, k) & 1) colmask[k] |= u32(1) << j;
}

void IsotropicStream::flip(int k) {
  // Invoked with `code` already holding the new value, so bit k of `code`
  // says whether the coordinate just turned on.
  bool on = (code >> k) & 1;
  if (on)
    norm += 2 * s[k] + G(k, k);
  else
    norm += G(k, k) - 2 * s[k];
  i64 sgn = on ? 1 : -1;
  for (int j = 0; j < n; ++j) s[j] += sgn * G(j, k);
  sv ^= colmask[k];
}

void IsotropicStream::seek(u64 start) {
  code = start;
  std::fill(s.begin(), s.end(), i64(0));
  sv = 0;
  for (int k = 0; k < n; ++k)
    if ((code >> k) & 1) {
      for (int j = 0; j < n; ++j) s[j] += G(j, k);
      sv ^= colmask[k];
    }
  norm = 0;
  for (int k = 0; k < n; ++k)
    if ((code >> k) & 1) norm += s[k];
  if (code != 0 && norm % 4 == 0) return;
  next(u64(1) << n);
}

bool IsotropicStream::next(u64 limit) {
  do {
    // Incrementing a binary counter flips the trailing ones and the next zero.
    u64 old = code;
    ++code;
    if (code >= limit) return false;
    u64 changed = old ^ code;
    for (int k = 0; changed; ++k, changed >>= 1)
      if (changed & 1) flip(k);
  } while (norm % 4 != 0);
  return true;
}

MatI neighbor2_gram(const MatI& G, u64 code) {
  int n = G.rows;
  require(code != 0 && code < (u64(1) << n), "neighbor2_gram: bad code");
  VecI v(n);
  for (int k = 0; k < n; ++k) v[k] = (code >> k) & 1;
  VecI s(n, 0);
  i64 norm = 0;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) s[j] += G(j, k) * v[k];
  }
  for (int j = 0; j < n; ++j) norm += s[j] * v[j];
  require(norm % 4 == 0, "neighbor2_gram: line is not isotropic");
  int jb = -1;
  for (int j = 0; j < n; ++j)
    if (s[j] & 1) {
      jb = j;
      break;
    }
  require(jb >= 0, "neighbor2_gram: no odd coordinate in G v");
  i64 t = norm / 2;  // even because norm = 0 mod 4
  // Generators of the neighbor: basis vectors adjusted into the even-pairing
  // sublattice, twice the special vector, and half the shifted line vector.
  MatQ gens(n + 1, n);
  for (int i = 0; i < n; ++i) {
    if (i == jb) {
      gens(i, jb) = rat(2);
      continue;
    }
    gens(i, i) = rat(1);
    if (s[i] & 1) gens(i, jb) = rat(-1);
  }
  for (int k = 0; k < n; ++k) {
    i64 num = v[k] - (k == jb ? t : 0);
    gens(n, k) = Rat(Int(num), Int(2));
  }
  MatZ Gz(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Gz(i, j) = Int(G(i, j));
  LatticeBasis basis = basis_from_generators(gens, Gz);
  require(basis.gram.rows == n, "neighbor2_gram: rank drop");
  MatI out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      require(fits_i64(basis.gram(i, j)), "neighbor2_gram: entry overflow");
      out(i, j) = to_i64(basis.gram(i, j));
    }
  Lattice L{out};
  require(is_even(L), "neighbor2_gram: neighbor is not even");
  require(det(L) == det(Lattice{G}), "neighbor2_gram: determinant changed");
  return out;
}

}  // namespace nh
