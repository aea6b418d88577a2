#pragma once
#include "nh/lattice.hpp"

namespace nh {

// Number of p-neighbors of an n-dimensional lattice of the genera treated
// here: sum_{i=0}^{n-2} p^i, plus p^{n/2-1} for even n. The literal variant
// starts the sum at i = 1; it undercounts by 1 and is kept only for audits.
Int neighbor_count(int n, long p, bool literal = false);

// Multiplicative extension: d-neighbors for squarefree products and prime
// powers, c_n(p^k) = p^{(k-1)(n-2)} c_n(p).
Int neighbor_count_pk(int n, long p, int k, bool literal = false);
Int neighbor_count_product(int n, const std::vector<std::pair<long, int>>& primes,
                           bool literal = false);

// Streams v in {0,1}^n \ {0} with v^t G v = 0 mod 4 in binary-counter order.
// These codes biject with the isotropic lines of the F_2 quadric on L/2L,
// hence with the 2-neighbors of L (determinant 1 or 2, n <= 30).
struct IsotropicStream {
  explicit IsotropicStream(const MatI& G_);
  // Position at the smallest admissible code >= start (0 = before first).
  void seek(u64 start);
  // Advance to the next admissible code < limit; false when exhausted.
  bool next(u64 limit);

  u64 code = 0;
  i64 norm = 0;      // v^t G v
  u32 sv = 0;        // G v mod 2, bit-packed
  VecI s;            // G v, exact

 private:
  void flip(int k);
  const MatI& G;
  int n;
  std::vector<u32> colmask;
};

// Gram matrix of the 2-neighbor attached to an admissible stream code,
// LLL-reduced; checks evenness and determinant preservation.
MatI neighbor2_gram(const MatI& G, u64 code);

}  // namespace nh
