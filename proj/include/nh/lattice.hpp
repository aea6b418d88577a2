#pragma once
#include "nh/lll.hpp"
#include "nh/matrix.hpp"

namespace nh {

// An even positive definite lattice, represented by its Gram matrix.
struct Lattice {
  MatI gram;
  int n() const { return gram.rows; }
};

// Cartan matrix of an irreducible simply laced root lattice.
MatI gram_ade(char type, int rank);

Lattice direct_sum(const Lattice& a, const Lattice& b);

// E8^a (+ E7 | + A1) block lattice for n = 0, -1, +1 mod 8 (n >= 7).
Lattice standard_lattice(int n);

// Base point of the 2-neighbor walk: n = 23, 25 give the determinant-2
// lattice with root system D_{n-1} + A1; other supported dimensions give
// standard_lattice(n).
Lattice seed_lattice(int n);

Int det(const Lattice& L);
bool is_even(const Lattice& L);

// Index-2 even overlattice of a determinant-4 lattice, glued along an
// isotropic element of the discriminant group. With require_unique the
// discriminant group must carry exactly one nonzero isotropic element.
Lattice even_overlattice(const Lattice& L, bool require_unique);

// Primitive sublattice orthogonal to a vector (basis coordinates).
Lattice cross_section(const Lattice& L, const VecI& v);

}  // namespace nh
