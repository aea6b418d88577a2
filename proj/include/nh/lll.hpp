#pragma once
#include "nh/matrix.hpp"

namespace nh {

// Hermite row basis of the row lattice of C: r x n upper-echelon matrix with
// positive pivots, entries above each pivot reduced; r = rank(C).
MatZ hnf_row_basis(const MatZ& C);

struct GramReduction {
  MatZ gram;  // T * G * T^t
  MatZ T;     // rows give the reduced basis in the input basis
};

// LLL reduction driven purely by the Gram matrix (delta = 99/100).
// G must be symmetric positive definite.
GramReduction lll_gram(const MatZ& G);

struct LatticeBasis {
  MatZ gram;   // reduced Gram of the generated lattice
  MatQ coords; // rows: reduced basis in the ambient coordinates of gens
};

// Lattice generated by possibly dependent, possibly non-integral rows of
// gens; inner products taken with respect to ambientGram. The generated
// lattice must be integral (checked).
LatticeBasis basis_from_generators(const MatQ& gens, const MatZ& ambientGram);

}  // namespace nh
