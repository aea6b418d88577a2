#pragma once
#include "nh/matrix.hpp"

namespace nh {

// Smith normal form: S = U * A * V with U, V unimodular and S diagonal,
// S_ii | S_{i+1,i+1}, diagonal entries nonnegative.
struct Smith {
  MatZ S, U, V;
};

Smith smith_normal_form(const MatZ& A);

// Basis of {x : A x = 0} over Z, as columns; the basis spans the full
// (saturated) kernel sublattice of Z^cols.
MatZ integer_kernel(const MatZ& A);

}  // namespace nh
