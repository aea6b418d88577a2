#pragma once
#include "nh/exact.hpp"

namespace nh {

// q-expansion coefficients a_0 .. a_{N-1} of level-1 modular forms.
using Series = std::vector<Int>;

Series eisenstein4(int N);
Series eisenstein6(int N);
Series delta_series(int N);  // a_0 = 0, a_1 = 1

Series series_mul(const Series& a, const Series& b, int N);

// a_p of the unique normalized cusp eigenform of weight k in {12,16,18,20,22}.
Int elliptic_trace(int k, i64 p);

// The two Hecke eigenvalues at p on the weight-24 cusp space, as elements of
// Q(sqrt(144169)): returned with positive root first.
std::pair<Quad, Quad> weight24_pair(i64 p);

// a_p(Delta)^2 - p^11, the symmetric-square combination of weight 12.
Int sym2_trace(i64 p);

}  // namespace nh
