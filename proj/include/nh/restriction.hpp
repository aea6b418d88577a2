#pragma once
#include <map>
#include <vector>

#include "nh/arthur.hpp"
#include "nh/spectral.hpp"
#include "nh/tables.hpp"

namespace nh {

// Class-level lift X_n -> X_{n+1}: a class of dimension 23 maps to the even
// overlattice of L + A1 determined by its unique isotropic glue line, and a
// class of dimension 24 maps to L + A1 itself. `reps` holds one Gram matrix
// per source class (1-based order of the source table); the result assigns
// to each source class the 1-based index of its image in the target table.
std::vector<int> restriction_map(int n, const std::vector<MatI>& reps,
                                 const FingerprintTable& target);

struct Restriction {
  int n = 0;             // source dimension (23 or 24)
  std::vector<int> phi;  // 1-based source class -> target class
  // alpha(i-1, j-1): coefficient of the target eigenvector for table row j
  // in the image of the source eigenvector for table row i.
  Mat<Quad> alpha;
  // Target table row -> ascending source rows with nonzero coefficient.
  std::map<int, std::vector<int>> res;
};

// Push each source eigenvector through the class-level lift and decompose
// the image exactly in the target eigenbasis.
Restriction restrict_decompose(int n, const std::vector<int>& phi, const EigenSystem& source,
                               const std::vector<int>& match_source, const EigenSystem& target,
                               const std::vector<int>& match_target);

// Branching pattern between global parameters: `small` arises from `big`
// when the factors of `big` split into one group with multiplicities raised
// by one, a second group with multiplicities lowered by one (factors
// reaching zero disappear), and `small` may further adjoin new
// multiplicity-one factors.
bool ggp_pattern(const ArthurParam& big, const ArthurParam& small);

}  // namespace nh
