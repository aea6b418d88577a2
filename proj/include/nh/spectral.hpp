#pragma once
#include "nh/hecke.hpp"

namespace nh {

struct EigenSystem {
  // Distinct eigenvalues in canonical order: rational values descending,
  // then conjugate pairs by rational part descending, '+' before '-'.
  std::vector<Quad> values;
  Mat<Quad> V;     // columns are eigenvectors, unit content, first entry > 0
  Mat<Quad> Vinv;  // exact inverse
};

// Exact certified eigendecomposition of a neighbor-count matrix that is
// self-adjoint for the given masses. Every eigenvalue must be simple and lie
// in Z or in Q(sqrt(144169)); otherwise SpectralError.
EigenSystem eigen_decompose(const MatI& T, const std::vector<Int>& masses);

// out[k] = 1-based parameter row whose eigenvalue (at p = 2) equals
// values[k]; the match must be a bijection.
std::vector<int> match_params(const EigenSystem& es, const ParamTable& pt);

// V diag(lambda) V^-1, checked to be integral, nonnegative, with the given
// column sum, and self-adjoint for the masses; lambda aligned with es.values.
MatZ reconstruct_tp(const EigenSystem& es, const std::vector<Quad>& lambda,
                    const std::vector<Int>& masses, const Int& column_sum);

// The eigenvalue equations contributed by one genus: lambda[i] is the exact
// eigenvalue whose parameter is psi[i], in an n-dimensional genus.
struct SpectrumEquations {
  int n = 0;
  std::vector<Quad> lambda;
  std::vector<ArthurParam> psi;
};

// Determine trace values D_sym(p) from eigenvalue equations by repeated
// elimination of single-unknown equations, starting from the seed table.
// Every equation must close exactly (ConsistencyError otherwise) and no
// equation may be left with unresolved symbols.
DTable solve_unknown_D(const std::vector<SpectrumEquations>& spectra, long p,
                       const DTable& seed);

}  // namespace nh
