#include "nh/restriction.hpp"

#include <algorithm>

#include "nh/lattice.hpp"

namespace nh {

std::vector<int> restriction_map(int n, const std::vector<MatI>& reps,
                                 const FingerprintTable& target) {
  require(n == 23 || n == 24, "class-level lift is defined for n = 23 and n = 24");
  require(target.n == n + 1, "target table dimension mismatch");
  Lattice a1{gram_ade('A', 1)};
  std::vector<int> phi;
  phi.reserve(reps.size());
  for (const MatI& g : reps) {
    Lattice sum = direct_sum(Lattice{g}, a1);
    // In dimension 24 the glue group of L + A1 carries a unique isotropic
    // line, and the corresponding overlattice is the even unimodular image;
    // in dimension 25 the direct sum already has the right determinant.
    Lattice image = n == 23 ? even_overlattice(sum, true) : sum;
    phi.push_back(classify(image.gram, target).index);
  }
  return phi;
}

Restriction restrict_decompose(int n, const std::vector<int>& phi, const EigenSystem& source,
                               const std::vector<int>& match_source, const EigenSystem& target,
                               const std::vector<int>& match_target) {
  int ns = source.V.rows;
  int nt = target.V.rows;
  require(static_cast<int>(phi.size()) == ns, "lift size mismatch");
  for (int c : phi) require(c >= 1 && c <= nt, "lift image out of range");

  Restriction out;
  out.n = n;
  out.phi = phi;
  out.alpha = Mat<Quad>(ns, nt);

  // Position of each 1-based table row inside the eigen systems.
  std::vector<int> pos_s(static_cast<size_t>(ns) + 1, -1);
  for (int k = 0; k < ns; ++k) pos_s[size_t(match_source[size_t(k)])] = k;
  std::vector<int> pos_t(static_cast<size_t>(nt) + 1, -1);
  for (int k = 0; k < nt; ++k) pos_t[size_t(match_target[size_t(k)])] = k;

  for (int i = 1; i <= ns; ++i) {
    int ki = pos_s[size_t(i)];
    require(ki >= 0, "source row unmatched");
    // Image of the source eigenvector under the class-level lift.
    std::vector<Quad> u(static_cast<size_t>(nt));
    for (int c = 0; c < ns; ++c) u[size_t(phi[size_t(c)] - 1)] += source.V(c, ki);
    // Exact coordinates in the target eigenbasis.
    std::vector<Quad> coeff = target.Vinv.mul_vec(u);
    for (int j = 1; j <= nt; ++j) {
      int kj = pos_t[size_t(j)];
      require(kj >= 0, "target row unmatched");
      out.alpha(i - 1, j - 1) = coeff[size_t(kj)];
      if (!coeff[size_t(kj)].is_zero()) out.res[j].push_back(i);
    }
  }
  return out;
}

bool ggp_pattern(const ArthurParam& big, const ArthurParam& small) {
  int m = static_cast<int>(big.comps.size());
  require(m < 31, "parameter too long");
  std::vector<ArthurComponent> want(small.comps);
  std::sort(want.begin(), want.end(), [](const ArthurComponent& a, const ArthurComponent& b) {
    return a.sym != b.sym ? a.sym < b.sym : a.d < b.d;
  });
  // Choose for every factor of `big` whether its multiplicity is raised or
  // lowered by one; the remainder of `small` must consist of fresh
  // multiplicity-one factors.
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<ArthurComponent> produced;
    for (int t = 0; t < m; ++t) {
      ArthurComponent c = big.comps[size_t(t)];
      c.d += (mask >> t) & 1 ? 1 : -1;
      if (c.d > 0) produced.push_back(c);
    }
    std::sort(produced.begin(), produced.end(),
              [](const ArthurComponent& a, const ArthurComponent& b) {
                return a.sym != b.sym ? a.sym < b.sym : a.d < b.d;
              });
    // `produced` must embed into `small`; leftovers must all have d == 1.
    size_t pi = 0;
    bool ok = true;
    for (const ArthurComponent& w : want) {
      if (pi < produced.size() && produced[pi] == w) {
        ++pi;
      } else if (w.d != 1) {
        ok = false;
        break;
      }
    }
    if (ok && pi == produced.size()) return true;
  }
  return false;
}

}  // namespace nh
