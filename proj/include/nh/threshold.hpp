#pragma once
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "nh/spectral.hpp"

namespace nh {

// Positivity certificates for the p-neighbour matrices. Writing T_p through
// its eigenvector basis, each entry decomposes as
//
//   T_p(i, j) = P0(p) + sum_r P_r(p) * theta_r(p)
//
// where P0 collects the explicitly known polynomial part of the eigenvalues
// and each theta_r is a bounded Satake trace: |theta_r(p)|^2 <= gamma_r(p)
// with gamma_r a monomial. By Cauchy-Schwarz the entry is positive whenever
//
//   Q_{ij}(p) = P0(p)^2 - K * sum_r P_r(p)^2 * gamma_r(p) > 0
//
// (K = number of bounded traces), so the largest real root over all ordered
// pairs bounds from above the last prime with a vanishing entry.

// Precomputed spectral data for the positivity analysis of one genus.
struct ThresholdContext {
  int n = 0;
  long lo = 0, hi = 0;               // target integer bracket for the max root
  std::vector<std::string> symbols;  // bounded Satake traces theta_r
  std::vector<Poly> gamma;           // theta_r(p)^2 <= gamma_r(p)
  Mat<Quad> V, Vinv;
  std::vector<Poly> c0;                  // per eigen column: explicit part
  std::vector<std::vector<Poly>> coeff;  // per eigen column x symbol index
};

ThresholdContext make_threshold_context(const EigenSystem& es, const ParamTable& pt,
                                        const std::vector<int>& match);

// The certificate polynomial Q_{ij} for one ordered pair of 0-based class
// indices, as an exact rational polynomial.
Poly threshold_q(const ThresholdContext& ctx, int i, int j);

// Exact evaluation of the decomposed entry P0(p) + sum_r P_r(p) theta_r(p);
// reproduces the (i, j) entry of T_p when the table holds all traces at p.
Quad threshold_entry(const ThresholdContext& ctx, int i, int j, long p, const DTable& dt);

struct ThresholdReport {
  int n = 0;
  long lo = 0, hi = 0;
  long pairs = 0;        // ordered class pairs examined
  long prefiltered = 0;  // settled by the coefficient-sign test after a shift
  long escalated = 0;    // needed an exact Sturm root count
  std::vector<std::pair<int, int>> witnesses;  // 1-based pairs with a root > lo
  bool all_below_hi = false;  // no pair has a root >= hi
  bool has_witness = false;   // some pair has a root in (lo, hi)
  bool certified = false;     // both of the above: max root lies in (lo, hi)
  Rat rho_lo, rho_hi;         // bisected bracket for the largest root
};

// Full sweep over all ordered pairs: shift prefilter, exact root counting
// for the undecided pairs, then bisection of the witness maximum.
ThresholdReport completeness_threshold(const ThresholdContext& ctx,
                                       const std::function<void(const std::string&)>& log = {});

}  // namespace nh
