#pragma once
#include "nh/spectral.hpp"

namespace nh {

// gcd of all 2x2 minors of the two-column matrix [a | b]; for entries in
// Z[sqrt(144169)] each minor contributes gcd(rational part, radical part).
// 0 encodes proportionality. Both vectors must be primitive.
Int pair_modulus(const std::vector<Quad>& a, const std::vector<Quad>& b);

// One eigenvector-pair congruence: lambda_i(p) = lambda_j(p) mod `modulus`
// for every prime p, together with its reduction. The symbolic difference is
// diff = X^divided_by * reduced; the division step is justified by evaluating
// `reduced` at the primes dividing the modulus (only those with table data
// can be checked, the rest are reported as unverified).
struct Congruence {
  int n = 0;          // genus dimension
  int i = 0, j = 0;   // 1-based parameter-table indices, i < j
  Int modulus;        // raw pair modulus m > 1
  Symbolic diff;      // lambda_i - lambda_j as a linear form in D-symbols
  int divided_by = 0; // largest k with X^k dividing every coefficient
  Symbolic reduced;   // diff / X^k
  // gcd of m with reduced(q) over the data primes q | m (k > 0 only).
  Int final_modulus;
  std::vector<long> verified_primes;
  std::vector<long> unverified_primes;
  bool optimal_at_2 = false;  // |reduced(2)| == final_modulus != 0
};

// All pairs with raw modulus > 1, in lexicographic (i, j) order. Pairs are
// restricted to the lemma's scope: both parameters rational, or both
// quadratic with a difference free of the weight-24 symbols. `match` maps
// eigen-system positions to 1-based table rows (from match_params).
std::vector<Congruence> congruence_scan(const EigenSystem& es, const ParamTable& pt,
                                        const std::vector<int>& match, const DTable& dt);

// One entry of the thirteen-congruence battery: a normalized congruence
// `lhs = rhs mod modulus` among Satake traces, derived from named
// eigenvector pairs by modulus combination and division by p.
struct BatteryItem {
  std::string tag;        // "i" .. "xiii"
  Int modulus;            // derived modulus
  Symbolic reduced;       // congruence as reduced == 0 mod modulus
  std::string statement;  // printable form
  bool fully_verified = false;  // no unverified division primes remain
  bool optimal_at_2 = false;
  std::vector<std::pair<int, std::pair<int, int>>> witnesses;  // (n, (i, j))
};

// The thirteen Satake-trace congruences, each derived from its witness
// eigenvector pairs; throws ConsistencyError when a named pair modulus,
// symbolic form, or combination identity fails to hold.
std::vector<BatteryItem> congruence_battery(const EigenSystem& es23, const ParamTable& pt23,
                                            const std::vector<int>& match23,
                                            const EigenSystem& es25, const ParamTable& pt25,
                                            const std::vector<int>& match25, const DTable& dt);

}  // namespace nh
