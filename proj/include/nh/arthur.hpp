#pragma once
#include <map>

#include "nh/poly.hpp"

namespace nh {

// One summand Delta[d] of a global parameter: sym names the cuspidal part
// ("Triv" for the trivial character, "D11".."D23-", "Sym2D11", or a
// multi-subscript symbol like "D21_9"), d the size of the SL2 factor.
struct ArthurComponent {
  std::string sym;
  int d = 0;
  bool operator==(const ArthurComponent&) const = default;
};

struct ArthurParam {
  std::vector<ArthurComponent> comps;
  bool operator==(const ArthurParam&) const = default;
};

// Grammar: components joined by '+'; "[d]" for Triv, otherwise "SYM[d]";
// "D23p"/"D23m" denote the two weight-24 conjugates.
ArthurParam parse_param(const std::string& s);
std::string print_param(const ArthurParam& p);

// Motivic weight of the cuspidal part; 0 for Triv, 22 for Sym2D11.
int symbol_w1(const std::string& sym);

// Dimension of the local factor: d for Triv, 3d for Sym2D11, 2d for the
// one-subscript and conjugate symbols, +2d per extra subscript.
int component_dim(const ArthurComponent& c);
int param_dim(const ArthurParam& p);

// binom(2g, g) * p^{w1/2} with g the genus; 5 * p^11 for Sym2D11.
double ramanujan_bound(const std::string& sym, long p);

// Canonical symbol order used by D-tables and reports.
const std::vector<std::string>& dtable_symbols();

enum class Provenance { computed, ingested, solved };

// Satake-trace values D_sym(p), exact, possibly in Q(sqrt(144169)).
struct DTable {
  std::map<std::pair<long, std::string>, Quad> val;
  std::map<std::pair<long, std::string>, Provenance> prov;

  bool has(long p, const std::string& sym) const { return val.count({p, sym}) > 0; }
  Quad get(long p, const std::string& sym) const;
  void set(long p, const std::string& sym, const Quad& v, Provenance pr);
};

// sum_{i<d} p^i
Int sigma_d(int d, long p);

// lambda(psi, p) = sum over components of coeff * p^k * sigma_d(p) with
// 2k = (n-2) - w1 - d + 1 and coeff = D_sym(p) (1 for Triv).
Quad evaluate_param(const ArthurParam& psi, int n, long p, const DTable& dt);

// The same value as an exact linear form  c0(p) + sum_sym c_sym(p) * D_sym(p)
// with polynomial coefficients in p.
struct Symbolic {
  Poly c0;
  std::map<std::string, Poly> terms;

  friend Symbolic operator-(const Symbolic& x, const Symbolic& y);
  friend Symbolic operator+(const Symbolic& x, const Symbolic& y);
  bool operator==(const Symbolic&) const = default;
  bool is_zero() const;
  std::string str() const;
};

Symbolic evaluate_param_symbolic(const ArthurParam& psi, int n);

// Evaluate a symbolic form at p with a D-table (throws MissingDataError on gaps).
Quad evaluate_symbolic(const Symbolic& s, long p, const DTable& dt);

}  // namespace nh
