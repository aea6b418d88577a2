#pragma once
#include "nh/lattice.hpp"

namespace nh {

// Nonzero vectors with x^t G x <= bound, one representative per +-pair,
// canonical sign: first nonzero coordinate positive.
std::vector<VecI> short_vectors(const MatI& G, i64 bound);

// Norm-2 vectors up to sign.
std::vector<VecI> root_vectors(const MatI& G);

// (|R|, n2, n1, n0, n-1, det A): root count with both signs, counts of simple
// roots by Cartan row sum, determinant of the Cartan matrix; (0,0,0,0,0,1)
// for a rootless lattice.
struct Fp6 {
  i64 roots = 0, n2 = 0, n1 = 0, n0 = 0, nm1 = 0, det = 1;
  bool operator==(const Fp6&) const = default;
  auto tuple() const { return std::make_tuple(roots, n2, n1, n0, nm1, det); }
  bool operator<(const Fp6& o) const { return tuple() < o.tuple(); }
  std::string str() const;
};

struct AdeComponent {
  char type;
  int rank;
  bool operator==(const AdeComponent&) const = default;
};

struct AdeSystem {
  std::vector<AdeComponent> comps;           // sorted: rank desc, then A < D < E
  std::vector<std::vector<VecI>> pos_roots;  // positive roots per component
};

// Simple roots of the positive system selected by a fixed generic functional.
std::vector<VecI> simple_roots(const MatI& G, const std::vector<VecI>& roots);

Fp6 fingerprint(const MatI& G);

AdeSystem ade_decompose(const MatI& G);

// "2A9+D6", "23A1", "-" for the empty system.
std::string ade_label(const std::vector<AdeComponent>& comps);
std::vector<AdeComponent> parse_ade_label(const std::string& label);

// Fingerprint predicted from a component multiset (arithmetic cross-check).
Fp6 fingerprint_of_components(const std::vector<AdeComponent>& comps);

}  // namespace nh
