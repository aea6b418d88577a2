#include <algorithm>
#include <cstdio>

#include "doctest.h"
#include "helpers.hpp"
#include "nh/restriction.hpp"
#include "nh/spectral.hpp"

using namespace nh;

namespace {

struct Side {
  FingerprintTable table;
  Atlas atlas;
  MatI T;
  EigenSystem es;
  std::vector<int> match;
  ParamTable pt;
};

Side side(int n) {
  Side s;
  s.table = load_fingerprints(n);
  s.atlas = nhtest::cached_atlas(n, s.table);
  s.T = s.atlas.matrix(s.table);
  s.es = eigen_decompose(s.T, mass_vector_primitive(s.T));
  s.pt = load_params(n);
  s.match = match_params(s.es, s.pt);
  return s;
}

std::vector<MatI> reps(const Atlas& atlas, int count) {
  std::vector<MatI> out(static_cast<size_t>(count));
  for (const ClassRec& c : atlas.classes) out[size_t(c.index - 1)] = c.gram;
  return out;
}

}  // namespace

TEST_CASE("branching pattern predicate") {
  // Every factor of the big parameter moves by exactly +-1; leftover small
  // factors must be multiplicity-one newcomers.
  ArthurParam big = parse_param("D11[2]+[1]");
  CHECK(ggp_pattern(big, parse_param("D11[3]")));
  CHECK(ggp_pattern(big, parse_param("D11[1]+[2]")));
  CHECK(!ggp_pattern(big, parse_param("D11[2]+[1]")));  // nothing moved
  CHECK(ggp_pattern(big, parse_param("D11[1]+[2]+D15[1]")));  // one newcomer
  CHECK(!ggp_pattern(big, parse_param("D11[1]+[2]+D15[2]")));  // newcomer d > 1
  CHECK(!ggp_pattern(big, parse_param("D11[4]")));  // moved by 2
  CHECK(ggp_pattern(parse_param("[2]"), parse_param("[1]")));
  CHECK(ggp_pattern(parse_param("[1]"), parse_param("D11[1]")));  // [0] drops
}

TEST_CASE("fixture restriction sets follow the branching pattern") {
  // No walk needed: the bundled tables alone must satisfy the biconditional
  // that the exact decomposition later certifies.
  ParamTable p23 = load_params(23), p24 = load_params(24), p25 = load_params(25);
  auto fix23 = load_res23();
  REQUIRE(fix23.size() == size_t(p24.size()));
  for (int j = 1; j <= p24.size(); ++j) {
    const auto& sources = fix23[size_t(j - 1)];
    CHECK(!sources.empty());
    for (int i = 1; i <= p23.size(); ++i) {
      bool listed = std::find(sources.begin(), sources.end(), i) != sources.end();
      CHECK(listed == ggp_pattern(p24.row(j).psi, p23.row(i).psi));
    }
  }
  auto fix24 = load_res24();
  auto fix242 = load_res242();
  REQUIRE(fix24.size() == 57);
  REQUIRE(fix242.size() == 32);
  for (int j = 1; j <= p25.size(); ++j) {
    std::vector<int> sources;
    if (j <= 57)
      sources = {fix24[size_t(j - 1)]};
    else
      sources = fix242[size_t((j - 58) / 2)];
    CHECK(!sources.empty());
    for (int i = 1; i <= p24.size(); ++i) {
      bool listed = std::find(sources.begin(), sources.end(), i) != sources.end();
      CHECK(listed == ggp_pattern(p25.row(j).psi, p24.row(i).psi));
    }
  }
}

TEST_CASE("class lift, exact decomposition, fixtures: 23 -> 24") {
  Side src = side(23), tgt = side(24);
  std::vector<int> phi = restriction_map(23, reps(src.atlas, 32), tgt.table);
  REQUIRE(phi.size() == 32);
  Restriction r = restrict_decompose(23, phi, src.es, src.match, tgt.es, tgt.match);
  auto fix = load_res23();
  for (int j = 1; j <= 24; ++j) {
    REQUIRE(r.res.count(j));
    CHECK(r.res.at(j) == fix[size_t(j - 1)]);
  }
  // Adjacent classes lift to adjacent-or-equal classes.
  for (int a = 0; a < 32; ++a)
    for (int b = 0; b < 32; ++b)
      if (a != b && src.T(a, b) > 0) {
        int fa = phi[size_t(a)] - 1, fb = phi[size_t(b)] - 1;
        CHECK((fa == fb || tgt.T(fa, fb) > 0));
      }
}

TEST_CASE("class lift, exact decomposition, fixtures: 24 -> 25") {
  Side src = side(24), tgt = side(25);
  std::vector<int> phi = restriction_map(24, reps(src.atlas, 24), tgt.table);
  REQUIRE(phi.size() == 24);
  Restriction r = restrict_decompose(24, phi, src.es, src.match, tgt.es, tgt.match);
  auto fix1 = load_res24();
  auto fix2 = load_res242();
  for (int j = 1; j <= 57; ++j) {
    REQUIRE(r.res.count(j));
    CHECK(r.res.at(j) == std::vector<int>{fix1[size_t(j - 1)]});
  }
  for (int k = 1; k <= 32; ++k) {
    REQUIRE(r.res.count(56 + 2 * k));
    REQUIRE(r.res.count(57 + 2 * k));
    CHECK(r.res.at(56 + 2 * k) == fix2[size_t(k - 1)]);
    CHECK(r.res.at(57 + 2 * k) == fix2[size_t(k - 1)]);
  }
  // Support of alpha coincides with the branching predicate everywhere.
  for (int i = 1; i <= 24; ++i)
    for (int j = 1; j <= 121; ++j)
      CHECK(!r.alpha(i - 1, j - 1).is_zero() ==
            ggp_pattern(tgt.pt.row(j).psi, src.pt.row(i).psi));
}

TEST_CASE("cross-section fixture rows reproduce under the orthogonal cut") {
  FingerprintTable t23 = load_fingerprints(23);
  FingerprintTable t24 = load_fingerprints(24);
  Atlas a24 = nhtest::cached_atlas(24, t24);
  auto reps24 = reps(a24, 24);
  int checked = 0;
  for (const CrossSectionRow& row : load_cross_section()) {
    const MatI& G = reps24[size_t(row.index24 - 1)];
    AdeSystem sys = ade_decompose(G);
    // Cut along a root of the named component orbit.
    for (size_t c = 0; c < sys.comps.size(); ++c) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "%c%d", sys.comps[c].type, sys.comps[c].rank);
      if (row.orbit != buf) continue;
      Lattice sec = cross_section(Lattice{G}, sys.pos_roots[c][0]);
      CHECK(classify(sec.gram, t23).index == row.index23);
      ++checked;
      break;
    }
  }
  CHECK(checked == int(load_cross_section().size()));
}
