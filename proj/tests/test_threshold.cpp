#include "doctest.h"
#include "helpers.hpp"
#include "nh/spectral.hpp"
#include "nh/threshold.hpp"

using namespace nh;

TEST_CASE("spectral surrogate reproduces the operator at p = 2") {
  FingerprintTable t = load_fingerprints(23);
  Atlas atlas = nhtest::cached_atlas(23, t);
  MatI T = atlas.matrix(t);
  EigenSystem es = eigen_decompose(T, mass_vector_primitive(T));
  ParamTable pt = load_params(23);
  std::vector<int> match = match_params(es, pt);
  ThresholdContext ctx = make_threshold_context(es, pt, match);
  CHECK(ctx.n == 23);
  CHECK(ctx.lo == 21);
  CHECK(ctx.hi == 22);
  DTable dt = nhtest::dtable_p2();
  for (int i = 1; i <= 32; i += 5)
    for (int j = 1; j <= 32; j += 3) {
      Quad e = threshold_entry(ctx, i, j, 2, dt);
      CHECK(e == Quad(T(i - 1, j - 1)));
    }
}

TEST_CASE("positivity threshold certificate for the 23-dim genus") {
  FingerprintTable t = load_fingerprints(23);
  Atlas atlas = nhtest::cached_atlas(23, t);
  MatI T = atlas.matrix(t);
  EigenSystem es = eigen_decompose(T, mass_vector_primitive(T));
  ParamTable pt = load_params(23);
  ThresholdContext ctx = make_threshold_context(es, pt, match_params(es, pt));
  ThresholdReport rep = completeness_threshold(ctx, {});
  CHECK(rep.pairs == 32 * 32);
  CHECK(rep.prefiltered + rep.escalated == rep.pairs);
  CHECK(rep.all_below_hi);
  CHECK(rep.has_witness);
  CHECK(rep.certified);
  CHECK(rep.rho_lo > 21);
  CHECK(rep.rho_hi < 22);
  CHECK(rep.rho_lo < rep.rho_hi);
  CHECK(rep.rho_hi - rep.rho_lo < Rat(1, 1000));
  CHECK(!rep.witnesses.empty());
}
