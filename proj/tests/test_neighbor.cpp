#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "nh/neighbor.hpp"

using namespace nh;

TEST_CASE("2-neighbor line counts") {
  CHECK(neighbor_count(7, 2) == 63);
  CHECK(neighbor_count(8, 2) == 135);
  CHECK(neighbor_count(9, 2) == 255);
  CHECK(neighbor_count(15, 2) == 16383);
  CHECK(neighbor_count(16, 2) == 32895);
  CHECK(neighbor_count(17, 2) == 65535);
  CHECK(neighbor_count(23, 2) == 4194303);
  CHECK(neighbor_count(24, 2) == 8390655);
  CHECK(neighbor_count(25, 2) == 16777215);
}

TEST_CASE("the literal closed form undercounts by exactly one line") {
  // The geometric sum as usually quoted starts at p^1; the enumeration
  // includes the p^0 line as well. The audit surfaces this offset.
  for (int n : {7, 8, 9, 15, 16, 17, 23, 24, 25})
    CHECK(neighbor_count(n, 2, true) == neighbor_count(n, 2) - 1);
  CHECK(neighbor_count(24, 2, true) == 8390654);
}

TEST_CASE("odd-prime line counts") {
  // Odd n: sum of p^i for i < n-1; even n adds the discriminant term.
  CHECK(neighbor_count(23, 3) == (pow_int(Int(3), 22) - 1) / 2);
  CHECK(neighbor_count(25, 5) == (pow_int(Int(5), 24) - 1) / 4);
  CHECK(neighbor_count(24, 3) == (pow_int(Int(3), 23) - 1) / 2 + pow_int(Int(3), 11));
  CHECK(neighbor_count_pk(23, 3, 1) == neighbor_count(23, 3));
  CHECK(neighbor_count_pk(23, 3, 2) ==
        pow_int(Int(3), 21) * neighbor_count(23, 3));
  CHECK(neighbor_count_product(23, {{2, 1}, {3, 1}}) ==
        neighbor_count(23, 2) * neighbor_count(23, 3));
}

TEST_CASE("isotropic stream enumerates each line once") {
  for (int n : {7, 8, 9}) {
    MatI G = seed_lattice(n).gram;
    IsotropicStream st(G);
    u64 lim = u64(1) << n;
    std::set<u64> seen;
    REQUIRE(st.next(lim));
    do {
      CHECK(seen.insert(st.code).second);
    } while (st.next(lim));
    CHECK(Int(i64(seen.size())) == neighbor_count(n, 2));
  }
}

TEST_CASE("seek splits a scan without loss") {
  MatI G = seed_lattice(9).gram;
  u64 lim = u64(1) << 9;
  std::set<u64> whole, parts;
  {
    IsotropicStream st(G);
    while (st.next(lim)) whole.insert(st.code);
  }
  for (u64 lo : {u64(0), u64(100), u64(300)}) {
    u64 hi = lo == 0 ? 100 : (lo == 100 ? 300 : lim);
    IsotropicStream st(G);
    st.seek(lo == 0 ? 1 : lo);
    if (st.code == 0 || st.code >= hi) continue;
    do {
      parts.insert(st.code);
    } while (st.next(hi));
  }
  CHECK(whole == parts);
}

TEST_CASE("neighbor construction preserves the genus invariants") {
  for (int n : {8, 9, 15}) {
    Lattice L = seed_lattice(n);
    IsotropicStream st(L.gram);
    u64 lim = u64(1) << n;
    int sampled = 0;
    REQUIRE(st.next(lim));
    do {
      if (st.code % 17 != 3 && sampled > 0) continue;  // sample a few lines
      MatI G2 = neighbor2_gram(L.gram, st.code);
      Lattice N{G2};
      CHECK(is_even(N));
      CHECK(det(N) == det(L));
      if (++sampled > 12) break;
    } while (st.next(lim));
  }
}

TEST_CASE("brute-force columns match the golden matrices") {
  // Dims 7/8/9: a single class; every line returns to it.
  for (int n : {7, 8, 9}) {
    FingerprintTable t = load_fingerprints(n);
    MatI G = seed_lattice(n).gram;
    IsotropicStream st(G);
    u64 lim = u64(1) << n;
    i64 lines = 0;
    REQUIRE(st.next(lim));
    do {
      CHECK(nhtest::classify_line_brute(G, st.code, t) == 1);
      ++lines;
    } while (st.next(lim));
    CHECK(Int(lines) == neighbor_count(n, 2));
  }
}
