#include "doctest.h"
#include "helpers.hpp"
#include "nh/roots.hpp"

using namespace nh;

TEST_CASE("short vector and root enumeration") {
  MatI e8 = gram_ade('E', 8);
  CHECK(root_vectors(e8).size() == 120);  // one representative per +- pair
  CHECK(short_vectors(e8, 4).size() == 120 + 1080);
  MatI e7 = gram_ade('E', 7);
  CHECK(root_vectors(e7).size() == 63);
  MatI a2 = gram_ade('A', 2);
  CHECK(root_vectors(a2).size() == 3);
}

TEST_CASE("simple roots and Dynkin classification") {
  for (auto [t, r] : std::vector<std::pair<char, int>>{
           {'A', 1}, {'A', 5}, {'D', 4}, {'D', 10}, {'E', 6}, {'E', 7}, {'E', 8}}) {
    MatI g = gram_ade(t, r);
    auto roots = root_vectors(g);
    CHECK(int(simple_roots(g, roots).size()) == r);
    AdeSystem sys = ade_decompose(g);
    REQUIRE(sys.comps.size() == 1);
    CHECK(sys.comps[0].type == t);
    CHECK(sys.comps[0].rank == r);
    CHECK(int(sys.pos_roots[0].size()) == int(roots.size()));
  }
}

TEST_CASE("label parse/print round trip") {
  for (const char* l : {"E8", "2E8+A1", "D16+A1", "D10+E7", "A17", "D22+A1", "23A1",
                        "2D12", "E8+2E7+A1"}) {
    CHECK(ade_label(parse_ade_label(l)) == l);
  }
  // Direct sums decompose back to their factors.
  Lattice L = direct_sum(direct_sum(Lattice{gram_ade('D', 10)}, Lattice{gram_ade('E', 7)}),
                         Lattice{gram_ade('A', 1)});
  CHECK(ade_label(ade_decompose(L.gram).comps) == "D10+E7+A1");
}

TEST_CASE("fingerprints agree between lattice scan and component formula") {
  for (const char* l : {"E7", "E8", "E8+A1", "E8+E7", "D14+A1", "2E8", "D16", "2E8+A1",
                        "D16+A1", "D10+E7", "A17"}) {
    auto comps = parse_ade_label(l);
    Lattice L{gram_ade(comps[0].type, comps[0].rank)};
    for (size_t i = 1; i < comps.size(); ++i)
      L = direct_sum(L, Lattice{gram_ade(comps[i].type, comps[i].rank)});
    CHECK(fingerprint(L.gram) == fingerprint_of_components(comps));
  }
}

TEST_CASE("bundled classification tables are sound") {
  for (int n : {7, 8, 9, 15, 16, 17, 23, 24, 25}) {
    FingerprintTable t = load_fingerprints(n);
    CHECK(t.n == n);
    for (const auto& row : t.rows) {
      CHECK(ade_label(parse_ade_label(row.label)) == row.label);
      CHECK(t.index_of(row.fp) == row.index);
      if (t.count_is_unique(row.fp.roots))
        CHECK(t.index_of_unique_count(row.fp.roots) == row.index);
    }
  }
  CHECK(load_fingerprints(23).size() == 32);
  CHECK(load_fingerprints(24).size() == 24);
  CHECK(load_fingerprints(25).size() == 121);
  // Root-count collisions exist (they force full-fingerprint classification).
  CHECK(!load_fingerprints(17).count_is_unique(482));
  CHECK(!load_fingerprints(23).count_is_unique(606));
}

TEST_CASE("classification by reduced fingerprint") {
  FingerprintTable t16 = load_fingerprints(16);
  CHECK(classify(standard_lattice(16).gram, t16).label == "2E8");
  FingerprintTable t23 = load_fingerprints(23);
  CHECK(classify(seed_lattice(23).gram, t23).index == 1);  // D22+A1
  FingerprintTable t25 = load_fingerprints(25);
  CHECK(classify(seed_lattice(25).gram, t25).index == 121);  // D24+A1
  FingerprintTable t24 = load_fingerprints(24);
  CHECK(classify(seed_lattice(24).gram, t24).index == 23);  // 3E8
}
