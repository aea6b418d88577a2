#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "nh/congruence.hpp"
#include "nh/spectral.hpp"

using namespace nh;

namespace {

struct Spec23 {
  FingerprintTable table;
  Atlas atlas;
  MatI T;
  EigenSystem es;
  std::vector<int> match;
  ParamTable pt;
};

Spec23 spectral(int n) {
  Spec23 s;
  s.table = load_fingerprints(n);
  s.atlas = nhtest::cached_atlas(n, s.table);
  s.T = s.atlas.matrix(s.table);
  s.es = eigen_decompose(s.T, mass_vector_primitive(s.T));
  s.pt = load_params(n);
  s.match = match_params(s.es, s.pt);
  return s;
}

const Congruence* entry(const std::vector<Congruence>& scan, int i, int j) {
  for (const Congruence& c : scan)
    if (c.i == i && c.j == j) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("pair modulus on explicit vectors") {
  std::vector<Quad> u{Quad(1), Quad(3), Quad(5)};
  std::vector<Quad> v{Quad(1), Quad(1), Quad(1)};
  CHECK(pair_modulus(u, v) == 2);
  std::vector<Quad> w{Quad(2), Quad(6), Quad(10)};
  CHECK(pair_modulus(u, w) == 0);  // proportional
  std::vector<Quad> x{Quad(1), Quad(0), Quad(0)};
  std::vector<Quad> y{Quad(0), Quad(1), Quad(0)};
  CHECK(pair_modulus(x, y) == 1);
}

TEST_CASE("eigenvector congruences in the 23-dimensional genus") {
  Spec23 s = spectral(23);
  DTable dt = nhtest::dtable_p2();
  std::vector<Congruence> scan = congruence_scan(s.es, s.pt, s.match, dt);

  // The mod-9840 pair, stated on the parameter rows 26 and 28.
  const Congruence* c = entry(scan, 26, 28);
  REQUIRE(c != nullptr);
  CHECK(c->modulus == 9840);
  Quad diff = s.pt.row(26).eigenvalue - s.pt.row(28).eigenvalue;
  CHECK(diff == Quad(9840));

  // Scan rows are normalized (i < j), have nontrivial moduli, and their
  // eigenvalue differences vanish modulo the modulus at p = 2.
  for (const Congruence& r : scan) {
    CHECK(r.i < r.j);
    CHECK(r.modulus > 1);
    Quad d = s.pt.row(r.i).eigenvalue - s.pt.row(r.j).eigenvalue;
    REQUIRE(d.is_rational());
    CHECK(to_int(d.a) % r.modulus == 0);
    CHECK(r.final_modulus > 0);
    CHECK(r.modulus % r.final_modulus == 0);
  }
}

TEST_CASE("named congruence battery") {
  Spec23 s23 = spectral(23);
  Spec23 s25 = spectral(25);
  DTable dt = nhtest::dtable_p2();
  std::vector<BatteryItem> items =
      congruence_battery(s23.es, s23.pt, s23.match, s25.es, s25.pt, s25.match, dt);
  REQUIRE(items.size() == 14);

  auto find = [&](const std::string& tag) -> const BatteryItem& {
    for (const auto& b : items)
      if (b.tag == tag) return b;
    REQUIRE(false);
    return items[0];
  };

  const std::pair<const char*, i64> expected_modulus[] = {
      {"i", 8712},   {"ii", 9840},  {"iii", 12696}, {"iv", 31200}, {"v", 8736},
      {"vi", 10920}, {"vii", 8972}, {"viii", 5472}, {"ix", 2184},  {"x", 5856},
      {"xi", 2976},  {"xii", 7872}, {"xiii", 16224}, {"ram", 132672}};
  for (auto& [tag, m] : expected_modulus) CHECK(find(tag).modulus == m);

  // Which statements are sharp at p = 2.
  for (const char* tag : {"i", "ii", "iii", "iv", "v", "x", "xii", "xiii", "ram"})
    CHECK(find(tag).optimal_at_2);
  for (const char* tag : {"vi", "vii", "viii", "ix", "xi"})
    CHECK(!find(tag).optimal_at_2);

  // Division steps at primes without trace data stay unverified.
  for (const char* tag : {"i", "iv", "vi"}) CHECK(!find(tag).fully_verified);
  for (const char* tag :
       {"ii", "iii", "v", "vii", "viii", "ix", "x", "xi", "xii", "xiii", "ram"})
    CHECK(find(tag).fully_verified);

  // Witness bookkeeping: rows quoted by each statement live in the right
  // tables. (Their lemma moduli were already enforced during assembly.)
  for (const auto& b : items)
    for (auto& [n, ij] : b.witnesses) {
      const Spec23& s = n == 23 ? s23 : s25;
      CHECK(n == (n == 23 ? 23 : 25));
      CHECK(ij.first >= 1);
      CHECK(ij.second <= s.pt.size());
      CHECK(ij.first < ij.second);
    }
}
