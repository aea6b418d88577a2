// Shared fixtures for the unit suites: small-genus golden matrices (verified
// against independent brute-force classification and automorphism-order
// oracles), cached-walk loading, and the p = 2 trace table.
#pragma once
#include <cstdlib>
#include <string>

#include "nh/hecke.hpp"
#include "nh/io.hpp"
#include "nh/modforms.hpp"
#include "nh/tables.hpp"

namespace nhtest {

using namespace nh;

inline MatI mat(int n, std::initializer_list<i64> vals) {
  MatI m(n, n);
  auto it = vals.begin();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = *it++;
  return m;
}

// T(i-1, j-1) = #2-neighbors of class j lying in class i.
inline MatI golden_t15() { return mat(2, {7878, 6006, 8505, 10377}); }
inline MatI golden_t16() { return mat(2, {14670, 12870, 18225, 20025}); }
inline MatI golden_t17() {
  return mat(4, {14910, 12870, 90,    0,      //
                 18225, 20265, 63,    153,    //
                 32400, 16016, 46950, 43758,  //
                 0,     16384, 18432, 21624});
}

// Full-construction classification of one 2-neighbor: build the neighbor
// Gram, reduce, fingerprint, look up. Independent of the streaming engine.
inline int classify_line_brute(const MatI& G, u64 code, const FingerprintTable& table) {
  return classify(neighbor2_gram(G, code), table).index;
}

inline std::string cache_dir_or_fail() {
  const char* env = std::getenv("NH_CACHE_DIR");
  require(env && *env,
          "NH_CACHE_DIR is not set; run the 2-neighbor walks first (nh t2 --dim 23/24/25)");
  return env;
}

// Loads the completed walk for one of the large genera; fails with a
// actionable message when the checkpoint is absent or unfinished.
inline Atlas cached_atlas(int n, const FingerprintTable& table) {
  std::string path = cache_dir_or_fail() + "/atlas_" + std::to_string(n) + ".json";
  Atlas atlas;
  require(load_atlas(path, atlas, table_hash(table)),
          "missing checkpoint " + path + "; run: nh t2 --dim " + std::to_string(n));
  require(atlas.complete, "checkpoint " + path + " is incomplete; finish: nh t2 --dim " +
                              std::to_string(n));
  return atlas;
}

// Bundled p = 2 traces merged over the self-computed elliptic values.
inline DTable dtable_p2() {
  DTable dt = load_dtable_file(data_dir() + "/dtable_p2.tsv");
  static const std::pair<const char*, int> kElliptic[] = {
      {"D11", 12}, {"D15", 16}, {"D17", 18}, {"D19", 20}, {"D21", 22}};
  for (auto& [sym, k] : kElliptic) {
    Quad v{elliptic_trace(k, 2)};
    require(dt.get(2, sym) == v, "bundled table disagrees with the q-expansion");
  }
  require(dt.get(2, "Sym2D11") == Quad(sym2_trace(2)), "Sym2 trace mismatch");
  auto [wp, wm] = weight24_pair(2);
  require(dt.get(2, "D23p") == wp && dt.get(2, "D23m") == wm, "weight-24 pair mismatch");
  return dt;
}

}  // namespace nhtest
