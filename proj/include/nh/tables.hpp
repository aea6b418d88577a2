#pragma once
#include <map>
#include <set>

#include "nh/arthur.hpp"
#include "nh/roots.hpp"

namespace nh {

// Directory holding the bundled classification and parameter tables:
// $NH_DATA_DIR when set, otherwise the build-time source path.
std::string data_dir();

struct FingerprintRow {
  int n = 0, index = 0;
  std::string label;
  Fp6 fp;
};

struct FingerprintTable {
  int n = 0;
  std::vector<FingerprintRow> rows;             // by index, 1-based indices
  std::map<Fp6, int> by_fp;                     // injective (checked at load)
  std::set<i64> ambiguous_counts;               // root counts shared by >= 2 classes

  int size() const { return int(rows.size()); }
  const FingerprintRow& row(int index) const;   // 1-based
  int index_of(const Fp6& fp) const;            // throws MissingDataError when absent
  bool count_is_unique(i64 root_count) const { return !ambiguous_counts.count(root_count); }
  int index_of_unique_count(i64 root_count) const;  // only valid when unique
};

FingerprintTable load_fingerprints(int n, const std::string& dir = "");

struct ParamRow {
  int n = 0, index = 0;
  Quad eigenvalue;
  ArthurParam psi;
};

struct ParamTable {
  int n = 0;
  std::vector<ParamRow> rows;  // by index, 1-based
  const ParamRow& row(int index) const;
  int size() const { return int(rows.size()); }
};

ParamTable load_params(int n, const std::string& dir = "");

DTable load_dtable_file(const std::string& path);
void save_dtable_file(const std::string& path, const DTable& dt);

struct CrossSectionRow {
  int index24 = 0;
  std::string label24, orbit;
  int index23 = 0;
};

std::vector<CrossSectionRow> load_cross_section(const std::string& dir = "");

// res_23: index24 -> ascending targets in the 23-table.
std::vector<std::vector<int>> load_res23(const std::string& dir = "");
// res_24: index25 (1..57) -> single target in the 24-table.
std::vector<int> load_res24(const std::string& dir = "");
// res_242: pair index (1..32) -> ascending targets in the 24-table.
std::vector<std::vector<int>> load_res242(const std::string& dir = "");

// Fingerprint lookup after LLL reduction; throws MissingDataError when the
// fingerprint is not in the table.
const FingerprintRow& classify(const MatI& gram, const FingerprintTable& table);

}  // namespace nh
