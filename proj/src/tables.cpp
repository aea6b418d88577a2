#include "nh/tables.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace nh {

std::string data_dir() {
  const char* env = std::getenv("NH_DATA_DIR");
  if (env && *env) return env;
  return NH_SOURCE_DATA_DIR;
}

namespace {

std::vector<std::vector<std::string>> read_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingDataError("cannot open table: " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {  // first non-comment line is the column header
      header_seen = true;
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, '\t')) fields.push_back(f);
    rows.push_back(std::move(fields));
  }
  return rows;
}

std::string table_path(const std::string& dir, const std::string& name) {
  return (dir.empty() ? data_dir() : dir) + "/" + name;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string f;
  while (std::getline(ss, f, ',')) out.push_back(std::stoi(f));
  return out;
}

}  // namespace

const FingerprintRow& FingerprintTable::row(int index) const {
  require(index >= 1 && index <= size(), "class index out of range");
  return rows[index - 1];
}

int FingerprintTable::index_of(const Fp6& fp) const {
  auto it = by_fp.find(fp);
  if (it == by_fp.end())
    throw MissingDataError("fingerprint " + fp.str() + " not present in the dimension-" +
                           std::to_string(n) + " table");
  return it->second;
}

int FingerprintTable::index_of_unique_count(i64 root_count) const {
  for (const auto& r : rows)
    if (r.fp.roots == root_count) return r.index;
  throw MissingDataError("root count " + std::to_string(root_count) +
                         " not present in the dimension-" + std::to_string(n) + " table");
}

FingerprintTable load_fingerprints(int n, const std::string& dir) {
  FingerprintTable t;
  t.n = n;
  auto rows = read_tsv(table_path(dir, "fingerprints_" + std::to_string(n) + ".tsv"));
  std::map<i64, int> count_mult;
  for (auto& f : rows) {
    require(f.size() == 9, "fingerprint table: bad row arity");
    FingerprintRow r;
    r.n = std::stoi(f[0]);
    require(r.n == n, "fingerprint table: dimension mismatch");
    r.index = std::stoi(f[1]);
    r.label = f[2];
    r.fp.roots = std::stoll(f[3]);
    r.fp.n2 = std::stoll(f[4]);
    r.fp.n1 = std::stoll(f[5]);
    r.fp.n0 = std::stoll(f[6]);
    r.fp.nm1 = std::stoll(f[7]);
    r.fp.det = std::stoll(f[8]);
    require(r.index == int(t.rows.size()) + 1, "fingerprint table: indices not consecutive");
    // Each label must reproduce its stored fingerprint arithmetically.
    require(fingerprint_of_components(parse_ade_label(r.label)) == r.fp,
            "fingerprint table: label disagrees with stored fingerprint at index " +
                std::to_string(r.index));
    ++count_mult[r.fp.roots];
    t.rows.push_back(std::move(r));
  }
  for (const auto& r : t.rows) {
    require(t.by_fp.emplace(r.fp, r.index).second, "fingerprint table is not injective");
    if (count_mult[r.fp.roots] > 1) t.ambiguous_counts.insert(r.fp.roots);
  }
  return t;
}

const ParamRow& ParamTable::row(int index) const {
  require(index >= 1 && index <= size(), "parameter index out of range");
  return rows[index - 1];
}

ParamTable load_params(int n, const std::string& dir) {
  ParamTable t;
  t.n = n;
  int expected_dim = (n % 2 == 0) ? n : n - 1;
  for (auto& f : read_tsv(table_path(dir, "params_" + std::to_string(n) + ".tsv"))) {
    require(f.size() == 4, "parameter table: bad row arity");
    ParamRow r;
    r.n = std::stoi(f[0]);
    require(r.n == n, "parameter table: dimension mismatch");
    r.index = std::stoi(f[1]);
    r.eigenvalue = parse_quad(f[2]);
    r.psi = parse_param(f[3]);
    require(param_dim(r.psi) == expected_dim, "parameter has wrong total dimension at index " +
                                                  std::to_string(r.index));
    require(r.index == int(t.rows.size()) + 1, "parameter table: indices not consecutive");
    t.rows.push_back(std::move(r));
  }
  return t;
}

DTable load_dtable_file(const std::string& path) {
  DTable dt;
  for (auto& f : read_tsv(path)) {
    require(f.size() == 3, "D-table: bad row arity");
    dt.set(std::stol(f[0]), f[1], parse_quad(f[2]), Provenance::ingested);
  }
  return dt;
}

void save_dtable_file(const std::string& path, const DTable& dt) {
  std::ofstream out(path);
  require(bool(out), "cannot write " + path);
  out << "# schema: dtable v1\n# columns: p symbol value\np\tsymbol\tvalue\n";
  for (const auto& [key, v] : dt.val) out << key.first << "\t" << key.second << "\t" << v.str() << "\n";
}

std::vector<CrossSectionRow> load_cross_section(const std::string& dir) {
  std::vector<CrossSectionRow> out;
  for (auto& f : read_tsv(table_path(dir, "cross_section_23.tsv"))) {
    require(f.size() == 4, "cross-section table: bad row arity");
    out.push_back({std::stoi(f[0]), f[1], f[2], std::stoi(f[3])});
  }
  return out;
}

std::vector<std::vector<int>> load_res23(const std::string& dir) {
  std::vector<std::vector<int>> out(25);
  for (auto& f : read_tsv(table_path(dir, "res_23.tsv"))) {
    require(f.size() == 2, "res table: bad row arity");
    int i = std::stoi(f[0]);
    require(i >= 1 && i <= 24 && out[i].empty(), "res table: bad source index");
    out[i] = parse_int_list(f[1]);
  }
  return out;
}

std::vector<int> load_res24(const std::string& dir) {
  std::vector<int> out(58, 0);
  for (auto& f : read_tsv(table_path(dir, "res_24.tsv"))) {
    require(f.size() == 2, "res table: bad row arity");
    int i = std::stoi(f[0]);
    require(i >= 1 && i <= 57 && out[i] == 0, "res table: bad source index");
    out[i] = std::stoi(f[1]);
  }
  return out;
}

std::vector<std::vector<int>> load_res242(const std::string& dir) {
  std::vector<std::vector<int>> out(33);
  for (auto& f : read_tsv(table_path(dir, "res_242.tsv"))) {
    require(f.size() == 2, "res table: bad row arity");
    int i = std::stoi(f[0]);
    require(i >= 1 && i <= 32 && out[i].empty(), "res table: bad source index");
    out[i] = parse_int_list(f[1]);
  }
  return out;
}

const FingerprintRow& classify(const MatI& gram, const FingerprintTable& table) {
  GramReduction red = lll_gram(to_mpz(gram));
  Fp6 fp = fingerprint(to_i64(red.gram));
  return table.row(table.index_of(fp));
}

}  // namespace nh
