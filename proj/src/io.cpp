#include "nh/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace nh {

using ordered_json = nlohmann::ordered_json;

std::string default_cache_dir() {
  const char* e = std::getenv("NH_CACHE_DIR");
  return e ? std::string(e) : std::string();
}

std::string table_hash(const FingerprintTable& table) {
  std::string s = "n=" + std::to_string(table.n) + ";";
  for (const FingerprintRow& r : table.rows)
    s += std::to_string(r.index) + ":" + r.label + ":" + r.fp.str() + ";";
  u64 h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a:%016llx", (unsigned long long)h);
  return buf;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::filesystem::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    require(out.good(), "cannot open " + tmp.string());
    out << content;
    out.flush();
    require(out.good(), "short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, p);
}

void save_atlas(const std::string& path, const Atlas& atlas, const std::string& thash) {
  ordered_json j;
  j["schema_version"] = "1";
  j["kind"] = "atlas";
  j["n"] = atlas.n;
  j["table_hash"] = thash;
  j["complete"] = atlas.complete;
  ordered_json classes = ordered_json::array();
  for (const ClassRec& c : atlas.classes) {
    ordered_json e;
    e["index"] = c.index;
    e["parent"] = c.parent;
    e["code"] = c.code;
    ordered_json g = ordered_json::array();
    for (int i = 0; i < c.gram.rows; ++i) {
      ordered_json row = ordered_json::array();
      for (int k = 0; k < c.gram.cols; ++k) row.push_back(c.gram(i, k));
      g.push_back(std::move(row));
    }
    e["gram"] = std::move(g);
    classes.push_back(std::move(e));
  }
  j["classes"] = std::move(classes);
  j["processed"] = atlas.processed;
  ordered_json cols;
  for (const auto& [idx, counts] : atlas.columns) {
    std::vector<i64> body(counts.begin() + 1, counts.end());
    cols[std::to_string(idx)] = body;
  }
  j["columns"] = std::move(cols);
  write_file_atomic(path, j.dump(1) + "\n");
}

bool load_atlas(const std::string& path, Atlas& atlas, const std::string& expect_hash) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) return false;
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw StateError("unreadable cache file " + path + ": " + e.what());
  }
  try {
    if (j.at("schema_version").get<std::string>() != "1" ||
        j.at("kind").get<std::string>() != "atlas")
      throw StateError("cache file " + path + " has an unknown layout");
    if (j.at("table_hash").get<std::string>() != expect_hash)
      throw StateError("cache file " + path + " was built against a different table");
    Atlas a;
    a.n = j.at("n").get<int>();
    a.complete = j.at("complete").get<bool>();
    for (const auto& e : j.at("classes")) {
      ClassRec c;
      c.index = e.at("index").get<int>();
      c.parent = e.at("parent").get<int>();
      c.code = e.at("code").get<u64>();
      const auto& g = e.at("gram");
      int n = int(g.size());
      c.gram = MatI(n, n);
      for (int i = 0; i < n; ++i) {
        require(int(g[size_t(i)].size()) == n, "ragged gram");
        for (int k = 0; k < n; ++k) c.gram(i, k) = g[size_t(i)][size_t(k)].get<i64>();
      }
      a.classes.push_back(std::move(c));
    }
    a.processed = j.at("processed").get<std::vector<int>>();
    for (const auto& [key, arr] : j.at("columns").items()) {
      std::vector<i64> counts = arr.get<std::vector<i64>>();
      counts.insert(counts.begin(), 0);
      a.columns[std::stoi(key)] = std::move(counts);
    }
    atlas = std::move(a);
    return true;
  } catch (const StateError&) {
    throw;
  } catch (const std::exception& e) {
    throw StateError("malformed cache file " + path + ": " + e.what());
  }
}

}  // namespace nh
