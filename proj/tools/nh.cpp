// nh — exact 2-neighbor Hecke operators on even lattice genera.
//
// Subcommands: t2, classify, tp, eigen, graph, congruences, masses,
// restrict, modforms, complete-threshold. All reports are JSON with a
// schema_version field; matrices are additionally exportable as TSV.
// Exit codes: 0 ok, 2 bad input, 3 missing data / failed cross-check,
// 4 bad cached state, 1 unexpected.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nh/congruence.hpp"
#include "nh/io.hpp"
#include "nh/lattice.hpp"
#include "nh/modforms.hpp"
#include "nh/restriction.hpp"
#include "nh/threshold.hpp"

using json = nlohmann::ordered_json;

namespace {

using namespace nh;

struct Config {
  int dim = 0;
  int from = 0;  // restrict source dimension
  long prime = 2;
  int threads = 1;
  int terms = 16;
  long pmax = 31;
  std::string data_dir;    // "" = compiled-in default
  std::string cache_dir;   // "" = $NH_CACHE_DIR
  std::string out;         // "" = stdout
  std::string tsv;         // "" = no TSV export
  std::string dtable_path; // extra ingested trace values
  std::string gram_path;   // classify input, "" = stdin
  std::string anchor;      // masses anchor value, "" = default
  bool resume = true;
  bool quiet = false;
  bool audit = false;
  bool discovery = false;
  bool battery = false;
};

void note(const Config& cfg, const std::string& msg) {
  if (!cfg.quiet) std::fprintf(stderr, "[nh] %s\n", msg.c_str());
}

std::function<void(const std::string&)> logger(const Config& cfg) {
  if (cfg.quiet) return {};
  return [](const std::string& m) { std::fprintf(stderr, "[nh] %s\n", m.c_str()); };
}

void emit(const Config& cfg, const json& j) {
  std::string s = j.dump(2);
  s += "\n";
  if (cfg.out.empty())
    std::fwrite(s.data(), 1, s.size(), stdout);
  else
    write_file_atomic(cfg.out, s);
}

template <class M>
void emit_tsv(const Config& cfg, const M& T) {
  if (cfg.tsv.empty()) return;
  std::ostringstream os;
  for (int i = 0; i < T.rows; ++i) {
    for (int j = 0; j < T.cols; ++j) {
      if (j) os << '\t';
      os << T(i, j);
    }
    os << '\n';
  }
  write_file_atomic(cfg.tsv, os.str());
}

std::string cache_dir_of(const Config& cfg) {
  return cfg.cache_dir.empty() ? default_cache_dir() : cfg.cache_dir;
}

std::string atlas_path(const Config& cfg, int dim) {
  std::string dir = cache_dir_of(cfg);
  return dir.empty() ? "" : dir + "/atlas_" + std::to_string(dim) + ".json";
}

// Walk the genus (small dimensions) or load the cached walk (large ones).
Atlas need_atlas(const Config& cfg, int dim, const FingerprintTable& table) {
  if (dim <= 17) {
    ExploreOptions opt;
    opt.threads = cfg.threads;
    opt.cache_path = atlas_path(cfg, dim);
    opt.resume = cfg.resume;
    opt.log = logger(cfg);
    return explore(dim, table, opt);
  }
  std::string path = atlas_path(cfg, dim);
  if (path.empty())
    throw MissingDataError("no cache directory configured; set NH_CACHE_DIR or --cache-dir and run: nh t2 --dim " +
                           std::to_string(dim));
  Atlas atlas;
  if (!load_atlas(path, atlas, table_hash(table)))
    throw MissingDataError("atlas checkpoint not found: " + path + "; run: nh t2 --dim " +
                           std::to_string(dim));
  if (!atlas.complete)
    throw MissingDataError("atlas at " + path + " is incomplete (" +
                           std::to_string(atlas.processed.size()) + "/" +
                           std::to_string(atlas.classes.size()) +
                           " columns); run: nh t2 --dim " + std::to_string(dim));
  return atlas;
}

std::vector<Int> masses_of(int dim, const MatI& T) {
  if (dim == 23) {
    Int anchor = 1;
    for (int k = 2; k <= 22; ++k) anchor *= k;
    anchor <<= 22;
    return mass_vector(T, 1, anchor);  // 22! * 2^22 at the first class
  }
  return mass_vector_primitive(T);
}

// Representative Gram matrices ordered by table index.
std::vector<MatI> reps_by_index(const Atlas& atlas, int count) {
  std::vector<MatI> reps(static_cast<size_t>(count));
  int found = 0;
  for (const ClassRec& c : atlas.classes)
    if (c.index >= 1 && c.index <= count) {
      reps[size_t(c.index - 1)] = c.gram;
      ++found;
    }
  require(found == count, "atlas does not cover the class table");
  return reps;
}

// Satake traces: self-computed elliptic data at the requested primes, the
// bundled p = 2 values, then user-supplied ingested values. Overlaps must
// agree exactly.
void merge_dtable(DTable& dt, const DTable& extra) {
  for (auto& [key, v] : extra.val) {
    if (dt.has(key.first, key.second))
      require(dt.get(key.first, key.second) == v,
              "trace tables disagree at p=" + std::to_string(key.first) + " " + key.second);
    else
      dt.set(key.first, key.second, v, extra.prov.at(key));
  }
}

void add_elliptic(DTable& dt, long p) {
  static const std::pair<const char*, int> kElliptic[] = {
      {"D11", 12}, {"D15", 16}, {"D17", 18}, {"D19", 20}, {"D21", 22}};
  for (auto& [sym, k] : kElliptic)
    if (!dt.has(p, sym)) dt.set(p, sym, Quad(elliptic_trace(k, p)), Provenance::computed);
  if (!dt.has(p, "Sym2D11")) dt.set(p, "Sym2D11", Quad(sym2_trace(p)), Provenance::computed);
  if (!dt.has(p, "D23p") && !dt.has(p, "D23m")) {
    auto [wp, wm] = weight24_pair(p);
    dt.set(p, "D23p", wp, Provenance::computed);
    dt.set(p, "D23m", wm, Provenance::computed);
  }
}

DTable build_dtable(const Config& cfg, long p) {
  DTable dt;
  add_elliptic(dt, p);
  if (p != 2) add_elliptic(dt, 2);
  merge_dtable(dt, load_dtable_file((cfg.data_dir.empty() ? data_dir() : cfg.data_dir) +
                                    "/dtable_p2.tsv"));
  if (!cfg.dtable_path.empty()) merge_dtable(dt, load_dtable_file(cfg.dtable_path));
  return dt;
}

struct Spectral {
  FingerprintTable table;
  Atlas atlas;
  MatI T;
  std::vector<Int> masses;
  ParamTable pt;
  EigenSystem es;
  std::vector<int> match;
};

Spectral need_spectral(const Config& cfg, int dim) {
  Spectral s;
  s.table = load_fingerprints(dim, cfg.data_dir);
  s.atlas = need_atlas(cfg, dim, s.table);
  s.T = s.atlas.matrix(s.table);
  s.masses = masses_of(dim, s.T);
  s.pt = load_params(dim, cfg.data_dir);
  note(cfg, "eigendecomposition: dim " + std::to_string(dim));
  s.es = eigen_decompose(s.T, s.masses);
  s.match = match_params(s.es, s.pt);
  return s;
}

json quad_json(const Quad& q) { return q.str(); }

json matrix_json(const MatI& T) {
  json rows = json::array();
  for (int i = 0; i < T.rows; ++i) {
    json r = json::array();
    for (int j = 0; j < T.cols; ++j) r.push_back(T(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

json matrix_json(const MatZ& T) {
  json rows = json::array();
  for (int i = 0; i < T.rows; ++i) {
    json r = json::array();
    for (int j = 0; j < T.cols; ++j) r.push_back(T(i, j).get_str());
    rows.push_back(std::move(r));
  }
  return rows;
}

// ---------------------------------------------------------------------------

void cmd_t2(const Config& cfg) {
  FingerprintTable table = load_fingerprints(cfg.dim, cfg.data_dir);
  ExploreOptions opt;
  opt.threads = cfg.threads;
  opt.discovery_only = cfg.discovery;
  opt.cache_path = atlas_path(cfg, cfg.dim);
  opt.resume = cfg.resume;
  opt.log = logger(cfg);
  Atlas atlas = explore(cfg.dim, table, opt);

  json j;
  j["schema_version"] = 1;
  j["command"] = "t2";
  j["dim"] = cfg.dim;
  j["classes"] = json::array();
  for (const ClassRec& c : atlas.classes) {
    json e;
    e["index"] = c.index;
    e["label"] = table.row(c.index).label;
    e["parent"] = c.parent;
    e["code"] = c.code;
    j["classes"].push_back(std::move(e));
  }
  j["class_count"] = atlas.classes.size();
  j["complete"] = atlas.complete;
  if (atlas.complete) {
    MatI T = atlas.matrix(table);
    Int cn = neighbor_count(cfg.dim, 2);
    for (int c = 0; c < T.cols; ++c) {
      Int sum = 0;
      for (int r = 0; r < T.rows; ++r) sum += T(r, c);
      require(sum == cn, "column " + std::to_string(c + 1) + " does not sum to the line count");
    }
    j["column_sum"] = cn.get_str();
    j["column_sums_verified"] = true;
    j["matrix"] = matrix_json(T);
    emit_tsv(cfg, T);
  }
  if (cfg.audit) {
    Int closed = neighbor_count(cfg.dim, 2, true);
    Int exact = neighbor_count(cfg.dim, 2, false);
    json a;
    a["closed_form"] = closed.get_str();
    a["enumerated"] = exact.get_str();
    a["closed_form_matches"] = closed == exact;
    a["offset"] = Int(closed - exact).get_str();
    j["audit"] = std::move(a);
  }
  emit(cfg, j);
}

void cmd_classify(const Config& cfg) {
  FingerprintTable table = load_fingerprints(cfg.dim, cfg.data_dir);
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!cfg.gram_path.empty()) {
    file.open(cfg.gram_path);
    if (!file) throw InputError("cannot open " + cfg.gram_path);
    in = &file;
  }
  int n = 0;
  if (!(*in >> n) || n != cfg.dim) throw InputError("gram input must start with the dimension");
  MatI g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(*in >> g(i, j))) throw InputError("gram input ended early");
  for (int i = 0; i < n; ++i) {
    if (g(i, i) % 2 != 0) throw InputError("gram matrix is not even");
    for (int j = 0; j < n; ++j)
      if (g(i, j) != g(j, i)) throw InputError("gram matrix is not symmetric");
  }
  const FingerprintRow& row = classify(g, table);
  json j;
  j["schema_version"] = 1;
  j["command"] = "classify";
  j["dim"] = cfg.dim;
  j["index"] = row.index;
  j["label"] = row.label;
  j["fingerprint"] = {row.fp.roots, row.fp.n2, row.fp.n1, row.fp.n0, row.fp.nm1, row.fp.det};
  emit(cfg, j);
}

void cmd_masses(const Config& cfg) {
  FingerprintTable table = load_fingerprints(cfg.dim, cfg.data_dir);
  Atlas atlas = need_atlas(cfg, cfg.dim, table);
  MatI T = atlas.matrix(table);
  std::vector<Int> m;
  std::string anchor_desc;
  if (!cfg.anchor.empty()) {
    m = mass_vector(T, 1, Int(cfg.anchor));
    anchor_desc = cfg.anchor;
  } else if (cfg.dim == 23) {
    m = masses_of(23, T);
    anchor_desc = m[0].get_str();  // 22! * 2^22
  } else {
    m = mass_vector_primitive(T);
    anchor_desc = "primitive";
  }
  json j;
  j["schema_version"] = 1;
  j["command"] = "masses";
  j["dim"] = cfg.dim;
  j["anchor"] = anchor_desc;
  j["self_adjoint"] = mass_symmetric(T, m);
  j["masses"] = json::array();
  for (const Int& v : m) j["masses"].push_back(v.get_str());
  emit(cfg, j);
}

void cmd_eigen(const Config& cfg) {
  Spectral s = need_spectral(cfg, cfg.dim);
  DTable dt = build_dtable(cfg, 2);
  int N = s.T.rows;
  for (int k = 0; k < N; ++k) {
    Quad lam = evaluate_param(s.pt.row(s.match[size_t(k)]).psi, cfg.dim, 2, dt);
    require(lam == s.es.values[size_t(k)], "eigenvalue mismatch against the parameter table");
  }
  json j;
  j["schema_version"] = 1;
  j["command"] = "eigen";
  j["dim"] = cfg.dim;
  j["verified_at_p2"] = true;
  j["eigenvalues"] = json::array();
  for (int k = 0; k < N; ++k) {
    json e;
    e["value"] = quad_json(s.es.values[size_t(k)]);
    e["row"] = s.match[size_t(k)];
    e["psi"] = print_param(s.pt.row(s.match[size_t(k)]).psi);
    j["eigenvalues"].push_back(std::move(e));
  }
  emit(cfg, j);
}

MatZ reconstruct_for(const Config& cfg, const Spectral& s, long p) {
  DTable dt = build_dtable(cfg, p);
  std::set<std::string> missing;
  for (int i = 1; i <= s.pt.size(); ++i)
    for (const ArthurComponent& c : s.pt.row(i).psi.comps)
      if (c.sym != "Triv" && !dt.has(p, c.sym)) missing.insert(c.sym);
  if (!missing.empty()) {
    std::string list;
    for (const std::string& sym : missing) list += (list.empty() ? "" : ", ") + sym;
    throw MissingDataError("missing trace values at p=" + std::to_string(p) + ": " + list);
  }
  std::vector<Quad> lambda(static_cast<size_t>(s.T.rows));
  for (int k = 0; k < s.T.rows; ++k)
    lambda[size_t(k)] = evaluate_param(s.pt.row(s.match[size_t(k)]).psi, cfg.dim, p, dt);
  return reconstruct_tp(s.es, lambda, s.masses, neighbor_count(cfg.dim, p));
}

void cmd_tp(const Config& cfg) {
  Spectral s = need_spectral(cfg, cfg.dim);
  MatZ Tp = reconstruct_for(cfg, s, cfg.prime);
  json j;
  j["schema_version"] = 1;
  j["command"] = "tp";
  j["dim"] = cfg.dim;
  j["p"] = cfg.prime;
  j["column_sum"] = neighbor_count(cfg.dim, cfg.prime).get_str();
  j["self_adjoint"] = true;  // enforced by the reconstruction
  j["matrix"] = matrix_json(Tp);
  emit(cfg, j);
  emit_tsv(cfg, Tp);
}

void cmd_graph(const Config& cfg) {
  FingerprintTable table = load_fingerprints(cfg.dim, cfg.data_dir);
  Atlas atlas = need_atlas(cfg, cfg.dim, table);
  MatI A;
  if (cfg.prime == 2) {
    A = atlas.matrix(table);
  } else {
    Spectral s;
    s.table = table;
    s.atlas = atlas;
    s.T = atlas.matrix(table);
    s.masses = masses_of(cfg.dim, s.T);
    s.pt = load_params(cfg.dim, cfg.data_dir);
    s.es = eigen_decompose(s.T, s.masses);
    s.match = match_params(s.es, s.pt);
    MatZ Tp = reconstruct_for(cfg, s, cfg.prime);
    A = MatI(Tp.rows, Tp.cols);
    for (int i = 0; i < Tp.rows; ++i)
      for (int j = 0; j < Tp.cols; ++j) A(i, j) = Tp(i, j) > 0 ? 1 : 0;
  }
  json j;
  j["schema_version"] = 1;
  j["command"] = "graph";
  j["dim"] = cfg.dim;
  j["p"] = cfg.prime;
  j["connected"] = graph_connected(A);
  j["complete"] = graph_complete(A);
  j["diameter"] = graph_diameter(A);
  emit(cfg, j);
}

json congruence_json(const Congruence& c) {
  json e;
  e["n"] = c.n;
  e["i"] = c.i;
  e["j"] = c.j;
  e["modulus"] = c.modulus.get_str();
  e["diff"] = c.diff.str();
  e["divided_by"] = c.divided_by;
  e["reduced"] = c.reduced.str();
  e["final_modulus"] = c.final_modulus.get_str();
  e["verified_primes"] = c.verified_primes;
  e["unverified_primes"] = c.unverified_primes;
  e["optimal_at_2"] = c.optimal_at_2;
  return e;
}

// Elliptic symbols are self-computable, so division primes q of moduli whose
// reduced form only involves them can always be settled. Cap the series
// work per prime.
void enrich_elliptic(DTable& dt, const std::vector<Congruence>& scan) {
  static const std::set<std::string> kElliptic = {"D11",  "D15",  "D17",     "D19",
                                                  "D21",  "D23p", "D23m",    "Sym2D11"};
  std::set<long> wanted;
  for (const Congruence& c : scan) {
    bool elliptic = true;
    for (auto& [sym, poly] : c.reduced.terms)
      if (!poly.is_zero() && !kElliptic.count(sym)) elliptic = false;
    if (!elliptic) continue;
    for (long q : c.unverified_primes)
      if (q <= 10000) wanted.insert(q);
  }
  for (long q : wanted) add_elliptic(dt, q);
}

void cmd_congruences(const Config& cfg) {
  Spectral s = need_spectral(cfg, cfg.dim);
  DTable dt = build_dtable(cfg, 2);
  note(cfg, "congruence scan: dim " + std::to_string(cfg.dim));
  std::vector<Congruence> scan = congruence_scan(s.es, s.pt, s.match, dt);
  enrich_elliptic(dt, scan);
  scan = congruence_scan(s.es, s.pt, s.match, dt);

  json j;
  j["schema_version"] = 1;
  j["command"] = "congruences";
  j["dim"] = cfg.dim;
  j["scan"] = json::array();
  for (const Congruence& c : scan) j["scan"].push_back(congruence_json(c));
  if (cfg.battery) {
    int other = cfg.dim == 23 ? 25 : 23;
    Spectral s2 = need_spectral(cfg, other);
    const Spectral& s23 = cfg.dim == 23 ? s : s2;
    const Spectral& s25 = cfg.dim == 23 ? s2 : s;
    note(cfg, "congruence battery");
    std::vector<BatteryItem> items = congruence_battery(s23.es, s23.pt, s23.match, s25.es,
                                                        s25.pt, s25.match, dt);
    j["battery"] = json::array();
    for (const BatteryItem& b : items) {
      json e;
      e["tag"] = b.tag;
      e["modulus"] = b.modulus.get_str();
      e["statement"] = b.statement;
      e["fully_verified"] = b.fully_verified;
      e["optimal_at_2"] = b.optimal_at_2;
      e["witnesses"] = json::array();
      for (auto& [n, ij] : b.witnesses) e["witnesses"].push_back({n, ij.first, ij.second});
      j["battery"].push_back(std::move(e));
    }
  }
  emit(cfg, j);
}

void cmd_restrict(const Config& cfg) {
  Config scfg = cfg;
  scfg.dim = cfg.from;
  Spectral src = need_spectral(scfg, cfg.from);
  Config tcfg = cfg;
  tcfg.dim = cfg.from + 1;
  Spectral tgt = need_spectral(tcfg, cfg.from + 1);

  std::vector<MatI> reps = reps_by_index(src.atlas, src.table.size());
  note(cfg, "class-level lift " + std::to_string(cfg.from) + " -> " +
                std::to_string(cfg.from + 1));
  std::vector<int> phi = restriction_map(cfg.from, reps, tgt.table);
  Restriction r = restrict_decompose(cfg.from, phi, src.es, src.match, tgt.es, tgt.match);

  // Adjacent source classes must have adjacent (or equal) images.
  bool adjacency = true;
  for (int a = 0; a < src.T.rows; ++a)
    for (int b = 0; b < src.T.cols; ++b)
      if (a != b && src.T(a, b) > 0) {
        int fa = phi[size_t(a)] - 1, fb = phi[size_t(b)] - 1;
        if (fa != fb && tgt.T(fa, fb) == 0) adjacency = false;
      }

  // Branching-pattern predicate must coincide with the support of alpha.
  bool ggp_ok = true;
  int ns = src.pt.size(), nt = tgt.pt.size();
  for (int i = 1; i <= ns; ++i)
    for (int jj = 1; jj <= nt; ++jj) {
      bool nz = !r.alpha(i - 1, jj - 1).is_zero();
      if (nz != ggp_pattern(tgt.pt.row(jj).psi, src.pt.row(i).psi)) ggp_ok = false;
    }

  bool nonempty = true;
  for (int jj = 1; jj <= nt; ++jj)
    if (r.res.find(jj) == r.res.end()) nonempty = false;

  // Bundled expectation tables.
  bool fixture_match = true;
  std::string dir = cfg.data_dir;
  if (cfg.from == 23) {
    std::vector<std::vector<int>> fix = load_res23(dir);
    fixture_match = static_cast<int>(fix.size()) == nt;
    for (int jj = 1; fixture_match && jj <= nt; ++jj)
      if (r.res.at(jj) != fix[size_t(jj - 1)]) fixture_match = false;
  } else {
    std::vector<int> fix1 = load_res24(dir);
    std::vector<std::vector<int>> fix2 = load_res242(dir);
    fixture_match = static_cast<int>(fix1.size()) == 57 && fix2.size() == 32 && nt == 121;
    for (int jj = 1; fixture_match && jj <= 57; ++jj)
      if (r.res.at(jj) != std::vector<int>{fix1[size_t(jj - 1)]}) fixture_match = false;
    for (int k = 1; fixture_match && k <= 32; ++k) {
      if (r.res.at(56 + 2 * k) != fix2[size_t(k - 1)]) fixture_match = false;
      if (r.res.at(57 + 2 * k) != fix2[size_t(k - 1)]) fixture_match = false;
    }
  }

  json j;
  j["schema_version"] = 1;
  j["command"] = "restrict";
  j["from"] = cfg.from;
  j["to"] = cfg.from + 1;
  j["phi"] = phi;
  j["res"] = json::object();
  for (int jj = 1; jj <= nt; ++jj) {
    std::string key = print_param(tgt.pt.row(jj).psi);
    json list = json::array();
    auto it = r.res.find(jj);
    if (it != r.res.end())
      for (int i : it->second) list.push_back(i);
    j["res"][key] = std::move(list);
  }
  j["alpha"] = json::array();
  for (int i = 0; i < ns; ++i) {
    json row = json::array();
    for (int jj = 0; jj < nt; ++jj) row.push_back(r.alpha(i, jj).str());
    j["alpha"].push_back(std::move(row));
  }
  j["phi_adjacency"] = adjacency;
  j["ggp_equivalent"] = ggp_ok;
  j["all_nonempty"] = nonempty;
  j["fixture_match"] = fixture_match;
  emit(cfg, j);
}

void cmd_modforms(const Config& cfg) {
  json j;
  j["schema_version"] = 1;
  j["command"] = "modforms";
  j["terms"] = cfg.terms;
  auto series_json = [&](const Series& s) {
    json a = json::array();
    for (const Int& v : s) a.push_back(v.get_str());
    return a;
  };
  j["e4"] = series_json(eisenstein4(cfg.terms));
  j["e6"] = series_json(eisenstein6(cfg.terms));
  j["delta"] = series_json(delta_series(cfg.terms));
  j["traces"] = json::array();
  for (long p = 2; p <= cfg.pmax; ++p) {
    bool prime = p >= 2;
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    json e;
    e["p"] = p;
    for (int k : {12, 16, 18, 20, 22})
      e["D" + std::to_string(k - 1)] = elliptic_trace(k, p).get_str();
    e["Sym2D11"] = sym2_trace(p).get_str();
    auto [wp, wm] = weight24_pair(p);
    e["D23p"] = wp.str();
    e["D23m"] = wm.str();
    j["traces"].push_back(std::move(e));
  }
  emit(cfg, j);
}

void cmd_threshold(const Config& cfg) {
  Spectral s = need_spectral(cfg, cfg.dim);
  ThresholdContext ctx = make_threshold_context(s.es, s.pt, s.match);
  ThresholdReport rep = completeness_threshold(ctx, logger(cfg));
  json j;
  j["schema_version"] = 1;
  j["command"] = "complete-threshold";
  j["dim"] = cfg.dim;
  j["bracket"] = {rep.lo, rep.hi};
  j["pairs"] = rep.pairs;
  j["prefiltered"] = rep.prefiltered;
  j["escalated"] = rep.escalated;
  j["witnesses"] = json::array();
  for (auto& [a, b] : rep.witnesses) j["witnesses"].push_back({a, b});
  j["all_below_hi"] = rep.all_below_hi;
  j["has_witness"] = rep.has_witness;
  j["certified"] = rep.certified;
  j["rho_lo"] = rep.rho_lo.get_str();
  j["rho_hi"] = rep.rho_hi.get_str();
  j["rho_approx"] = rep.rho_lo.get_d();
  emit(cfg, j);
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"nh: exact 2-neighbor Hecke operators on even lattice genera"};
  app.require_subcommand(1);
  app.add_option("--data-dir", cfg.data_dir, "fixture directory (default: bundled)");
  app.add_option("--cache-dir", cfg.cache_dir, "checkpoint directory (default: $NH_CACHE_DIR)");
  app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--quiet", cfg.quiet, "suppress progress output");

  const std::vector<int> all_dims{7, 8, 9, 15, 16, 17, 23, 24, 25};
  const std::vector<int> spectral_dims{23, 24, 25};
  const std::vector<int> big_dims{23, 25};

  auto add_out = [&](CLI::App* c) {
    c->fallthrough();  // accept the global options after the subcommand name too
    c->add_option("--out", cfg.out, "write the JSON report here");
  };

  CLI::App* t2 = app.add_subcommand("t2", "enumerate 2-neighbors and assemble T_2");
  t2->add_option("--dim", cfg.dim, "genus dimension")->required()->check(CLI::IsMember(all_dims));
  t2->add_flag("--audit", cfg.audit, "compare the closed-form line count to the enumeration");
  t2->add_flag("--discovery-only", cfg.discovery, "stop once every class has a witness");
  t2->add_flag("--resume,!--no-resume", cfg.resume, "reuse a compatible checkpoint");
  t2->add_option("--tsv", cfg.tsv, "write the matrix as TSV here");
  add_out(t2);
  t2->callback([&] { cmd_t2(cfg); });

  CLI::App* cl = app.add_subcommand("classify", "classify a Gram matrix against a genus table");
  cl->add_option("--dim", cfg.dim)->required()->check(CLI::IsMember(all_dims));
  cl->add_option("--gram", cfg.gram_path, "file with n then n*n integers (default: stdin)");
  add_out(cl);
  cl->callback([&] { cmd_classify(cfg); });

  CLI::App* tp = app.add_subcommand("tp", "reconstruct T_p from the spectral data");
  tp->add_option("--dim", cfg.dim)->required()->check(CLI::IsMember(spectral_dims));
  tp->add_option("-p,--prime", cfg.prime)->check(CLI::Range(2L, 1000000L));
  tp->add_option("--dtable", cfg.dtable_path, "extra ingested trace values (TSV)");
  tp->add_option("--tsv", cfg.tsv, "write the matrix as TSV here");
  add_out(tp);
  tp->callback([&] { cmd_tp(cfg); });

  CLI::App* ei = app.add_subcommand("eigen", "exact eigendecomposition of T_2");
  ei->add_option("--dim", cfg.dim)->required()->check(CLI::IsMember(spectral_dims));
  add_out(ei);
  ei->callback([&] { cmd_eigen(cfg); });

  CLI::App* gr = app.add_subcommand("graph", "Kneser graph properties at p");
  gr->add_option("--dim", cfg.dim)->required()->check(CLI::IsMember(all_dims));
  gr->add_option("-p,--prime", cfg.prime)->check(CLI::Range(2L, 1000000L));
  gr->add_option("--dtable", cfg.dtable_path, "extra ingested trace values (TSV)");
  add_out(gr);
  gr->callback([&] { cmd_graph(cfg); });

  CLI::App* co = app.add_subcommand("congruences", "eigenvector pair congruences");
  co->add_option("--dim", cfg.dim)->required()->check(CLI::IsMember(big_dims));
  co->add_flag("--battery", cfg.battery, "include the named congruence battery");
  co->add_option("--dtable", cfg.dtable_path, "extra ingested trace values (TSV)");
  add_out(co);
  co->callback([&] { cmd_congruences(cfg); });

  CLI::App* ma = app.add_subcommand("masses", "mass vector by detailed balance");
  ma->add_option("--dim", cfg.dim)->required()->check(CLI::IsMember(all_dims));
  ma->add_option("--anchor", cfg.anchor, "mass of the first class (decimal)");
  add_out(ma);
  ma->callback([&] { cmd_masses(cfg); });

  CLI::App* re = app.add_subcommand("restrict", "restriction of eigenvectors along the class lift");
  re->add_option("--from", cfg.from, "source dimension")->required()->check(CLI::IsMember({23, 24}));
  add_out(re);
  re->callback([&] { cmd_restrict(cfg); });

  CLI::App* mf = app.add_subcommand("modforms", "level-one q-expansions and Hecke traces");
  mf->add_option("-N,--terms", cfg.terms, "number of q-expansion coefficients")
      ->check(CLI::Range(1, 100000));
  mf->add_option("--pmax", cfg.pmax, "largest prime for the trace table")
      ->check(CLI::Range(2L, 100000L));
  add_out(mf);
  mf->callback([&] { cmd_modforms(cfg); });

  CLI::App* th = app.add_subcommand("complete-threshold", "positivity threshold certification");
  th->add_option("--dim", cfg.dim)->required()->check(CLI::IsMember(big_dims));
  add_out(th);
  th->callback([&] { cmd_threshold(cfg); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const InputError& e) {
    std::fprintf(stderr, "{\"error\":\"input\",\"message\":\"%s\"}\n", e.what());
    return 2;
  } catch (const MissingDataError& e) {
    std::fprintf(stderr, "{\"error\":\"missing-data\",\"message\":\"%s\"}\n", e.what());
    return 3;
  } catch (const SpectralError& e) {
    std::fprintf(stderr, "{\"error\":\"spectral\",\"message\":\"%s\"}\n", e.what());
    return 3;
  } catch (const ConsistencyError& e) {
    std::fprintf(stderr, "{\"error\":\"consistency\",\"message\":\"%s\"}\n", e.what());
    return 3;
  } catch (const StateError& e) {
    std::fprintf(stderr, "{\"error\":\"state\",\"message\":\"%s\"}\n", e.what());
    return 4;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "{\"error\":\"internal\",\"message\":\"%s\"}\n", e.what());
    return 1;
  }
  return 0;
}
