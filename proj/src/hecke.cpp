#include "nh/hecke.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <set>
#include <thread>

#include "nh/io.hpp"
#include "nh/lll.hpp"

namespace nh {

namespace {

// --- shared per-column immutable data -------------------------------------

struct ColumnCtx {
  int n = 0;
  MatI G;
  std::vector<i64> Gf;        // flat n*n copy, row-major
  std::vector<double> d;      // Cholesky q(x) = sum d[i] (x_i + sum_{j>i} mu[i][j] x_j)^2
  std::vector<double> mu;     // flat n*n
  // Roots of the column lattice grouped by coordinate parity pattern.
  std::vector<u32> pmask;     // parity pattern per group
  std::vector<i32> pcount;    // 2 * group size (both signs)
  std::vector<std::vector<i32>> proots;  // flat positive representatives, n per root
  std::vector<int> by_count;  // root count -> class index; 0 absent, -1 ambiguous
  const FingerprintTable* table = nullptr;
  u64 spot_stride = 0;
};

// Sign of the first nonzero value of (f3, f5) — a lexicographic functional
// that is generic on every root system met here.
int fsign(const i32* u, int n) {
  i128 f = 0, p = 1;
  for (int k = 0; k < n; ++k) {
    f += p * u[k];
    p *= 3;
  }
  if (f == 0) {
    p = 1;
    for (int k = 0; k < n; ++k) {
      f += p * u[k];
      p *= 5;
    }
  }
  require(f != 0, "separating functional vanished");
  return f > 0 ? 1 : -1;
}

i64 det_bareiss_i64(std::vector<i64>& a, int s) {
  if (s == 0) return 1;
  i64 prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < s; ++k) {
    if (a[size_t(k) * s + k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < s && piv < 0; ++i)
        if (a[size_t(i) * s + k] != 0) piv = i;
      if (piv < 0) return 0;
      for (int j = 0; j < s; ++j) std::swap(a[size_t(k) * s + j], a[size_t(piv) * s + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < s; ++i)
      for (int j = k + 1; j < s; ++j) {
        i128 t = i128(a[size_t(i) * s + j]) * a[size_t(k) * s + k] -
                 i128(a[size_t(i) * s + k]) * a[size_t(k) * s + j];
        t /= prev;  // exact (Bareiss)
        require(t > -(i128(1) << 62) && t < (i128(1) << 62), "minor overflow");
        a[size_t(i) * s + j] = i64(t);
      }
    prev = a[size_t(k) * s + k];
  }
  return sign * a[size_t(s - 1) * s + (s - 1)];
}

ColumnCtx make_ctx(const MatI& gram, const FingerprintTable& table, u64 spot_stride) {
  ColumnCtx cx;
  cx.n = gram.rows;
  cx.G = gram;
  cx.table = &table;
  cx.spot_stride = spot_stride;
  int n = cx.n;
  cx.Gf.resize(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cx.Gf[size_t(i) * n + j] = gram(i, j);

  // Cholesky (floating point; every acceptance below is re-checked exactly
  // or separated from the nearest competing integer by >> the error).
  {
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = double(gram(i, j));
    cx.d.assign(n, 0.0);
    cx.mu.assign(size_t(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
      double dii = a[i][i];
      for (int j = 0; j < i; ++j) dii -= cx.d[j] * cx.mu[size_t(j) * n + i] * cx.mu[size_t(j) * n + i];
      require(dii > 0, "column Gram is not positive definite");
      cx.d[i] = dii;
      for (int k = i + 1; k < n; ++k) {
        double v = double(gram(i, k));
        for (int j = 0; j < i; ++j)
          v -= cx.d[j] * cx.mu[size_t(j) * n + i] * cx.mu[size_t(j) * n + k];
        cx.mu[size_t(i) * n + k] = v / dii;
      }
    }
  }

  // Root groups by parity pattern, members stored with positive f-sign.
  {
    std::map<u32, std::vector<i32>> groups;
    for (const VecI& r : root_vectors(gram)) {
      u32 bits = 0;
      std::vector<i32> rr(n);
      for (int k = 0; k < n; ++k) {
        rr[k] = i32(r[k]);
        if (r[k] & 1) bits |= u32(1) << k;
      }
      if (fsign(rr.data(), n) < 0)
        for (int k = 0; k < n; ++k) rr[k] = -rr[k];
      auto& g = groups[bits];
      g.insert(g.end(), rr.begin(), rr.end());
    }
    for (auto& [bits, flat] : groups) {
      cx.pmask.push_back(bits);
      cx.pcount.push_back(i32(flat.size() / n) * 2);
      cx.proots.push_back(std::move(flat));
    }
  }

  i64 maxc = 0;
  for (const auto& row : table.rows) maxc = std::max(maxc, row.fp.roots);
  cx.by_count.assign(size_t(maxc) + 1, 0);
  for (const auto& row : table.rows) {
    int& slot = cx.by_count[size_t(row.fp.roots)];
    slot = slot == 0 ? row.index : -1;
  }
  return cx;
}

// --- per-thread worker ------------------------------------------------------

struct Worker {
  const ColumnCtx& cx;
  std::vector<i64> counts;
  std::map<int, u64> first;
  i64 lines = 0;
  bool aborted = false;

  // scratch
  std::vector<u64> gpass;     // pattern groups passing the parity test
  std::vector<i32> leaves;    // kept leaves, flat n per leaf
  std::vector<i32> x, xhi;    // enumeration state
  std::vector<double> ctr, part;
  std::vector<char> zero;
  std::vector<i64> dbl;       // collected doubled roots, flat
  std::vector<i64> rho, wv, cart, simw;

  explicit Worker(const ColumnCtx& c) : cx(c) {
    int n = cx.n;
    counts.assign(size_t(cx.table->size()) + 1, 0);
    gpass.assign((cx.pmask.size() + 63) / 64, 0);
    x.assign(n, 0);
    xhi.assign(n, 0);
    ctr.assign(n, 0.0);
    part.assign(n + 1, 0.0);
    zero.assign(n + 1, 1);
    rho.assign(n, 0);
    wv.assign(n, 0);
  }

  void run(u64 lo, u64 hi, const std::function<bool(int, u64)>* probe) {
    IsotropicStream st(cx.G);
    st.seek(lo == 0 ? 1 : lo);
    if (st.code >= hi || st.code == 0) return;
    u64 smask = cx.spot_stride ? cx.spot_stride - 1 : ~u64(0);
    while (true) {
      ++lines;
      int idx = classify_line(st);
      if (counts[size_t(idx)]++ == 0) {
        first.emplace(idx, st.code);
        if (probe && *probe && !(*probe)(idx, st.code)) {
          aborted = true;
          return;
        }
      }
      if (cx.spot_stride && (st.code & smask) == smask) spot_check(st.code, idx);
      if (!st.next(hi)) break;
    }
  }

  int classify_line(const IsotropicStream& st) {
    const int n = cx.n;
    const u32 sv = st.sv;
    require(sv != 0, "degenerate line: G v = 0 mod 2");

    // Roots of the column lattice that survive into the neighbor.
    i64 ca = 0;
    const size_t ng = cx.pmask.size();
    std::fill(gpass.begin(), gpass.end(), 0);
    for (size_t g = 0; g < ng; ++g)
      if (!(std::popcount(cx.pmask[g] & sv) & 1)) {
        ca += cx.pcount[g];
        gpass[g >> 6] |= u64(1) << (g & 63);
      }

    // New roots: half-vectors u/2 with u = v mod 2, u^t G u = 8, and the
    // coset condition u . Gv = v'. Gv mod 4.
    const int jb = std::countr_zero(sv);
    const i64 t = st.norm / 2;
    const i64 kc = st.norm - t * st.s[jb];
    i64 cb = 0;
    leaves.clear();
    {
      const double slack = 1e-4;
      const double bound = 8.0 + slack;
      int i = n - 1;
      auto enter = [&](int lvl) {
        double c = 0;
        const double* mrow = &cx.mu[size_t(lvl) * n];
        for (int j = lvl + 1; j < n; ++j) c += mrow[j] * x[j];
        ctr[lvl] = c;
        double budget = bound - part[lvl + 1];
        int par = int((st.code >> lvl) & 1);
        if (budget < 0) {
          x[lvl] = 1;  // empty range
          xhi[lvl] = 0;
          return;
        }
        double w = std::sqrt(budget / cx.d[lvl]);
        i64 lo = i64(std::ceil(-c - w - 1e-9));
        i64 hi = i64(std::floor(-c + w + 1e-9));
        if ((lo ^ par) & 1) ++lo;
        if ((hi ^ par) & 1) --hi;
        if (zero[lvl + 1] && lo < par) lo = par;  // representative with top sign >= 0
        x[lvl] = i32(lo - 2);
        xhi[lvl] = i32(hi);
      };
      part[n] = 0.0;
      zero[n] = 1;
      enter(i);
      while (true) {
        x[i] += 2;
        if (x[i] > xhi[i]) {
          ++i;
          if (i >= n) break;
          continue;
        }
        double tt = double(x[i]) + ctr[i];
        double pp = part[i + 1] + cx.d[i] * tt * tt;
        if (pp > bound) continue;
        part[i] = pp;
        if (i == 0) {
          if (pp > 7.5) {
            i64 w = 0;
            for (int k = 0; k < n; ++k) w += i64(x[k]) * st.s[k];
            if (((w - kc) & 3) == 0) {
              cb += 2;
              leaves.insert(leaves.end(), x.begin(), x.end());
            }
          }
        } else {
          zero[i] = zero[i + 1] && x[i] == 0;
          --i;
          enter(i);
        }
      }
    }

    i64 total = ca + cb;
    int idx = total < i64(cx.by_count.size()) ? cx.by_count[size_t(total)] : 0;
    if (idx > 0) return idx;
    return classify_by_fingerprint(total);
  }

  // Root count is shared by several classes (or absent — then the table
  // lookup throws): distinguish by the full fingerprint, computed from the
  // doubled root system collected during the scan.
  int classify_by_fingerprint(i64 total) {
    const int n = cx.n;
    dbl.clear();
    for (size_t g = 0; g < cx.pmask.size(); ++g) {
      if (!((gpass[g >> 6] >> (g & 63)) & 1)) continue;
      const auto& flat = cx.proots[g];
      for (i32 v : flat) dbl.push_back(2 * i64(v));
    }
    const size_t nleaf = leaves.size() / n;
    for (size_t l = 0; l < nleaf; ++l) {
      const i32* u = &leaves[l * n];
      i64 q = 0;
      for (int a = 0; a < n; ++a) {
        i64 row = 0;
        for (int b = 0; b < n; ++b) row += cx.Gf[size_t(a) * n + b] * u[b];
        q += i64(u[a]) * row;
      }
      require(q == 8, "kept leaf has wrong norm");
      int s = fsign(u, n);
      for (int k = 0; k < n; ++k) dbl.push_back(s * i64(u[k]));
    }
    const size_t npos = dbl.size() / n;
    require(i64(npos) * 2 == total, "collected roots disagree with the count");

    Fp6 fp;
    fp.roots = total;
    if (npos > 0) {
      std::fill(rho.begin(), rho.end(), 0);
      for (size_t r = 0; r < npos; ++r)
        for (int k = 0; k < n; ++k) rho[k] += dbl[r * n + k];
      for (int a = 0; a < n; ++a) {
        i64 v = 0;
        for (int b = 0; b < n; ++b) v += cx.Gf[size_t(a) * n + b] * rho[b];
        wv[a] = v;
      }
      std::vector<size_t> simple;
      for (size_t r = 0; r < npos; ++r) {
        i64 dot = 0;
        for (int k = 0; k < n; ++k) dot += dbl[r * n + k] * wv[k];
        if (dot == 8) simple.push_back(r);
      }
      const int s = int(simple.size());
      simw.assign(size_t(s) * n, 0);
      for (int b = 0; b < s; ++b) {
        const i64* rb = &dbl[simple[b] * n];
        for (int a = 0; a < n; ++a) {
          i64 v = 0;
          for (int k = 0; k < n; ++k) v += cx.Gf[size_t(a) * n + k] * rb[k];
          simw[size_t(b) * n + a] = v;
        }
      }
      cart.assign(size_t(s) * s, 0);
      for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b) {
          const i64* ra = &dbl[simple[a] * n];
          i64 dot = 0;
          for (int k = 0; k < n; ++k) dot += ra[k] * simw[size_t(b) * n + k];
          require(dot % 4 == 0, "odd pairing among simple roots");
          cart[size_t(a) * s + b] = dot / 4;
        }
      for (int a = 0; a < s; ++a) {
        i64 rs = 0;
        for (int b = 0; b < s; ++b) rs += cart[size_t(a) * s + b];
        if (rs == 2)
          ++fp.n2;
        else if (rs == 1)
          ++fp.n1;
        else if (rs == 0)
          ++fp.n0;
        else if (rs == -1)
          ++fp.nm1;
        else
          fail("Cartan row sum out of range");
      }
      fp.det = det_bareiss_i64(cart, s);
    }
    return cx.table->index_of(fp);
  }

  void spot_check(u64 code, int idx) {
    MatI g2 = neighbor2_gram(cx.G, code);
    const FingerprintRow& row = classify(g2, *cx.table);
    require(row.index == idx,
            "fast classification disagrees with the full neighbor construction");
  }
};

}  // namespace

ColumnResult t2_column(const MatI& gram, const FingerprintTable& table,
                       const ColumnOptions& opt) {
  require(gram.rows == gram.cols && gram.rows >= 2, "t2_column: bad Gram");
  require(opt.spot_stride == 0 || std::has_single_bit(opt.spot_stride),
          "t2_column: spot_stride must be a power of two");
  ColumnCtx cx = make_ctx(gram, table, opt.spot_stride);
  const int n = cx.n;
  const u64 span = u64(1) << n;
  int nt = std::max(1, opt.threads);

  std::vector<Worker> workers;
  workers.reserve(size_t(nt));
  for (int k = 0; k < nt; ++k) workers.emplace_back(cx);

  if (nt == 1) {
    workers[0].run(1, span, &opt.on_first);
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errs;
    errs.resize(size_t(nt));
    for (int k = 0; k < nt; ++k) {
      u64 lo = 1 + (span - 1) * u64(k) / u64(nt);
      u64 hi = 1 + (span - 1) * u64(k + 1) / u64(nt);
      threads.emplace_back([&, k, lo, hi] {
        try {
          workers[size_t(k)].run(lo, hi, nullptr);
        } catch (...) {
          errs[size_t(k)] = std::current_exception();
        }
      });
    }
    for (auto& th : threads) th.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  }

  ColumnResult res;
  res.counts.assign(size_t(table.size()) + 1, 0);
  for (const Worker& w : workers) {
    res.lines += w.lines;
    res.aborted = res.aborted || w.aborted;
    for (size_t i = 0; i < res.counts.size(); ++i) res.counts[i] += w.counts[i];
    for (auto& [idx, code] : w.first) {
      auto it = res.first_code.find(idx);
      if (it == res.first_code.end() || code < it->second) res.first_code[idx] = code;
    }
  }
  if (nt > 1 && opt.on_first && !res.aborted) {
    std::vector<std::pair<u64, int>> order;
    for (auto& [idx, code] : res.first_code) order.emplace_back(code, idx);
    std::sort(order.begin(), order.end());
    for (auto& [code, idx] : order)
      if (!opt.on_first(idx, code)) {
        res.aborted = true;
        break;
      }
  }
  return res;
}

const ClassRec* Atlas::find_class(int index) const {
  for (const ClassRec& c : classes)
    if (c.index == index) return &c;
  return nullptr;
}

MatI Atlas::matrix(const FingerprintTable& table) const {
  const int N = table.size();
  require(complete, "atlas is incomplete");
  MatI T(N, N);
  for (int j = 1; j <= N; ++j) {
    auto it = columns.find(j);
    require(it != columns.end(), "missing column " + std::to_string(j));
    require(int(it->second.size()) == N + 1, "bad column length");
    for (int i = 1; i <= N; ++i) T(i - 1, j - 1) = it->second[size_t(i)];
  }
  return T;
}

Atlas explore(int n, const FingerprintTable& table, const ExploreOptions& opt) {
  auto log = [&](const std::string& m) {
    if (opt.log) opt.log(m);
  };
  const std::string thash = table_hash(table);
  Atlas a;
  bool resumed = false;
  if (!opt.cache_path.empty() && opt.resume && load_atlas(opt.cache_path, a, thash)) {
    require(a.n == n, "cached walk has the wrong dimension");
    resumed = true;
    log("resuming walk: " + std::to_string(a.classes.size()) + " classes, " +
        std::to_string(a.processed.size()) + " columns done");
  }
  if (!resumed) {
    a = Atlas{};
    a.n = n;
    Lattice seed = seed_lattice(n);
    GramReduction red = lll_gram(to_mpz(seed.gram));
    MatI g0 = to_i64(red.gram);
    const FingerprintRow& row = classify(g0, table);
    a.classes.push_back({row.index, 0, 0, g0});
    log("seed is class " + std::to_string(row.index) + " (" + row.label + ")");
  }

  std::set<int> witnessed, done;
  for (const ClassRec& c : a.classes) witnessed.insert(c.index);
  for (int j : a.processed) done.insert(j);
  const Int col_sum = neighbor_count(n, 2);
  auto all_found = [&] { return int(witnessed.size()) == table.size(); };

  auto add_witness = [&](int cidx, int parent, u64 code, const MatI& pgram) {
    MatI g2 = neighbor2_gram(pgram, code);
    const FingerprintRow& row = classify(g2, table);
    require(row.index == cidx, "witness classification mismatch");
    a.classes.push_back({cidx, parent, code, g2});
    witnessed.insert(cidx);
    log("class " + std::to_string(cidx) + " (" + row.label + ") found in column " +
        std::to_string(parent));
  };

  for (size_t qi = 0; qi < a.classes.size(); ++qi) {
    if (opt.discovery_only && all_found()) break;
    const int idx = a.classes[qi].index;
    if (done.count(idx)) continue;
    const MatI pgram = a.classes[qi].gram;  // copy: a.classes may reallocate

    ColumnOptions co;
    co.threads = opt.threads;
    co.spot_stride = opt.spot_stride;
    if (opt.discovery_only)
      co.on_first = [&](int cidx, u64 code) {
        if (!witnessed.count(cidx)) add_witness(cidx, idx, code, pgram);
        return !all_found();
      };
    log("column " + std::to_string(idx) + " (" + std::to_string(done.size() + 1) + "/" +
        std::to_string(table.size()) + ")");
    ColumnResult r = t2_column(pgram, table, co);

    std::vector<std::pair<u64, int>> order;
    for (auto& [cidx, code] : r.first_code)
      if (!witnessed.count(cidx)) order.emplace_back(code, cidx);
    std::sort(order.begin(), order.end());
    for (auto& [code, cidx] : order) add_witness(cidx, idx, code, pgram);

    if (!r.aborted) {
      Int sum = 0;
      for (i64 c : r.counts) sum += c;
      require(sum == col_sum, "column sum violates the line count");
      a.columns[idx] = r.counts;
      a.processed.push_back(idx);
      done.insert(idx);
    }
    a.complete = int(a.processed.size()) == table.size() && all_found();
    if (!opt.cache_path.empty()) save_atlas(opt.cache_path, a, thash);
    if (r.aborted) break;
  }

  a.complete = int(a.processed.size()) == table.size() && all_found();
  if (!opt.discovery_only) {
    require(all_found(), "walk ended before witnessing every class");
    require(a.complete, "walk ended before covering every column");
  }
  return a;
}

// --- graph utilities ---------------------------------------------------------

namespace {
std::vector<std::vector<int>> adjacency(const MatI& T) {
  int N = T.rows;
  require(T.cols == N, "graph: matrix not square");
  std::vector<std::vector<int>> adj(static_cast<size_t>(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (i != j && (T(i, j) > 0 || T(j, i) > 0)) {
        require(T(i, j) > 0 && T(j, i) > 0, "one-sided adjacency");
        adj[size_t(i)].push_back(j);
      }
  return adj;
}

std::vector<int> bfs_dist(const std::vector<std::vector<int>>& adj, int src) {
  std::vector<int> dist(adj.size(), -1);
  std::vector<int> q{src};
  dist[size_t(src)] = 0;
  for (size_t h = 0; h < q.size(); ++h) {
    int u = q[h];
    for (int v : adj[size_t(u)])
      if (dist[size_t(v)] < 0) {
        dist[size_t(v)] = dist[size_t(u)] + 1;
        q.push_back(v);
      }
  }
  return dist;
}
}  // namespace

bool graph_connected(const MatI& T) {
  auto adj = adjacency(T);
  if (adj.empty()) return true;
  for (int d : bfs_dist(adj, 0))
    if (d < 0) return false;
  return true;
}

bool graph_complete(const MatI& T) {
  auto adj = adjacency(T);
  for (size_t i = 0; i < adj.size(); ++i)
    if (adj[i].size() != adj.size() - 1) return false;
  return true;
}

int graph_diameter(const MatI& T) {
  auto adj = adjacency(T);
  int diam = 0;
  for (size_t s = 0; s < adj.size(); ++s)
    for (int d : bfs_dist(adj, int(s))) {
      if (d < 0) return -1;
      diam = std::max(diam, d);
    }
  return diam;
}

std::vector<Int> mass_vector(const MatI& T, int anchor_index, const Int& anchor_value) {
  const int N = T.rows;
  require(T.cols == N && anchor_index >= 1 && anchor_index <= N, "mass_vector: bad input");
  auto adj = adjacency(T);
  std::vector<Rat> p(static_cast<size_t>(N));
  std::vector<char> seen(static_cast<size_t>(N), 0);
  int a0 = anchor_index - 1;
  p[size_t(a0)] = rat(1);
  seen[size_t(a0)] = 1;
  std::vector<int> q{a0};
  for (size_t h = 0; h < q.size(); ++h) {
    int i = q[h];
    for (int j : adj[size_t(i)])
      if (!seen[size_t(j)]) {
        // p_i T(j,i) = p_j T(i,j)
        p[size_t(j)] = p[size_t(i)] * rat(T(j, i)) / rat(T(i, j));
        seen[size_t(j)] = 1;
        q.push_back(j);
      }
  }
  for (char s : seen) require(s, "mass_vector: graph is disconnected");
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      require(p[size_t(i)] * rat(T(j, i)) == p[size_t(j)] * rat(T(i, j)),
              "mass ratios are inconsistent");
  std::vector<Int> out(static_cast<size_t>(N));
  for (int i = 0; i < N; ++i) {
    Rat v = p[size_t(i)] * Rat(anchor_value);
    require(is_integer(v), "mass entry is not integral");
    out[size_t(i)] = to_int(v);
  }
  return out;
}

std::vector<Int> mass_vector_primitive(const MatI& T) {
  const int N = T.rows;
  require(N >= 1 && T.cols == N, "mass_vector: bad input");
  // Anchor-free pass: clear the denominators of the ratios from class 1,
  // then strip the common content.
  auto adj = adjacency(T);
  std::vector<Rat> p(static_cast<size_t>(N));
  std::vector<char> seen(static_cast<size_t>(N), 0);
  p[0] = rat(1);
  seen[0] = 1;
  std::vector<int> q{0};
  for (size_t h = 0; h < q.size(); ++h) {
    int i = q[h];
    for (int j : adj[size_t(i)])
      if (!seen[size_t(j)]) {
        p[size_t(j)] = p[size_t(i)] * rat(T(j, i)) / rat(T(i, j));
        seen[size_t(j)] = 1;
        q.push_back(j);
      }
  }
  for (char s : seen) require(s, "mass_vector: graph is disconnected");
  Int den = 1;
  for (const Rat& v : p) den = lcm(den, v.get_den());
  Int g = 0;
  std::vector<Int> out(static_cast<size_t>(N));
  for (int i = 0; i < N; ++i) {
    out[size_t(i)] = Int(p[size_t(i)].get_num() * (den / p[size_t(i)].get_den()));
    g = gcd(g, out[size_t(i)]);
  }
  if (g > 1)
    for (Int& v : out) v /= g;
  require(mass_symmetric(T, out), "mass ratios are inconsistent");
  return out;
}

bool mass_symmetric(const MatI& T, const std::vector<Int>& p) {
  const int N = T.rows;
  if (T.cols != N || int(p.size()) != N) return false;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (p[size_t(i)] * T(j, i) != p[size_t(j)] * T(i, j)) return false;
  return true;
}

}  // namespace nh
