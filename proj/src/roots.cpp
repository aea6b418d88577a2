#include "nh/roots.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>

namespace nh {

namespace {

// Cholesky data for q(x) = sum_i d[i] * (x_i + sum_{j>i} m[i][j] x_j)^2.
struct Chol {
  int n;
  std::vector<double> d;
  std::vector<std::vector<double>> m;
};

Chol cholesky(const MatI& G) {
  int n = G.rows;
  Chol c{n, std::vector<double>(n), std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0))};
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = double(G(i, j));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) a[i][i] -= c.d[j] * c.m[j][i] * c.m[j][i];
    c.d[i] = a[i][i];
    require(c.d[i] > 0, "Cholesky: matrix not positive definite");
    for (int k = i + 1; k < n; ++k) {
      double v = double(G(i, k));
      for (int j = 0; j < i; ++j) v -= c.d[j] * c.m[j][i] * c.m[j][k];
      a[i][k] = v;
      c.m[i][k] = v / c.d[i];
    }
  }
  return c;
}

i64 norm_of(const MatI& G, const VecI& x) {
  i64 q = 0;
  for (int i = 0; i < G.rows; ++i) {
    if (x[i] == 0) continue;
    i64 row = 0;
    for (int j = 0; j < G.cols; ++j) row += G(i, j) * x[j];
    q += x[i] * row;
  }
  return q;
}

}  // namespace

std::vector<VecI> short_vectors(const MatI& G, i64 bound) {
  int n = G.rows;
  std::vector<VecI> out;
  if (n == 0) return out;
  Chol c = cholesky(G);
  const double slack = 1e-6 * double(bound + 1) + 1e-9;
  VecI x(n, 0);
  std::vector<double> part(n + 1, 0.0);   // partial sums from levels > i
  std::vector<double> center(n, 0.0);
  // Depth-first over levels n-1 .. 0.
  int i = n - 1;
  std::vector<i64> lo(n), hi(n);
  auto enter = [&](int lvl) {
    double ctr = 0;
    for (int j = lvl + 1; j < n; ++j) ctr += c.m[lvl][j] * double(x[j]);
    center[lvl] = ctr;
    double budget = double(bound) + slack - part[lvl + 1];
    if (budget < 0) budget = 0;
    double w = std::sqrt(budget / c.d[lvl]);
    lo[lvl] = i64(std::ceil(-ctr - w - 1e-12));
    hi[lvl] = i64(std::floor(-ctr + w + 1e-12));
    x[lvl] = lo[lvl] - 1;
  };
  enter(i);
  while (true) {
    ++x[i];
    if (x[i] > hi[i]) {
      ++i;
      if (i >= n) break;
      continue;
    }
    double t = double(x[i]) + center[i];
    part[i] = part[i + 1] + c.d[i] * t * t;
    if (part[i] > double(bound) + slack) continue;  // monotone: larger |x_i| only grows
    if (i == 0) {
      // Exact check and sign canonicalization.
      int s = 0;
      for (int j = 0; j < n && s == 0; ++j) s = x[j] > 0 ? 1 : (x[j] < 0 ? -1 : 0);
      if (s <= 0) continue;  // skip zero and negative representatives
      if (norm_of(G, x) <= bound) out.push_back(x);
    } else {
      --i;
      enter(i);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VecI> root_vectors(const MatI& G) {
  std::vector<VecI> out;
  for (auto& v : short_vectors(G, 2)) {
    i64 q = norm_of(G, v);
    require(q == 2 || q == 1, "even lattice has a vector of odd norm");
    require(q != 1, "lattice is not even");
    out.push_back(v);
  }
  return out;
}

namespace {

// Fixed generic functionals: powers of 3, then powers of 5 as a fallback.
i128 functional(const VecI& x, int base) {
  i128 f = 0, p = 1;
  for (i64 v : x) {
    f += p * i128(v);
    p *= base;
  }
  return f;
}

std::vector<VecI> positive_system(const std::vector<VecI>& roots) {
  std::vector<VecI> pos;
  pos.reserve(roots.size());
  for (const VecI& r : roots) {
    i128 f = functional(r, 3);
    if (f == 0) f = functional(r, 5);
    require(f != 0, "functional vanishes on a root");
    if (f > 0)
      pos.push_back(r);
    else {
      VecI m(r.size());
      for (size_t i = 0; i < r.size(); ++i) m[i] = -r[i];
      pos.push_back(m);
    }
  }
  return pos;
}

}  // namespace

std::vector<VecI> simple_roots(const MatI& G, const std::vector<VecI>& roots) {
  int n = G.rows;
  std::vector<VecI> pos = positive_system(roots);
  VecI rho(n, 0);
  for (const VecI& r : pos)
    for (int i = 0; i < n; ++i) rho[i] += r[i];
  VecI w(n, 0);  // G * rho
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w[i] += G(i, j) * rho[j];
  std::vector<VecI> simple;
  for (const VecI& r : pos) {
    i64 dot = 0;  // 2 * (r, rho)
    for (int i = 0; i < n; ++i) dot += r[i] * w[i];
    if (dot == 2) simple.push_back(r);
  }
  return simple;
}

Fp6 fingerprint(const MatI& G) {
  std::vector<VecI> roots = root_vectors(G);
  Fp6 fp;
  if (roots.empty()) return fp;
  fp.roots = i64(roots.size()) * 2;
  std::vector<VecI> simple = simple_roots(G, roots);
  int s = int(simple.size());
  MatZ cartan(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      i64 d = 0;
      for (int a = 0; a < G.rows; ++a)
        for (int b = 0; b < G.cols; ++b) d += simple[i][a] * G(a, b) * simple[j][b];
      cartan(i, j) = d;
    }
  for (int i = 0; i < s; ++i) {
    Int rs(0);
    for (int j = 0; j < s; ++j) rs += cartan(i, j);
    i64 v = to_i64(rs);
    if (v == 2)
      ++fp.n2;
    else if (v == 1)
      ++fp.n1;
    else if (v == 0)
      ++fp.n0;
    else if (v == -1)
      ++fp.nm1;
    else
      fail("Cartan row sum out of range");
  }
  fp.det = to_i64(det_bareiss(cartan));
  return fp;
}

AdeSystem ade_decompose(const MatI& G) {
  AdeSystem sys;
  std::vector<VecI> roots = root_vectors(G);
  if (roots.empty()) return sys;
  std::vector<VecI> pos = positive_system(roots);
  std::vector<VecI> simple = simple_roots(G, roots);
  int s = int(simple.size());
  auto dot = [&](const VecI& a, const VecI& b) {
    i64 d = 0;
    for (int i = 0; i < G.rows; ++i) {
      i64 row = 0;
      for (int j = 0; j < G.cols; ++j) row += G(i, j) * b[j];
      d += a[i] * row;
    }
    return d;
  };
  // Union-find over simple roots joined by Cartan adjacency.
  std::vector<int> parent(s);
  for (int i = 0; i < s; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  std::vector<std::vector<i64>> C(s, std::vector<i64>(s));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) C[i][j] = dot(simple[i], simple[j]);
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j)
      if (C[i][j] != 0) parent[find(i)] = find(j);
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < s; ++i) groups[find(i)].push_back(i);

  struct Comp {
    AdeComponent c;
    std::vector<int> nodes;
  };
  std::vector<Comp> comps;
  for (auto& [root_id, nodes] : groups) {
    int rank = int(nodes.size());
    std::vector<int> deg(rank, 0);
    for (int a = 0; a < rank; ++a)
      for (int b = 0; b < rank; ++b)
        if (a != b && C[nodes[a]][nodes[b]] != 0) ++deg[a];
    int branches = int(std::count(deg.begin(), deg.end(), 3));
    require(*std::max_element(deg.begin(), deg.end()) <= 3 && branches <= 1,
            "root system is not simply laced ADE");
    char type;
    if (branches == 0)
      type = 'A';
    else {
      // Arm lengths from the branch node.
      int br = int(std::find(deg.begin(), deg.end(), 3) - deg.begin());
      std::vector<int> arms;
      for (int a = 0; a < rank; ++a) {
        if (a == br || C[nodes[a]][nodes[br]] == 0) continue;
        int len = 1, prev = br, cur = a;
        while (true) {
          int next = -1;
          for (int b = 0; b < rank; ++b)
            if (b != prev && b != cur && C[nodes[b]][nodes[cur]] != 0) next = b;
          if (next < 0) break;
          prev = cur;
          cur = next;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      require(arms.size() == 3, "branch node arity mismatch");
      if (arms[0] == 1 && arms[1] == 1)
        type = 'D';
      else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        type = 'E';
      else
        fail("diagram is not of ADE shape");
    }
    comps.push_back({AdeComponent{type, rank}, nodes});
  }
  std::sort(comps.begin(), comps.end(), [](const Comp& x, const Comp& y) {
    if (x.c.rank != y.c.rank) return x.c.rank > y.c.rank;
    return x.c.type < y.c.type;
  });
  // Assign each positive root to the component of a non-orthogonal simple root.
  std::vector<std::vector<VecI>> by_comp(comps.size());
  for (const VecI& r : pos) {
    int home = -1;
    for (size_t ci = 0; ci < comps.size() && home < 0; ++ci)
      for (int node : comps[ci].nodes)
        if (dot(r, simple[node]) != 0) {
          home = int(ci);
          break;
        }
    require(home >= 0, "positive root orthogonal to all simple roots");
    by_comp[home].push_back(r);
  }
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    sys.comps.push_back(comps[ci].c);
    sys.pos_roots.push_back(std::move(by_comp[ci]));
    // Root-count formula is a hard invariant of the detected type.
    auto [type, rank] = comps[ci].c;
    i64 expect = type == 'A'   ? i64(rank) * (rank + 1)
                 : type == 'D' ? 2ll * rank * (rank - 1)
                 : rank == 6   ? 72
                 : rank == 7   ? 126
                               : 240;
    require(i64(sys.pos_roots.back().size()) * 2 == expect, "component root count mismatch");
  }
  return sys;
}

std::string ade_label(const std::vector<AdeComponent>& comps) {
  if (comps.empty()) return "-";
  std::string out;
  size_t i = 0;
  while (i < comps.size()) {
    size_t j = i;
    while (j < comps.size() && comps[j] == comps[i]) ++j;
    if (!out.empty()) out += "+";
    if (j - i > 1) out += std::to_string(j - i);
    out += comps[i].type + std::to_string(comps[i].rank);
    i = j;
  }
  return out;
}

std::vector<AdeComponent> parse_ade_label(const std::string& label) {
  std::vector<AdeComponent> out;
  if (label == "-" || label.empty()) return out;
  size_t i = 0;
  while (i < label.size()) {
    size_t mult = 0;
    while (i < label.size() && isdigit(label[i])) mult = mult * 10 + (label[i++] - '0');
    if (mult == 0) mult = 1;
    require(i < label.size() && (label[i] == 'A' || label[i] == 'D' || label[i] == 'E'),
            "bad root system label: " + label);
    char type = label[i++];
    size_t rank = 0;
    require(i < label.size() && isdigit(label[i]), "bad root system label: " + label);
    while (i < label.size() && isdigit(label[i])) rank = rank * 10 + (label[i++] - '0');
    for (size_t k = 0; k < mult; ++k) out.push_back({type, int(rank)});
    if (i < label.size()) {
      require(label[i] == '+', "bad root system label: " + label);
      ++i;
    }
  }
  std::sort(out.begin(), out.end(), [](const AdeComponent& x, const AdeComponent& y) {
    if (x.rank != y.rank) return x.rank > y.rank;
    return x.type < y.type;
  });
  return out;
}

Fp6 fingerprint_of_components(const std::vector<AdeComponent>& comps) {
  Fp6 fp;
  if (comps.empty()) return fp;
  fp.det = 1;
  for (const auto& [type, rank] : comps) {
    if (type == 'A') {
      fp.roots += i64(rank) * (rank + 1);
      fp.det *= rank + 1;
      if (rank == 1)
        ++fp.n2;
      else {
        fp.n1 += 2;
        fp.n0 += rank - 2;
      }
    } else if (type == 'D') {
      fp.roots += 2ll * rank * (rank - 1);
      fp.det *= 4;
      fp.n1 += 3;
      fp.n0 += rank - 4;
      fp.nm1 += 1;
    } else {
      fp.roots += rank == 6 ? 72 : rank == 7 ? 126 : 240;
      fp.det *= rank == 6 ? 3 : rank == 7 ? 2 : 1;
      fp.n1 += 3;
      fp.n0 += rank - 4;
      fp.nm1 += 1;
    }
  }
  return fp;
}

std::string Fp6::str() const {
  return "(" + std::to_string(roots) + "," + std::to_string(n2) + "," + std::to_string(n1) +
         "," + std::to_string(n0) + "," + std::to_string(nm1) + "," + std::to_string(det) + ")";
}

}  // namespace nh
