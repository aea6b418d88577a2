#include "nh/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace nh {

namespace {

// --- exact integer kernels ---------------------------------------------------

// Fast one-prime singularity screen: false means certified nonsingular.
bool maybe_singular(const MatI& A) {
  const u64 p = 2305843009213693951ull;  // 2^61 - 1
  int n = A.rows;
  std::vector<u64> m(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      i64 v = A(i, j) % i64(p);
      m[size_t(i) * n + j] = u64(v < 0 ? v + i64(p) : v);
    }
  auto mulmod = [&](u64 x, u64 y) { return u64((unsigned __int128)(x)*y % p); };
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n && piv < 0; ++i)
      if (m[size_t(i) * n + k] != 0) piv = i;
    if (piv < 0) return true;
    if (piv != k)
      for (int j = k; j < n; ++j) std::swap(m[size_t(piv) * n + j], m[size_t(k) * n + j]);
    // inverse of the pivot via Fermat
    u64 inv = 1, base = m[size_t(k) * n + k], e = p - 2;
    while (e) {
      if (e & 1) inv = mulmod(inv, base);
      base = mulmod(base, base);
      e >>= 1;
    }
    for (int i = k + 1; i < n; ++i) {
      u64 f = mulmod(m[size_t(i) * n + k], inv);
      if (!f) continue;
      for (int j = k; j < n; ++j) {
        u64 sub = mulmod(f, m[size_t(k) * n + j]);
        u64& t = m[size_t(i) * n + j];
        t = t >= sub ? t - sub : t + p - sub;
      }
    }
  }
  return false;
}

// Kernel of an integer matrix via fraction-free (Bareiss) elimination; each
// kernel vector is verified against the input, so the fast exact divisions
// are safe. Rows of the result are primitive kernel vectors.
std::vector<std::vector<Int>> kernel_int(const MatI& A0) {
  const int m = A0.rows, n = A0.cols;
  MatZ A(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = Int(A0(i, j));

  std::vector<int> pivot_col;
  Int prev = 1;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int pr = -1;
    for (int i = r; i < m && pr < 0; ++i)
      if (A(i, c) != 0) pr = i;
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < n; ++j) mpz_swap(A(pr, j).get_mpz_t(), A(r, j).get_mpz_t());
    for (int i = r + 1; i < m; ++i) {
      for (int j = c + 1; j < n; ++j) {
        Int num = A(i, j) * A(r, c) - A(i, c) * A(r, j);
        mpz_divexact(A(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      A(i, c) = 0;
    }
    prev = A(r, c);
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<char> is_pivot(size_t(n), 0);
  for (int c : pivot_col) is_pivot[size_t(c)] = 1;
  std::vector<std::vector<Int>> kernel;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[size_t(f)]) continue;
    std::vector<Rat> x(size_t(n), Rat(0));
    x[size_t(f)] = 1;
    for (int i = int(pivot_col.size()) - 1; i >= 0; --i) {
      int c = pivot_col[size_t(i)];
      Rat s(0);
      for (int j = c + 1; j < n; ++j)
        if (x[size_t(j)] != 0) s += Rat(A(i, j)) * x[size_t(j)];
      x[size_t(c)] = -s / Rat(A(i, c));
    }
    Int mult(1);
    for (const Rat& v : x) mult = lcm(mult, Int(v.get_den()));
    std::vector<Int> xi(static_cast<size_t>(n));
    Int content(0);
    for (int j = 0; j < n; ++j) {
      xi[size_t(j)] = Int(x[size_t(j)] * Rat(mult));
      content = gcd(content, xi[size_t(j)]);
    }
    int lead = 0;
    while (xi[size_t(lead)] == 0) ++lead;
    if (xi[size_t(lead)] < 0) content = -content;
    for (Int& v : xi) v /= content;
    // verify against the input matrix
    for (int i = 0; i < m; ++i) {
      Int s(0);
      for (int j = 0; j < n; ++j)
        if (xi[size_t(j)] != 0) s += Int(A0(i, j)) * xi[size_t(j)];
      require(s == 0, "kernel vector fails verification");
    }
    kernel.push_back(std::move(xi));
  }
  return kernel;
}

// Normalize a Q(sqrt(D)) vector: integral entries, unit content over all
// rational and irrational parts together, first nonzero entry positive.
void normalize_quad_vector(std::vector<Quad>& v) {
  Int mult(1);
  for (const Quad& q : v) {
    mult = lcm(mult, Int(q.a.get_den()));
    mult = lcm(mult, Int(q.b.get_den()));
  }
  Int content(0);
  for (const Quad& q : v) {
    content = gcd(content, Int(q.a * Rat(mult)));
    content = gcd(content, Int(q.b * Rat(mult)));
  }
  require(content != 0, "zero eigenvector");
  Rat scale = rat(mult, content);
  int lead = -1;
  for (size_t j = 0; j < v.size() && lead < 0; ++j)
    if (!v[j].is_zero()) lead = int(j);
  if (v[size_t(lead)].sgn() < 0) scale = -scale;
  for (Quad& q : v) q = Quad(q.a * scale, q.b * scale);
}

struct PairFound {
  Rat a, b;  // eigenvalues a +- b sqrt(D), b > 0
  std::vector<Quad> vec_plus;
};

}  // namespace

EigenSystem eigen_decompose(const MatI& T, const std::vector<Int>& masses) {
  const int N = T.rows;
  require(T.cols == N && int(masses.size()) == N, "eigen_decompose: bad input");
  require(mass_symmetric(T, masses), "matrix is not self-adjoint for the masses");

  // Floating-point estimates guide which exact certificates to attempt.
  Eigen::MatrixXd M(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) M(i, j) = double(T(i, j));
  Eigen::EigenSolver<Eigen::MatrixXd> solver(M);
  if (solver.info() != Eigen::Success) throw SpectralError("eigenvalue iteration failed");
  std::vector<double> est(static_cast<size_t>(N));
  for (int k = 0; k < N; ++k) est[size_t(k)] = solver.eigenvalues()[k].real();
  std::sort(est.begin(), est.end(), std::greater<>());

  // Rational eigenvalues: certify each distinct integer candidate once.
  std::vector<std::pair<Int, std::vector<Int>>> rational;  // value, eigenvector
  std::vector<double> leftover;
  std::vector<i64> tried;
  for (double e : est) {
    i64 c = llround(e);
    if (std::find(tried.begin(), tried.end(), c) != tried.end()) {
      leftover.push_back(e);
      continue;
    }
    tried.push_back(c);
    MatI A = T;
    for (int i = 0; i < N; ++i) A(i, i) -= c;
    if (!maybe_singular(A)) {
      leftover.push_back(e);
      continue;
    }
    auto ker = kernel_int(A);
    if (ker.empty()) {
      leftover.push_back(e);
      continue;
    }
    if (ker.size() > 1)
      throw SpectralError("repeated eigenvalue " + std::to_string(c));
    rational.emplace_back(Int(c), std::move(ker[0]));
  }

  // Remaining estimates pair up into conjugates a +- b sqrt(D).
  std::vector<PairFound> pairs;
  const double sqD = std::sqrt(double(QUAD_D));
  std::vector<char> used(leftover.size(), 0);
  for (size_t i = 0; i < leftover.size(); ++i) {
    if (used[i]) continue;
    bool matched = false;
    for (size_t j = i + 1; j < leftover.size() && !matched; ++j) {
      if (used[j]) continue;
      double a2 = leftover[i] + leftover[j];
      double b2 = std::abs(leftover[i] - leftover[j]) / sqD;
      if (std::abs(a2 - std::round(a2)) > 0.2 || std::abs(b2 - std::round(b2)) > 0.2)
        continue;
      Rat a = rat(llround(a2)) / 2;
      Rat b = rat(llround(b2)) / 2;
      if (b == 0) continue;
      bool dup = false;
      for (const PairFound& pf : pairs) dup = dup || (pf.a == a && pf.b == b);
      if (dup) continue;  // already certified from other estimates
      // 4(T^2 - 2aT + (a^2 - D b^2)) has integer entries; its kernel is the
      // two-dimensional eigenplane of the conjugate pair.
      Rat c4 = (a * a - Rat(QUAD_D) * b * b) * 4;
      require(is_integer(a * 2) && is_integer(b * 2) && is_integer(c4),
              "pair candidate is not an algebraic integer");
      MatI A(N, N);
      for (int r = 0; r < N; ++r)
        for (int s = 0; s < N; ++s) {
          i64 t2 = 0;
          for (int k = 0; k < N; ++k) t2 += T(r, k) * T(k, s);
          Rat v = Rat(t2) * 4 - Rat(T(r, s)) * a * 8 + (r == s ? c4 : Rat(0));
          require(is_integer(v) && fits_i64(to_int(v)), "pair matrix overflow");
          A(r, s) = to_i64(to_int(v));
        }
      if (!maybe_singular(A)) continue;
      auto ker = kernel_int(A);
      if (ker.empty()) continue;
      if (ker.size() != 2)
        throw SpectralError("quadratic eigenvalue of multiplicity > 1");
      // w = (T - a) u + b sqrt(D) u is an eigenvector for a + b sqrt(D).
      std::vector<Rat> u(ker[0].size());
      for (size_t k = 0; k < u.size(); ++k) u[k] = Rat(ker[0][k]);
      std::vector<Quad> w(static_cast<size_t>(N));
      for (int r = 0; r < N; ++r) {
        Rat tu(0);
        for (int k = 0; k < N; ++k)
          if (u[size_t(k)] != 0) tu += Rat(T(r, k)) * u[size_t(k)];
        w[size_t(r)] = Quad(tu - a * u[size_t(r)], b * u[size_t(r)]);
      }
      pairs.push_back({a, b, std::move(w)});
      used[i] = used[j] = 1;
      matched = true;
    }
    if (!matched)
      throw SpectralError("estimate " + std::to_string(leftover[i]) +
                          " could not be certified");
  }
  require(int(rational.size() + 2 * pairs.size()) == N, "eigenvalue count mismatch");

  // Canonical order and normalization.
  std::sort(rational.begin(), rational.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  std::sort(pairs.begin(), pairs.end(), [](const PairFound& x, const PairFound& y) {
    return x.a != y.a ? x.a > y.a : x.b > y.b;
  });

  EigenSystem es;
  es.V = Mat<Quad>(N, N);
  int col = 0;
  for (auto& [val, vec] : rational) {
    std::vector<Quad> v(static_cast<size_t>(N));
    for (int r = 0; r < N; ++r) v[size_t(r)] = Quad(Rat(vec[size_t(r)]));
    normalize_quad_vector(v);
    es.values.push_back(Quad(val));
    for (int r = 0; r < N; ++r) es.V(r, col) = v[size_t(r)];
    ++col;
  }
  for (PairFound& pf : pairs) {
    std::vector<Quad> vp = pf.vec_plus;
    normalize_quad_vector(vp);
    std::vector<Quad> vm(static_cast<size_t>(N));
    for (int r = 0; r < N; ++r) vm[size_t(r)] = vp[size_t(r)].conj();
    normalize_quad_vector(vm);
    es.values.push_back(Quad(pf.a, pf.b));
    for (int r = 0; r < N; ++r) es.V(r, col) = vp[size_t(r)];
    ++col;
    es.values.push_back(Quad(pf.a, -pf.b));
    for (int r = 0; r < N; ++r) es.V(r, col) = vm[size_t(r)];
    ++col;
  }

  // Inverse from mass-orthogonality: row k is (P v_k)^t / (v_k^t P v_k).
  es.Vinv = Mat<Quad>(N, N);
  for (int k = 0; k < N; ++k) {
    Quad nrm;
    for (int r = 0; r < N; ++r) {
      Quad pv = es.V(r, k) * Quad(Rat(masses[size_t(r)]));
      nrm += pv * es.V(r, k);
    }
    if (nrm.is_zero()) throw SpectralError("isotropic eigenvector");
    Quad inv = nrm.inv();
    for (int r = 0; r < N; ++r)
      es.Vinv(k, r) = es.V(r, k) * Quad(Rat(masses[size_t(r)])) * inv;
  }
  // Biorthogonality spot check: Vinv (V x) == x for a deterministic probe.
  {
    std::vector<Quad> x(static_cast<size_t>(N)), vx(static_cast<size_t>(N), Quad()), y(static_cast<size_t>(N), Quad());
    for (int r = 0; r < N; ++r) x[size_t(r)] = Quad(Rat(1 + (r * 7) % 11));
    for (int r = 0; r < N; ++r)
      for (int k = 0; k < N; ++k) vx[size_t(r)] += es.V(r, k) * x[size_t(k)];
    for (int k = 0; k < N; ++k)
      for (int r = 0; r < N; ++r) y[size_t(k)] += es.Vinv(k, r) * vx[size_t(r)];
    for (int r = 0; r < N; ++r)
      if (y[size_t(r)] != x[size_t(r)]) throw SpectralError("inverse verification failed");
  }
  return es;
}

std::vector<int> match_params(const EigenSystem& es, const ParamTable& pt) {
  const int N = int(es.values.size());
  require(pt.size() == N, "parameter table size mismatch");
  std::vector<int> out(size_t(N), 0);
  std::vector<char> taken(size_t(N) + 1, 0);
  for (int k = 0; k < N; ++k) {
    for (int r = 1; r <= N; ++r)
      if (!taken[size_t(r)] && pt.row(r).eigenvalue == es.values[size_t(k)]) {
        out[size_t(k)] = r;
        taken[size_t(r)] = 1;
        break;
      }
    require(out[size_t(k)] != 0,
            "no parameter row matches eigenvalue " + es.values[size_t(k)].str());
  }
  return out;
}

MatZ reconstruct_tp(const EigenSystem& es, const std::vector<Quad>& lambda,
                    const std::vector<Int>& masses, const Int& column_sum) {
  const int N = int(es.values.size());
  require(int(lambda.size()) == N, "reconstruct_tp: eigenvalue count mismatch");
  Mat<Quad> W(N, N);  // diag(lambda) Vinv
  for (int k = 0; k < N; ++k)
    for (int j = 0; j < N; ++j) W(k, j) = lambda[size_t(k)] * es.Vinv(k, j);
  MatZ out(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Quad s;
      for (int k = 0; k < N; ++k) s += es.V(i, k) * W(k, j);
      require(s.b == 0, "reconstructed entry is irrational");
      require(is_integer(s.a), "reconstructed entry is not integral");
      out(i, j) = to_int(s.a);
      require(out(i, j) >= 0, "reconstructed entry is negative");
    }
  for (int j = 0; j < N; ++j) {
    Int sum(0);
    for (int i = 0; i < N; ++i) sum += out(i, j);
    require(sum == column_sum, "reconstructed column sum is wrong");
  }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      require(masses[size_t(i)] * out(j, i) == masses[size_t(j)] * out(i, j),
              "reconstructed matrix is not self-adjoint");
  return out;
}

DTable solve_unknown_D(const std::vector<SpectrumEquations>& spectra, long p,
                       const DTable& seed) {
  DTable dt = seed;
  struct Eq {
    Quad rhs;
    std::map<std::string, Rat> coeff;
    std::string origin;
  };
  std::vector<Eq> eqs;
  for (const SpectrumEquations& sp : spectra) {
    require(sp.lambda.size() == sp.psi.size(), "equation arity mismatch");
    for (size_t i = 0; i < sp.psi.size(); ++i) {
      Symbolic s = evaluate_param_symbolic(sp.psi[i], sp.n);
      Eq e;
      e.rhs = sp.lambda[i] - Quad(s.c0.eval(rat(p)));
      for (const auto& [sym, poly] : s.terms) {
        Rat c = poly.eval(rat(p));
        if (c != 0) e.coeff[sym] = c;
      }
      e.origin = print_param(sp.psi[i]) + " in dimension " + std::to_string(sp.n);
      eqs.push_back(std::move(e));
    }
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (Eq& e : eqs) {
      for (auto it = e.coeff.begin(); it != e.coeff.end();) {
        if (dt.has(p, it->first)) {
          e.rhs -= Quad(it->second) * dt.get(p, it->first);
          it = e.coeff.erase(it);
          progress = true;
        } else {
          ++it;
        }
      }
      if (e.coeff.size() == 1) {
        const auto& [sym, c] = *e.coeff.begin();
        dt.set(p, sym, e.rhs * Quad(Rat(1) / c), Provenance::solved);
        e.coeff.clear();
        e.rhs = Quad();
        progress = true;
      }
    }
  }
  for (const Eq& e : eqs) {
    if (!e.coeff.empty())
      throw ConsistencyError("equation for " + e.origin + " is underdetermined");
    if (!e.rhs.is_zero())
      throw ConsistencyError("equation for " + e.origin + " does not close");
  }
  return dt;
}

}  // namespace nh
