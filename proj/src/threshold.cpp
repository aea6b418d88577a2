#include "nh/threshold.hpp"

#include <algorithm>

#include "nh/arthur.hpp"

namespace nh {

namespace {

// ---------------------------------------------------------------------------
// Polynomials with coefficients in Q(sqrt(D)), split into the two components.

struct QuadPoly {
  Poly a, b;

  bool rational() const { return b.is_zero(); }
};

QuadPoly operator+(const QuadPoly& p, const QuadPoly& q) { return {p.a + q.a, p.b + q.b}; }
QuadPoly operator-(const QuadPoly& p, const QuadPoly& q) { return {p.a - q.a, p.b - q.b}; }

QuadPoly operator*(const QuadPoly& p, const QuadPoly& q) {
  return {p.a * q.a + Rat(QUAD_D) * (p.b * q.b), p.a * q.b + p.b * q.a};
}

// Scalar multiple w * p for a rational-coefficient polynomial p.
QuadPoly scale(const Quad& w, const Poly& p) { return {w.a * p, w.b * p}; }

// ---------------------------------------------------------------------------
// Bounded-trace tables. Each symbol D{w}_{...} stands for the trace of 2g
// unitary Satake numbers of absolute value p^{w/2} (g = number of
// subscripts), so its square is at most (2g)^2 p^w; the symmetric-square
// symbol is a trace of 3 numbers of absolute value p^11.

int subscript_count(const std::string& sym) {
  return 1 + static_cast<int>(std::count(sym.begin(), sym.end(), '_'));
}

Poly gamma_poly(const std::string& sym) {
  if (sym == "Sym2D11") return Poly::x_pow(22, Rat(9));
  int g = subscript_count(sym);
  long m = 2L * g;
  return Poly::x_pow(symbol_w1(sym), Rat(m * m));
}

std::vector<std::string> theta_symbols(int n) {
  if (n == 23)
    return {"D11", "D15", "D17", "D19", "D21", "D19_7", "D21_5", "D21_9", "D21_13"};
  require(n == 25, "threshold analysis is defined for n = 23 and n = 25");
  return dtable_symbols();
}

// ---------------------------------------------------------------------------
// Dense integer polynomials, low degree first.

using IPoly = std::vector<Int>;

void itrim(IPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int ideg(const IPoly& p) { return static_cast<int>(p.size()) - 1; }

// Primitive part (content removed), sign preserved.
void make_primitive(IPoly& p) {
  Int g = 0;
  for (const Int& c : p) g = gcd(g, c);
  if (g > 1)
    for (Int& c : p) c /= g;
}

IPoly to_integer(const Poly& p) {
  Int den = 1;
  for (const Rat& c : p.c) den = lcm(den, c.get_den());
  IPoly out;
  out.reserve(p.c.size());
  for (const Rat& c : p.c) out.push_back(Int(c.get_num() * (den / c.get_den())));
  itrim(out);
  make_primitive(out);
  return out;
}

// Coefficients of p(X + s).
IPoly taylor_shift(IPoly p, long s) {
  int d = ideg(p);
  for (int i = 0; i < d; ++i)
    for (int j = d - 1; j >= i; --j) p[size_t(j)] += s * p[size_t(j) + 1];
  return p;
}

// All coefficients nonnegative and the constant term positive: the
// polynomial is then strictly positive on [0, infinity).
bool positive_on_ray(const IPoly& p) {
  if (p.empty() || p[0] <= 0) return false;
  for (const Int& c : p)
    if (c < 0) return false;
  return true;
}

int sgn_int(const Int& x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

int sign_at(const IPoly& p, long x) {
  Int acc = 0;
  for (int i = ideg(p); i >= 0; --i) acc = acc * x + p[size_t(i)];
  return sgn_int(acc);
}

// Sign at num/den (den > 0) via the homogenized value.
int sign_at(const IPoly& p, const Rat& x) {
  Int num = x.get_num(), den = x.get_den();
  Int acc = 0, dp = 1;
  for (int i = ideg(p); i >= 0; --i) {
    acc = acc * num + p[size_t(i)] * dp;
    dp *= den;
  }
  return sgn_int(acc);
}

// ---------------------------------------------------------------------------
// Integer Sturm chains via sign-corrected pseudo-remainders.

using Chain = std::vector<IPoly>;

IPoly iderivative(const IPoly& p) {
  IPoly d;
  for (int i = 1; i <= ideg(p); ++i) d.push_back(Int(i) * p[size_t(i)]);
  return d;
}

// Pseudo-remainder of a by b together with the sign of the implied
// multiplier lc(b)^t, so callers can keep the Sturm sign convention exact.
std::pair<IPoly, int> signed_prem(IPoly r, const IPoly& b) {
  Int lb = b.back();
  int slb = sgn_int(lb);
  int s = 1;
  while (ideg(r) >= ideg(b)) {
    int shift = ideg(r) - ideg(b);
    Int lr = r.back();
    IPoly nxt(r.size() - 1, Int(0));
    for (int i = 0; i + 1 < static_cast<int>(r.size()); ++i) {
      nxt[size_t(i)] = lb * r[size_t(i)];
      if (i >= shift) nxt[size_t(i)] -= lr * b[size_t(i - shift)];
    }
    itrim(nxt);
    r = std::move(nxt);
    s *= slb;
    if (r.empty()) break;
  }
  return {std::move(r), s};
}

Chain sturm_chain(IPoly p) {
  make_primitive(p);
  Chain ch;
  ch.push_back(std::move(p));
  if (ideg(ch[0]) < 1) return ch;
  ch.push_back(iderivative(ch[0]));
  make_primitive(ch.back());
  while (!ch.back().empty() && ideg(ch.back()) > 0) {
    auto [r, s] = signed_prem(ch[size_t(ch.size()) - 2], ch.back());
    if (r.empty()) break;
    // Sturm convention: next = -(prev mod cur); undo a negative multiplier.
    if (s > 0)
      for (Int& c : r) c = -c;
    make_primitive(r);
    ch.push_back(std::move(r));
  }
  return ch;
}

template <class Point>
int variations_at(const Chain& ch, const Point& x) {
  int v = 0, prev = 0;
  for (const IPoly& p : ch) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int variations_at_inf(const Chain& ch) {
  int v = 0, prev = 0;
  for (const IPoly& p : ch) {
    if (p.empty()) continue;
    int s = sgn_int(p.back());
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

// Number of distinct real roots in (x, infinity); requires p(x) != 0.
template <class Point>
int roots_beyond(const Chain& ch, const Point& x) {
  return variations_at(ch, x) - variations_at_inf(ch);
}

}  // namespace

// ---------------------------------------------------------------------------

ThresholdContext make_threshold_context(const EigenSystem& es, const ParamTable& pt,
                                        const std::vector<int>& match) {
  int N = es.V.rows;
  require(static_cast<int>(match.size()) == N && pt.size() == N, "threshold shape mismatch");
  ThresholdContext ctx;
  ctx.n = pt.n;
  ctx.lo = pt.n == 23 ? 21 : 64;
  ctx.hi = ctx.lo + 1;
  ctx.symbols = theta_symbols(pt.n);
  for (const std::string& sym : ctx.symbols) ctx.gamma.push_back(gamma_poly(sym));
  ctx.V = es.V;
  ctx.Vinv = es.Vinv;
  ctx.c0.resize(size_t(N));
  ctx.coeff.assign(size_t(N), std::vector<Poly>(ctx.symbols.size()));
  for (int k = 0; k < N; ++k) {
    Symbolic s = evaluate_param_symbolic(pt.row(match[size_t(k)]).psi, pt.n);
    ctx.c0[size_t(k)] = s.c0;
    for (auto& [sym, poly] : s.terms) {
      if (poly.is_zero()) continue;
      auto it = std::find(ctx.symbols.begin(), ctx.symbols.end(), sym);
      require(it != ctx.symbols.end(), "eigenvalue uses an unbounded trace: " + sym);
      ctx.coeff[size_t(k)][size_t(it - ctx.symbols.begin())] = poly;
    }
  }
  return ctx;
}

namespace {

// The decomposition weights u_k = V(i,k) * Vinv(k,j), scaled by a positive
// rational to a primitive integer vector in Z[sqrt(D)]; the scaling leaves
// the certificate's sign behaviour unchanged.
std::vector<Quad> pair_weights(const ThresholdContext& ctx, int i, int j) {
  int N = ctx.V.rows;
  std::vector<Quad> u(static_cast<size_t>(N));
  Int den = 1;
  for (int k = 0; k < N; ++k) {
    u[size_t(k)] = ctx.V(i, k) * ctx.Vinv(k, j);
    den = lcm(den, lcm(u[size_t(k)].a.get_den(), u[size_t(k)].b.get_den()));
  }
  Int g = 0;
  for (Quad& w : u) {
    w = Quad(w.a * Rat(den), w.b * Rat(den));
    g = gcd(g, gcd(w.a.get_num(), w.b.get_num()));
  }
  if (g > 1) {
    Rat inv(1, g);
    for (Quad& w : u) w = Quad(w.a * inv, w.b * inv);
  }
  return u;
}

struct PairPolys {
  QuadPoly p0;
  std::vector<QuadPoly> pr;
};

PairPolys pair_polys(const ThresholdContext& ctx, int i, int j) {
  int N = ctx.V.rows;
  std::vector<Quad> u = pair_weights(ctx, i, j);
  PairPolys out;
  out.pr.resize(ctx.symbols.size());
  for (int k = 0; k < N; ++k) {
    const Quad& w = u[size_t(k)];
    if (w.is_zero()) continue;
    out.p0 = out.p0 + scale(w, ctx.c0[size_t(k)]);
    for (size_t r = 0; r < ctx.symbols.size(); ++r) {
      const Poly& c = ctx.coeff[size_t(k)][r];
      if (!c.is_zero()) out.pr[r] = out.pr[r] + scale(w, c);
    }
  }
  return out;
}

Poly q_from_polys(const ThresholdContext& ctx, const PairPolys& pp) {
  QuadPoly q = pp.p0 * pp.p0;
  Rat K(static_cast<long>(ctx.symbols.size()));
  for (size_t r = 0; r < pp.pr.size(); ++r) {
    if (pp.pr[r].a.is_zero() && pp.pr[r].b.is_zero()) continue;
    QuadPoly sq = pp.pr[r] * pp.pr[r];
    q = q - QuadPoly{K * (sq.a * ctx.gamma[r]), K * (sq.b * ctx.gamma[r])};
  }
  require(q.rational(), "certificate polynomial has an irrational part");
  return q.a;
}

}  // namespace

Poly threshold_q(const ThresholdContext& ctx, int i, int j) {
  return q_from_polys(ctx, pair_polys(ctx, i, j));
}

Quad threshold_entry(const ThresholdContext& ctx, int i, int j, long p, const DTable& dt) {
  int N = ctx.V.rows;
  Rat x(p);
  Quad acc;
  for (int k = 0; k < N; ++k) {
    Quad w = ctx.V(i, k) * ctx.Vinv(k, j);
    if (w.is_zero()) continue;
    Quad lam(ctx.c0[size_t(k)].eval(x), Rat(0));
    for (size_t r = 0; r < ctx.symbols.size(); ++r) {
      const Poly& c = ctx.coeff[size_t(k)][r];
      if (!c.is_zero()) lam += Quad(c.eval(x), Rat(0)) * dt.get(p, ctx.symbols[r]);
    }
    acc += w * lam;
  }
  return acc;
}

ThresholdReport completeness_threshold(const ThresholdContext& ctx,
                                       const std::function<void(const std::string&)>& log) {
  int N = ctx.V.rows;
  ThresholdReport rep;
  rep.n = ctx.n;
  rep.lo = ctx.lo;
  rep.hi = ctx.hi;
  rep.all_below_hi = true;

  std::vector<Chain> witness_chains;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      ++rep.pairs;
      IPoly q = to_integer(threshold_q(ctx, i, j));
      require(!q.empty() && q.back() > 0, "certificate polynomial must grow positive");
      if (positive_on_ray(taylor_shift(q, ctx.lo))) {
        ++rep.prefiltered;
        continue;
      }
      ++rep.escalated;
      Chain ch = sturm_chain(q);
      if (sign_at(ch[0], ctx.hi) <= 0 || roots_beyond(ch, ctx.hi) != 0) {
        rep.all_below_hi = false;
        if (log) log("pair (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                     ") has a root at or beyond " + std::to_string(ctx.hi));
        continue;
      }
      bool at_lo = sign_at(ch[0], ctx.lo) == 0;
      if (at_lo || roots_beyond(ch, ctx.lo) > 0) {
        rep.witnesses.push_back({i + 1, j + 1});
        witness_chains.push_back(std::move(ch));
      }
    }
    if (log && (i + 1) % 16 == 0)
      log("threshold n=" + std::to_string(ctx.n) + ": row " + std::to_string(i + 1) + "/" +
          std::to_string(N) + ", witnesses so far: " + std::to_string(rep.witnesses.size()));
  }
  rep.has_witness = !rep.witnesses.empty();
  rep.certified = rep.all_below_hi && rep.has_witness;

  // Bisect for the largest root over the witness set. A chain whose count
  // beyond the current lower bound drops to zero can never attain the
  // maximum again and is discarded.
  rep.rho_lo = Rat(ctx.lo);
  rep.rho_hi = Rat(ctx.hi);
  if (rep.has_witness && rep.all_below_hi) {
    std::vector<Chain> live = std::move(witness_chains);
    for (int step = 0; step < 40 && live.size() > 0; ++step) {
      Rat mid = (rep.rho_lo + rep.rho_hi) / 2;
      bool nudged = true;
      while (nudged) {
        nudged = false;
        for (const Chain& ch : live)
          if (sign_at(ch[0], mid) == 0) {
            mid += (rep.rho_hi - mid) / 997;
            nudged = true;
          }
      }
      std::vector<Chain> keep;
      for (Chain& ch : live)
        if (roots_beyond(ch, mid) > 0) keep.push_back(std::move(ch));
      if (!keep.empty()) {
        live = std::move(keep);
        rep.rho_lo = mid;
      } else {
        rep.rho_hi = mid;
      }
    }
  }
  if (log)
    log("threshold n=" + std::to_string(ctx.n) + ": " + std::to_string(rep.pairs) + " pairs, " +
        std::to_string(rep.prefiltered) + " prefiltered, " + std::to_string(rep.escalated) +
        " escalated, " + std::to_string(rep.witnesses.size()) + " witnesses, certified=" +
        (rep.certified ? "yes" : "no"));
  return rep;
}

}  // namespace nh
