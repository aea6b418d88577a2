#include "nh/poly.hpp"

namespace nh {

Poly operator+(const Poly& p, const Poly& q) {
  std::vector<Rat> r(std::max(p.c.size(), q.c.size()), Rat(0));
  for (size_t i = 0; i < p.c.size(); ++i) r[i] += p.c[i];
  for (size_t i = 0; i < q.c.size(); ++i) r[i] += q.c[i];
  return Poly(std::move(r));
}

Poly operator-(const Poly& p, const Poly& q) {
  std::vector<Rat> r(std::max(p.c.size(), q.c.size()), Rat(0));
  for (size_t i = 0; i < p.c.size(); ++i) r[i] += p.c[i];
  for (size_t i = 0; i < q.c.size(); ++i) r[i] -= q.c[i];
  return Poly(std::move(r));
}

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly();
  std::vector<Rat> r(p.c.size() + q.c.size() - 1, Rat(0));
  for (size_t i = 0; i < p.c.size(); ++i) {
    if (p.c[i] == 0) continue;
    for (size_t j = 0; j < q.c.size(); ++j) r[i + j] += p.c[i] * q.c[j];
  }
  return Poly(std::move(r));
}

Poly operator*(const Rat& s, const Poly& p) {
  if (s == 0) return Poly();
  std::vector<Rat> r = p.c;
  for (auto& v : r) v *= s;
  return Poly(std::move(r));
}

Poly Poly::derivative() const {
  if (c.size() <= 1) return Poly();
  std::vector<Rat> r(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) r[i - 1] = Rat(long(i)) * c[i];
  return Poly(std::move(r));
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    Rat v = coeff(k);
    if (v == 0) continue;
    if (!s.empty()) s += (v > 0 ? "+" : "-");
    else if (v < 0) s += "-";
    Rat av = abs(v);
    bool unit = (av == 1);
    if (k == 0 || !unit) s += av.get_str();
    if (k > 0) {
      if (!unit) s += "*";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

Poly poly_rem(const Poly& p, const Poly& q) {
  require(!q.is_zero(), "polynomial division by zero");
  std::vector<Rat> r = p.c;
  int dq = q.degree();
  Rat lq = q.lead();
  while (int(r.size()) - 1 >= dq) {
    int dr = int(r.size()) - 1;
    Rat f = r.back() / lq;
    for (int i = 0; i <= dq; ++i) r[dr - dq + i] -= f * q.c[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.empty()) break;
  }
  return Poly(std::move(r));
}

namespace {

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> s;
  s.push_back(p);
  Poly d = p.derivative();
  if (!d.is_zero()) s.push_back(d);
  while (s.back().degree() > 0) {
    Poly r = poly_rem(s[s.size() - 2], s.back());
    if (r.is_zero()) break;  // p not squarefree; chain ends at gcd
    s.push_back(Rat(-1) * r);
  }
  return s;
}

int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Sign changes of the chain at x (finite) or at +-infinity (dir = +1/-1).
int changes_at(const std::vector<Poly>& chain, const Rat& x) {
  int prev = 0, n = 0;
  for (const Poly& f : chain) {
    int s = sign_of(f.eval(x));
    if (s != 0) {
      if (prev != 0 && s != prev) ++n;
      prev = s;
    }
  }
  return n;
}

int changes_at_inf(const std::vector<Poly>& chain, int dir) {
  int prev = 0, n = 0;
  for (const Poly& f : chain) {
    if (f.is_zero()) continue;
    int s = sign_of(f.lead());
    if (dir < 0 && f.degree() % 2 == 1) s = -s;
    if (prev != 0 && s != prev) ++n;
    prev = s;
  }
  return n;
}

Rat root_bound(const Poly& p) {
  // Cauchy bound: 1 + max |a_i| / |a_n|.
  Rat m(0), lead = abs(p.lead());
  for (int i = 0; i < p.degree(); ++i) {
    Rat a = abs(p.coeff(i));
    if (a > m) m = a;
  }
  return Rat(1) + m / lead;
}

// Squarefree part: p / gcd(p, p').
Poly squarefree(const Poly& p) {
  Poly a = p, b = p.derivative();
  while (!b.is_zero() && b.degree() >= 0) {
    Poly r = poly_rem(a, b);
    a = b;
    b = r;
    if (b.is_zero()) break;
  }
  // a = gcd(p, p'); divide p by a exactly.
  if (a.degree() <= 0) return p;
  std::vector<Rat> num = p.c, q(p.c.size() - a.c.size() + 1, Rat(0));
  int da = a.degree();
  Rat la = a.lead();
  for (int dr = int(num.size()) - 1; dr >= da; --dr) {
    Rat f = num[dr] / la;
    q[dr - da] = f;
    if (f == 0) continue;
    for (int i = 0; i <= da; ++i) num[dr - da + i] -= f * a.c[i];
  }
  return Poly(std::move(q));
}

}  // namespace

int count_real_roots(const Poly& p, const Rat& lo, const Rat& hi) {
  if (p.degree() <= 0) return 0;
  Poly sf = squarefree(p);
  auto chain = sturm_chain(sf);
  return changes_at(chain, lo) - changes_at(chain, hi);
}

int count_real_roots(const Poly& p) {
  if (p.degree() <= 0) return 0;
  Poly sf = squarefree(p);
  auto chain = sturm_chain(sf);
  return changes_at_inf(chain, -1) - changes_at_inf(chain, +1);
}

std::optional<std::pair<Rat, Rat>> max_real_root(const Poly& p, const Rat& tol) {
  if (p.degree() <= 0) return std::nullopt;
  Poly sf = squarefree(p);
  auto chain = sturm_chain(sf);
  int total = changes_at_inf(chain, -1) - changes_at_inf(chain, +1);
  if (total == 0) return std::nullopt;
  Rat b = root_bound(sf);
  Rat lo = -b, hi = b;
  // Shrink (lo, hi] keeping the largest root inside: exactly zero roots above hi.
  int below_hi = changes_at(chain, hi);  // changes at hi .. +inf gives roots > hi
  require(below_hi - changes_at_inf(chain, +1) == 0, "root bound violated");
  auto roots_in = [&](const Rat& a, const Rat& b2) {
    return changes_at(chain, a) - changes_at(chain, b2);
  };
  while (hi - lo > tol || roots_in(lo, hi) > 1) {
    Rat mid = (lo + hi) / 2;
    int above_mid = changes_at(chain, mid) - changes_at_inf(chain, +1);
    if (above_mid == 0)
      hi = mid;
    else
      lo = mid;
  }
  require(roots_in(lo, hi) == 1, "isolation failed");
  return std::make_pair(lo, hi);
}

}  // namespace nh
