#pragma once
#include <optional>

#include "nh/exact.hpp"

namespace nh {

// Dense univariate polynomial over Q, coefficients low to high, no trailing zeros.
struct Poly {
  std::vector<Rat> c;

  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
  static Poly constant(const Rat& v) { return Poly(std::vector<Rat>{v}); }
  static Poly x_pow(int k, const Rat& v = Rat(1)) {
    std::vector<Rat> w(k + 1, Rat(0));
    w[k] = v;
    return Poly(std::move(w));
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return int(c.size()) - 1; }  // -1 for the zero polynomial
  Rat coeff(int k) const { return k >= 0 && k < int(c.size()) ? c[k] : Rat(0); }
  Rat lead() const { return c.empty() ? Rat(0) : c.back(); }

  Rat eval(const Rat& x) const {
    Rat v(0);
    for (int i = int(c.size()) - 1; i >= 0; --i) v = v * x + c[i];
    return v;
  }

  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(const Rat& s, const Poly& p);
  friend bool operator==(const Poly& p, const Poly& q) { return p.c == q.c; }

  Poly derivative() const;
  std::string str(const std::string& var = "p") const;
};

// Remainder of p mod q over Q (q nonzero).
Poly poly_rem(const Poly& p, const Poly& q);

// Number of distinct real roots in (lo, hi] by Sturm's theorem.
int count_real_roots(const Poly& p, const Rat& lo, const Rat& hi);
int count_real_roots(const Poly& p);  // on all of R

// Largest real root, isolated by bisection to width <= tol; nullopt when the
// polynomial has no real root. The interval (lo, hi] contains exactly one
// distinct real root of p, the largest.
std::optional<std::pair<Rat, Rat>> max_real_root(const Poly& p, const Rat& tol);

}  // namespace nh
