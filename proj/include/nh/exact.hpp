#pragma once
#include <gmpxx.h>

#include <optional>
#include <string>

#include "nh/basic.hpp"

namespace nh {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int pow_int(const Int& b, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline bool fits_i64(const Int& a) { return a.fits_slong_p(); }

inline i64 to_i64(const Int& a) {
  require(fits_i64(a), "integer out of 64-bit range: " + a.get_str());
  return a.get_si();
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q) {
  require(is_integer(q), "rational is not an integer: " + q.get_str());
  return q.get_num();
}

inline Rat rat(const Int& n, const Int& d) {
  require(d != 0, "zero denominator");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

inline Rat rat(i64 n) { return Rat(Int(n)); }

// Elements of Q(sqrt(QUAD_D)); QUAD_D is the squarefree discriminant core
// shared by every irrational eigenvalue in this project.
constexpr long QUAD_D = 144169;

struct Quad {
  Rat a, b;  // a + b*sqrt(QUAD_D)

  Quad() : a(0), b(0) {}
  Quad(const Rat& a_) : a(a_), b(0) {}
  Quad(const Int& a_) : a(a_), b(0) {}
  Quad(long a_) : a(a_), b(0) {}
  Quad(const Rat& a_, const Rat& b_) : a(a_), b(b_) {}

  bool is_rational() const { return b == 0; }
  bool is_zero() const { return a == 0 && b == 0; }
  Quad conj() const { return Quad(a, -b); }
  Rat norm() const { return a * a - Rat(QUAD_D) * b * b; }

  friend Quad operator+(const Quad& x, const Quad& y) { return Quad(x.a + y.a, x.b + y.b); }
  friend Quad operator-(const Quad& x, const Quad& y) { return Quad(x.a - y.a, x.b - y.b); }
  friend Quad operator-(const Quad& x) { return Quad(-x.a, -x.b); }
  friend Quad operator*(const Quad& x, const Quad& y) {
    return Quad(x.a * y.a + Rat(QUAD_D) * x.b * y.b, x.a * y.b + x.b * y.a);
  }
  friend bool operator==(const Quad& x, const Quad& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }

  Quad inv() const {
    Rat n = norm();
    require(n != 0, "division by zero in Q(sqrt(D))");
    return Quad(a / n, -b / n);
  }
  friend Quad operator/(const Quad& x, const Quad& y) { return x * y.inv(); }
  Quad& operator+=(const Quad& y) { a += y.a; b += y.b; return *this; }
  Quad& operator-=(const Quad& y) { a -= y.a; b -= y.b; return *this; }
  Quad& operator*=(const Quad& y) { *this = *this * y; return *this; }

  double approx() const { return a.get_d() + b.get_d() * 379.695931576; }

  // Exact sign of the real embedding with sqrt(QUAD_D) > 0.
  int sgn() const {
    int sa = sgn_rat(a), sb = sgn_rat(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    Rat d = a * a - Rat(QUAD_D) * b * b;  // compares |a| with |b| sqrt(D)
    int sd = sgn_rat(d);
    return sd > 0 ? sa : (sd < 0 ? sb : 0);
  }

 private:
  static int sgn_rat(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

 public:

  // "540+12*r", "540-12*r", plain "540"; r stands for sqrt(QUAD_D).
  std::string str() const {
    if (b == 0) return a.get_str();
    std::string s;
    if (a != 0) {
      s = a.get_str();
      if (b > 0) s += "+";
    }
    if (b == 1)
      s += "r";
    else if (b == -1)
      s += "-r";
    else
      s += b.get_str() + "*r";
    return s;
  }
};

Quad parse_quad(const std::string& s);  // inverse of Quad::str

}  // namespace nh
