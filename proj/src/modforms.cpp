#include "nh/modforms.hpp"

namespace nh {

namespace {

Series sigma_series(int N, int k, const Int& scale, const Int& a0) {
  // a0 + scale * sum_{n>=1} sigma_k(n) q^n
  Series s(size_t(N), Int(0));
  if (N > 0) s[0] = a0;
  for (int d = 1; d < N; ++d) {
    Int dk = pow_int(d, u64(k));
    for (int m = d; m < N; m += d) s[size_t(m)] += dk;
  }
  for (int n = 1; n < N; ++n) s[size_t(n)] *= scale;
  return s;
}

}  // namespace

Series eisenstein4(int N) { return sigma_series(N, 3, Int(240), Int(1)); }

Series eisenstein6(int N) { return sigma_series(N, 5, Int(-504), Int(1)); }

Series series_mul(const Series& a, const Series& b, int N) {
  Series c(size_t(N), Int(0));
  for (int i = 0; i < int(a.size()) && i < N; ++i) {
    if (a[size_t(i)] == 0) continue;
    for (int j = 0; j < int(b.size()) && i + j < N; ++j)
      c[size_t(i + j)] += a[size_t(i)] * b[size_t(j)];
  }
  return c;
}

Series delta_series(int N) {
  Series e4 = eisenstein4(N), e6 = eisenstein6(N);
  Series e43 = series_mul(series_mul(e4, e4, N), e4, N);
  Series e62 = series_mul(e6, e6, N);
  Series d(size_t(N), Int(0));
  for (int n = 0; n < N; ++n) {
    Int num = e43[size_t(n)] - e62[size_t(n)];
    require(num % 1728 == 0, "discriminant series is not integral");
    d[size_t(n)] = num / 1728;
  }
  if (N > 0) require(d[0] == 0, "discriminant series has a constant term");
  if (N > 1) require(d[1] == 1, "discriminant series is not normalized");
  return d;
}

Int elliptic_trace(int k, i64 p) {
  require(p >= 2, "elliptic_trace: p must be at least 2");
  int N = int(p) + 1;
  Series f = delta_series(N);
  switch (k) {
    case 12:
      break;
    case 16:
      f = series_mul(f, eisenstein4(N), N);
      break;
    case 18:
      f = series_mul(f, eisenstein6(N), N);
      break;
    case 20:
      f = series_mul(f, series_mul(eisenstein4(N), eisenstein4(N), N), N);
      break;
    case 22:
      f = series_mul(f, series_mul(eisenstein4(N), eisenstein6(N), N), N);
      break;
    default:
      fail("no one-dimensional cusp space in weight " + std::to_string(k));
  }
  require(f[1] == 1, "eigenform is not normalized");
  return f[size_t(p)];
}

std::pair<Quad, Quad> weight24_pair(i64 p) {
  require(p >= 2, "weight24_pair: p must be at least 2");
  int N = 2 * int(p) + 2;
  Series e4 = eisenstein4(N);
  Series g1 = series_mul(delta_series(N), series_mul(series_mul(e4, e4, N), e4, N), N);
  Series delta = delta_series(N);
  Series g2 = series_mul(delta, delta, N);
  require(g1[1] == 1 && g2[1] == 0 && g2[2] == 1, "weight-24 basis is not triangular");
  // T_p on the basis {g1, g2}: coefficients a_n(T_p g) = a_{np} + p^23 a_{n/p}.
  Int p23 = pow_int(p, 23);
  auto tp_coeff = [&](const Series& g, i64 n) {
    Int v = g[size_t(n * p)];
    if (n % p == 0) v += p23 * g[size_t(n / p)];
    return v;
  };
  // Coefficient matrix is unitriangular: solve T_p g_j = M_1j g1 + M_2j g2.
  Int m11 = tp_coeff(g1, 1);
  Int m12 = tp_coeff(g2, 1);
  Int m21 = tp_coeff(g1, 2) - m11 * g1[2];
  Int m22 = tp_coeff(g2, 2) - m12 * g1[2];
  Int tr = m11 + m22;
  Int dt = m11 * m22 - m12 * m21;
  Int disc = tr * tr - 4 * dt;
  // disc = e^2 * 144169 with the eigenvalues (tr +- e sqrt(144169)) / 2.
  require(disc > 0 && disc % QUAD_D == 0, "weight-24 discriminant is not in the field");
  Int e2 = disc / QUAD_D;
  Int e = sqrt(e2);
  require(e * e == e2, "weight-24 discriminant is not a square multiple");
  Quad plus(rat(tr, 2), rat(e, 2));
  Quad minus(rat(tr, 2), rat(-e, 2));
  return {plus, minus};
}

Int sym2_trace(i64 p) {
  Int a = elliptic_trace(12, p);
  return a * a - pow_int(p, 11);
}

}  // namespace nh
