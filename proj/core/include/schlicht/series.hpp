// Truncated power series over a generic coefficient field, and the pipeline
// from a normalized series f to the coefficient table of its square-root
// transform f2(z) = sqrt(f(z^2)).
#pragma once

#include <vector>

#include "schlicht/errors.hpp"
#include "schlicht/field.hpp"
#include "schlicht/grunsky_table.hpp"

namespace schlicht {

// Polynomial / truncated series: c[n] multiplies z^n. Coefficients beyond
// the stored order are zero (truncation semantics are the polynomial's).
template <class T>
struct Series1 {
  std::vector<T> c;

  Series1() = default;
  explicit Series1(int order) : c(order + 1, T{}) {}

  int order() const { return static_cast<int>(c.size()) - 1; }

  T coeff(int n) const {
    if (n < 0 || n > order()) return T{};
    return c[n];
  }

  void set(int n, const T& v) {
    if (n < 0) throw Error("Series1: negative index");
    if (n > order()) c.resize(n + 1, T{});
    c[n] = v;
  }

  // f(z) = z + a2 z^2 + ... (the normalization used throughout)
  bool normalized() const {
    return order() >= 1 && is_zero(c[0]) && c[1] == field_from_int<T>(1);
  }
};

// Cauchy product truncated at `order`.
template <class T>
Series1<T> mul1(const Series1<T>& a, const Series1<T>& b, int order) {
  Series1<T> r(order);
  int amax = std::min(a.order(), order);
  for (int i = 0; i <= amax; ++i) {
    if (is_zero(a.c[i])) continue;
    int jmax = std::min(b.order(), order - i);
    for (int j = 0; j <= jmax; ++j) {
      r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
  }
  return r;
}

// g(z) = f(z^2), truncated at `order`.
template <class T>
Series1<T> substitute_square(const Series1<T>& f, int order) {
  Series1<T> g(order);
  for (int n = 0; 2 * n <= order && n <= f.order(); ++n) {
    g.c[2 * n] = f.c[n];
  }
  return g;
}

// Square root with leading term z of a series of the form z^2 * (1 + u(z)),
// u(0) = 0: returns z * sqrt(1 + u) truncated at out_order. The recurrence
// s_m = (u_m - sum_{j=1}^{m-1} s_j s_{m-j}) / 2 stays exact over rationals.
template <class T>
Series1<T> sqrt_normalized(const Series1<T>& a, int out_order) {
  const T one = field_from_int<T>(1);
  const T two = field_from_int<T>(2);
  if (a.order() < 2 || !is_zero(a.coeff(0)) || !is_zero(a.coeff(1)) ||
      !(a.coeff(2) == one)) {
    throw BadLeadingTermError("sqrt_normalized: series must be z^2*(1 + ...)");
  }
  if (out_order < 1) throw Error("sqrt_normalized: out_order must be >= 1");
  int m_max = out_order - 1;  // result coefficient of z^{m+1} is s_m
  std::vector<T> s(m_max + 1, T{});
  s[0] = one;
  for (int m = 1; m <= m_max; ++m) {
    T acc = a.coeff(m + 2);  // u_m
    for (int j = 1; j < m; ++j) acc = acc - s[j] * s[m - j];
    s[m] = acc / two;
  }
  Series1<T> r(out_order);
  for (int m = 0; m <= m_max; ++m) r.c[m + 1] = s[m];
  return r;
}

// f2(z) = sqrt(f(z^2)) for normalized f, truncated at 2*f.order()+1.
// Only odd powers survive: f2 = z + c3 z^3 + c5 z^5 + ...
template <class T>
Series1<T> odd_transform(const Series1<T>& f) {
  if (!f.normalized()) {
    throw BadLeadingTermError("odd_transform: series must be normalized (z + ...)");
  }
  int n = f.order();
  return sqrt_normalized(substitute_square(f, 2 * n), 2 * n + 1);
}

namespace detail {

// Dense bivariate series truncated per-variable at degree n.
template <class T>
struct Series2 {
  int n;
  std::vector<T> d;  // (n+1)^2 row-major: d[i*(n+1)+j] multiplies t^i z^j
  explicit Series2(int n_) : n(n_), d((n_ + 1) * (n_ + 1), T{}) {}
  T& at(int i, int j) { return d[i * (n + 1) + j]; }
  const T& at(int i, int j) const { return d[i * (n + 1) + j]; }

  bool all_zero() const {
    for (const T& v : d) {
      if (!is_zero(v)) return false;
    }
    return true;
  }
};

template <class T>
Series2<T> mul2(const Series2<T>& a, const Series2<T>& b) {
  int n = a.n;
  Series2<T> r(n);
  for (int i1 = 0; i1 <= n; ++i1) {
    for (int j1 = 0; j1 <= n; ++j1) {
      const T& av = a.at(i1, j1);
      if (is_zero(av)) continue;
      for (int i2 = 0; i2 + i1 <= n; ++i2) {
        for (int j2 = 0; j2 + j1 <= n; ++j2) {
          const T& bv = b.at(i2, j2);
          if (is_zero(bv)) continue;
          r.at(i1 + i2, j1 + j2) = r.at(i1 + i2, j1 + j2) + av * bv;
        }
      }
    }
  }
  return r;
}

}  // namespace detail

// Coefficient table of log((f(t)-f(z))/(t-z)) for a normalized series f,
// truncated per-variable at N. The divided difference expands through
// complete homogeneous symmetric polynomials — a_n contributes to every
// t^i z^j with i+j = n-1 — and the bivariate log(1+u) needs powers u^k up
// to k = 2N (u^k first touches total degree k, and the table holds total
// degrees up to 2N).
template <class T>
GrunskyTable<T> grunsky_from_series(const Series1<T>& f, int N) {
  if (!f.normalized()) {
    throw BadLeadingTermError("grunsky_from_series: series must be normalized");
  }
  if (N < 1) throw Error("grunsky_from_series: N must be >= 1");
  detail::Series2<T> u(N);
  for (int i = 0; i <= N; ++i) {
    for (int j = 0; j <= N; ++j) {
      u.at(i, j) = f.coeff(i + j + 1);
    }
  }
  u.at(0, 0) = T{};  // divided difference minus its constant term 1

  detail::Series2<T> total(N);
  detail::Series2<T> pw = u;
  for (int k = 1; k <= 2 * N; ++k) {
    if (pw.all_zero()) break;
    T coef = field_from_int<T>(k % 2 == 1 ? 1 : -1) / field_from_int<T>(k);
    for (int i = 0; i <= N; ++i) {
      for (int j = 0; j <= N; ++j) {
        if (!is_zero(pw.at(i, j))) {
          total.at(i, j) = total.at(i, j) + coef * pw.at(i, j);
        }
      }
    }
    if (k < 2 * N) pw = detail::mul2(pw, u);
  }
  return GrunskyTable<T>::from_matrix(N, total.d);
}

}  // namespace schlicht
