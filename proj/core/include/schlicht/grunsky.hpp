// Coefficient identities tying Taylor coefficients a2..a5 to the table of
// the odd transform, the truncated quadratic-form inequality, and the
// cascade of modulus bounds on w_{1,odd}.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "schlicht/errors.hpp"
#include "schlicht/field.hpp"
#include "schlicht/grunsky_table.hpp"

namespace schlicht {

template <class T>
struct CoefficientVector {
  T a2{};
  T a3{};
  T a4{};
  T a5{};
};

// Weights of the two-term test sequence: entries x1 and x3.
template <class T>
struct TestVector {
  T x1{};
  T x3{};
};

// a2 = 2w11; a3 = 2w13 + 3w11^2; a4 = 2w33 + 8w11w13 + (10/3)w11^3;
// a5 = 2w35 + 8w11w33 + 5w13^2 + 18w11^2w13 + (7/3)w11^4.
template <class T>
CoefficientVector<T> coefficients_from_table(const GrunskyTable<T>& t) {
  auto ci = [](std::int64_t n) { return field_from_int<T>(n); };
  const T w11 = t.at(1, 1), w13 = t.at(1, 3), w33 = t.at(3, 3),
          w35 = t.at(3, 5);
  CoefficientVector<T> c;
  c.a2 = ci(2) * w11;
  c.a3 = ci(2) * w13 + ci(3) * w11 * w11;
  c.a4 = ci(2) * w33 + ci(8) * w11 * w13 + (ci(10) / ci(3)) * w11 * w11 * w11;
  c.a5 = ci(2) * w35 + ci(8) * w11 * w33 + ci(5) * w13 * w13 +
         ci(18) * w11 * w11 * w13 + (ci(7) / ci(3)) * w11 * w11 * w11 * w11;
  return c;
}

// Residuals of the six relations between a2..a5 and the table: the four
// coefficient expressions (a_i minus its table form) followed by the two
// internal constraints
//   3w15 - 3w11w13 + w11^3 - 3w33   and
//   w17 - w35 - w11w33 - w13^2 + (1/3)w11^4,
// all of which vanish identically for a table computed from a genuine odd
// transform.
template <class T>
std::array<T, 6> verify_coefficient_identities(const GrunskyTable<T>& t,
                                               const CoefficientVector<T>& c) {
  auto ci = [](std::int64_t n) { return field_from_int<T>(n); };
  const T w11 = t.at(1, 1), w13 = t.at(1, 3), w15 = t.at(1, 5),
          w17 = t.at(1, 7), w33 = t.at(3, 3), w35 = t.at(3, 5);
  CoefficientVector<T> e = coefficients_from_table(t);
  std::array<T, 6> r;
  r[0] = c.a2 - e.a2;
  r[1] = c.a3 - e.a3;
  r[2] = c.a4 - e.a4;
  r[3] = c.a5 - e.a5;
  r[4] = ci(3) * w15 - ci(3) * w11 * w13 + w11 * w11 * w11 - ci(3) * w33;
  r[5] = w17 - w35 - w11 * w33 - w13 * w13 +
         (ci(1) / ci(3)) * w11 * w11 * w11 * w11;
  return r;
}

// w33 reconstructed from the fifth relation: w15 - w11w13 + (1/3)w11^3.
template <class T>
T derived_omega33(const GrunskyTable<T>& t) {
  auto ci = [](std::int64_t n) { return field_from_int<T>(n); };
  const T w11 = t.at(1, 1), w13 = t.at(1, 3), w15 = t.at(1, 5);
  return w15 - w11 * w13 + (ci(1) / ci(3)) * w11 * w11 * w11;
}

// w35 reconstructed from the sixth relation with w33 eliminated:
// w17 - w11w15 + w11^2 w13 - w13^2.
template <class T>
T derived_omega35(const GrunskyTable<T>& t) {
  const T w11 = t.at(1, 1), w13 = t.at(1, 3), w15 = t.at(1, 5),
          w17 = t.at(1, 7);
  return w17 - w11 * w15 + w11 * w11 * w13 - w13 * w13;
}

// Slack of the truncated quadratic-form inequality for the two-term test
// vector (x1, x3):
//   (|x1|^2 + |x3|^2/3) - sum_{q in {1,3,5,7}} q |w_{1q} x1 + w_{3q} x3|^2.
// Nonnegative whenever the table comes from a univalent function (the
// dropped tail terms are nonnegative, so truncation only helps).

// Exact version: real rational table, exact complex weights.
inline Rational quadratic_form_slack(const GrunskyTable<Rational>& t,
                                     const TestVector<Complex<Rational>>& x) {
  Rational rhs = x.x1.norm_sq() + x.x3.norm_sq() / Rational(3);
  Rational lhs = 0;
  for (int q = 1; q <= 7; q += 2) {
    Complex<Rational> term = t.at(1, q) * x.x1 + t.at(3, q) * x.x3;
    lhs += Rational(q) * term.norm_sq();
  }
  return rhs - lhs;
}

// Floating version: complex table, complex weights.
inline double quadratic_form_slack(const GrunskyTable<std::complex<double>>& t,
                                   const TestVector<std::complex<double>>& x) {
  double rhs = std::norm(x.x1) + std::norm(x.x3) / 3.0;
  double lhs = 0.0;
  for (int q = 1; q <= 7; q += 2) {
    std::complex<double> term = t.at(1, q) * x.x1 + t.at(3, q) * x.x3;
    lhs += static_cast<double>(q) * std::norm(term);
  }
  return rhs - lhs;
}

// One rung of the modulus cascade |w_{1,2k-1}| <= sqrt((1 - S_{k-1}) / (2k-1))
// where S_{k-1} = sum_{j<k} (2j-1)|w_{1,2j-1}|^2.
struct CascadeEntry {
  double magnitude = 0.0;  // |w_{1,q}|
  double bound = 0.0;      // cascade right-hand side (0 when not evaluable)
  double margin = 0.0;     // bound - magnitude
  bool evaluable = true;   // radicand was nonnegative
  bool holds = false;      // magnitude <= bound (false when not evaluable)
};

struct CascadeReport {
  std::array<CascadeEntry, 4> entries;  // q = 1, 3, 5, 7
  bool all_hold = false;
};

// Cascade report for an exact table. Evaluability and the pass/fail
// booleans are decided by the exact partial sums
//   S_k = sum_{j<=k} (2j-1) w_{1,2j-1}^2
// (rung k is evaluable iff S_{k-1} <= 1, and holds iff additionally
// S_k <= 1 — squaring both sides of the printed inequality); the bound and
// margin fields are double renderings for display.
inline CascadeReport omega_cascade_bounds(const GrunskyTable<Rational>& t) {
  std::array<Rational, 4> w = {t.at(1, 1), t.at(1, 3), t.at(1, 5), t.at(1, 7)};
  CascadeReport rep;
  Rational partial = 0;  // S_{k-1} entering rung k
  bool prefix_ok = true;
  bool ok = true;
  for (int k = 0; k < 4; ++k) {
    int q = 2 * k + 1;
    CascadeEntry& e = rep.entries[k];
    e.magnitude = std::abs(to_double(w[k]));
    Rational radicand = (1 - partial) / q;
    partial += q * w[k] * w[k];
    if (!prefix_ok || radicand < 0) {
      e.evaluable = false;
      e.bound = 0.0;
      e.margin = -e.magnitude;
      e.holds = false;
    } else {
      e.bound = std::sqrt(to_double(radicand));
      e.margin = e.bound - e.magnitude;
      e.holds = partial <= 1;
    }
    prefix_ok = e.holds;
    ok = ok && e.holds;
  }
  rep.all_hold = ok;
  return rep;
}

// Cascade report for a floating complex table; comparisons allow `tol`
// slop for tables computed in double precision.
inline CascadeReport omega_cascade_bounds(
    const GrunskyTable<std::complex<double>>& t, double tol = 1e-12) {
  std::array<double, 4> mag = {std::abs(t.at(1, 1)), std::abs(t.at(1, 3)),
                               std::abs(t.at(1, 5)), std::abs(t.at(1, 7))};
  CascadeReport rep;
  double used = 0.0;  // running sum (2j-1)|w|^2 over previous rungs
  bool ok = true;
  for (int k = 0; k < 4; ++k) {
    double q = 2.0 * k + 1.0;
    CascadeEntry& e = rep.entries[k];
    e.magnitude = mag[k];
    double radicand = (1.0 - used) / q;
    used += q * mag[k] * mag[k];
    if (radicand < -tol) {
      e.evaluable = false;
      e.bound = 0.0;
      e.margin = -e.magnitude;
      e.holds = false;
    } else {
      e.bound = std::sqrt(std::max(radicand, 0.0));
      e.margin = e.bound - e.magnitude;
      e.holds = e.margin >= -tol;
    }
    ok = ok && e.holds;
  }
  rep.all_hold = ok;
  return rep;
}

// Deterministic test-vector sample for slack sweeps: unit vectors plus
// `count` pseudo-random complex pairs with entries in [-20, 20].
inline std::vector<TestVector<Complex<Rational>>> sample_test_vectors_exact(
    int count, std::uint64_t seed = 0x5eed5eedULL) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 20);
  std::vector<TestVector<Complex<Rational>>> out;
  auto q = [&] { return Rational(num(rng), den(rng)); };
  out.push_back({{Rational(1), Rational(0)}, {Rational(0), Rational(0)}});
  out.push_back({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}});
  out.push_back({{Rational(1), Rational(0)}, {Rational(1), Rational(0)}});
  for (int i = 0; i < count; ++i) {
    out.push_back({{q(), q()}, {q(), q()}});
  }
  return out;
}

inline std::vector<TestVector<std::complex<double>>>
sample_test_vectors_floating(int count, std::uint64_t seed = 0x5eed5eedULL) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  std::vector<TestVector<std::complex<double>>> out;
  out.push_back({{1.0, 0.0}, {0.0, 0.0}});
  out.push_back({{0.0, 0.0}, {1.0, 0.0}});
  out.push_back({{1.0, 0.0}, {1.0, 0.0}});
  for (int i = 0; i < count; ++i) {
    out.push_back({{u(rng), u(rng)}, {u(rng), u(rng)}});
  }
  return out;
}

}  // namespace schlicht
