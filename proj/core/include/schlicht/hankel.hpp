// Hankel determinants H2(2) = a2 a4 - a3^2 and
// H3(1) = a3(a2 a4 - a3^2) - a4(a4 - a2 a3) + a5(a3 - a2^2),
// from Taylor coefficients directly and via the reduced table formulas.
#pragma once

#include "schlicht/field.hpp"
#include "schlicht/grunsky.hpp"
#include "schlicht/grunsky_table.hpp"

namespace schlicht {

template <class T>
struct HankelValues {
  T h2{};
  T h3{};
};

template <class T>
T h2_from_coeffs(const CoefficientVector<T>& c) {
  return c.a2 * c.a4 - c.a3 * c.a3;
}

template <class T>
T h3_from_coeffs(const CoefficientVector<T>& c) {
  return c.a3 * (c.a2 * c.a4 - c.a3 * c.a3) -
         c.a4 * (c.a4 - c.a2 * c.a3) + c.a5 * (c.a3 - c.a2 * c.a2);
}

// H2(2) = 4 w11 w15 - w11^4 - 4 w13^2: the coefficient form with w33
// eliminated through the fifth identity.
template <class T>
T h2_from_grunsky(const GrunskyTable<T>& t) {
  auto ci = [](long long n) { return field_from_int<T>(n); };
  const T w11 = t.at(1, 1), w13 = t.at(1, 3), w15 = t.at(1, 5);
  return ci(4) * w11 * w15 - w11 * w11 * w11 * w11 - ci(4) * w13 * w13;
}

// H3(1) = 2 w17 (2 w13 - w11^2) + 4 w11 w13 w15 + 2 w11^3 w15
//         - 3 w11^2 w13^2 - 2 w13^3 - 4 w15^2,
// with w33 and w35 both eliminated.
template <class T>
T h3_from_grunsky(const GrunskyTable<T>& t) {
  auto ci = [](long long n) { return field_from_int<T>(n); };
  const T w11 = t.at(1, 1), w13 = t.at(1, 3), w15 = t.at(1, 5),
          w17 = t.at(1, 7);
  return ci(2) * w17 * (ci(2) * w13 - w11 * w11) +
         ci(4) * w11 * w13 * w15 + ci(2) * w11 * w11 * w11 * w15 -
         ci(3) * w11 * w11 * w13 * w13 - ci(2) * w13 * w13 * w13 -
         ci(4) * w15 * w15;
}

// a4 and a5 with the derived entries substituted:
//   a4 = 2 (w15 + 3 w11 w13 + 2 w11^3)
//   a5 = 2 w17 + 6 w11 w15 + 12 w11^2 w13 + 3 w13^2 + 5 w11^4.
template <class T>
struct ReducedCoefficients {
  T a4{};
  T a5{};
};

template <class T>
ReducedCoefficients<T> reduced_a4_a5(const GrunskyTable<T>& t) {
  auto ci = [](long long n) { return field_from_int<T>(n); };
  const T w11 = t.at(1, 1), w13 = t.at(1, 3), w15 = t.at(1, 5),
          w17 = t.at(1, 7);
  ReducedCoefficients<T> r;
  r.a4 = ci(2) * (w15 + ci(3) * w11 * w13 + ci(2) * w11 * w11 * w11);
  r.a5 = ci(2) * w17 + ci(6) * w11 * w15 + ci(12) * w11 * w11 * w13 +
         ci(3) * w13 * w13 + ci(5) * w11 * w11 * w11 * w11;
  return r;
}

// Published bounds this library reproduces and improves on.
struct ReferenceBounds {
  double h2_old = 11.0 / 3.0;             // previous |H2(2)| bound
  double h3_old = 3.2587962010756088;     // previous |H3(1)| bound (32+sqrt(285))/15
  double h2_new = 1.3614356236071319;     // certified |H2(2)| bound (this library)
  double h3_new = 1.6787106409662182;     // certified |H3(1)| bound (this library)
};

}  // namespace schlicht
