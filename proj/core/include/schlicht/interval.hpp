// Closed floating-point intervals with outward-rounded arithmetic.
//
// Endpoints are plain doubles. Every operation returns an interval that
// contains the exact real result for all choices of reals in the operands.
// Rounding is handled by error-free transformations (2Sum / FMA residuals):
// an endpoint is nudged one ulp outward only when the double operation is
// provably inexact, so exact arithmetic stays exact ([1,2]+[3,4] == [4,6]).
#pragma once

#include <cmath>

#include "schlicht/errors.hpp"

namespace schlicht {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  constexpr Interval() = default;
  constexpr Interval(double point) : lo(point), hi(point) {}
  constexpr Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {}

  bool valid() const { return lo <= hi; }  // also false if any endpoint is NaN
  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
};

// Directed-rounding scalar kernel. Each function returns a value that is
// <= (down) or >= (up) the exact real result.
namespace rounding {
double add_down(double a, double b);
double add_up(double a, double b);
double sub_down(double a, double b);
double sub_up(double a, double b);
double mul_down(double a, double b);
double mul_up(double a, double b);
double sqrt_down(double x);  // pre: x >= 0
double sqrt_up(double x);    // pre: x >= 0
double recip_down(double x);  // pre: x > 0
double recip_up(double x);    // pre: x > 0
}  // namespace rounding

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);

// x^n for integer n >= 0, with the even-power image clamped at 0.
Interval pow_int(const Interval& a, int n);

// Square root of the nonnegative part of a. The lower endpoint is clamped to
// zero when a.lo < 0; throws EmptyDomainError when a.hi < 0.
Interval sqrt_clamped(const Interval& a);

// 1/sqrt(x) for an interval with a.lo > 0 (throws EmptyDomainError otherwise).
Interval rsqrt_pos(const Interval& a);

// Tight two-ulp enclosure of a value known only through its nearest double
// (for irrational constants computed at setup time).
Interval around(double x);

Interval hull(const Interval& a, const Interval& b);
// Intersection; throws EmptyDomainError when the intervals are disjoint.
Interval intersect(const Interval& a, const Interval& b);
bool disjoint(const Interval& a, const Interval& b);

}  // namespace schlicht
