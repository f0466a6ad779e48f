#include "schlicht/interval.hpp"

#include <algorithm>
#include <cfloat>
#include <limits>

namespace schlicht {
namespace rounding {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMax = DBL_MAX;
// Outside [kTiny, kGuard] the FMA/2Sum residual tricks can misreport
// exactness (residual underflow, intermediate overflow); nudge
// unconditionally there. Every quantity in this library is orders of
// magnitude inside the safe band.
constexpr double kTiny = DBL_MIN;
constexpr double kGuard = DBL_MAX / 4;

inline double down1(double x) { return std::nextafter(x, -kInf); }
inline double up1(double x) { return std::nextafter(x, kInf); }

// Exact rounding error of s = fl(a+b) (Knuth 2Sum; exact for all finite
// doubles as long as no intermediate overflows).
inline double two_sum_err(double a, double b, double s) {
  double bb = s - a;
  return (a - (s - bb)) + (b - bb);
}

inline bool add_danger(double s) {
  return !(std::fabs(s) < kGuard);  // catches +-inf and NaN too
}

}  // namespace

double add_down(double a, double b) {
  double s = a + b;
  if (add_danger(s)) return s == kInf ? kMax : down1(s);
  double e = two_sum_err(a, b, s);
  return e < 0 ? down1(s) : s;
}

double add_up(double a, double b) {
  double s = a + b;
  if (add_danger(s)) return s == -kInf ? -kMax : up1(s);
  double e = two_sum_err(a, b, s);
  return e > 0 ? up1(s) : s;
}

double sub_down(double a, double b) { return add_down(a, -b); }
double sub_up(double a, double b) { return add_up(a, -b); }

double mul_down(double a, double b) {
  double p = a * b;
  if (p == 0.0) {
    // fl(a*b) == 0 is exact iff one factor is zero; otherwise underflow.
    return (a == 0.0 || b == 0.0) ? 0.0 : down1(0.0);
  }
  double m = std::fabs(p);
  if (!(m >= kTiny) || m >= kGuard) return p == kInf ? kMax : down1(p);
  double e = std::fma(a, b, -p);
  return e < 0 ? down1(p) : p;
}

double mul_up(double a, double b) {
  double p = a * b;
  if (p == 0.0) {
    return (a == 0.0 || b == 0.0) ? 0.0 : up1(0.0);
  }
  double m = std::fabs(p);
  if (!(m >= kTiny) || m >= kGuard) return p == -kInf ? -kMax : up1(p);
  double e = std::fma(a, b, -p);
  return e > 0 ? up1(p) : p;
}

double sqrt_down(double x) {
  double r = std::sqrt(x);
  if (r == 0.0) return 0.0;
  if (!(x >= kTiny) || x >= kGuard) return down1(r);
  // sign of r*r - x decides which side of sqrt(x) the rounded r landed on
  double e = std::fma(r, r, -x);
  return e > 0 ? down1(r) : r;
}

double sqrt_up(double x) {
  double r = std::sqrt(x);
  if (r == 0.0) return 0.0;
  if (!(x >= kTiny) || x >= kGuard) return up1(r);
  double e = std::fma(r, r, -x);
  return e < 0 ? up1(r) : r;
}

double recip_down(double x) {
  double r = 1.0 / x;
  if (!(std::fabs(r) >= kTiny) || std::fabs(r) >= kGuard) return down1(r);
  double e = std::fma(r, x, -1.0);  // sign of r*x - 1, x > 0
  return e > 0 ? down1(r) : r;
}

double recip_up(double x) {
  double r = 1.0 / x;
  if (!(std::fabs(r) >= kTiny) || std::fabs(r) >= kGuard) return up1(r);
  double e = std::fma(r, x, -1.0);
  return e < 0 ? up1(r) : r;
}

}  // namespace rounding

namespace {
using rounding::add_down;
using rounding::add_up;
using rounding::mul_down;
using rounding::mul_up;

// n-th power of a nonnegative double, rounded down/up, by repeated
// directed multiplication (n is tiny here; no need for binary powering).
double pow_mag_down(double a, int n) {
  double r = a;
  for (int i = 1; i < n; ++i) r = mul_down(r, a);
  return r;
}
double pow_mag_up(double a, int n) {
  double r = a;
  for (int i = 1; i < n; ++i) r = mul_up(r, a);
  return r;
}
}  // namespace

Interval operator+(const Interval& a, const Interval& b) {
  return {add_down(a.lo, b.lo), add_up(a.hi, b.hi)};
}

Interval operator-(const Interval& a, const Interval& b) {
  return {rounding::sub_down(a.lo, b.hi), rounding::sub_up(a.hi, b.lo)};
}

Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  double lo = std::min(std::min(mul_down(a.lo, b.lo), mul_down(a.lo, b.hi)),
                       std::min(mul_down(a.hi, b.lo), mul_down(a.hi, b.hi)));
  double hi = std::max(std::max(mul_up(a.lo, b.lo), mul_up(a.lo, b.hi)),
                       std::max(mul_up(a.hi, b.lo), mul_up(a.hi, b.hi)));
  return {lo, hi};
}

Interval pow_int(const Interval& a, int n) {
  if (n < 0) throw Error("pow_int: negative exponent");
  if (n == 0) return {1.0, 1.0};
  if (n == 1) return a;
  if (n % 2 == 1) {
    // odd: monotone; route negative endpoints through the magnitude kernel
    auto odd_down = [&](double v) {
      return v >= 0 ? pow_mag_down(v, n) : -pow_mag_up(-v, n);
    };
    auto odd_up = [&](double v) {
      return v >= 0 ? pow_mag_up(v, n) : -pow_mag_down(-v, n);
    };
    return {odd_down(a.lo), odd_up(a.hi)};
  }
  // even: image of |a|^n
  if (a.lo >= 0) return {pow_mag_down(a.lo, n), pow_mag_up(a.hi, n)};
  if (a.hi <= 0) return {pow_mag_down(-a.hi, n), pow_mag_up(-a.lo, n)};
  return {0.0, pow_mag_up(std::max(-a.lo, a.hi), n)};
}

Interval sqrt_clamped(const Interval& a) {
  if (a.hi < 0) throw EmptyDomainError("sqrt_clamped: interval entirely negative");
  double lo = a.lo < 0 ? 0.0 : rounding::sqrt_down(a.lo);
  return {lo, rounding::sqrt_up(a.hi)};
}

Interval rsqrt_pos(const Interval& a) {
  if (!(a.lo > 0)) throw EmptyDomainError("rsqrt_pos: requires lo > 0");
  // 1/sqrt is decreasing: lower endpoint from a.hi, upper from a.lo
  return {rounding::recip_down(rounding::sqrt_up(a.hi)),
          rounding::recip_up(rounding::sqrt_down(a.lo))};
}

Interval around(double x) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  return {std::nextafter(x, -kInf), std::nextafter(x, kInf)};
}

Interval hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

bool disjoint(const Interval& a, const Interval& b) {
  return a.hi < b.lo || b.hi < a.lo;
}

Interval intersect(const Interval& a, const Interval& b) {
  if (disjoint(a, b)) throw EmptyDomainError("intersect: disjoint intervals");
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

}  // namespace schlicht
