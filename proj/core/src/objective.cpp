#include "schlicht/objective.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace schlicht {

namespace {

// Point-arithmetic constants.
const double kC1 = 4.0 / std::sqrt(5.0);            // radical weight of F1
const double kC2 = 2.0 / std::sqrt(7.0);            // constant term inside F2's A
const double kC3 = 2.0 / (3.0 * std::sqrt(3.0));    // F2 ellipse restriction weight

// Interval enclosures of the same constants (irrational, so two-ulp around
// the nearest double of an exactly representable radicand).
const Interval& ic1() {
  static const Interval v = sqrt_clamped(around(16.0 / 5.0));   // 4/sqrt5
  return v;
}
const Interval& ic12() {
  static const Interval v = sqrt_clamped(around(144.0 / 5.0));  // 12/sqrt5
  return v;
}
const Interval& ic2() {
  static const Interval v = sqrt_clamped(around(4.0 / 7.0));    // 2/sqrt7
  return v;
}
const Interval& i45() { static const Interval v = around(4.0 / 5.0); return v; }
const Interval& i85() { static const Interval v = around(8.0 / 5.0); return v; }
const Interval& i125() { static const Interval v = around(12.0 / 5.0); return v; }
const Interval& i245() { static const Interval v = around(24.0 / 5.0); return v; }
const Interval& iInvSqrt3() {
  static const Interval v = sqrt_clamped(around(1.0 / 3.0));
  return v;
}

double radicand(const DomainPoint& p) {
  return 1.0 - p.x * p.x - 3.0 * p.y * p.y;
}

void require_in_domain(const DomainPoint& p) {
  if (!(p.x >= -kDomainTol) || !(p.x <= 1.0 + kDomainTol) ||
      !(p.y >= -kDomainTol) || !(radicand(p) >= -kDomainTol)) {
    throw OutsideDomainError("point (" + std::to_string(p.x) + ", " +
                             std::to_string(p.y) + ") outside D1");
  }
}

}  // namespace

double ellipse_y(double x) {
  return std::sqrt(std::max(0.0, (1.0 - x * x) / 3.0));
}

bool in_domain(const DomainPoint& p) {
  return p.x >= -kDomainTol && p.x <= 1.0 + kDomainTol && p.y >= -kDomainTol &&
         radicand(p) >= -kDomainTol;
}

double eval_f1(const DomainPoint& p) {
  require_in_domain(p);
  double s = std::sqrt(std::max(0.0, radicand(p)));
  double x2 = p.x * p.x;
  return kC1 * p.x * s + x2 * x2 + 4.0 * p.y * p.y;
}

double eval_f2(const DomainPoint& p) {
  require_in_domain(p);
  double s = std::sqrt(std::max(0.0, radicand(p)));
  double x = p.x, y = p.y;
  double a = kC2 + 4.0 * x * y + 2.0 * x * x * x;
  return a * s + 4.0 / 5.0 - (4.0 / 5.0) * x * x - (12.0 / 5.0) * y * y +
         3.0 * x * x * y * y + 2.0 * y * y * y;
}

double eval(Objective obj, const DomainPoint& p) {
  return obj == Objective::F1 ? eval_f1(p) : eval_f2(p);
}

double Gradient::norm() const { return std::hypot(gx, gy); }

Gradient gradient(Objective obj, const DomainPoint& p) {
  require_in_domain(p);
  double r = radicand(p);
  if (r <= 0.0) {
    throw BoundarySingularityError(
        "gradient of the radical term is singular where the radicand is <= 0");
  }
  double s = std::sqrt(r);
  double x = p.x, y = p.y;
  Gradient g;
  if (obj == Objective::F1) {
    g.gx = kC1 * (r - x * x) / s + 4.0 * x * x * x;
    g.gy = -3.0 * kC1 * x * y / s + 8.0 * y;
  } else {
    double a = kC2 + 4.0 * x * y + 2.0 * x * x * x;
    g.gx = (4.0 * y + 6.0 * x * x) * s - a * x / s - (8.0 / 5.0) * x +
           6.0 * x * y * y;
    g.gy = 4.0 * x * s - 3.0 * a * y / s - (24.0 / 5.0) * y + 6.0 * x * x * y +
           6.0 * y * y;
  }
  return g;
}

Hessian hessian(Objective obj, const DomainPoint& p) {
  require_in_domain(p);
  double r = radicand(p);
  if (r <= 0.0) {
    throw BoundarySingularityError(
        "second derivatives are singular where the radicand is <= 0");
  }
  double s = std::sqrt(r);
  double s3 = s * r;  // s^3
  double x = p.x, y = p.y;
  Hessian h;
  if (obj == Objective::F1) {
    h.xx = -kC1 * x * (3.0 * r + x * x) / s3 + 12.0 * x * x;
    h.xy = -3.0 * kC1 * y * (r + x * x) / s3;
    h.yy = -3.0 * kC1 * x * (r + 3.0 * y * y) / s3 + 8.0;
  } else {
    double a = kC2 + 4.0 * x * y + 2.0 * x * x * x;
    double ax = 4.0 * y + 6.0 * x * x;
    double ay = 4.0 * x;
    double sx = -x / s;
    double sy = -3.0 * y / s;
    double sxx = -(r + x * x) / s3;
    double sxy = -3.0 * x * y / s3;
    double syy = -3.0 * (r + 3.0 * y * y) / s3;
    h.xx = 12.0 * x * s + 2.0 * ax * sx + a * sxx + (-8.0 / 5.0 + 6.0 * y * y);
    h.xy = 4.0 * s + ax * sy + ay * sx + a * sxy + 12.0 * x * y;
    h.yy = 2.0 * ay * sy + a * syy + (-24.0 / 5.0 + 6.0 * x * x + 12.0 * y);
  }
  return h;
}

Interval radicand_interval(const Box& b) {
  return Interval(1.0) - pow_int(b.x, 2) - Interval(3.0) * pow_int(b.y, 2);
}

namespace {

Box clip_to_rectangle(const Box& b) {
  Box c;
  c.x = intersect(b.x, Interval(0.0, 1.0));
  c.y = intersect(b.y, Interval(0.0, iInvSqrt3().hi));
  return c;
}

}  // namespace

Interval eval_interval(Objective obj, const Box& b) {
  Box c = clip_to_rectangle(b);  // EmptyDomainError when disjoint
  Interval r = radicand_interval(c);
  if (r.hi < 0.0) {
    throw EmptyDomainError("box lies entirely outside the ellipse arc of D1");
  }
  Interval s = sqrt_clamped(r);
  Interval x2 = pow_int(c.x, 2);
  Interval y2 = pow_int(c.y, 2);
  if (obj == Objective::F1) {
    return ic1() * c.x * s + pow_int(c.x, 4) + Interval(4.0) * y2;
  }
  Interval a = ic2() + Interval(4.0) * c.x * c.y + Interval(2.0) * pow_int(c.x, 3);
  Interval q = i45() - i45() * x2 - i125() * y2 +
               Interval(3.0) * x2 * y2 + Interval(2.0) * pow_int(c.y, 3);
  return a * s + q;
}

GradientEnclosure gradient_interval(Objective obj, const Box& b) {
  Interval r = radicand_interval(b);
  if (!(r.lo > 0.0)) {
    throw BoundarySingularityError(
        "interval gradient requires a strictly positive radicand over the box");
  }
  Interval s = sqrt_clamped(r);
  Interval inv_s = rsqrt_pos(r);
  GradientEnclosure g;
  if (obj == Objective::F1) {
    g.gx = ic1() * (r - pow_int(b.x, 2)) * inv_s + Interval(4.0) * pow_int(b.x, 3);
    g.gy = -(ic12() * b.x * b.y * inv_s) + Interval(8.0) * b.y;
  } else {
    Interval a = ic2() + Interval(4.0) * b.x * b.y + Interval(2.0) * pow_int(b.x, 3);
    g.gx = (Interval(4.0) * b.y + Interval(6.0) * pow_int(b.x, 2)) * s -
           a * b.x * inv_s - i85() * b.x + Interval(6.0) * b.x * pow_int(b.y, 2);
    g.gy = Interval(4.0) * b.x * s - Interval(3.0) * a * b.y * inv_s -
           i245() * b.y + Interval(6.0) * pow_int(b.x, 2) * b.y +
           Interval(6.0) * pow_int(b.y, 2);
  }
  return g;
}

std::array<EdgeRestriction, 3> boundary_restrictions(Objective obj) {
  std::array<EdgeRestriction, 3> edges;
  double ymax = 1.0 / std::sqrt(3.0);
  if (obj == Objective::F1) {
    edges[0] = {"y=0", 0.0, 1.0,
                [](double x) {
                  return kC1 * x * std::sqrt(std::max(0.0, 1.0 - x * x)) +
                         x * x * x * x;
                },
                [](double x) {
                  double s = std::sqrt(1.0 - x * x);
                  return kC1 * (1.0 - 2.0 * x * x) / s + 4.0 * x * x * x;
                }};
    edges[1] = {"x=0", 0.0, ymax, [](double y) { return 4.0 * y * y; },
                [](double y) { return 8.0 * y; }};
    edges[2] = {"ellipse", 0.0, 1.0,
                [](double x) {
                  double x2 = x * x;
                  return (3.0 * x2 * x2 - 4.0 * x2 + 4.0) / 3.0;
                },
                [](double x) { return 4.0 * x * x * x - (8.0 / 3.0) * x; }};
  } else {
    edges[0] = {"y=0", 0.0, 1.0,
                [](double x) {
                  double s = std::sqrt(std::max(0.0, 1.0 - x * x));
                  return (kC2 + 2.0 * x * x * x) * s + 4.0 / 5.0 -
                         (4.0 / 5.0) * x * x;
                },
                [](double x) {
                  double s = std::sqrt(1.0 - x * x);
                  return 6.0 * x * x * s - (kC2 + 2.0 * x * x * x) * x / s -
                         (8.0 / 5.0) * x;
                }};
    edges[1] = {"x=0", 0.0, ymax,
                [](double y) {
                  double s = std::sqrt(std::max(0.0, 1.0 - 3.0 * y * y));
                  return kC2 * s + 4.0 / 5.0 - (12.0 / 5.0) * y * y +
                         2.0 * y * y * y;
                },
                [](double y) {
                  double s = std::sqrt(1.0 - 3.0 * y * y);
                  return -3.0 * kC2 * y / s - (24.0 / 5.0) * y + 6.0 * y * y;
                }};
    edges[2] = {"ellipse", 0.0, 1.0,
                [](double x) {
                  double u = std::max(0.0, 1.0 - x * x);
                  return kC3 * u * std::sqrt(u) + x * x * u;
                },
                [](double x) {
                  double u = 1.0 - x * x;
                  return -3.0 * kC3 * x * std::sqrt(u) + 2.0 * x -
                         4.0 * x * x * x;
                }};
  }
  return edges;
}

}  // namespace schlicht
