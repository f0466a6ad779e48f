// The two bivariate majorant functions whose maxima over
//   D1 = { (x,y) : 0 <= x <= 1, 0 <= y <= sqrt((1-x^2)/3) }
// bound |H2(2)| and |H3(1)|:
//   F1(x,y) = (4/sqrt 5) x sqrt(1-x^2-3y^2) + x^4 + 4y^2
//   F2(x,y) = (2/sqrt 7 + 4xy + 2x^3) sqrt(1-x^2-3y^2)
//             + 4/5 - (4/5)x^2 - (12/5)y^2 + 3x^2y^2 + 2y^3
// with point evaluation, analytic derivatives, and interval extensions.
#pragma once

#include <array>
#include <functional>
#include <string>

#include "schlicht/errors.hpp"
#include "schlicht/interval.hpp"

namespace schlicht {

enum class Objective { F1, F2 };

struct DomainPoint {
  double x = 0.0;
  double y = 0.0;
};

struct Box {
  Interval x;
  Interval y;
};

// Radicand values above -kDomainTol are treated as on-boundary (the radical
// term evaluates to 0); below, the point is rejected as outside D1.
inline constexpr double kDomainTol = 1e-14;

// Upper edge of D1 at abscissa x: sqrt((1-x^2)/3).
double ellipse_y(double x);

// Closed-domain membership with kDomainTol slack.
bool in_domain(const DomainPoint& p);

double eval_f1(const DomainPoint& p);  // OutsideDomainError
double eval_f2(const DomainPoint& p);
double eval(Objective obj, const DomainPoint& p);

struct Gradient {
  double gx = 0.0;
  double gy = 0.0;
  double norm() const;
};

// Analytic first derivatives. Throws OutsideDomainError off D1 and
// BoundarySingularityError when the radicand is <= 0 (the derivative of the
// radical term blows up on the ellipse arc).
Gradient gradient(Objective obj, const DomainPoint& p);

struct Hessian {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;
};

// Analytic second derivatives; same domain requirements as gradient().
Hessian hessian(Objective obj, const DomainPoint& p);

// Encloses { F(p) : p in b intersect D1 }. The box is first clipped to the
// bounding rectangle [0,1] x [0, 1/sqrt 3]; EmptyDomainError when the clip is
// empty or the radicand is negative across the whole clipped box. The result
// may also cover values of the formula at infeasible points of the box
// (harmless for upper bounds over the feasible part).
Interval eval_interval(Objective obj, const Box& b);

struct GradientEnclosure {
  Interval gx;
  Interval gy;
};

// Interval gradient over a box whose radicand interval is strictly positive
// (pre-checked; throws BoundarySingularityError otherwise). Used for
// mean-value-form bounds.
GradientEnclosure gradient_interval(Objective obj, const Box& b);

// Interval enclosure of the radicand 1 - x^2 - 3y^2 over a box.
Interval radicand_interval(const Box& b);

// Closed-form restriction of an objective to one boundary piece of D1,
// parameterized by x (edges "y=0", "ellipse") or by y (edge "x=0").
struct EdgeRestriction {
  std::string name;                       // "y=0", "x=0", "ellipse"
  double a = 0.0;                         // parameter range [a, b]
  double b = 0.0;
  std::function<double(double)> value;
  std::function<double(double)> deriv;    // undefined at parameter values
                                          // where the radical is singular
};

std::array<EdgeRestriction, 3> boundary_restrictions(Objective obj);

}  // namespace schlicht
