// Certified global maximization over D1 (interval branch-and-bound),
// damped-Newton critical-point refinement, boundary-edge analysis, and
// sign-certification sweeps.
#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schlicht/errors.hpp"
#include "schlicht/interval.hpp"
#include "schlicht/objective.hpp"
#include "schlicht/polynomial.hpp"

namespace schlicht {

// Two-sided enclosure of a global maximum: lower <= max <= upper with
// upper - lower <= tolerance. `upper` is a sound bound over the whole
// feasible region; `lower` is certified by an incumbent value attained at
// `witness` (the incumbent itself may sit anywhere inside the enclosure).
// Whenever the final upper bound is pinned at the incumbent itself (for
// example when the box queue drains), the enclosure collapses to that
// attained value exactly.
struct CertifiedBound {
  double lower = 0.0;
  double upper = 0.0;
  DomainPoint witness;
  double tolerance = 0.0;
  long long boxes_processed = 0;
};

struct BnbOptions {
  double tol = 1e-6;
  long long box_budget = 10000000;
  // 0: use the SCHLICHT_WORKERS environment variable, defaulting to 1.
  // Single-worker runs are deterministic; parallel runs keep the enclosure
  // contract but may return a different witness.
  int workers = 0;
};

CertifiedBound branch_and_bound_max(Objective obj, double tol);
CertifiedBound branch_and_bound_max(Objective obj, const BnbOptions& opts);

// Generic bound model for the branch-and-bound engine (also the test hook
// for synthetic objectives). upper() returning nullopt marks the box
// infeasible (pruned); sample() optionally returns a feasible point and a
// certified value attained there.
struct BoxBoundsModel {
  Box root;
  std::function<std::optional<double>(const Box&)> upper;
  std::function<std::optional<std::pair<DomainPoint, double>>(const Box&)>
      sample;
  std::vector<std::pair<DomainPoint, double>> initial_incumbents;
};

CertifiedBound branch_and_bound_max(const BoxBoundsModel& model,
                                    const BnbOptions& opts);

struct CriticalPoint {
  DomainPoint point;
  double value = 0.0;
  double gradient_norm = 0.0;
  bool converged = false;
};

// Damped Newton iteration on the gradient system from a strictly interior
// seed. Returns converged=false when stalled or out of iterations (last
// iterate reported); throws OutsideDomainError for an infeasible seed and
// LeftDomainError when every damped step exits the domain.
CriticalPoint refine_critical_point(Objective obj, const DomainPoint& seed);

// Distinct converged interior critical points found from a grid x grid seed
// sweep (points that drift to the y=0 edge are dropped; that edge is
// analyzed separately). Sorted by value descending.
std::vector<CriticalPoint> multi_start_critical_points(Objective obj,
                                                       int grid = 50);

enum class EdgeMethod {
  ClosedForm,
  RootIsolation,
  MonotoneCertificate,
  IntervalScan,
};

const char* edge_method_name(EdgeMethod m);

struct EdgeMaximum {
  std::string edge;  // "y=0", "x=0", "ellipse"
  double value = 0.0;
  DomainPoint location;
  EdgeMethod method = EdgeMethod::ClosedForm;
};

// Maximum of the objective over each of the three boundary pieces of D1.
std::array<EdgeMaximum, 3> boundary_scan(Objective obj);

// Generic certified edge scan (test hook): each edge carries an interval
// enclosure of its restriction, a point evaluator, and a map from the edge
// parameter to the domain point.
struct EdgeModel {
  std::string name;
  double a = 0.0;
  double b = 0.0;
  std::function<Interval(const Interval&)> enclosure;
  std::function<DomainPoint(double)> locate;
};

std::vector<EdgeMaximum> boundary_scan_generic(
    const std::vector<EdgeModel>& edges, double tol = 1e-9);

// Alternative interval form covering an endpoint neighborhood where the
// main form is unusable (one-sided expansion).
struct MonotonePatch {
  std::function<Interval(const Interval&)> form;
  double radius = 0.0;
};

struct MonotoneOptions {
  long long box_budget = 1 << 20;
  double min_width = 1e-13;
  std::optional<MonotonePatch> left;
  std::optional<MonotonePatch> right;
};

// Proves f < 0 everywhere on [a, b] by adaptive interval subdivision.
// Returns true on a complete covering proof; false when some subinterval is
// proved nonnegative (definitive counterexample); throws InconclusiveError
// when the budget or width floor is hit first.
bool certify_monotone_negative(
    const std::function<Interval(const Interval&)>& f, double a, double b,
    const MonotoneOptions& opts = {});

// Certified 1-D maximization by best-first interval bisection.
struct EdgeScanResult {
  double upper = 0.0;
  double lower = 0.0;
  double arg = 0.0;
  long long boxes = 0;
};

EdgeScanResult scan_edge_max(
    const std::function<Interval(const Interval&)>& enclosure, double a,
    double b, double tol, long long budget = 1 << 22);

// Stationarity polynomial of F1 restricted to the y=0 edge:
// 5x^8 - 5x^6 + 4x^4 - 4x^2 + 1 (ascending coefficients), obtained by
// squaring the radical in d/dx F1(x,0) = 0.
Polynomial f1_edge_polynomial();

// Stationarity polynomial of F2 restricted to the ellipse arc:
// 12x^4 - 11x^2 + 2.
Polynomial f2_ellipse_polynomial();

// Division-free interval forms of the unsquared stationarity conditions
// (zero exactly at genuine stationary points; squaring artifacts evaluate
// away from zero):
//   F1 y=0 edge:  (4/sqrt5)(1-2x^2) + 4x^3 sqrt(1-x^2)
//   F2 ellipse:   (1-2x^2) - (1/sqrt3) sqrt(1-x^2)
Interval f1_edge_stationarity(const Interval& x);
Interval f2_ellipse_stationarity(const Interval& x);

struct FilteredRoot {
  RootInterval interval;
  double location = 0.0;  // interval midpoint as a double
  bool genuine = false;   // unsquared stationarity form encloses zero
};

// Isolated roots of the edge stationarity polynomial on (0, 1), each tagged
// genuine or spurious by the unsquared condition. F1: the y=0 edge
// polynomial; F2: the ellipse polynomial.
std::vector<FilteredRoot> filtered_edge_roots(Objective obj);

}  // namespace schlicht
