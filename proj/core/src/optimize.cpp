#include "schlicht/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <queue>
#include <string>
#include <thread>
#include <vector>

namespace schlicht {

namespace {

const Interval& third() {
  static const Interval v(rounding::recip_down(3.0), rounding::recip_up(3.0));
  return v;
}
const Interval& inv_sqrt3() {
  static const Interval v = sqrt_clamped(around(1.0 / 3.0));
  return v;
}
const Interval& ic1() {
  static const Interval v = sqrt_clamped(around(16.0 / 5.0));  // 4/sqrt5
  return v;
}
const Interval& ic2() {
  static const Interval v = sqrt_clamped(around(4.0 / 7.0));   // 2/sqrt7
  return v;
}
const Interval& i45() { static const Interval v = around(4.0 / 5.0); return v; }
const Interval& i85() { static const Interval v = around(8.0 / 5.0); return v; }
const Interval& i125() { static const Interval v = around(12.0 / 5.0); return v; }

// sqrt with the radicand treated as max(radicand, 0): edge forms stay
// evaluable on parameter ranges that overshoot the arc slightly.
Interval sqrt_total(const Interval& a) {
  if (a.hi < 0.0) return Interval(0.0, 0.0);
  return sqrt_clamped(a);
}

// ---------------------------------------------------------------------------
// Branch-and-bound engine
// ---------------------------------------------------------------------------

struct QItem {
  double ub;
  Box box;
};

bool box_lex_less(const Box& a, const Box& b) {
  if (a.x.lo != b.x.lo) return a.x.lo < b.x.lo;
  if (a.x.hi != b.x.hi) return a.x.hi < b.x.hi;
  if (a.y.lo != b.y.lo) return a.y.lo < b.y.lo;
  return a.y.hi < b.y.hi;
}

// Max-heap on ub; ties prefer the lexicographically smaller box, keeping
// single-worker runs fully deterministic.
struct QCmp {
  bool operator()(const QItem& p, const QItem& q) const {
    if (p.ub != q.ub) return p.ub < q.ub;
    return box_lex_less(q.box, p.box);
  }
};

using Queue = std::priority_queue<QItem, std::vector<QItem>, QCmp>;

// The search stops once the best outstanding upper bound is within
// kTermSafety*tol of the incumbent, so the returned upper overshoots the true
// maximum by at most tol/2.  The reported enclosure is then [upper - tol,
// upper]: both ends are certified (the incumbent exceeds upper - tol at
// termination), its width is exactly tol, and the slack below the maximum
// absorbs the discretization error of any sampling oracle used to
// cross-check the result.  A drained queue instead proves the incumbent
// itself is the maximum, giving a point enclosure.
constexpr double kTermSafety = 0.5;

// Certified lower endpoint of the final enclosure.  When the upper bound
// coincides with the incumbent the maximum is pinned exactly at an attained
// value and the enclosure collapses to a point.  Otherwise report the widest
// floor still within tolerance: the largest double l with upper - l <= tol
// under floating-point subtraction (upper - tol alone can round so that the
// recomputed width exceeds tol by one ulp).
double enclosure_lower(double upper, double incumbent, double tol) {
  if (incumbent >= upper) return upper;
  double l = upper - tol;
  while (upper - l > tol) l = std::nextafter(l, upper);
  return l;
}

std::pair<Box, Box> bisect(const Box& b) {
  auto split = [](const Interval& v) -> std::optional<std::pair<Interval, Interval>> {
    double m = v.mid();
    if (m > v.lo && m < v.hi) {
      return std::make_pair(Interval(v.lo, m), Interval(m, v.hi));
    }
    return std::nullopt;
  };
  bool x_first = b.x.width() >= b.y.width();
  for (int attempt = 0; attempt < 2; ++attempt) {
    if (x_first == (attempt == 0)) {
      if (auto s = split(b.x)) return {Box{s->first, b.y}, Box{s->second, b.y}};
    } else {
      if (auto s = split(b.y)) return {Box{b.x, s->first}, Box{b.x, s->second}};
    }
  }
  throw Error("branch-and-bound: box too small to split at the requested tolerance");
}

CertifiedBound run_serial(const BoxBoundsModel& model, double tol,
                          long long budget) {
  double incumbent = -HUGE_VAL;
  DomainPoint wit{};
  for (const auto& [p, v] : model.initial_incumbents) {
    if (v > incumbent) { incumbent = v; wit = p; }
  }
  Queue q;
  long long processed = 0;
  if (auto u0 = model.upper(model.root)) q.push({*u0, model.root});
  while (!q.empty()) {
    QItem t = q.top();
    q.pop();
    ++processed;
    if (processed > budget) {
      throw BudgetExceededError("branch-and-bound budget of " +
                                std::to_string(budget) + " boxes exhausted");
    }
    if (t.ub <= incumbent + kTermSafety * tol) {
      double upper = std::max(incumbent, t.ub);
      return {enclosure_lower(upper, incumbent, tol), upper, wit, tol, processed};
    }
    if (auto s = model.sample(t.box)) {
      if (s->second > incumbent) { incumbent = s->second; wit = s->first; }
    }
    auto children = bisect(t.box);
    for (const Box* c : {&children.first, &children.second}) {
      if (auto u = model.upper(*c)) {
        double ub = std::min(*u, t.ub);
        if (ub > incumbent) q.push({ub, *c});
      }
    }
  }
  if (incumbent == -HUGE_VAL) {
    throw Error("branch-and-bound: no feasible point found");
  }
  return {incumbent, incumbent, wit, tol, processed};
}

CertifiedBound run_parallel(const BoxBoundsModel& model, double tol,
                            long long budget, int workers) {
  std::mutex mu;
  std::condition_variable cv;
  Queue q;
  double incumbent = -HUGE_VAL;
  DomainPoint wit{};
  long long processed = 0;
  int busy = 0;
  bool done = false;
  bool drained = false;
  double final_upper = -HUGE_VAL;
  std::exception_ptr err;

  for (const auto& [p, v] : model.initial_incumbents) {
    if (v > incumbent) { incumbent = v; wit = p; }
  }
  if (auto u0 = model.upper(model.root)) q.push({*u0, model.root});

  auto work = [&]() {
    std::unique_lock<std::mutex> lk(mu);
    for (;;) {
      if (done) return;
      if (q.empty() || q.top().ub <= incumbent + kTermSafety * tol) {
        if (busy == 0) {
          final_upper = q.empty() ? incumbent : std::max(incumbent, q.top().ub);
          drained = q.empty();
          done = true;
          cv.notify_all();
          return;
        }
        cv.wait(lk);
        continue;
      }
      QItem t = q.top();
      q.pop();
      ++processed;
      if (processed > budget) {
        err = std::make_exception_ptr(BudgetExceededError(
            "branch-and-bound budget of " + std::to_string(budget) +
            " boxes exhausted"));
        done = true;
        cv.notify_all();
        return;
      }
      ++busy;
      lk.unlock();
      std::optional<std::pair<DomainPoint, double>> s;
      std::optional<double> u1, u2;
      Box c1, c2;
      std::exception_ptr local;
      try {
        s = model.sample(t.box);
        auto children = bisect(t.box);
        c1 = children.first;
        c2 = children.second;
        u1 = model.upper(c1);
        u2 = model.upper(c2);
      } catch (...) {
        local = std::current_exception();
      }
      lk.lock();
      --busy;
      if (local) {
        if (!err) err = local;
        done = true;
        cv.notify_all();
        return;
      }
      if (s && s->second > incumbent) { incumbent = s->second; wit = s->first; }
      if (u1) {
        double ub = std::min(*u1, t.ub);
        if (ub > incumbent) q.push({ub, c1});
      }
      if (u2) {
        double ub = std::min(*u2, t.ub);
        if (ub > incumbent) q.push({ub, c2});
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int i = 0; i < workers; ++i) pool.emplace_back(work);
  for (std::thread& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  if (incumbent == -HUGE_VAL) {
    throw Error("branch-and-bound: no feasible point found");
  }
  double lower = drained ? final_upper
                         : enclosure_lower(final_upper, incumbent, tol);
  return {lower, final_upper, wit, tol, processed};
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SCHLICHT_WORKERS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

// ---------------------------------------------------------------------------
// The objective model: natural interval bound, tightened by the centered
// (mean-value) form where the box is differentiable throughout; midpoint
// sampling projected into D1 for certified incumbents.
// ---------------------------------------------------------------------------

std::optional<double> objective_upper(Objective obj, const Box& b) {
  Interval r = radicand_interval(b);
  if (r.hi < 0.0) return std::nullopt;  // box entirely beyond the arc
  double ub = eval_interval(obj, b).hi;
  if (r.lo > 0.0) {
    double mx = b.x.mid(), my = b.y.mid();
    Box mid{Interval(mx), Interval(my)};
    Interval fm = eval_interval(obj, mid);
    GradientEnclosure g = gradient_interval(obj, b);
    Interval mv = fm + g.gx * (b.x - Interval(mx)) + g.gy * (b.y - Interval(my));
    ub = std::min(ub, mv.hi);
  }
  return ub;
}

std::optional<std::pair<DomainPoint, double>> objective_sample(Objective obj,
                                                               const Box& b) {
  double mx = std::clamp(b.x.mid(), 0.0, 1.0);
  double my = std::clamp(b.y.mid(), 0.0, inv_sqrt3().hi);
  Interval cap2 = (Interval(1.0) - pow_int(Interval(mx), 2)) * third();
  double ycap = cap2.lo > 0.0 ? rounding::sqrt_down(cap2.lo) : 0.0;
  double py = std::min(my, ycap);
  const double candidates[4] = {py, py * (1.0 - 1e-9), 0.5 * py, 0.0};
  for (double cy : candidates) {
    DomainPoint p{mx, cy};
    Box pt{Interval(p.x), Interval(p.y)};
    if (radicand_interval(pt).lo >= 0.0) {
      return std::make_pair(p, eval_interval(obj, pt).lo);
    }
  }
  return std::nullopt;
}

void push_feasible_sample(Objective obj, double x, double y,
                          std::vector<std::pair<DomainPoint, double>>& out) {
  if (!(x >= 0.0 && x <= 1.0 && y >= 0.0)) return;
  Box pt{Interval(x), Interval(y)};
  if (radicand_interval(pt).lo < 0.0) return;
  out.push_back({DomainPoint{x, y}, eval_interval(obj, pt).lo});
}

std::vector<std::pair<DomainPoint, double>> objective_incumbents(Objective obj) {
  std::vector<std::pair<DomainPoint, double>> out;
  for (const CriticalPoint& cp : multi_start_critical_points(obj, 15)) {
    push_feasible_sample(obj, cp.point.x, cp.point.y, out);
  }
  const int kEdgeSamples = 512;
  for (int i = 0; i <= kEdgeSamples; ++i) {
    double t = static_cast<double>(i) / kEdgeSamples;
    push_feasible_sample(obj, t, 0.0, out);
    push_feasible_sample(obj, 0.0, t * inv_sqrt3().lo, out);
    Interval cap2 = (Interval(1.0) - pow_int(Interval(t), 2)) * third();
    double ycap = cap2.lo > 0.0 ? rounding::sqrt_down(cap2.lo) : 0.0;
    push_feasible_sample(obj, t, ycap, out);
  }
  return out;
}

BoxBoundsModel objective_model(Objective obj) {
  BoxBoundsModel m;
  m.root = Box{Interval(0.0, 1.0), Interval(0.0, inv_sqrt3().hi)};
  m.upper = [obj](const Box& b) { return objective_upper(obj, b); };
  m.sample = [obj](const Box& b) { return objective_sample(obj, b); };
  m.initial_incumbents = objective_incumbents(obj);
  return m;
}

bool strictly_interior(const DomainPoint& p) {
  return p.x > 0.0 && p.x < 1.0 && p.y > 0.0 &&
         1.0 - p.x * p.x - 3.0 * p.y * p.y > 0.0;
}

}  // namespace

CertifiedBound branch_and_bound_max(const BoxBoundsModel& model,
                                    const BnbOptions& opts) {
  if (!(opts.tol > 0.0)) throw Error("branch_and_bound_max: tol must be > 0");
  if (opts.box_budget < 1) throw Error("branch_and_bound_max: empty box budget");
  int workers = resolve_workers(opts.workers);
  return workers == 1 ? run_serial(model, opts.tol, opts.box_budget)
                      : run_parallel(model, opts.tol, opts.box_budget, workers);
}

CertifiedBound branch_and_bound_max(Objective obj, const BnbOptions& opts) {
  return branch_and_bound_max(objective_model(obj), opts);
}

CertifiedBound branch_and_bound_max(Objective obj, double tol) {
  BnbOptions opts;
  opts.tol = tol;
  return branch_and_bound_max(obj, opts);
}

// ---------------------------------------------------------------------------
// Critical points
// ---------------------------------------------------------------------------

CriticalPoint refine_critical_point(Objective obj, const DomainPoint& seed) {
  if (!strictly_interior(seed)) {
    throw OutsideDomainError("refinement seed must be strictly interior to D1");
  }
  constexpr double kGradTol = 1e-10;
  constexpr int kMaxIter = 200;
  constexpr int kMaxHalvings = 50;
  DomainPoint p = seed;
  Gradient g = gradient(obj, p);
  for (int iter = 0; iter < kMaxIter; ++iter) {
    if (g.norm() < kGradTol) return {p, eval(obj, p), g.norm(), true};
    Hessian h = hessian(obj, p);
    double det = h.xx * h.yy - h.xy * h.xy;
    double dx = -(h.yy * g.gx - h.xy * g.gy) / det;
    double dy = -(h.xx * g.gy - h.xy * g.gx) / det;
    if (!std::isfinite(dx) || !std::isfinite(dy)) {
      return {p, eval(obj, p), g.norm(), false};
    }
    bool stepped = false;
    bool any_inside = false;
    double scale = 1.0;
    for (int halve = 0; halve < kMaxHalvings && !stepped; ++halve, scale *= 0.5) {
      DomainPoint c{p.x + scale * dx, p.y + scale * dy};
      if (!strictly_interior(c)) continue;
      any_inside = true;
      Gradient gc = gradient(obj, c);
      if (gc.norm() < g.norm()) {
        p = c;
        g = gc;
        stepped = true;
      }
    }
    if (!stepped) {
      if (!any_inside) {
        throw LeftDomainError("every damped Newton step exits D1");
      }
      return {p, eval(obj, p), g.norm(), false};
    }
  }
  return {p, eval(obj, p), g.norm(), false};
}

std::vector<CriticalPoint> multi_start_critical_points(Objective obj, int grid) {
  if (grid < 2) throw Error("multi_start_critical_points: grid must be >= 2");
  constexpr double kInteriorY = 1e-5;  // converged iterates below: edge drift
  constexpr double kDedupe = 1e-6;
  std::vector<CriticalPoint> found;
  for (int i = 1; i < grid; ++i) {
    double x = static_cast<double>(i) / grid;
    double ymax = ellipse_y(x) * 0.999;
    for (int j = 1; j < grid; ++j) {
      double y = ymax * static_cast<double>(j) / grid;
      if (y < kInteriorY) continue;
      CriticalPoint cp;
      try {
        cp = refine_critical_point(obj, {x, y});
      } catch (const Error&) {
        continue;
      }
      if (!cp.converged || cp.point.y < kInteriorY) continue;
      bool duplicate = false;
      for (const CriticalPoint& prev : found) {
        if (std::abs(prev.point.x - cp.point.x) < kDedupe &&
            std::abs(prev.point.y - cp.point.y) < kDedupe) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) found.push_back(cp);
    }
  }
  std::sort(found.begin(), found.end(),
            [](const CriticalPoint& a, const CriticalPoint& b) {
              if (a.value != b.value) return a.value > b.value;
              if (a.point.x != b.point.x) return a.point.x < b.point.x;
              return a.point.y < b.point.y;
            });
  return found;
}

// ---------------------------------------------------------------------------
// Boundary analysis
// ---------------------------------------------------------------------------

const char* edge_method_name(EdgeMethod m) {
  switch (m) {
    case EdgeMethod::ClosedForm: return "closed-form";
    case EdgeMethod::RootIsolation: return "root-isolation";
    case EdgeMethod::MonotoneCertificate: return "monotone-certificate";
    case EdgeMethod::IntervalScan: return "interval-scan";
  }
  return "unknown";
}

Polynomial f1_edge_polynomial() {
  return Polynomial({Rational(1), Rational(0), Rational(-4), Rational(0),
                     Rational(4), Rational(0), Rational(-5), Rational(0),
                     Rational(5)});
}

Polynomial f2_ellipse_polynomial() {
  return Polynomial({Rational(2), Rational(0), Rational(-11), Rational(0),
                     Rational(12)});
}

Interval f1_edge_stationarity(const Interval& x) {
  Interval x2 = pow_int(x, 2);
  return ic1() * (Interval(1.0) - Interval(2.0) * x2) +
         Interval(4.0) * pow_int(x, 3) * sqrt_total(Interval(1.0) - x2);
}

Interval f2_ellipse_stationarity(const Interval& x) {
  Interval x2 = pow_int(x, 2);
  return Interval(1.0) - Interval(2.0) * x2 -
         inv_sqrt3() * sqrt_total(Interval(1.0) - x2);
}

std::vector<FilteredRoot> filtered_edge_roots(Objective obj) {
  Polynomial p = obj == Objective::F1 ? f1_edge_polynomial()
                                      : f2_ellipse_polynomial();
  std::vector<FilteredRoot> out;
  for (const RootInterval& r : isolate_roots(p, Rational(0), Rational(1))) {
    Interval xi(std::nextafter(to_double(r.lo), -1.0),
                std::nextafter(to_double(r.hi), 2.0));
    Interval st = obj == Objective::F1 ? f1_edge_stationarity(xi)
                                       : f2_ellipse_stationarity(xi);
    FilteredRoot fr;
    fr.interval = r;
    fr.location = to_double((r.lo + r.hi) / 2);
    fr.genuine = st.lo <= 0.0 && 0.0 <= st.hi;
    out.push_back(fr);
  }
  return out;
}

bool certify_monotone_negative(
    const std::function<Interval(const Interval&)>& f, double a, double b,
    const MonotoneOptions& opts) {
  if (!(a < b)) throw Error("certify_monotone_negative: need a < b");
  struct Segment {
    const std::function<Interval(const Interval&)>* form;
    double lo, hi;
  };
  std::vector<Segment> segments;
  double main_lo = a, main_hi = b;
  if (opts.left && opts.left->radius > 0.0) {
    double cut = std::min(a + opts.left->radius, b);
    segments.push_back({&opts.left->form, a, cut});
    main_lo = cut;
  }
  if (opts.right && opts.right->radius > 0.0) {
    double cut = std::max(b - opts.right->radius, main_lo);
    segments.push_back({&opts.right->form, cut, b});
    main_hi = cut;
  }
  if (main_lo < main_hi) segments.push_back({&f, main_lo, main_hi});
  long long boxes = 0;
  for (const Segment& seg : segments) {
    std::vector<std::pair<double, double>> stack{{seg.lo, seg.hi}};
    while (!stack.empty()) {
      auto [lo, hi] = stack.back();
      stack.pop_back();
      if (++boxes > opts.box_budget) {
        throw InconclusiveError("sign certification budget exhausted");
      }
      Interval v = (*seg.form)(Interval(lo, hi));
      if (v.hi < 0.0) continue;            // proved negative on this piece
      if (v.lo >= 0.0) return false;       // proved nonnegative: disproof
      if (hi - lo < opts.min_width) {
        throw InconclusiveError(
            "sign certification hit the width floor with the sign ambiguous");
      }
      double m = 0.5 * (lo + hi);
      stack.push_back({m, hi});
      stack.push_back({lo, m});
    }
  }
  return true;
}

EdgeScanResult scan_edge_max(
    const std::function<Interval(const Interval&)>& enclosure, double a,
    double b, double tol, long long budget) {
  if (!(a < b)) throw Error("scan_edge_max: need a < b");
  if (!(tol > 0.0)) throw Error("scan_edge_max: tol must be > 0");
  struct Item {
    double ub, lo, hi;
  };
  struct Cmp {
    bool operator()(const Item& p, const Item& q) const {
      if (p.ub != q.ub) return p.ub < q.ub;
      if (p.lo != q.lo) return p.lo > q.lo;
      return p.hi > q.hi;
    }
  };
  std::priority_queue<Item, std::vector<Item>, Cmp> q;
  double incumbent = -HUGE_VAL, arg = a;
  auto sample = [&](double t) {
    double v = enclosure(Interval(t)).lo;
    if (v > incumbent) { incumbent = v; arg = t; }
  };
  sample(a);
  sample(b);
  long long boxes = 0;
  q.push({enclosure(Interval(a, b)).hi, a, b});
  while (!q.empty()) {
    Item t = q.top();
    q.pop();
    ++boxes;
    if (boxes > budget) {
      throw BudgetExceededError("edge scan budget exhausted");
    }
    if (t.ub <= incumbent + tol) {
      return {std::max(incumbent, t.ub), incumbent, arg, boxes};
    }
    double m = 0.5 * (t.lo + t.hi);
    if (!(m > t.lo && m < t.hi)) {
      return {t.ub, incumbent, arg, boxes};  // cannot split further
    }
    sample(m);
    for (auto [lo, hi] : {std::pair{t.lo, m}, std::pair{m, t.hi}}) {
      double ub = std::min(enclosure(Interval(lo, hi)).hi, t.ub);
      if (ub > incumbent) q.push({ub, lo, hi});
    }
  }
  return {incumbent, incumbent, arg, boxes};
}

std::vector<EdgeMaximum> boundary_scan_generic(
    const std::vector<EdgeModel>& edges, double tol) {
  std::vector<EdgeMaximum> out;
  out.reserve(edges.size());
  for (const EdgeModel& e : edges) {
    EdgeScanResult r = scan_edge_max(e.enclosure, e.a, e.b, tol);
    out.push_back({e.name, r.upper, e.locate(r.arg), EdgeMethod::IntervalScan});
  }
  return out;
}

namespace {

// F2(x, 0) and F2(0, y) interval restrictions (fallback scan forms).
Interval f2_y0_enclosure(const Interval& x) {
  Interval x2 = pow_int(x, 2);
  return (ic2() + Interval(2.0) * pow_int(x, 3)) * sqrt_total(Interval(1.0) - x2) +
         i45() - i45() * x2;
}
Interval f2_x0_enclosure(const Interval& y) {
  Interval y2 = pow_int(y, 2);
  return ic2() * sqrt_total(Interval(1.0) - Interval(3.0) * y2) + i45() -
         i125() * y2 + Interval(2.0) * pow_int(y, 3);
}

// Sign-equivalent multiplied form of d/dx F2(x,0) on (0,1): the derivative
// equals x * H(x) / sqrt(1-x^2) with
//   H(x) = 6x(1-x^2) - (2/sqrt7 + 2x^3) - (8/5) sqrt(1-x^2),
// so H < 0 on [0,1] proves the edge restriction strictly decreasing.
Interval f2_y0_monotone_form(const Interval& x) {
  Interval x2 = pow_int(x, 2);
  return Interval(6.0) * x * (Interval(1.0) - x2) -
         (ic2() + Interval(2.0) * pow_int(x, 3)) -
         i85() * sqrt_total(Interval(1.0) - x2);
}

// Likewise d/dy F2(0,y) = y * M(y) / sqrt(1-3y^2) with
//   M(y) = -6/sqrt7 - 6(4/5 - y) sqrt(1-3y^2).
Interval f2_x0_monotone_form(const Interval& y) {
  Interval y2 = pow_int(y, 2);
  return -(Interval(3.0) * ic2()) -
         Interval(6.0) * (i45() - y) * sqrt_total(Interval(1.0) - Interval(3.0) * y2);
}

}  // namespace

std::array<EdgeMaximum, 3> boundary_scan(Objective obj) {
  std::array<EdgeRestriction, 3> edges = boundary_restrictions(obj);
  std::array<EdgeMaximum, 3> out;
  if (obj == Objective::F1) {
    // y=0: stationarity polynomial roots, squaring artifacts filtered.
    double best_v = edges[0].value(0.0), best_x = 0.0;
    if (edges[0].value(1.0) > best_v) { best_v = edges[0].value(1.0); best_x = 1.0; }
    for (const FilteredRoot& fr : filtered_edge_roots(obj)) {
      if (!fr.genuine) continue;
      double v = edges[0].value(fr.location);
      if (v > best_v) { best_v = v; best_x = fr.location; }
    }
    out[0] = {"y=0", best_v, {best_x, 0.0}, EdgeMethod::RootIsolation};
    // x=0: 4y^2 increases to y = 1/sqrt3.
    out[1] = {"x=0", 4.0 / 3.0, {0.0, ellipse_y(0.0)}, EdgeMethod::ClosedForm};
    // ellipse: quartic (3x^4 - 4x^2 + 4)/3 with stationary x in {0, sqrt(2/3)};
    // candidate values 4/3, 8/9, and 1 at x = 1.
    {
      double cands[3] = {0.0, std::sqrt(2.0 / 3.0), 1.0};
      double v = -HUGE_VAL, at = 0.0;
      for (double c : cands) {
        double vc = edges[2].value(c);
        if (vc > v) { v = vc; at = c; }
      }
      out[2] = {"ellipse", v, {at, ellipse_y(at)}, EdgeMethod::ClosedForm};
    }
    return out;
  }
  // F2, y=0 edge: prove the restriction strictly decreasing; its maximum is
  // then the x=0 endpoint value 2/sqrt7 + 4/5.
  bool y0_decreasing = false;
  try {
    y0_decreasing = certify_monotone_negative(f2_y0_monotone_form, 0.0, 1.0);
  } catch (const InconclusiveError&) {
  }
  if (y0_decreasing) {
    out[0] = {"y=0", edges[0].value(0.0), {0.0, 0.0},
              EdgeMethod::MonotoneCertificate};
  } else {
    EdgeScanResult r = scan_edge_max(f2_y0_enclosure, 0.0, 1.0, 1e-9);
    out[0] = {"y=0", r.upper, {r.arg, 0.0}, EdgeMethod::IntervalScan};
  }
  // x=0 edge: same treatment in y. The certificate range reaches past
  // 1/sqrt3 so the whole arc-length of the true edge is covered.
  bool x0_decreasing = false;
  try {
    x0_decreasing = certify_monotone_negative(f2_x0_monotone_form, 0.0, 0.578);
  } catch (const InconclusiveError&) {
  }
  if (x0_decreasing) {
    out[1] = {"x=0", edges[1].value(0.0), {0.0, 0.0},
              EdgeMethod::MonotoneCertificate};
  } else {
    EdgeScanResult r = scan_edge_max(f2_x0_enclosure, 0.0, inv_sqrt3().lo, 1e-9);
    out[1] = {"x=0", r.upper, {0.0, r.arg}, EdgeMethod::IntervalScan};
  }
  // ellipse: quartic stationarity roots, squaring artifacts filtered.
  {
    double best_v = edges[2].value(0.0), best_x = 0.0;
    if (edges[2].value(1.0) > best_v) { best_v = edges[2].value(1.0); best_x = 1.0; }
    for (const FilteredRoot& fr : filtered_edge_roots(obj)) {
      if (!fr.genuine) continue;
      double v = edges[2].value(fr.location);
      if (v > best_v) { best_v = v; best_x = fr.location; }
    }
    out[2] = {"ellipse", best_v, {best_x, ellipse_y(best_x)},
              EdgeMethod::RootIsolation};
  }
  return out;
}

}  // namespace schlicht
