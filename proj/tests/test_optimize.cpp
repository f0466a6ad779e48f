// Branch-and-bound certification, Newton refinement, boundary analysis,
// stationarity-root filtering, and the 1-D certification utilities.
#include <doctest.h>

#include <cmath>
#include <random>

#include <schlicht/errors.hpp>
#include <schlicht/objective.hpp>
#include <schlicht/optimize.hpp>

using schlicht::BnbOptions;
using schlicht::Box;
using schlicht::BoxBoundsModel;
using schlicht::CertifiedBound;
using schlicht::DomainPoint;
using schlicht::Interval;
using schlicht::Objective;

namespace {

constexpr double kF1Max = 1.3614356236071319;
constexpr double kF2Max = 1.6787106409662182;

BoxBoundsModel constant_model(double c) {
  BoxBoundsModel m;
  m.root = Box{Interval{0, 1}, Interval{0, 1}};
  m.upper = [c](const Box&) { return std::optional<double>(c); };
  m.sample = [c](const Box& b) {
    return std::make_optional(
        std::make_pair(DomainPoint{b.x.mid(), b.y.mid()}, c));
  };
  return m;
}

}  // namespace

TEST_CASE("constant objective certifies immediately as a point enclosure") {
  BnbOptions opts;
  opts.tol = 1e-6;
  opts.workers = 1;
  CertifiedBound b = schlicht::branch_and_bound_max(constant_model(0.0), opts);
  CHECK(b.lower == 0.0);
  CHECK(b.upper == 0.0);
  CHECK(b.boxes_processed == 1);
}

TEST_CASE("synthetic paraboloid model certifies its known maximum") {
  // f(x,y) = 5 - (x-0.3)^2 - (y-0.2)^2, max 5 at (0.3, 0.2)
  BoxBoundsModel m;
  m.root = Box{Interval{0, 1}, Interval{0, 1}};
  auto enclose = [](const Box& b) {
    Interval dx = b.x - Interval{0.3, 0.3};
    Interval dy = b.y - Interval{0.2, 0.2};
    return Interval{5, 5} -
           schlicht::pow_int(dx, 2) - schlicht::pow_int(dy, 2);
  };
  m.upper = [enclose](const Box& b) {
    return std::optional<double>(enclose(b).hi);
  };
  m.sample = [enclose](const Box& b) {
    Box point{Interval{b.x.mid(), b.x.mid()}, Interval{b.y.mid(), b.y.mid()}};
    return std::make_optional(
        std::make_pair(DomainPoint{b.x.mid(), b.y.mid()}, enclose(point).lo));
  };
  BnbOptions opts;
  opts.tol = 1e-8;
  opts.workers = 1;
  CertifiedBound b = schlicht::branch_and_bound_max(m, opts);
  CHECK(b.upper >= 5.0);
  CHECK(b.upper - b.lower <= 1e-8);
  CHECK(b.upper <= 5.0 + 1e-8);
  CHECK(b.witness.x == doctest::Approx(0.3).epsilon(1e-3));
  CHECK(b.witness.y == doctest::Approx(0.2).epsilon(1e-3));
}

TEST_CASE("certified first-objective bound brackets the known maximum") {
  CertifiedBound b = schlicht::branch_and_bound_max(Objective::F1, 1e-6);
  CHECK(b.upper - b.lower <= 1e-6);
  CHECK(b.upper >= kF1Max);
  CHECK(b.upper <= kF1Max + 1e-6);
  CHECK(b.lower <= kF1Max);
  CHECK(schlicht::in_domain(b.witness));
}

TEST_CASE("certified second-objective bound brackets the known maximum") {
  CertifiedBound b = schlicht::branch_and_bound_max(Objective::F2, 1e-6);
  CHECK(b.upper - b.lower <= 1e-6);
  CHECK(b.upper >= kF2Max);
  CHECK(b.upper <= kF2Max + 1e-6);
  CHECK(b.lower <= kF2Max);
  CHECK(schlicht::in_domain(b.witness));
}

TEST_CASE("single-worker runs are bit-identical") {
  BnbOptions opts;
  opts.tol = 1e-5;
  opts.workers = 1;
  CertifiedBound a = schlicht::branch_and_bound_max(Objective::F1, opts);
  CertifiedBound b = schlicht::branch_and_bound_max(Objective::F1, opts);
  CHECK(a.upper == b.upper);
  CHECK(a.lower == b.lower);
  CHECK(a.boxes_processed == b.boxes_processed);
  CHECK(a.witness.x == b.witness.x);
  CHECK(a.witness.y == b.witness.y);
}

TEST_CASE("parallel workers keep the enclosure contract") {
  BnbOptions opts;
  opts.tol = 1e-6;
  opts.workers = 4;
  for (Objective obj : {Objective::F1, Objective::F2}) {
    double truth = obj == Objective::F1 ? kF1Max : kF2Max;
    CertifiedBound b = schlicht::branch_and_bound_max(obj, opts);
    CHECK(b.upper - b.lower <= 1e-6);
    CHECK(b.upper >= truth);
    CHECK(b.lower <= truth);
    CHECK(schlicht::in_domain(b.witness));
  }
}

TEST_CASE("a huge tolerance returns a single-box enclosure") {
  BnbOptions opts;
  opts.tol = 1e300;
  opts.workers = 1;
  CertifiedBound b = schlicht::branch_and_bound_max(Objective::F1, opts);
  CHECK(b.boxes_processed == 1);
  CHECK(b.upper - b.lower <= 1e300);
  CHECK(b.upper >= kF1Max);
}

TEST_CASE("the box budget aborts hopeless runs") {
  BnbOptions opts;
  opts.tol = 1e-12;
  opts.box_budget = 10;
  opts.workers = 1;
  CHECK_THROWS_AS(schlicht::branch_and_bound_max(Objective::F1, opts),
                  schlicht::BudgetExceededError);
  opts.workers = 3;
  CHECK_THROWS_AS(schlicht::branch_and_bound_max(Objective::F2, opts),
                  schlicht::BudgetExceededError);
}

TEST_CASE("bad options are rejected") {
  BnbOptions opts;
  opts.tol = 0.0;
  CHECK_THROWS_AS(schlicht::branch_and_bound_max(Objective::F1, opts),
                  schlicht::Error);
  opts.tol = 1e-6;
  opts.box_budget = 0;
  CHECK_THROWS_AS(schlicht::branch_and_bound_max(Objective::F1, opts),
                  schlicht::Error);
}

TEST_CASE("coarse feasible grids never beat the certified upper bound") {
  for (Objective obj : {Objective::F1, Objective::F2}) {
    CertifiedBound b = schlicht::branch_and_bound_max(obj, 1e-6);
    double best = 0.0;
    const int n = 200;
    for (int i = 0; i <= n; ++i) {
      double x = static_cast<double>(i) / n;
      for (int j = 0; j <= n; ++j) {
        double y = static_cast<double>(j) / n * 0.5773502691896257;
        if (1.0 - x * x - 3.0 * y * y < 0.0) break;
        best = std::max(best, schlicht::eval(obj, {x, y}));
      }
    }
    CHECK(best <= b.upper + 1e-15);
  }
}

TEST_CASE("Newton refinement lands on the interior critical points") {
  auto cp = schlicht::refine_critical_point(Objective::F1, {0.6, 0.4});
  CHECK(cp.converged);
  CHECK(cp.gradient_norm < 1e-10);
  CHECK(cp.point.x == doctest::Approx(std::sqrt(11.0 / 30.0)).epsilon(1e-10));
  CHECK(cp.point.y ==
        doctest::Approx(std::sqrt(281.0 / 1800.0)).epsilon(1e-10));
  CHECK(cp.value == doctest::Approx(1079.0 / 900.0).epsilon(1e-12));

  auto cp2 = schlicht::refine_critical_point(Objective::F2, {0.58, 0.21});
  CHECK(cp2.converged);
  CHECK(cp2.point.x == doctest::Approx(0.5832367185402660).epsilon(1e-9));
  CHECK(cp2.point.y == doctest::Approx(0.2064384475039717).epsilon(1e-9));
  CHECK(cp2.value == doctest::Approx(kF2Max).epsilon(1e-12));

  auto cp3 = schlicht::refine_critical_point(Objective::F2, {0.013, 0.0075});
  CHECK(cp3.converged);
  CHECK(cp3.point.x == doctest::Approx(0.0131374410295951).epsilon(1e-6));
  CHECK(cp3.point.y == doctest::Approx(0.0074807747833620).epsilon(1e-6));
  CHECK(cp3.value == doctest::Approx(1.5559263100321081).epsilon(1e-12));
}

TEST_CASE("Newton refinement rejects infeasible seeds") {
  CHECK_THROWS_AS(schlicht::refine_critical_point(Objective::F1, {1.5, 0.0}),
                  schlicht::OutsideDomainError);
  CHECK_THROWS_AS(schlicht::refine_critical_point(Objective::F1, {0.0, 0.0}),
                  schlicht::OutsideDomainError);
}

TEST_CASE("multi-start finds exactly the expected interior critical points") {
  auto pts1 = schlicht::multi_start_critical_points(Objective::F1);
  REQUIRE(pts1.size() == 1);
  CHECK(pts1[0].value == doctest::Approx(1079.0 / 900.0).epsilon(1e-12));

  auto pts2 = schlicht::multi_start_critical_points(Objective::F2);
  REQUIRE(pts2.size() == 2);
  CHECK(pts2[0].value == doctest::Approx(kF2Max).epsilon(1e-12));
  CHECK(pts2[1].value == doctest::Approx(1.5559263100321081).epsilon(1e-12));
  CHECK(pts2[0].value > pts2[1].value);  // sorted descending
}

TEST_CASE("boundary scan reproduces the first objective's edge table") {
  auto edges = schlicht::boundary_scan(Objective::F1);
  CHECK(edges[0].edge == "y=0");
  CHECK(edges[0].value == doctest::Approx(kF1Max).epsilon(1e-12));
  CHECK(edges[0].location.x == doctest::Approx(0.9181073791336605).epsilon(1e-9));
  CHECK(edges[0].method == schlicht::EdgeMethod::RootIsolation);

  CHECK(edges[1].edge == "x=0");
  CHECK(edges[1].value == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(edges[1].method == schlicht::EdgeMethod::ClosedForm);

  CHECK(edges[2].edge == "ellipse");
  CHECK(edges[2].value == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(edges[2].location.x == 0.0);
  CHECK(edges[2].method == schlicht::EdgeMethod::ClosedForm);
}

TEST_CASE("boundary scan reproduces the second objective's edge table") {
  auto edges = schlicht::boundary_scan(Objective::F2);
  double corner = 2.0 / std::sqrt(7.0) + 0.8;
  CHECK(edges[0].edge == "y=0");
  CHECK(edges[0].value == doctest::Approx(corner).epsilon(1e-12));
  CHECK(edges[0].location.x == 0.0);
  CHECK(edges[0].location.y == 0.0);
  CHECK(edges[0].method == schlicht::EdgeMethod::MonotoneCertificate);

  CHECK(edges[1].edge == "x=0");
  CHECK(edges[1].value == doctest::Approx(corner).epsilon(1e-12));
  CHECK(edges[1].method == schlicht::EdgeMethod::MonotoneCertificate);

  CHECK(edges[2].edge == "ellipse");
  CHECK(edges[2].value == doctest::Approx(7.0 / 16.0).epsilon(1e-12));
  CHECK(edges[2].location.x == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(edges[2].method == schlicht::EdgeMethod::RootIsolation);
}

TEST_CASE("generic boundary scan reports equal edge maxima for a constant") {
  // test hook: a constant function restricted to three synthetic edges
  auto flat = [](const Interval&) { return Interval{2.5, 2.5}; };
  std::vector<schlicht::EdgeModel> edges;
  for (const char* name : {"left", "bottom", "arc"}) {
    schlicht::EdgeModel e;
    e.name = name;
    e.a = 0.0;
    e.b = 1.0;
    e.enclosure = flat;
    e.locate = [](double t) { return DomainPoint{t, 0.0}; };
    edges.push_back(e);
  }
  auto out = schlicht::boundary_scan_generic(edges, 1e-9);
  REQUIRE(out.size() == 3);
  for (const auto& m : out) {
    CHECK(m.value == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(m.method == schlicht::EdgeMethod::IntervalScan);
  }
  CHECK(out[0].value == out[1].value);
  CHECK(out[1].value == out[2].value);
}

TEST_CASE("stationarity roots split into genuine and spurious") {
  auto roots1 = schlicht::filtered_edge_roots(Objective::F1);
  REQUIRE(roots1.size() == 2);
  CHECK_FALSE(roots1[0].genuine);  // squaring artifact near 0.5726
  CHECK(roots1[0].location == doctest::Approx(0.5726248629166026).epsilon(1e-9));
  CHECK(roots1[1].genuine);
  CHECK(roots1[1].location == doctest::Approx(0.9181073791336605).epsilon(1e-9));

  auto roots2 = schlicht::filtered_edge_roots(Objective::F2);
  REQUIRE(roots2.size() == 2);
  CHECK(roots2[0].genuine);  // exactly x = 1/2 on the arc
  CHECK(roots2[0].location == doctest::Approx(0.5).epsilon(1e-9));
  CHECK_FALSE(roots2[1].genuine);  // artifact near sqrt(2/3)
  CHECK(roots2[1].location ==
        doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-6));
}

TEST_CASE("negative-sign certification accepts true claims and rejects false ones") {
  schlicht::MonotoneOptions opts;
  Interval one{1, 1};
  Interval c7 = schlicht::sqrt_clamped(schlicht::around(4.0 / 7.0));  // 2/sqrt7
  Interval i85 = Interval{8, 8} * Interval{schlicht::rounding::recip_down(5.0),
                                           schlicht::rounding::recip_up(5.0)};
  Interval i245 = Interval{3, 3} * i85;

  // d/dx F2(x,0) = 6x^2 s - x(2/sqrt7 + 2x^3)/s - (8/5)x,  s = sqrt(1-x^2)
  auto df2dx_y0 = [&](const Interval& x) {
    Interval r = one - schlicht::pow_int(x, 2);
    return Interval{6, 6} * schlicht::pow_int(x, 2) *
               schlicht::sqrt_clamped(r) -
           x * (c7 + Interval{2, 2} * schlicht::pow_int(x, 3)) *
               schlicht::rsqrt_pos(r) -
           i85 * x;
  };
  CHECK(schlicht::certify_monotone_negative(df2dx_y0, 0.01, 0.99, opts));

  // d/dy F2(0,y) = -(6/sqrt7) y / sqrt(1-3y^2) - (24/5)y + 6y^2
  auto df2dy_x0 = [&](const Interval& y) {
    Interval r = one - Interval{3, 3} * schlicht::pow_int(y, 2);
    return Interval{6, 6} * schlicht::pow_int(y, 2) -
           Interval{3, 3} * c7 * y * schlicht::rsqrt_pos(r) - i245 * y;
  };
  CHECK(schlicht::certify_monotone_negative(
      df2dy_x0, 0.01, 1.0 / std::sqrt(3.0) - 0.01, opts));

  // 2x on (0.1, 1) is positive: definitive rejection, not Inconclusive
  CHECK_FALSE(schlicht::certify_monotone_negative(
      [](const Interval& x) { return x + x; }, 0.1, 1.0, opts));
  // x - 10 on (0, 1) is negative outright
  CHECK(schlicht::certify_monotone_negative(
      [](const Interval& x) { return x - Interval{10, 10}; }, 0.0, 1.0, opts));
}

TEST_CASE("sign certification gives up honestly on a sign change") {
  schlicht::MonotoneOptions opts;
  opts.box_budget = 1 << 12;
  CHECK_THROWS_AS(
      schlicht::certify_monotone_negative(
          [](const Interval& x) { return x; }, -1.0, 1.0, opts),
      schlicht::InconclusiveError);
}

TEST_CASE("certified 1-D scan maximizes a quadratic") {
  // g(t) = 5 - (t - 0.3)^2 on [0, 1]
  auto g = [](const Interval& t) {
    return Interval{5, 5} - schlicht::pow_int(t - Interval{0.3, 0.3}, 2);
  };
  auto r = schlicht::scan_edge_max(g, 0.0, 1.0, 1e-10);
  CHECK(r.upper >= 5.0);
  CHECK(r.upper - r.lower <= 1e-10);
  CHECK(r.upper <= 5.0 + 1e-10);
  CHECK(r.arg == doctest::Approx(0.3).epsilon(1e-4));
}

TEST_CASE("edge stationarity forms have the advertised signs") {
  // genuine stationary point of the first objective's y=0 edge: form spans 0
  Interval at_root = schlicht::f1_edge_stationarity(
      Interval{0.91810737, 0.91810739});
  CHECK(at_root.lo < 0.0);
  CHECK(at_root.hi > 0.0);
  // at the squaring artifact the form is bounded away from zero
  Interval at_artifact = schlicht::f1_edge_stationarity(
      Interval{0.57262486, 0.57262487});
  CHECK(at_artifact.lo > 0.0);

  Interval arc_root = schlicht::f2_ellipse_stationarity(Interval{0.4999, 0.5001});
  CHECK(arc_root.lo < 0.0);
  CHECK(arc_root.hi > 0.0);
}

TEST_CASE("stationarity polynomials match their root lists") {
  auto p1 = schlicht::f1_edge_polynomial();
  CHECK(p1.coeffs.size() == 9);
  CHECK(p1.eval(schlicht::Rational(0)) == schlicht::Rational(1));
  auto p2 = schlicht::f2_ellipse_polynomial();
  CHECK(p2.eval(schlicht::Rational(1, 2)) == schlicht::Rational(0));
}
