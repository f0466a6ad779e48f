// Exact rational polynomial arithmetic and Sturm-sequence root isolation.
#include <doctest.h>

#include <schlicht/errors.hpp>
#include <schlicht/field.hpp>
#include <schlicht/polynomial.hpp>

using schlicht::Polynomial;
using schlicht::Rational;

namespace {

Polynomial poly(std::initializer_list<long long> ascending) {
  Polynomial p;
  for (long long c : ascending) p.coeffs.emplace_back(c);
  return p;
}

}  // namespace

TEST_CASE("evaluation and derivative are exact") {
  Polynomial p = poly({1, -2, 3});  // 1 - 2x + 3x^2
  CHECK(p.eval(Rational(2)) == Rational(9));
  CHECK(p.eval(Rational(1, 2)) == Rational(3, 4));
  Polynomial d = p.derivative();
  CHECK(d.eval(Rational(0)) == Rational(-2));
  CHECK(d.eval(Rational(1)) == Rational(4));
}

TEST_CASE("division leaves the expected quotient and remainder") {
  Polynomial num = poly({-1, 0, 1});  // x^2 - 1
  Polynomial den = poly({-1, 1});     // x - 1
  auto [q, r] = schlicht::divmod(num, den);
  CHECK(q.coeffs.size() == 2);
  CHECK(q.eval(Rational(7)) == Rational(8));  // q = x + 1
  CHECK(r.coeffs.empty());

  auto [q2, r2] = schlicht::divmod(poly({1, 0, 1}), poly({-1, 1}));
  CHECK(r2.eval(Rational(0)) == Rational(2));  // x^2+1 = (x+1)(x-1) + 2
}

TEST_CASE("root counting on the degree-8 edge polynomial") {
  // 5x^8 - 5x^6 + 4x^4 - 4x^2 + 1, ascending coefficients
  Polynomial p = poly({1, 0, -4, 0, 4, 0, -5, 0, 5});
  CHECK(schlicht::count_roots(p, Rational(0), Rational(1)) == 2);
  auto roots = schlicht::isolate_roots(p, Rational(0), Rational(1));
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots) {
    CHECK(r.hi - r.lo < Rational(1, 1000000000000LL));
    CHECK(r.sign_change);
    // endpoint signs really differ (exact rational evaluation)
    Rational va = p.eval(r.lo), vb = p.eval(r.hi);
    CHECK(va * vb < 0);
  }
  // one root near 0.5726, the genuine one near 0.91810737
  CHECK(schlicht::to_double(roots[0].lo) == doctest::Approx(0.5726248629).epsilon(1e-9));
  CHECK(schlicht::to_double(roots[1].lo) == doctest::Approx(0.9181073791).epsilon(1e-9));
}

TEST_CASE("simple quadratics isolate as expected") {
  Polynomial p = poly({-2, 0, 1});  // x^2 - 2
  auto roots = schlicht::isolate_roots(p, Rational(0), Rational(2));
  REQUIRE(roots.size() == 1);
  double mid = schlicht::to_double((roots[0].lo + roots[0].hi) / 2);
  CHECK(mid == doctest::Approx(1.41421356).epsilon(1e-8));

  Polynomial q = poly({1, 0, 1});  // x^2 + 1: no real roots
  CHECK(schlicht::isolate_roots(q, Rational(-2), Rational(2)).empty());
}

TEST_CASE("exact rational roots are isolated, not missed") {
  // 12x^4 - 11x^2 + 2 has a root exactly at x = 1/2
  Polynomial p = poly({2, 0, -11, 0, 12});
  auto roots = schlicht::isolate_roots(p, Rational(0), Rational(1));
  REQUIRE(roots.size() == 2);
  bool found_half = false;
  for (const auto& r : roots) {
    if (r.lo <= Rational(1, 2) && Rational(1, 2) <= r.hi) found_half = true;
  }
  CHECK(found_half);
}

TEST_CASE("repeated roots are rejected") {
  Polynomial p = poly({1, -2, 1});  // (x-1)^2
  CHECK_THROWS_AS(schlicht::isolate_roots(p, Rational(0), Rational(2)),
                  schlicht::NotSquareFreeError);
}

TEST_CASE("roots at the interval endpoints are rejected") {
  Polynomial p = poly({-1, 1});  // x - 1
  CHECK_THROWS_AS(schlicht::isolate_roots(p, Rational(0), Rational(1)),
                  schlicht::Error);
  CHECK_THROWS_AS(schlicht::isolate_roots(p, Rational(1), Rational(2)),
                  schlicht::Error);
}

TEST_CASE("degenerate inputs are rejected") {
  Polynomial p = poly({-2, 0, 1});
  CHECK_THROWS_AS(schlicht::isolate_roots(p, Rational(2), Rational(0)),
                  schlicht::Error);
  Polynomial zero;
  CHECK_THROWS_AS(schlicht::isolate_roots(zero, Rational(0), Rational(1)),
                  schlicht::Error);
}
