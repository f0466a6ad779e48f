// Truncated power series over exact rationals: products, the normalized
// square root, the odd transform, and coefficient extraction of the
// bilinear logarithm table.
#include <doctest.h>

#include <complex>
#include <random>

#include <schlicht/errors.hpp>
#include <schlicht/field.hpp>
#include <schlicht/functions.hpp>
#include <schlicht/series.hpp>

using schlicht::Rational;
using schlicht::Series1;

namespace {

Series1<Rational> random_normalized(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 6);
  Series1<Rational> f(order);
  f.set(1, Rational(1));
  for (int n = 2; n <= order; ++n) {
    f.set(n, Rational(num(rng), den(rng)));
  }
  return f;
}

}  // namespace

TEST_CASE("series products multiply truncated polynomials") {
  Series1<Rational> one_plus(2), one_minus(2);
  one_plus.set(0, Rational(1));
  one_plus.set(1, Rational(1));
  one_minus.set(0, Rational(1));
  one_minus.set(1, Rational(-1));
  auto prod = schlicht::mul1(one_plus, one_minus, 2);
  CHECK(prod.coeff(0) == Rational(1));
  CHECK(prod.coeff(1) == Rational(0));
  CHECK(prod.coeff(2) == Rational(-1));
}

TEST_CASE("normalized square root reproduces closed forms") {
  // f(z) = z stays put
  auto id = schlicht::builtin_series_exact("identity", 9);
  auto id2 = schlicht::odd_transform(id);
  for (int n = 0; n <= 9; ++n) {
    CHECK(id2.coeff(n) == (n == 1 ? Rational(1) : Rational(0)));
  }

  // the odd transform of z/(1-z)^2 is z/(1-z^2) = z + z^3 + z^5 + ...
  auto koebe = schlicht::builtin_series_exact("koebe", 9);
  auto k2 = schlicht::odd_transform(koebe);
  for (int n = 0; n <= 9; ++n) {
    CHECK(k2.coeff(n) == ((n % 2 == 1) ? Rational(1) : Rational(0)));
  }

  // and of z/(1+z)^2 it alternates: z - z^3 + z^5 - z^7 + ...
  auto rot = schlicht::builtin_series_exact("koebe-rot:pi", 9);
  auto r2 = schlicht::odd_transform(rot);
  CHECK(r2.coeff(1) == Rational(1));
  CHECK(r2.coeff(3) == Rational(-1));
  CHECK(r2.coeff(5) == Rational(1));
  CHECK(r2.coeff(7) == Rational(-1));

  // f(z) = z + a2 z^2 gives z + (a2/2) z^3 - (a2^2/8) z^5 + ...
  Series1<Rational> f(5);
  f.set(1, Rational(1));
  f.set(2, Rational(3));
  auto f2 = schlicht::odd_transform(f);
  CHECK(f2.coeff(1) == Rational(1));
  CHECK(f2.coeff(3) == Rational(3, 2));
  CHECK(f2.coeff(5) == Rational(-9, 8));
}

TEST_CASE("square root requires a unit inner constant term") {
  Series1<Rational> bad(4);
  bad.set(2, Rational(2));  // 2z^2 + ... : inner series starts at 2, not 1
  CHECK_THROWS_AS(schlicht::sqrt_normalized(bad, 4),
                  schlicht::BadLeadingTermError);
}

TEST_CASE("odd transform output is supported on odd degrees only") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_normalized(rng, 6);
    auto f2 = schlicht::odd_transform(f);
    for (int n = 0; n <= f2.order(); n += 2) {
      CHECK(schlicht::is_zero(f2.coeff(n)));
    }
  }
}

TEST_CASE("squaring the odd transform recovers f at z^2") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_normalized(rng, 6);
    auto f2 = schlicht::odd_transform(f);
    auto sq = schlicht::mul1(f2, f2, f2.order());
    auto fz2 = schlicht::substitute_square(f, f2.order());
    for (int n = 0; n <= f2.order(); ++n) {
      CHECK(sq.coeff(n) == fz2.coeff(n));
    }
  }
}

TEST_CASE("table extraction sends the identity to the zero table") {
  auto id = schlicht::builtin_series_exact("identity", 9);
  auto t = schlicht::grunsky_from_series(id, 9);
  for (int p = 0; p <= 9; ++p) {
    for (int q = 0; q <= 9; ++q) {
      if (p == 0 && q == 0) continue;
      CHECK(schlicht::is_zero(t.at(p, q)));
    }
  }
}

TEST_CASE("table of z/(1-z) is the boundary harmonic row") {
  // Entry (p,q) of the table depends on coefficients up to a_{p+q+1}, so a
  // full 9x9 comparison against the closed form needs the input expanded to
  // order 19; a shorter input yields the (correct) table of the truncation.
  auto f = schlicht::builtin_series_exact("z-over-1-minus-z", 19);
  auto t = schlicht::grunsky_from_series(f, 9);
  for (int p = 1; p <= 9; ++p) {
    CHECK(t.at(p, 0) == Rational(1, p));
    CHECK(t.at(0, p) == Rational(1, p));
    for (int q = 1; q <= 9; ++q) {
      CHECK(schlicht::is_zero(t.at(p, q)));
    }
  }
}

TEST_CASE("table of z/(1-z^2) matches its closed form") {
  auto f2 = schlicht::builtin_series_exact("z-over-1-minus-z2", 19);
  auto t = schlicht::grunsky_from_series(f2, 9);
  // log((f2(t)-f2(z))/(t-z)) = log(1+tz) - log(1-t^2) - log(1-z^2)
  CHECK(t.at(1, 1) == Rational(1));
  CHECK(t.at(3, 3) == Rational(1, 3));
  CHECK(t.at(5, 5) == Rational(1, 5));
  CHECK(schlicht::is_zero(t.at(1, 3)));
  CHECK(schlicht::is_zero(t.at(1, 5)));
  CHECK(schlicht::is_zero(t.at(1, 7)));
  CHECK(schlicht::is_zero(t.at(3, 5)));
  for (int m = 1; m <= 4; ++m) {
    CHECK(t.at(2 * m, 0) == Rational(1, m));
  }
  CHECK(t.at(2, 2) == Rational(-1, 2));
  CHECK(t.at(4, 4) == Rational(-1, 4));
}

TEST_CASE("tables are symmetric for random inputs, exactly") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_normalized(rng, 7);
    auto t = schlicht::grunsky_from_series(f, 7);
    for (int p = 0; p <= 7; ++p) {
      for (int q = 0; q <= 7; ++q) {
        CHECK(t.at(p, q) == t.at(q, p));
      }
    }
  }
}

TEST_CASE("floating tables agree with exact tables on the rational suite") {
  // The bivariate log cancels heavily at large p+q (measured relative error
  // grows from ~1e-15 in the p+q<=8 band to ~3e-8 at p+q=18 for the raw
  // koebe input), so the tight comparison is pinned to the band the rest of
  // the pipeline consumes; the odd-transform tables, whose inputs are
  // bounded, agree everywhere.
  for (const char* name :
       {"koebe", "identity", "z-over-1-minus-z", "z-over-1-minus-z2"}) {
    auto fe = schlicht::builtin_series_exact(name, 9);
    auto te = schlicht::grunsky_from_series(fe, 9);
    auto ff = schlicht::builtin_series_floating(name, 9);
    auto tf = schlicht::grunsky_from_series(ff, 9);
    for (int p = 0; p <= 9; ++p) {
      for (int q = 0; q <= 9 - p; ++q) {
        if (p == 0 && q == 0) continue;
        double exact = schlicht::to_double(te.at(p, q));
        CHECK(std::abs(tf.at(p, q) - exact) <=
              1e-12 * std::max(1.0, std::abs(exact)));
      }
    }
    auto t2e = schlicht::grunsky_from_series(schlicht::odd_transform(fe), 9);
    auto t2f = schlicht::grunsky_from_series(schlicht::odd_transform(ff), 9);
    for (int p = 0; p <= 9; ++p) {
      for (int q = 0; q <= 9; ++q) {
        if (p == 0 && q == 0) continue;
        double exact = schlicht::to_double(t2e.at(p, q));
        CHECK(std::abs(t2f.at(p, q) - exact) <=
              1e-12 * std::max(1.0, std::abs(exact)));
      }
    }
  }
}

TEST_CASE("rotated floating tables stay symmetric within tolerance") {
  // The supported pipeline builds tables from odd transforms, whose bounded
  // coefficients keep the two summation orders in step. A raw rotated koebe
  // at full depth loses too many digits to cancellation for symmetry to be
  // certified, and construction refuses rather than returning a table whose
  // checked property is unverifiable.
  auto raw = schlicht::builtin_series_floating("koebe-rot:0.3", 9);
  CHECK_THROWS_AS(schlicht::grunsky_from_series(raw, 9), schlicht::Error);

  auto t = schlicht::grunsky_from_series(schlicht::odd_transform(raw), 9);
  for (int p = 0; p <= 9; ++p) {
    for (int q = 0; q <= 9; ++q) {
      CHECK(std::abs(t.at(p, q) - t.at(q, p)) < 1e-12);
    }
  }
}

TEST_CASE("coefficient-list input builds the expected normalized series") {
  auto f = schlicht::series_from_tail<Rational>(
      {Rational(2), Rational(3), Rational(4), Rational(5)}, 9);
  CHECK(f.coeff(1) == Rational(1));
  CHECK(f.coeff(2) == Rational(2));
  CHECK(f.coeff(5) == Rational(5));
  CHECK(f.coeff(6) == Rational(0));
  CHECK_THROWS_AS(schlicht::series_from_tail<Rational>(
                      {Rational(2), Rational(3), Rational(4), Rational(5)}, 4),
                  schlicht::Error);
}
