// Exact rational polynomials and Sturm-sequence real-root isolation.
#pragma once

#include <vector>

#include "schlicht/errors.hpp"
#include "schlicht/field.hpp"

namespace schlicht {

// Coefficients ascending by degree; the leading (last) coefficient is
// nonzero after normalization. The zero polynomial has an empty vector.
struct Polynomial {
  std::vector<Rational> coeffs;

  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> c);  // trims trailing zeros

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  Rational eval(const Rational& t) const;  // Horner
  Polynomial derivative() const;
};

// Division with remainder: returns (quotient, remainder), deg rem < deg d.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& n,
                                         const Polynomial& d);

// An open interval (lo, hi) containing exactly one root of the isolated
// polynomial; sign_change records that the polynomial's signs at lo and hi
// differ (always the case for a square-free isolation).
struct RootInterval {
  Rational lo;
  Rational hi;
  bool sign_change = false;
};

// Number of distinct real roots in (a, b] by Sturm sign-variation counting.
// Throws NotSquareFreeError when gcd(p, p') is nonconstant.
int count_roots(const Polynomial& p, const Rational& a, const Rational& b);

// Isolating intervals of width < max_width for every root of p in the open
// interval (a, b), in increasing order, by Sturm counting plus sign
// bisection. Exact rational arithmetic throughout. Preconditions: a < b and
// p(a) != 0 and p(b) != 0 (pick endpoints off the roots); p square-free
// (checked via the Sturm remainder chain).
std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& a,
                                        const Rational& b);
std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& a,
                                        const Rational& b,
                                        const Rational& max_width);

}  // namespace schlicht
