// Named class-S test functions (exact and floating power series) and the
// textual coefficient/rational parsing used by the CLI.
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "schlicht/field.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

// The named functions with closed-form Grunsky data:
//   koebe            z/(1-z)^2        a_n = n
//   koebe-rot:T      rotated Koebe    a_n = n e^{i(n-1)T}, T in radians
//   identity         z
//   z-over-1-minus-z z/(1-z)          a_n = 1
//   z-over-1-minus-z2 z/(1-z^2)       a_n = 1 (n odd), 0 (n even)
// "koebe-rot:pi" (a_n = (-1)^{n-1} n) is the rotation representative usable
// in exact mode; other angles require floating mode.
std::vector<std::string> builtin_function_names();

bool is_builtin_function(const std::string& name);

// Rotation angle token: "pi", "pi/2", "pi/4", or a literal real number.
double parse_angle(const std::string& token);

// Exact series for a named function, truncated at `order`. Throws Error for
// unknown names and for rotation angles without an exact coefficient
// representation (only multiples handled: koebe-rot:pi and koebe-rot:0).
Series1<Rational> builtin_series_exact(const std::string& name, int order);

// Floating series for a named function; any rotation angle is accepted.
Series1<std::complex<double>> builtin_series_floating(const std::string& name,
                                                      int order);

// Parses "p/q", an integer, or a plain decimal ("-0.25") exactly.
Rational parse_rational(const std::string& text);

// Builds z + a2 z^2 + a3 z^3 + ... from the tail coefficients, truncated at
// `order` (tail entries beyond it are rejected rather than dropped).
template <class T>
Series1<T> series_from_tail(const std::vector<T>& tail, int order) {
  if (order < 1) throw Error("series order must be at least 1");
  if (static_cast<int>(tail.size()) + 1 > order) {
    throw Error("coefficient list exceeds the requested truncation order");
  }
  Series1<T> f(order);
  f.set(1, field_from_int<T>(1));
  for (std::size_t i = 0; i < tail.size(); ++i) {
    f.set(static_cast<int>(i) + 2, tail[i]);
  }
  return f;
}

}  // namespace schlicht
