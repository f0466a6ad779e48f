// Coefficient fields for series arithmetic: exact rationals and floating
// complex numbers, plus a minimal exact complex pair (std::complex over a
// non-floating-point type is undefined behavior by the standard).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <type_traits>

namespace schlicht {

using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& v) { return v.is_zero(); }
inline bool is_zero(const std::complex<double>& v) {
  return v.real() == 0.0 && v.imag() == 0.0;
}

inline double to_double(const Rational& v) { return v.convert_to<double>(); }

// |v| as a double (for display and floating-point checks).
inline double abs_as_double(const Rational& v) {
  return std::abs(to_double(v));
}
inline double abs_as_double(const std::complex<double>& v) {
  return std::abs(v);
}

// |v|^2 in the field's own precision: exact for rationals.
inline Rational mag_sq(const Rational& v) { return v * v; }
inline double mag_sq(const std::complex<double>& v) { return std::norm(v); }

template <class T>
T field_from_int(std::int64_t n) {
  if constexpr (std::is_same_v<T, std::complex<double>>) {
    return T(static_cast<double>(n), 0.0);
  } else {
    return T(n);
  }
}

// Exact complex pair over an arbitrary field (used for exact quadratic-form
// test vectors).
template <class T>
struct Complex {
  T re{};
  T im{};

  friend Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const T& s, const Complex& a) {
    return {s * a.re, s * a.im};
  }
  T norm_sq() const { return re * re + im * im; }
};

}  // namespace schlicht
