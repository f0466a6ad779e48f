#include "schlicht/functions.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>

#include "schlicht/errors.hpp"

namespace schlicht {

namespace {

constexpr const char* kRotPrefix = "koebe-rot:";

bool has_rot_prefix(const std::string& name) {
  return name.rfind(kRotPrefix, 0) == 0;
}

// a_n for the unrotated named functions, as small integers.
int64_t tail_pattern(const std::string& name, int n) {
  if (name == "koebe") return n;
  if (name == "identity") return 0;
  if (name == "z-over-1-minus-z") return 1;
  if (name == "z-over-1-minus-z2") return n % 2 == 1 ? 1 : 0;
  throw Error("unknown function: " + name);
}

}  // namespace

std::vector<std::string> builtin_function_names() {
  return {"koebe", "koebe-rot:pi", "identity", "z-over-1-minus-z",
          "z-over-1-minus-z2"};
}

bool is_builtin_function(const std::string& name) {
  if (has_rot_prefix(name)) {
    try {
      parse_angle(name.substr(std::string(kRotPrefix).size()));
      return true;
    } catch (const Error&) {
      return false;
    }
  }
  return name == "koebe" || name == "identity" ||
         name == "z-over-1-minus-z" || name == "z-over-1-minus-z2";
}

double parse_angle(const std::string& token) {
  if (token == "pi") return M_PI;
  if (token == "pi/2") return M_PI / 2.0;
  if (token == "pi/4") return M_PI / 4.0;
  if (token == "-pi") return -M_PI;
  try {
    std::size_t used = 0;
    double v = std::stod(token, &used);
    if (used != token.size()) throw Error("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw Error("cannot parse rotation angle: " + token);
  }
}

Series1<Rational> builtin_series_exact(const std::string& name, int order) {
  if (order < 1) throw Error("series order must be at least 1");
  Series1<Rational> f(order);
  f.set(1, Rational(1));
  if (has_rot_prefix(name)) {
    std::string token = name.substr(std::string(kRotPrefix).size());
    int sign;
    if (token == "pi" || token == "-pi") {
      sign = -1;  // e^{i pi} = -1, so a_n = (-1)^{n-1} n
    } else if (token == "0") {
      sign = 1;
    } else {
      throw Error("exact mode supports rotation angles 0 and pi only, got: " +
                  token);
    }
    for (int n = 2; n <= order; ++n) {
      int64_t a = (n % 2 == 0 ? sign : 1) * static_cast<int64_t>(n);
      f.set(n, Rational(a));
    }
    return f;
  }
  for (int n = 2; n <= order; ++n) f.set(n, Rational(tail_pattern(name, n)));
  return f;
}

Series1<std::complex<double>> builtin_series_floating(const std::string& name,
                                                      int order) {
  if (order < 1) throw Error("series order must be at least 1");
  Series1<std::complex<double>> f(order);
  f.set(1, std::complex<double>(1.0, 0.0));
  if (has_rot_prefix(name)) {
    double theta = parse_angle(name.substr(std::string(kRotPrefix).size()));
    for (int n = 2; n <= order; ++n) {
      f.set(n, static_cast<double>(n) * std::polar(1.0, (n - 1) * theta));
    }
    return f;
  }
  for (int n = 2; n <= order; ++n) {
    f.set(n, std::complex<double>(static_cast<double>(tail_pattern(name, n)),
                                  0.0));
  }
  return f;
}

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational {
    throw Error("cannot parse rational: '" + text + "'");
  };
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t& pos) {
    std::string d;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      d += text[pos++];
    }
    return d;
  };
  std::string whole = digits(i);
  Rational value;
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::string den = digits(i);
    if (whole.empty() || den.empty() || i != text.size()) return fail();
    boost::multiprecision::cpp_int d(den);
    if (d == 0) throw Error("zero denominator in: '" + text + "'");
    value = Rational(boost::multiprecision::cpp_int(whole), d);
  } else if (i < text.size() && text[i] == '.') {
    ++i;
    std::string frac = digits(i);
    if ((whole.empty() && frac.empty()) || i != text.size()) return fail();
    boost::multiprecision::cpp_int scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    boost::multiprecision::cpp_int num(whole.empty() ? "0" : whole);
    num *= scale;
    if (!frac.empty()) num += boost::multiprecision::cpp_int(frac);
    value = Rational(num, scale);
  } else {
    if (whole.empty() || i != text.size()) return fail();
    value = Rational(boost::multiprecision::cpp_int(whole));
  }
  return negative ? -value : value;
}

}  // namespace schlicht
