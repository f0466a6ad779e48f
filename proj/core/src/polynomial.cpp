#include "schlicht/polynomial.hpp"

#include <utility>

namespace schlicht {

Polynomial::Polynomial(std::vector<Rational> c) : coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

Rational Polynomial::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs.size() <= 1) return Polynomial{};
  std::vector<Rational> d(coeffs.size() - 1);
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    d[k - 1] = Rational(static_cast<long long>(k)) * coeffs[k];
  }
  return Polynomial(std::move(d));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& n,
                                         const Polynomial& d) {
  if (d.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rational> rem = n.coeffs;
  int dn = n.degree(), dd = d.degree();
  if (dn < dd) return {Polynomial{}, n};
  std::vector<Rational> quo(dn - dd + 1, Rational(0));
  const Rational& lead = d.coeffs.back();
  for (int k = dn - dd; k >= 0; --k) {
    Rational q = rem[k + dd] / lead;
    quo[k] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[k + j] -= q * d.coeffs[j];
    }
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

namespace {

// Sturm chain p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k). Throws
// NotSquareFreeError when the chain terminates at a nonconstant polynomial
// (a nontrivial gcd of p and p').
std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain;
  chain.push_back(p);
  chain.push_back(p.derivative());
  while (!chain.back().is_zero()) {
    Polynomial rem = divmod(chain[chain.size() - 2], chain.back()).second;
    for (Rational& c : rem.coeffs) c = -c;
    chain.push_back(std::move(rem));
  }
  chain.pop_back();  // drop the zero terminator
  if (chain.back().degree() > 0) {
    throw NotSquareFreeError(
        "polynomial shares a nonconstant factor with its derivative");
  }
  return chain;
}

int sign_of(const Rational& v) {
  if (v.is_zero()) return 0;
  return v < 0 ? -1 : 1;
}

// Sign variations of the chain evaluated at t (zeros skipped).
int variations(const std::vector<Polynomial>& chain, const Rational& t) {
  int count = 0, prev = 0;
  for (const Polynomial& q : chain) {
    int s = sign_of(q.eval(t));
    if (s != 0) {
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
  }
  return count;
}

struct Isolator {
  const Polynomial& p;
  std::vector<Polynomial> chain;
  Rational max_width;
  std::vector<RootInterval> out;

  int count(const Rational& a, const Rational& b) const {
    return variations(chain, a) - variations(chain, b);  // roots in (a, b]
  }

  // Shrinks an interval known to hold exactly one root (signs differ at the
  // endpoints) below max_width by sign bisection.
  void bisect_single(Rational lo, Rational hi) {
    int slo = sign_of(p.eval(lo));
    while (hi - lo >= max_width) {
      Rational m = (lo + hi) / 2;
      int sm = sign_of(p.eval(m));
      if (sm == 0) {
        emit_exact_root(m, lo, hi);
        return;
      }
      if (sm == slo) {
        lo = m;
      } else {
        hi = m;
      }
    }
    out.push_back({lo, hi, true});
  }

  // The bisection midpoint is itself a root: report a sign-verified
  // interval of width < max_width straddling it.
  void emit_exact_root(const Rational& m, const Rational& lo,
                       const Rational& hi) {
    Rational delta = max_width / 4;
    if (m - delta <= lo) delta = (m - lo) / 2;
    if (m + delta >= hi) delta = (hi - m) / 2 < delta ? (hi - m) / 2 : delta;
    for (int tries = 0; tries < 8; ++tries) {
      int sl = sign_of(p.eval(m - delta));
      int sr = sign_of(p.eval(m + delta));
      if (sl != 0 && sr != 0 && sl != sr) {
        out.push_back({m - delta, m + delta, true});
        return;
      }
      delta /= 2;
    }
    throw Error("root isolation: could not verify a sign change around an "
                "exact bisection root");
  }

  // a, b are never roots (checked at entry; interior split points that land
  // on roots are routed through emit_exact_root and stepped around).
  void isolate(const Rational& a, const Rational& b) {
    int n = count(a, b);
    if (n == 0) return;
    if (n == 1) {
      bisect_single(a, b);
      return;
    }
    Rational m = (a + b) / 2;
    if (p.eval(m).is_zero()) {
      Rational delta = max_width / 4;
      while (!(m - delta > a && m + delta < b) ||
             p.eval(m - delta).is_zero() || p.eval(m + delta).is_zero() ||
             count(m - delta, m + delta) != 1) {
        delta /= 2;
      }
      emit_exact_root(m, m - delta, m + delta);
      isolate(a, m - delta);
      isolate(m + delta, b);
    } else {
      isolate(a, m);
      isolate(m, b);
    }
  }
};

}  // namespace

int count_roots(const Polynomial& p, const Rational& a, const Rational& b) {
  if (!(a < b)) throw Error("count_roots: need a < b");
  if (p.is_zero()) throw Error("count_roots: zero polynomial");
  std::vector<Polynomial> chain = sturm_chain(p);
  return variations(chain, a) - variations(chain, b);
}

std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& a,
                                        const Rational& b) {
  return isolate_roots(p, a, b, Rational(1, 1000000000000LL));
}

std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& a,
                                        const Rational& b,
                                        const Rational& max_width) {
  if (!(a < b)) throw Error("isolate_roots: need a < b");
  if (p.is_zero()) throw Error("isolate_roots: zero polynomial");
  if (p.eval(a).is_zero() || p.eval(b).is_zero()) {
    throw Error("isolate_roots: endpoint is a root; choose endpoints off the "
                "root set");
  }
  if (!(max_width > 0)) throw Error("isolate_roots: max_width must be > 0");
  Isolator iso{p, sturm_chain(p), max_width, {}};
  iso.isolate(a, b);
  return iso.out;
}

}  // namespace schlicht
