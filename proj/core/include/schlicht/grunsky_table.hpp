// Storage for the logarithmic-expansion coefficient table
// log((f(t)-f(z))/(t-z)) = sum_{p,q>=0} w_{p,q} t^p z^q  (w_{0,0} dropped).
//
// The table is symmetric (w_{p,q} == w_{q,p}); symmetry of a computed table
// is a checked property, not an assumption.
#pragma once

#include <algorithm>
#include <string>
#include <type_traits>
#include <vector>

#include "schlicht/errors.hpp"
#include "schlicht/field.hpp"

namespace schlicht {

template <class T>
class GrunskyTable {
 public:
  explicit GrunskyTable(int max_index)
      : n_(max_index), w_((max_index + 1) * (max_index + 1), T{}) {
    if (max_index < 1) throw Error("GrunskyTable: max_index must be >= 1");
  }

  int max_index() const { return n_; }

  const T& at(int p, int q) const {
    check_index(p, q);
    return w_[p * (n_ + 1) + q];
  }

  // Sets both (p,q) and (q,p).
  void set(int p, int q, const T& v) {
    check_index(p, q);
    w_[p * (n_ + 1) + q] = v;
    w_[q * (n_ + 1) + p] = v;
  }

  // Builds a table from a full (max_index+1)^2 row-major matrix, verifying
  // symmetry: exactly for rational entries, to |d| <= tol * max(1, |w|)
  // for floating entries (independent summation orders may differ in ulps).
  static GrunskyTable from_matrix(int max_index, const std::vector<T>& m,
                                  double tol = 1e-12) {
    GrunskyTable t(max_index);
    if (static_cast<int>(m.size()) != (max_index + 1) * (max_index + 1)) {
      throw Error("GrunskyTable: matrix size mismatch");
    }
    for (int p = 0; p <= max_index; ++p) {
      for (int q = p; q <= max_index; ++q) {
        const T& a = m[p * (max_index + 1) + q];
        const T& b = m[q * (max_index + 1) + p];
        if constexpr (std::is_same_v<T, Rational>) {
          (void)tol;
          if (a != b) {
            throw Error("GrunskyTable: asymmetric entry (" +
                        std::to_string(p) + "," + std::to_string(q) + ")");
          }
        } else {
          double d = abs_as_double(a - b);
          double scale = std::max(1.0, abs_as_double(a));
          if (!(d <= tol * scale)) {
            throw Error("GrunskyTable: asymmetric entry (" +
                        std::to_string(p) + "," + std::to_string(q) + ")");
          }
        }
        t.set(p, q, a);
      }
    }
    return t;
  }

 private:
  void check_index(int p, int q) const {
    if (p < 0 || q < 0 || p > n_ || q > n_) {
      throw MissingIndexError("GrunskyTable: index (" + std::to_string(p) +
                              "," + std::to_string(q) +
                              ") outside stored range 0.." + std::to_string(n_));
    }
  }

  int n_;
  std::vector<T> w_;
};

}  // namespace schlicht
