#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>

namespace Eigen {

// Exact integer scalar for fixed-size matrices.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

}  // namespace Eigen

namespace sms3 {

using Int = mpz_class;
using Rat = mpq_class;

using Mat3 = Eigen::Matrix<Int, 3, 3>;
using Vec6 = Eigen::Matrix<Int, 6, 1>;
using Vec3 = Eigen::Matrix<Int, 3, 1>;

inline bool equal(const Mat3& a, const Mat3& b) {
  return (a.array() == b.array()).all();
}

inline bool equal(const Vec6& a, const Vec6& b) {
  return (a.array() == b.array()).all();
}

// Row-major lexicographic orders, usable as std::map/std::set comparators.
struct Mat3Less {
  bool operator()(const Mat3& a, const Mat3& b) const {
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        if (a(r, c) != b(r, c)) return a(r, c) < b(r, c);
    return false;
  }
};

struct Vec6Less {
  bool operator()(const Vec6& a, const Vec6& b) const {
    for (int i = 0; i < 6; ++i)
      if (a(i) != b(i)) return a(i) < b(i);
    return false;
  }
};

inline std::string to_decimal(const Int& x) { return x.get_str(); }

Int int_from_decimal(const std::string& text);

// Narrowing helpers; throw ResourceBound when the value does not fit.
unsigned long to_ulong(const Int& x);
long to_long(const Int& x);

}  // namespace sms3
