#include "sms3/core.hpp"

#include <algorithm>

#include "sms3/error.hpp"

namespace sms3 {

Int int_from_decimal(const std::string& text) {
  try {
    return Int(text);
  } catch (const std::invalid_argument&) {
    raise("UsageError", "not a decimal integer: '" + text + "'");
  }
}

unsigned long to_ulong(const Int& x) {
  if (x < 0 || !x.fits_ulong_p())
    raise("ResourceBound", "value does not fit an unsigned machine word: " + to_decimal(x));
  return x.get_ui();
}

long to_long(const Int& x) {
  if (!x.fits_slong_p())
    raise("ResourceBound", "value does not fit a machine word: " + to_decimal(x));
  return x.get_si();
}

namespace {

Mat3 perm_matrix(const std::array<int, 3>& sigma) {
  Mat3 p = Mat3::Zero();
  for (int i = 0; i < 3; ++i) p(sigma[i], i) = 1;
  return p;
}

}  // namespace

const std::array<Mat3, 6>& permutation_matrices() {
  static const std::array<Mat3, 6> table = {
      perm_matrix({0, 1, 2}),  // e
      perm_matrix({1, 2, 0}),  // (123)
      perm_matrix({2, 0, 1}),  // (132)
      perm_matrix({2, 1, 0}),  // (13)
      perm_matrix({1, 0, 2}),  // (12)
      perm_matrix({0, 2, 1}),  // (23)
  };
  return table;
}

SemiMagicSquare validate_square(const Mat3& entries) {
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (entries(r, c) < 0)
        raise("NegativeEntry", "entry (" + std::to_string(r + 1) + "," +
                                   std::to_string(c + 1) + ") is negative");
  const Int line = entries.row(0).sum();
  for (int r = 1; r < 3; ++r)
    if (entries.row(r).sum() != line)
      raise("NotSemiMagic", "row " + std::to_string(r + 1) +
                                " sums to " + to_decimal(entries.row(r).sum()) +
                                ", expected " + to_decimal(line));
  for (int c = 0; c < 3; ++c)
    if (entries.col(c).sum() != line)
      raise("NotSemiMagic", "column " + std::to_string(c + 1) +
                                " sums to " + to_decimal(entries.col(c).sum()) +
                                ", expected " + to_decimal(line));
  return SemiMagicSquare{entries, line};
}

bool is_upshifted(const Vec6& a) {
  if ((a.array() < 0).any()) return false;
  return a.tail<3>().minCoeff() == 0;
}

Vec6 upshift(const Vec6& raw) {
  const Int t = raw.tail<3>().minCoeff();
  Vec6 out = raw;
  for (int i = 0; i < 3; ++i) out(i) += t;
  for (int i = 3; i < 6; ++i) out(i) -= t;
  if ((out.array() < 0).any())
    raise("Unrepresentable", "no syzygy shift yields non-negative coefficients");
  return out;
}

Vec6 to_sextuple(const SemiMagicSquare& m) {
  // Closed-form inversion of the entry dictionary: with a4 = t chosen minimal
  // so that a5, a6 stay non-negative, the result is already upshifted.
  const Mat3& e = m.mat;
  Int t = 0;
  t = std::max(t, Int(e(2, 0) - e(0, 1)));
  t = std::max(t, Int(e(1, 1) - e(0, 0)));
  Vec6 a;
  a(3) = t;
  a(0) = e(1, 1) - t;
  a(1) = e(0, 2) - t;
  a(2) = e(2, 0) - t;
  a(4) = e(0, 1) - a(2);
  a(5) = e(0, 0) - a(0);
  return upshift(a);
}

SemiMagicSquare from_sextuple(const Vec6& a) {
  for (int i = 0; i < 6; ++i)
    if (a(i) < 0)
      raise("NegativeEntry", "coefficient a" + std::to_string(i + 1) + " is negative");
  const auto& p = permutation_matrices();
  Mat3 m = Mat3::Zero();
  for (int t = 0; t < 6; ++t)
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        if (p[t](r, c) != 0) m(r, c) += a(t);
  return SemiMagicSquare{m, a.sum()};
}

ReducedDecomposition reduce(const Vec6& a) {
  const Vec6 u = upshift(a);
  const Int m0 = u.head<3>().minCoeff();
  Vec6 red = u;
  for (int i = 0; i < 3; ++i) red(i) -= m0;
  return ReducedDecomposition{m0, red};
}

std::pair<Int, Int> min_max_entries(const Vec6& a) {
  return {a.head<3>().minCoeff() + a.tail<3>().minCoeff(),
          a.head<3>().maxCoeff() + a.tail<3>().maxCoeff()};
}

Vec6 dual(const Vec6& a, const Int& s) {
  const Vec6 u = upshift(a);
  const auto [mn, mx] = min_max_entries(u);
  if (mx > s)
    raise("OutOfBounds", "max entry " + to_decimal(mx) + " exceeds bound " + to_decimal(s));
  const Int m1 = u.tail<3>().maxCoeff();
  const Int s1 = s - m1;
  Vec6 out;
  for (int i = 0; i < 3; ++i) out(i) = s1 - u(i);
  for (int i = 3; i < 6; ++i) out(i) = m1 - u(i);
  return out;
}

}  // namespace sms3
