#include "sms3/cg.hpp"

#include <sstream>

#include "sms3/error.hpp"

namespace sms3 {

namespace {

std::array<Int, 6> doubled_three_j(const Int& m, const Int& n, const Int& k,
                                   const Int& i, const Int& j) {
  return {m, n, m + n - 2 * k, m - 2 * i, n - 2 * j, 2 * (i + j) - m - n};
}

}  // namespace

SemiMagicSquare square_from_cg(const Int& m, const Int& n, const Int& k,
                               const Int& i, const Int& j) {
  const Int m_prime = m + n - i - j - k;
  Mat3 e;
  e << n - k, m - k, k,
       i, j, m_prime,
       m - i, n - j, i + j - k;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (e(r, c) < 0)
        raise("InvalidIndex", "dictionary entry (" + std::to_string(r + 1) + "," +
                                  std::to_string(c + 1) + ") = " + to_decimal(e(r, c)) +
                                  " is negative");
  return validate_square(e);
}

SemiMagicSquare square_from_cg(const CGIndex& idx) {
  return square_from_cg(idx.m, idx.n, idx.k, idx.i, idx.j);
}

CGIndex cg_from_square(const SemiMagicSquare& square) {
  const Mat3& e = square.mat;
  CGIndex idx;
  idx.k = e(0, 2);
  idx.m = e(0, 1) + e(0, 2);
  idx.n = e(0, 0) + e(0, 2);
  idx.i = e(1, 0);
  idx.j = e(1, 1);
  idx.m_prime = idx.m + idx.n - idx.i - idx.j - idx.k;
  idx.three_j_doubled = doubled_three_j(idx.m, idx.n, idx.k, idx.i, idx.j);
  return idx;
}

Int cg_coefficient(const SemiMagicSquare& square) {
  const CGIndex idx = cg_from_square(square);
  const Int a = idx.i + idx.j - idx.k;  // i+j-k
  const Int b = idx.m - idx.i;
  const Int c = idx.n - idx.j;
  Int lo = 0;
  lo = std::max(lo, Int(idx.k - idx.j));
  lo = std::max(lo, Int(idx.k - b));
  Int hi = idx.i;
  hi = std::min(hi, idx.k);
  hi = std::min(hi, c);
  Int total = 0;
  for (Int t = lo; t <= hi; ++t) {
    const Int term = binomial(a, idx.i - t) * binomial(b, idx.k - t) * binomial(c, t);
    if (mpz_odd_p(t.get_mpz_t()))
      total -= term;
    else
      total += term;
  }
  return total;
}

namespace {

Int reciprocity_multinomial(const Vec6& a) {
  return multinomial(a.sum(), {Int(a(0) + a(4)), Int(a(1) + a(5)), Int(a(2) + a(3))});
}

int reciprocity_sign(const Vec6& a) {
  const Int exponent = a(1) + a.head<3>().minCoeff();
  return mpz_odd_p(exponent.get_mpz_t()) ? -1 : 1;
}

}  // namespace

ReciprocityReport reciprocity_check(const Vec6& a) {
  const Vec6 u = upshift(a);
  const PathPolynomial poly = path_polynomial(u);
  ReciprocityReport report;
  report.lhs = poly.at_minus_one();
  report.v = poly.at_one();
  report.rhs = reciprocity_sign(u) * reciprocity_multinomial(u) *
               cg_coefficient(from_sextuple(u));
  return report;
}

PolynomialTransform transform_polynomial(const GroupElement& g, const Vec6& a) {
  const Vec6 u = upshift(a);
  return PolynomialTransform{act_slots(g, u), !preserves_rows(g.slots)};
}

std::string half_string(const Int& doubled) {
  if (mpz_odd_p(doubled.get_mpz_t())) return to_decimal(doubled) + "/2";
  return to_decimal(Int(doubled / 2));
}

namespace {

std::string tensor_side(const Vec6& a, const CGIndex& idx) {
  std::ostringstream out;
  out << "(" << a.sum() << "; " << a(0) + a(4) << "," << a(1) + a(5) << ","
      << a(2) + a(3) << ")*c[" << idx.m << "," << idx.n << "," << idx.k << "]("
      << idx.i << "," << idx.j << ")";
  return out.str();
}

std::string three_j_side(const Vec6& a, const CGIndex& idx) {
  const auto& d = idx.three_j_doubled;
  std::ostringstream out;
  out << "(" << a.sum() << "; " << a(0) + a(4) << "," << a(1) + a(5) << ","
      << a(2) + a(3) << ")*{" << half_string(d[0]) << " " << half_string(d[1])
      << " " << half_string(d[2]) << " | " << half_string(d[3]) << " "
      << half_string(d[4]) << " " << half_string(d[5]) << "}";
  return out.str();
}

}  // namespace

ReggeIdentity regge_identity(const GroupElement& g, const Vec6& a) {
  const Vec6 source = upshift(a);
  const PolynomialTransform transform = transform_polynomial(g, source);
  const Vec6& target = transform.target;

  // Sign from the reciprocity theorem applied to both sides, plus (-1)^m0
  // when the coefficient list reverses.
  const Int m0 = source.head<3>().minCoeff();
  Int exponent = source(1) + m0;
  exponent += target(1) + target.head<3>().minCoeff();
  if (transform.reversed) exponent += m0;
  const int sign = mpz_odd_p(exponent.get_mpz_t()) ? -1 : 1;

  ReggeIdentity identity;
  identity.g = g;
  identity.source = source;
  identity.target = target;
  identity.sign = sign;
  identity.left_multinomial = reciprocity_multinomial(source);
  identity.right_multinomial = reciprocity_multinomial(target);
  const SemiMagicSquare source_square = from_sextuple(source);
  const SemiMagicSquare target_square = from_sextuple(target);
  identity.c_source = cg_coefficient(source_square);
  identity.c_target = cg_coefficient(target_square);

  if (identity.left_multinomial * identity.c_source !=
      sign * identity.right_multinomial * identity.c_target)
    throw std::logic_error("regge identity failed numeric verification for g = " +
                           cycle_notation(g.slots));

  const CGIndex source_idx = cg_from_square(source_square);
  const CGIndex target_idx = cg_from_square(target_square);
  const std::string sign_text = sign < 0 ? "-" : "+";
  std::ostringstream out;
  out << tensor_side(source, source_idx) << " = " << sign_text << " "
      << tensor_side(target, target_idx) << "\n"
      << three_j_side(source, source_idx) << " = " << sign_text << " "
      << three_j_side(target, target_idx);
  identity.rendered = out.str();
  return identity;
}

std::vector<ReggeIdentity> regge_orbit_table(const Vec6& a) {
  std::vector<ReggeIdentity> table;
  table.reserve(all_elements().size());
  for (const GroupElement& g : all_elements()) table.push_back(regge_identity(g, a));
  return table;
}

}  // namespace sms3
