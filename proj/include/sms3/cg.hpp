#pragma once

#include <array>
#include <string>
#include <vector>

#include "sms3/core.hpp"
#include "sms3/enumeration.hpp"
#include "sms3/group.hpp"
#include "sms3/types.hpp"

namespace sms3 {

// Tensor-product indices of a coupled pair, tied to a square through the
// entry dictionary
//   [ n-k  m-k   k  ]
//   [  i    j    m' ]      m' = m+n-i-j-k,
//   [ m-i  n-j  i+j-k ]
// with the doubled 3-j indices (2j1, 2j2, 2j3, 2m1, 2m2, 2m3) kept as
// integers so half-integer values stay exact.
struct CGIndex {
  Int m, n, k, i, j;
  Int m_prime;
  std::array<Int, 6> three_j_doubled;
};

// Builds the dictionary square; all nine entries must be non-negative.
// Throws InvalidIndex.
SemiMagicSquare square_from_cg(const CGIndex& idx);
SemiMagicSquare square_from_cg(const Int& m, const Int& n, const Int& k,
                               const Int& i, const Int& j);

// Reads the indices back off a square; inverse of square_from_cg.
CGIndex cg_from_square(const SemiMagicSquare& square);

// Un-normalized Clebsch-Gordan coefficient
//   C(M) = sum_t (-1)^t C(i+j-k, i-t) C(m-i, k-t) C(n-j, t).
Int cg_coefficient(const SemiMagicSquare& square);

// F(M,-1) against its closed form
//   (-1)^(a2+m0) * multinomial(rho; a1+a5, a2+a6, a3+a4) * C(M);
// v = F(M,1) comes along as a side check.
struct ReciprocityReport {
  Int lhs;  // F(M,-1)
  Int rhs;
  Int v;  // F(M,1)
};

ReciprocityReport reciprocity_check(const Vec6& a);

// How F(M,z) transforms under g: row-preserving slot permutations leave the
// coefficient list unchanged; row-crossing ones reverse it
// (F(M,z) = z^m0 F(M',1/z)).
struct PolynomialTransform {
  Vec6 target;  // upshifted sextuple of M' = g.M
  bool reversed;
};

PolynomialTransform transform_polynomial(const GroupElement& g, const Vec6& a);

// One symmetry identity
//   left_multinomial * C(M) = sign * right_multinomial * C(M'),
// verified in exact arithmetic on construction.
struct ReggeIdentity {
  GroupElement g;
  Vec6 source;
  Vec6 target;
  int sign;  // +1 or -1
  Int left_multinomial;
  Int right_multinomial;
  Int c_source;
  Int c_target;
  std::string rendered;  // tensor-product and 3-j notation
};

ReggeIdentity regge_identity(const GroupElement& g, const Vec6& a);

// One verified identity per group element, in element order.
std::vector<ReggeIdentity> regge_orbit_table(const Vec6& a);

// "x" for even doubled values, "x/2" for odd ones.
std::string half_string(const Int& doubled);

}  // namespace sms3
