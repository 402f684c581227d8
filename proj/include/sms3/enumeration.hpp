#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sms3/core.hpp"
#include "sms3/types.hpp"

namespace sms3 {

// Exact binomial; zero when k < 0 or k > n.
Int binomial(const Int& n, const Int& k);

// Exact multinomial; zero when any part is negative or the parts do not sum
// to n.
Int multinomial(const Int& n, std::span<const Int> parts);
Int multinomial(const Int& n, std::initializer_list<Int> parts);

Int factorial(unsigned long n);

// F(M,z): coefficient t counts the length-rho words over the six permutation
// matrices that use the t-shifted representative.  F(M,1) is the path number,
// F(M,-1) the signed Clebsch-Gordan quantity.
struct PathPolynomial {
  std::vector<Int> coeffs;  // degree t = index, length m0+1
  Int rho;

  Int eval(const Int& z) const;
  Int at_one() const;
  Int at_minus_one() const;
};

// Number of lattice paths from the zero square to the square of a:
// sum over t of multinomial(rho; a1-t, a2-t, a3-t, a4+t, a5+t, a6+t).
Int path_number(const Vec6& a);

PathPolynomial path_polynomial(const Vec6& a);

// v(M) = multinomial(rho; a1..a6) * sum_t q(a,t), with exact rational terms
// q(a,t) = [C(a1,t)C(a2,t)C(a3,t)] / [C(a4+t,t)C(a5+t,t)C(a6+t,t)].
struct HypergeometricFactor {
  std::vector<Rat> terms;  // t = 0..m0; terms[0] = 1

  Rat sum() const;
};

HypergeometricFactor hypergeometric_factor(const Vec6& a);

// Read-only parameter lists of the terminating series behind the factor:
// upper -a1, -a2, -a3; lower a4+1, a5+1, a6+1; argument -z.  One lower
// parameter equals 1 for upshifted input and plays the role of t!.
struct SeriesParameters {
  std::array<Int, 3> upper;
  std::array<Int, 3> lower;
};

SeriesParameters hypergeometric_parameters(const Vec6& a);

// (6^t, sum of v(M) over all squares with rho = t); the two agree.
std::pair<Int, Int> row_sum_check(unsigned t);

// Franel numbers: sum_t C(s,t)^3.
Int franel(unsigned long s);

// p(s) = v(sJ) = multinomial(3s; s,s,s) * franel(s).
Int p_of_s(unsigned long s);

// (s+1)^2 F(s+1) = (7s^2+7s+2) F(s) + 8 s^2 F(s-1), s >= 1.
bool franel_recurrence_check(unsigned long s);

// (s+1)^4 p(s+1) = 3(3s+2)(3s+1)(7s^2+7s+2) p(s) + 72(9s^2-4)(9s^2-1) p(s-1).
bool p_recurrence_check(unsigned long s);

// Independent dynamic program over the order ideal of M: v(0)=1 and
// v(N) = sum of v(N - P_i) over the steps that stay non-negative.
Int oracle_path_count(const SemiMagicSquare& m);

// All upshifted sextuples with coefficient sum r, in lexicographic order.
std::vector<Vec6> upshifted_with_rank(unsigned r);

}  // namespace sms3
