#pragma once

#include <array>
#include <utility>

#include "sms3/types.hpp"

namespace sms3 {

// A 3x3 grid of non-negative integers whose rows and columns all sum to the
// same line sum rho.  Construct through validate_square or from_sextuple so
// the invariant and the cached rho always hold.
struct SemiMagicSquare {
  Mat3 mat;
  Int rho;
};

// The six 3x3 permutation matrices in the fixed slot order used everywhere:
// identity, the two 3-cycles, then the three transpositions.
const std::array<Mat3, 6>& permutation_matrices();

// Checks non-negativity and equal line sums; caches rho.
// Throws NegativeEntry, NotSemiMagic.
SemiMagicSquare validate_square(const Mat3& entries);

// Coefficient vector a with M = sum a_t P_t.  A sextuple is "upshifted" when
// min(a4,a5,a6) = 0; that representative is unique and is the canonical form.
bool is_upshifted(const Vec6& a);

// Syzygy-normalizes a raw integer vector (entries may be negative) to the
// upshifted representative.  Throws Unrepresentable when no shift along
// (1,1,1,-1,-1,-1) makes all entries non-negative.
Vec6 upshift(const Vec6& raw);

// Unique upshifted sextuple of a valid square.
Vec6 to_sextuple(const SemiMagicSquare& m);

// sum a_t P_t for non-negative a (upshifted not required).
// Throws NegativeEntry.
SemiMagicSquare from_sextuple(const Vec6& a);

// a = m0*(1,1,1,0,0,0) + reduced, with a zero somewhere in each triple of the
// reduced ("holey") part.  M_red = M - m0*J has a zero entry.
struct ReducedDecomposition {
  Int m0;
  Vec6 reduced;
};

ReducedDecomposition reduce(const Vec6& a);

// Extreme entries of the represented square, computed slot-wise:
// min(a1..a3)+min(a4..a6) and max(a1..a3)+max(a4..a6).  Independent of the
// representative.
std::pair<Int, Int> min_max_entries(const Vec6& a);

// Upshifted sextuple of sJ - M for M with max entry <= s.
// Throws OutOfBounds.
Vec6 dual(const Vec6& a, const Int& s);

inline Int rho(const Vec6& a) { return a.sum(); }

}  // namespace sms3
