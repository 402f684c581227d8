#pragma once

#include <array>
#include <string>
#include <vector>

#include "sms3/core.hpp"
#include "sms3/types.hpp"

namespace sms3 {

// Permutations stored as image arrays, 0-based: p[i] is the image of i.
using Perm3 = std::array<int, 3>;
using Perm6 = std::array<int, 6>;

Perm3 compose(const Perm3& f, const Perm3& g);  // f after g
Perm6 compose(const Perm6& f, const Perm6& g);
Perm6 inverse(const Perm6& p);

// One of the 72 line-sum-preserving symmetries: permute rows by `row`,
// columns by `col`, optionally transpose first.  `slots` is the induced
// permutation of the six sextuple coefficients, derived once at startup from
// the action on the permutation matrices.
struct GroupElement {
  Perm3 row;
  Perm3 col;
  bool transpose;
  Perm6 slots;
  int id;  // index into all_elements()
};

// All 72 elements in a fixed deterministic order; slot permutations are
// distinct (the slot representation is faithful).
const std::vector<GroupElement>& all_elements();

const GroupElement& identity_element();
const GroupElement& element_by_slots(const Perm6& slots);
GroupElement compose(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

// Parses either slot-cycle notation "(14)(25)(36)" (1-based slots) or
// "R=sigma,C=tau,T=0|1" with one-line permutations like R=213.
// Throws UsageError on malformed input or a permutation outside the group.
GroupElement element_from_spec(const std::string& spec);

// Matrix action: permute rows/columns of M (transposing first when set).
SemiMagicSquare act(const GroupElement& g, const SemiMagicSquare& m);

// Same action through the sextuple picture: permute slots, then upshift.
Vec6 act_slots(const GroupElement& g, const Vec6& a);

// Whether the slot permutation maps {a1,a2,a3} to itself (equivalently
// {a4,a5,a6} to itself); such elements leave path polynomials unchanged.
bool preserves_rows(const Perm6& slots);

enum class OrbitClass {
  zero,
  class6,
  class9,
  class12,
  class18,
  class36a,
  class36b,
  class72,
};

const char* orbit_class_name(OrbitClass c);
OrbitClass orbit_class_from_name(const std::string& name);
int orbit_class_size(OrbitClass c);
const char* stabilizer_label(OrbitClass c);

// Pattern-matches the holey rectangle taxonomy.  Accepts any representable
// sextuple; it is normalized (upshift, strip m0*j) before classification.
OrbitClass classify_reduced(const Vec6& a_red);

struct OrbitReport {
  Vec6 representative;  // lexicographically least upshifted sextuple
  int size = 0;
  int stabilizer_order = 0;
  OrbitClass orbit_class = OrbitClass::zero;
  std::vector<Vec6> members;         // sorted lexicographically
  std::vector<int> stabilizer_ids;   // elements fixing the square
};

OrbitReport orbit(const SemiMagicSquare& m);
OrbitReport orbit(const Vec6& a);

std::string one_line(const Perm3& p);  // e.g. "213"
std::string cycle_notation(const Perm6& p);  // e.g. "(14)(25)(36)", "e"

}  // namespace sms3
