#pragma once

#include <map>
#include <string>
#include <vector>

#include "sms3/core.hpp"
#include "sms3/types.hpp"

namespace sms3 {

// The finite graded poset of semi-magic squares with entries bounded by s,
// ranked by line sum.  Elements are stored as upshifted sextuples, sorted by
// (rank, lexicographic); covers point one rank up.
class GradedPoset {
 public:
  int s() const { return s_; }
  int element_count() const { return static_cast<int>(elements_.size()); }
  int rank_count() const { return 3 * s_ + 1; }

  const Vec6& sextuple(int id) const { return elements_[id]; }
  Mat3 matrix(int id) const;
  int rank_of(int id) const { return ranks_[id]; }
  const std::vector<int>& level(int k) const { return levels_[k]; }
  const std::vector<int>& covers(int id) const { return covers_[id]; }
  const Int& path_number_of(int id) const { return path_numbers_[id]; }

  // Index of an upshifted sextuple, or -1 when absent.
  int find(const Vec6& a) const;

  int bottom() const { return 0; }
  int top() const { return element_count() - 1; }

 private:
  friend GradedPoset build(int s);

  int s_ = 0;
  std::vector<Vec6> elements_;
  std::vector<int> ranks_;
  std::vector<std::vector<int>> levels_;
  std::vector<std::vector<int>> covers_;
  std::vector<Int> path_numbers_;
  std::map<Vec6, int, Vec6Less> index_;
};

// Size guard for build(); default 6, overridable with SMS3_POSET_MAX_S.
int poset_size_guard();

// Enumerates all elements, cover edges, and path numbers.
// Throws ResourceBound when s exceeds the configured guard.
GradedPoset build(int s);

struct ConvolutionTerm {
  Vec6 rep;  // canonical orbit representative
  int orbit_size;
  Int v;
  Int v_dual;
  Int product;  // orbit_size * v * v_dual
};

// The rank-k convolution: sum over level k of v(M) * v(sJ-M) equals v(sJ),
// reported orbit-grouped with representatives in lexicographic order.
struct ConvolutionReport {
  int k;
  Int total;  // v(sJ)
  std::vector<ConvolutionTerm> breakdown;

  Int breakdown_sum() const;
};

ConvolutionReport vandermonde_check(const GradedPoset& poset, int k);

// Number of semi-magic squares entrywise below M (M itself included).
Int order_ideal_size(const SemiMagicSquare& m);

enum class DotLabel { matrix, rectangle, path_number };

// Deterministic DOT digraph of the Hasse diagram, ranks as same-rank groups.
std::string export_dot(const GradedPoset& poset, DotLabel labels);

}  // namespace sms3
