#include "sms3/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "sms3/error.hpp"
#include "sms3/group.hpp"

namespace sms3 {

Mat3 GradedPoset::matrix(int id) const { return from_sextuple(elements_[id]).mat; }

int GradedPoset::find(const Vec6& a) const {
  auto it = index_.find(a);
  return it == index_.end() ? -1 : it->second;
}

int poset_size_guard() {
  static const int guard = [] {
    if (const char* env = std::getenv("SMS3_POSET_MAX_S")) {
      const int value = std::atoi(env);
      if (value > 0) return value;
    }
    return 6;
  }();
  return guard;
}

GradedPoset build(int s) {
  if (s < 0) raise("UsageError", "poset bound must be non-negative");
  if (s > poset_size_guard())
    raise("ResourceBound", "s = " + std::to_string(s) + " exceeds the poset size guard " +
                               std::to_string(poset_size_guard()) +
                               " (set SMS3_POSET_MAX_S to raise it)");

  GradedPoset poset;
  poset.s_ = s;

  // Upshifted sextuples with max entry bound: min(a4..a6) = 0 and
  // max(a1..a3) <= s - max(a4..a6).
  for (int a4 = 0; a4 <= s; ++a4)
    for (int a5 = 0; a5 <= s; ++a5)
      for (int a6 = 0; a6 <= s; ++a6) {
        if (std::min({a4, a5, a6}) != 0) continue;
        const int cap = s - std::max({a4, a5, a6});
        for (int a1 = 0; a1 <= cap; ++a1)
          for (int a2 = 0; a2 <= cap; ++a2)
            for (int a3 = 0; a3 <= cap; ++a3) {
              Vec6 a;
              a << a1, a2, a3, a4, a5, a6;
              poset.elements_.push_back(a);
            }
      }

  std::sort(poset.elements_.begin(), poset.elements_.end(),
            [](const Vec6& x, const Vec6& y) {
              const Int rx = x.sum(), ry = y.sum();
              if (rx != ry) return rx < ry;
              return Vec6Less{}(x, y);
            });

  poset.levels_.resize(poset.rank_count());
  for (int id = 0; id < poset.element_count(); ++id) {
    const int r = static_cast<int>(to_ulong(poset.elements_[id].sum()));
    poset.ranks_.push_back(r);
    poset.levels_[r].push_back(id);
    poset.index_.emplace(poset.elements_[id], id);
  }

  poset.covers_.resize(poset.element_count());
  poset.path_numbers_.assign(poset.element_count(), 0);
  poset.path_numbers_[0] = 1;
  const Int bound(s);
  for (int id = 0; id < poset.element_count(); ++id) {
    for (int t = 0; t < 6; ++t) {
      Vec6 step = poset.elements_[id];
      step(t) += 1;
      const Vec6 above = upshift(step);
      if (min_max_entries(above).second > bound) continue;
      const int target = poset.find(above);
      if (target < 0) throw std::logic_error("cover missing from element table");
      poset.covers_[id].push_back(target);
      poset.path_numbers_[target] += poset.path_numbers_[id];
    }
    std::sort(poset.covers_[id].begin(), poset.covers_[id].end());
  }
  return poset;
}

Int ConvolutionReport::breakdown_sum() const {
  Int total = 0;
  for (const ConvolutionTerm& term : breakdown) total += term.product;
  return total;
}

ConvolutionReport vandermonde_check(const GradedPoset& poset, int k) {
  if (k < 0 || k >= poset.rank_count())
    raise("UsageError", "rank " + std::to_string(k) + " outside 0.." +
                            std::to_string(poset.rank_count() - 1));
  ConvolutionReport report{k, poset.path_number_of(poset.top()), {}};
  const Int bound(poset.s());
  const auto lookup = [&poset](const Vec6& a) {
    const int id = poset.find(a);
    if (id < 0) throw std::logic_error("orbit left the bounded poset");
    return id;
  };
  std::set<Vec6, Vec6Less> seen;
  for (int id : poset.level(k)) {
    const Vec6& a = poset.sextuple(id);
    if (seen.count(a)) continue;
    const OrbitReport orb = orbit(a);
    for (const Vec6& member : orb.members) seen.insert(member);
    const Int v = poset.path_number_of(lookup(orb.representative));
    const Int v_dual = poset.path_number_of(lookup(dual(orb.representative, bound)));
    report.breakdown.push_back(
        {orb.representative, orb.size, v, v_dual, Int(v * v_dual * orb.size)});
  }
  std::sort(report.breakdown.begin(), report.breakdown.end(),
            [](const ConvolutionTerm& x, const ConvolutionTerm& y) {
              return Vec6Less{}(x.rep, y.rep);
            });
  return report;
}

Int order_ideal_size(const SemiMagicSquare& m) {
  // Walk the down-set; every element below M is reachable by subtracting
  // permutation-matrix steps.
  std::set<Vec6, Vec6Less> seen;
  std::vector<Vec6> frontier{to_sextuple(m)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Vec6> next;
    for (const Vec6& a : frontier)
      for (int t = 0; t < 6; ++t) {
        Vec6 below = a;
        below(t) -= 1;
        const Int shift = below.tail<3>().minCoeff();
        Vec6 candidate = below;
        for (int i = 0; i < 3; ++i) candidate(i) += shift;
        for (int i = 3; i < 6; ++i) candidate(i) -= shift;
        if ((candidate.array() < 0).any()) continue;
        if (seen.insert(candidate).second) next.push_back(candidate);
      }
    frontier = std::move(next);
  }
  return Int(seen.size());
}

namespace {

std::string dot_label(const GradedPoset& poset, int id, DotLabel labels) {
  std::ostringstream out;
  switch (labels) {
    case DotLabel::matrix: {
      const Mat3 m = poset.matrix(id);
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) out << (c ? " " : "") << m(r, c);
        out << "\\n";
      }
      break;
    }
    case DotLabel::rectangle: {
      const Vec6& a = poset.sextuple(id);
      out << a(0) << " " << a(1) << " " << a(2) << "\\n"
          << a(3) << " " << a(4) << " " << a(5);
      break;
    }
    case DotLabel::path_number:
      out << poset.path_number_of(id);
      break;
  }
  return out.str();
}

}  // namespace

std::string export_dot(const GradedPoset& poset, DotLabel labels) {
  std::ostringstream out;
  out << "digraph M3 {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (int k = 0; k < poset.rank_count(); ++k) {
    out << "  { rank=same;";
    for (int id : poset.level(k)) out << " n" << id << ";";
    out << " }\n";
  }
  for (int id = 0; id < poset.element_count(); ++id)
    out << "  n" << id << " [label=\"" << dot_label(poset, id, labels) << "\"];\n";
  for (int id = 0; id < poset.element_count(); ++id)
    for (int target : poset.covers(id))
      out << "  n" << id << " -> n" << target << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace sms3
