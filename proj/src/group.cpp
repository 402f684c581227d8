#include "sms3/group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sms3/error.hpp"

namespace sms3 {

Perm3 compose(const Perm3& f, const Perm3& g) {
  Perm3 out{};
  for (int i = 0; i < 3; ++i) out[i] = f[g[i]];
  return out;
}

Perm6 compose(const Perm6& f, const Perm6& g) {
  Perm6 out{};
  for (int i = 0; i < 6; ++i) out[i] = f[g[i]];
  return out;
}

Perm6 inverse(const Perm6& p) {
  Perm6 out{};
  for (int i = 0; i < 6; ++i) out[p[i]] = i;
  return out;
}

namespace {

const std::array<Perm3, 6> kS3 = {
    Perm3{0, 1, 2}, Perm3{0, 2, 1}, Perm3{1, 0, 2},
    Perm3{1, 2, 0}, Perm3{2, 0, 1}, Perm3{2, 1, 0},
};

Mat3 apply_matrix(const Perm3& row, const Perm3& col, bool transpose, const Mat3& m) {
  const Mat3 base = transpose ? Mat3(m.transpose()) : m;
  Mat3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out(row[r], col[c]) = base(r, c);
  return out;
}

// The action permutes the six permutation matrices; reading off those images
// gives the slot permutation, which extends linearly to every square.
Perm6 slots_for(const Perm3& row, const Perm3& col, bool transpose) {
  const auto& p = permutation_matrices();
  Perm6 slots{};
  for (int t = 0; t < 6; ++t) {
    const Mat3 image = apply_matrix(row, col, transpose, p[t]);
    int u = -1;
    for (int v = 0; v < 6; ++v)
      if (equal(image, p[v])) {
        u = v;
        break;
      }
    if (u < 0) throw std::logic_error("permutation matrix image not found");
    slots[t] = u;
  }
  return slots;
}

struct Tables {
  std::vector<GroupElement> elements;
  std::map<Perm6, int> by_slots;
};

const Tables& tables() {
  static const Tables t = [] {
    Tables out;
    out.elements.reserve(72);
    for (int e = 0; e < 2; ++e)
      for (const Perm3& sigma : kS3)
        for (const Perm3& tau : kS3) {
          GroupElement g{sigma, tau, e == 1, slots_for(sigma, tau, e == 1),
                         static_cast<int>(out.elements.size())};
          auto [it, fresh] = out.by_slots.emplace(g.slots, g.id);
          if (!fresh) throw std::logic_error("slot representation is not faithful");
          out.elements.push_back(g);
        }
    return out;
  }();
  return t;
}

}  // namespace

const std::vector<GroupElement>& all_elements() { return tables().elements; }

const GroupElement& identity_element() { return all_elements().front(); }

const GroupElement& element_by_slots(const Perm6& slots) {
  const auto& t = tables();
  auto it = t.by_slots.find(slots);
  if (it == t.by_slots.end())
    raise("UsageError", "slot permutation " + cycle_notation(slots) +
                            " is not a symmetry of the rectangle");
  return t.elements[it->second];
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  return element_by_slots(compose(g.slots, h.slots));
}

GroupElement inverse(const GroupElement& g) {
  return element_by_slots(inverse(g.slots));
}

SemiMagicSquare act(const GroupElement& g, const SemiMagicSquare& m) {
  return SemiMagicSquare{apply_matrix(g.row, g.col, g.transpose, m.mat), m.rho};
}

Vec6 act_slots(const GroupElement& g, const Vec6& a) {
  Vec6 permuted;
  for (int t = 0; t < 6; ++t) permuted(g.slots[t]) = a(t);
  return upshift(permuted);
}

bool preserves_rows(const Perm6& slots) {
  return slots[0] < 3 && slots[1] < 3 && slots[2] < 3;
}

const char* orbit_class_name(OrbitClass c) {
  switch (c) {
    case OrbitClass::zero: return "zero";
    case OrbitClass::class6: return "class6";
    case OrbitClass::class9: return "class9";
    case OrbitClass::class12: return "class12";
    case OrbitClass::class18: return "class18";
    case OrbitClass::class36a: return "class36a";
    case OrbitClass::class36b: return "class36b";
    case OrbitClass::class72: return "class72";
  }
  return "?";
}

OrbitClass orbit_class_from_name(const std::string& name) {
  for (OrbitClass c : {OrbitClass::zero, OrbitClass::class6, OrbitClass::class9,
                       OrbitClass::class12, OrbitClass::class18, OrbitClass::class36a,
                       OrbitClass::class36b, OrbitClass::class72})
    if (name == orbit_class_name(c)) return c;
  raise("UsageError", "unknown orbit class '" + name + "'");
}

int orbit_class_size(OrbitClass c) {
  switch (c) {
    case OrbitClass::zero: return 1;
    case OrbitClass::class6: return 6;
    case OrbitClass::class9: return 9;
    case OrbitClass::class12: return 12;
    case OrbitClass::class18: return 18;
    case OrbitClass::class36a: return 36;
    case OrbitClass::class36b: return 36;
    case OrbitClass::class72: return 72;
  }
  return 0;
}

const char* stabilizer_label(OrbitClass c) {
  switch (c) {
    case OrbitClass::zero: return "G";
    case OrbitClass::class6: return "D12";
    case OrbitClass::class9: return "D8";
    case OrbitClass::class12: return "S3";
    case OrbitClass::class18: return "Z2xZ2";
    case OrbitClass::class36a: return "Z2";
    case OrbitClass::class36b: return "Z2";
    case OrbitClass::class72: return "trivial";
  }
  return "?";
}

namespace {

enum class RowShape { zero, single, twice, pair };

// Shape of one holey rectangle row, sorted descending (ends with 0).
RowShape row_shape(const std::array<Int, 3>& r) {
  if (r[0] == 0) return RowShape::zero;
  if (r[1] == 0) return RowShape::single;
  return r[0] == r[1] ? RowShape::twice : RowShape::pair;
}

}  // namespace

OrbitClass classify_reduced(const Vec6& a_red) {
  const Vec6 holey = reduce(a_red).reduced;
  std::array<Int, 3> u{holey(0), holey(1), holey(2)};
  std::array<Int, 3> v{holey(3), holey(4), holey(5)};
  std::sort(u.begin(), u.end(), std::greater<Int>());
  std::sort(v.begin(), v.end(), std::greater<Int>());
  const RowShape su = row_shape(u);
  const RowShape sv = row_shape(v);
  const bool same = u == v;

  if (su == RowShape::zero && sv == RowShape::zero) return OrbitClass::zero;
  if (su == RowShape::zero || sv == RowShape::zero) {
    const RowShape other = su == RowShape::zero ? sv : su;
    return other == RowShape::pair ? OrbitClass::class12 : OrbitClass::class6;
  }
  if (same)
    return su == RowShape::pair ? OrbitClass::class36b : OrbitClass::class9;
  const bool u_pair = su == RowShape::pair;
  const bool v_pair = sv == RowShape::pair;
  if (!u_pair && !v_pair) return OrbitClass::class18;
  if (u_pair && v_pair) return OrbitClass::class72;
  return OrbitClass::class36a;
}

OrbitReport orbit(const Vec6& a) {
  const Vec6 base = upshift(a);
  std::set<Vec6, Vec6Less> images;
  OrbitReport report;
  for (const GroupElement& g : all_elements()) {
    const Vec6 image = act_slots(g, base);
    images.insert(image);
    if (equal(image, base)) report.stabilizer_ids.push_back(g.id);
  }
  report.members.assign(images.begin(), images.end());
  report.representative = report.members.front();
  report.size = static_cast<int>(report.members.size());
  report.stabilizer_order = static_cast<int>(report.stabilizer_ids.size());
  report.orbit_class = classify_reduced(report.representative);
  return report;
}

OrbitReport orbit(const SemiMagicSquare& m) { return orbit(to_sextuple(m)); }

std::string one_line(const Perm3& p) {
  std::string s;
  for (int i = 0; i < 3; ++i) s += static_cast<char>('1' + p[i]);
  return s;
}

std::string cycle_notation(const Perm6& p) {
  std::string out;
  std::array<bool, 6> seen{};
  for (int i = 0; i < 6; ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    int j = i;
    do {
      seen[j] = true;
      out += static_cast<char>('1' + j);
      j = p[j];
    } while (j != i);
    out += ')';
  }
  return out.empty() ? "e" : out;
}

namespace {

Perm3 parse_one_line(const std::string& s) {
  if (s.size() != 3) raise("UsageError", "one-line permutation must have 3 digits: '" + s + "'");
  Perm3 p{};
  std::array<bool, 3> seen{};
  for (int i = 0; i < 3; ++i) {
    const int v = s[i] - '1';
    if (v < 0 || v > 2 || seen[v])
      raise("UsageError", "'" + s + "' is not a permutation of 123");
    seen[v] = true;
    p[i] = v;
  }
  return p;
}

Perm6 parse_cycles(const std::string& s) {
  Perm6 p{0, 1, 2, 3, 4, 5};
  if (s == "e" || s == "()") return p;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') raise("UsageError", "expected '(' in cycle notation: '" + s + "'");
    std::vector<int> cycle;
    for (++i; i < s.size() && s[i] != ')'; ++i) {
      const int v = s[i] - '1';
      if (v < 0 || v > 5) raise("UsageError", "cycle entries must be slots 1..6: '" + s + "'");
      cycle.push_back(v);
    }
    if (i >= s.size()) raise("UsageError", "unterminated cycle in '" + s + "'");
    ++i;
    if (cycle.size() < 2) raise("UsageError", "cycles need at least two slots: '" + s + "'");
    for (size_t j = 0; j < cycle.size(); ++j) {
      int from = cycle[j];
      int to = cycle[(j + 1) % cycle.size()];
      if (p[from] != from)
        raise("UsageError", "slot " + std::to_string(from + 1) + " repeated in '" + s + "'");
      p[from] = to;
    }
  }
  std::array<bool, 6> seen{};
  for (int v : p) {
    if (seen[v]) raise("UsageError", "'" + s + "' is not a permutation");
    seen[v] = true;
  }
  return p;
}

}  // namespace

GroupElement element_from_spec(const std::string& spec) {
  if (spec.rfind("R=", 0) == 0) {
    Perm3 row{0, 1, 2}, col{0, 1, 2};
    bool transpose = false;
    size_t pos = 0;
    while (pos < spec.size()) {
      size_t next = spec.find(',', pos);
      if (next == std::string::npos) next = spec.size();
      const std::string part = spec.substr(pos, next - pos);
      if (part.rfind("R=", 0) == 0)
        row = parse_one_line(part.substr(2));
      else if (part.rfind("C=", 0) == 0)
        col = parse_one_line(part.substr(2));
      else if (part.rfind("T=", 0) == 0) {
        if (part != "T=0" && part != "T=1")
          raise("UsageError", "T must be 0 or 1 in '" + spec + "'");
        transpose = part == "T=1";
      } else
        raise("UsageError", "unknown component '" + part + "' in element spec");
      pos = next + 1;
    }
    for (const GroupElement& g : all_elements())
      if (g.row == row && g.col == col && g.transpose == transpose) return g;
    throw std::logic_error("element table incomplete");
  }
  return element_by_slots(parse_cycles(spec));
}

}  // namespace sms3
