#include "sms3/verify.hpp"

#include <functional>
#include <random>
#include <set>

#include "sms3/cg.hpp"
#include "sms3/core.hpp"
#include "sms3/enumeration.hpp"
#include "sms3/error.hpp"
#include "sms3/group.hpp"
#include "sms3/poset.hpp"

namespace sms3 {

std::vector<Vec6> random_upshifted(int count, unsigned max_rho, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vec6> out;
  out.reserve(count);
  for (int n = 0; n < count; ++n) {
    const unsigned r = std::uniform_int_distribution<unsigned>(0, max_rho)(rng);
    std::array<unsigned, 7> cuts{};
    cuts[5] = 0;
    cuts[6] = r;
    for (int i = 0; i < 5; ++i)
      cuts[i] = std::uniform_int_distribution<unsigned>(0, r)(rng);
    std::sort(cuts.begin(), cuts.end());
    Vec6 a;
    for (int i = 0; i < 6; ++i) a(i) = static_cast<long>(cuts[i + 1] - cuts[i]);
    out.push_back(upshift(a));
  }
  return out;
}

Int path_number_from_representative(const Vec6& representative) {
  const Int lo = -representative.tail<3>().minCoeff();
  const Int hi = representative.head<3>().minCoeff();
  Int total = 0;
  for (Int t = lo; t <= hi; ++t) {
    const std::array<Int, 6> parts = {
        representative(0) - t, representative(1) - t, representative(2) - t,
        representative(3) + t, representative(4) + t, representative(5) + t};
    total += multinomial(representative.sum(), std::span<const Int>(parts.data(), 6));
  }
  return total;
}

namespace {

using Check = std::function<std::string()>;  // empty string = pass

struct NamedCheck {
  std::string name;
  Check run;
};

std::vector<Vec6> all_upshifted_up_to(unsigned max_rho) {
  std::vector<Vec6> out;
  for (unsigned r = 0; r <= max_rho; ++r)
    for (const Vec6& a : upshifted_with_rank(r)) out.push_back(a);
  return out;
}

std::string check_all(const std::vector<Vec6>& squares,
                      const std::function<std::string(const Vec6&)>& f) {
  for (const Vec6& a : squares) {
    std::string detail = f(a);
    if (!detail.empty()) return detail;
  }
  return {};
}

std::string describe(const Vec6& a) {
  std::string s = "(";
  for (int i = 0; i < 6; ++i) {
    if (i) s += ",";
    s += to_decimal(a(i));
  }
  return s + ")";
}

// ---------------------------------------------------------------- core

std::vector<NamedCheck> core_checks() {
  return {
      {"square/sextuple round trip, rho <= 6",
       [] {
         return check_all(all_upshifted_up_to(6), [](const Vec6& a) -> std::string {
           const SemiMagicSquare m = from_sextuple(a);
           if (!equal(to_sextuple(m), a)) return "round trip failed at " + describe(a);
           if (!equal(from_sextuple(to_sextuple(m)).mat, m.mat))
             return "matrix round trip failed at " + describe(a);
           return {};
         });
       }},
      {"syzygy shifts represent the same square",
       [] {
         for (const Vec6& a : random_upshifted(100, 9, 11)) {
           for (long t = 1; t <= 3; ++t) {
             Vec6 shifted = a;
             for (int i = 0; i < 3; ++i) shifted(i) += t;
             // shifting the other way would push the tail negative
             if (!equal(from_sextuple(shifted).mat,
                        from_sextuple(upshift(shifted)).mat))
               return "syzygy mismatch at " + describe(a);
           }
         }
         return std::string{};
       }},
      {"rho equals the coefficient sum",
       [] {
         return check_all(all_upshifted_up_to(6), [](const Vec6& a) -> std::string {
           if (from_sextuple(a).rho != a.sum()) return "rho mismatch at " + describe(a);
           return {};
         });
       }},
      {"reduce reconstructs and leaves a hole",
       [] {
         return check_all(all_upshifted_up_to(6), [](const Vec6& a) -> std::string {
           const ReducedDecomposition d = reduce(a);
           Vec6 rebuilt = d.reduced;
           for (int i = 0; i < 3; ++i) rebuilt(i) += d.m0;
           if (!equal(rebuilt, a)) return "reconstruction failed at " + describe(a);
           if (d.reduced.head<3>().minCoeff() != 0 || d.reduced.tail<3>().minCoeff() != 0)
             return "reduced part is not holey at " + describe(a);
           const auto [mn, mx] = min_max_entries(d.reduced);
           if (mn != 0) return "reduced square has no zero entry at " + describe(a);
           return {};
         });
       }},
      {"dual is an involution and complements entrywise (s = 2)",
       [] {
         const GradedPoset p = build(2);
         const Mat3 top = Mat3::Constant(2);
         for (int id = 0; id < p.element_count(); ++id) {
           const Vec6& a = p.sextuple(id);
           const Vec6 d = dual(a, 2);
           if (!equal(dual(d, 2), a)) return "dual not an involution at " + describe(a);
           if (!equal(Mat3(from_sextuple(a).mat + from_sextuple(d).mat), top))
             return "M + M* != sJ at " + describe(a);
         }
         return std::string{};
       }},
      {"min/max agree with scanning the matrix, rho <= 8",
       [] {
         return check_all(all_upshifted_up_to(8), [](const Vec6& a) -> std::string {
           const auto [mn, mx] = min_max_entries(a);
           const Mat3 m = from_sextuple(a).mat;
           if (mn != m.minCoeff() || mx != m.maxCoeff())
             return "min/max mismatch at " + describe(a);
           return {};
         });
       }},
  };
}

// ---------------------------------------------------------------- group

Perm6 perm6_from_cycles(const char* text) { return element_from_spec(text).slots; }

std::vector<NamedCheck> group_checks() {
  return {
      {"72 distinct elements, closed, with identity and generators",
       []() -> std::string {
         const auto& elements = all_elements();
         if (elements.size() != 72) return "element count != 72";
         std::set<Perm6> slots;
         for (const GroupElement& g : elements) slots.insert(g.slots);
         if (slots.size() != 72) return "slot permutations not distinct";
         if (!slots.count(Perm6{0, 1, 2, 3, 4, 5})) return "identity missing";
         for (const char* gen : {"(12)", "(23)", "(14)(25)(36)"})
           if (!slots.count(element_from_spec(gen).slots))
             return std::string("generator ") + gen + " missing";
         for (const GroupElement& g : elements)
           for (const GroupElement& h : elements)
             if (!slots.count(compose(g.slots, h.slots))) return "not closed";
         return {};
       }},
      {"slot permutations are the closure of the three involutions",
       []() -> std::string {
         std::set<Perm6> closure{Perm6{0, 1, 2, 3, 4, 5}};
         const std::array<Perm6, 3> gens = {perm6_from_cycles("(12)"),
                                            perm6_from_cycles("(23)"),
                                            perm6_from_cycles("(14)(25)(36)")};
         bool grew = true;
         while (grew) {
           grew = false;
           std::vector<Perm6> snapshot(closure.begin(), closure.end());
           for (const Perm6& p : snapshot)
             for (const Perm6& g : gens)
               if (closure.insert(compose(g, p)).second) grew = true;
         }
         if (closure.size() != 72) return "closure has order " + std::to_string(closure.size());
         for (const GroupElement& g : all_elements())
           if (!closure.count(g.slots)) return "element outside the generated subgroup";
         return {};
       }},
      {"action laws: identity and compatibility with composition (rho <= 3)",
       []() -> std::string {
         const auto& elements = all_elements();
         std::array<std::array<int, 72>, 72> compose_id{};
         for (const GroupElement& g : elements)
           for (const GroupElement& h : elements)
             compose_id[g.id][h.id] = compose(g, h).id;
         for (const Vec6& a : all_upshifted_up_to(3)) {
           const SemiMagicSquare m = from_sextuple(a);
           if (!equal(act(identity_element(), m).mat, m.mat))
             return "identity does not fix " + describe(a);
           std::vector<Mat3> image;
           image.reserve(72);
           for (const GroupElement& g : elements) image.push_back(act(g, m).mat);
           for (const GroupElement& g : elements)
             for (const GroupElement& h : elements) {
               const SemiMagicSquare moved{image[h.id], m.rho};
               if (!equal(act(g, moved).mat, image[compose_id[g.id][h.id]]))
                 return "composition law failed for " + cycle_notation(g.slots) + " * " +
                        cycle_notation(h.slots) + " at " + describe(a);
             }
         }
         return {};
       }},
      {"matrix action equals slot action (rho <= 4)",
       []() -> std::string {
         const auto squares = all_upshifted_up_to(4);
         for (const GroupElement& g : all_elements())
           for (const Vec6& a : squares) {
             const SemiMagicSquare m = from_sextuple(a);
             const SemiMagicSquare moved = act(g, m);
             if (moved.rho != m.rho) return "rho not preserved";
             if (!equal(to_sextuple(moved), act_slots(g, a)))
               return "slot/matrix mismatch for " + cycle_notation(g.slots) + " at " +
                      describe(a);
           }
         return {};
       }},
      {"orbit times stabilizer equals 72 (rho <= 4)",
       []() -> std::string {
         return check_all(all_upshifted_up_to(4), [](const Vec6& a) -> std::string {
           const OrbitReport r = orbit(a);
           if (r.size * r.stabilizer_order != 72)
             return "orbit-stabilizer product != 72 at " + describe(a);
           if (orbit_class_size(r.orbit_class) != r.size)
             return "classified size disagrees at " + describe(a);
           return {};
         });
       }},
      {"dual orbits have equal sizes (s = 2)",
       []() -> std::string {
         const GradedPoset p = build(2);
         for (int id = 0; id < p.element_count(); ++id) {
           const Vec6& a = p.sextuple(id);
           if (orbit(a).size != orbit(dual(a, 2)).size)
             return "dual orbit size differs at " + describe(a);
         }
         return {};
       }},
      {"rectangle taxonomy matches the orbit sizes table",
       []() -> std::string {
         struct Row {
           Vec6 holey;
           OrbitClass expected;
         };
         auto v6 = [](long a1, long a2, long a3, long a4, long a5, long a6) {
           Vec6 v;
           v << a1, a2, a3, a4, a5, a6;
           return v;
         };
         const std::vector<Row> rows = {
             {v6(0, 0, 0, 0, 0, 0), OrbitClass::zero},
             {v6(1, 1, 0, 0, 0, 0), OrbitClass::class6},
             {v6(1, 0, 0, 0, 0, 0), OrbitClass::class6},
             {v6(1, 1, 0, 1, 1, 0), OrbitClass::class9},
             {v6(1, 0, 0, 1, 0, 0), OrbitClass::class9},
             {v6(1, 2, 0, 0, 0, 0), OrbitClass::class12},
             {v6(1, 1, 0, 2, 2, 0), OrbitClass::class18},
             {v6(1, 1, 0, 1, 0, 0), OrbitClass::class18},
             {v6(1, 0, 0, 2, 0, 0), OrbitClass::class18},
             {v6(1, 1, 0, 1, 2, 0), OrbitClass::class36a},
             {v6(1, 1, 0, 2, 3, 0), OrbitClass::class36a},
             {v6(1, 2, 0, 1, 0, 0), OrbitClass::class36a},
             {v6(1, 2, 0, 1, 2, 0), OrbitClass::class36b},
             {v6(3, 1, 0, 2, 1, 0), OrbitClass::class72},
         };
         for (const Row& row : rows) {
           if (classify_reduced(row.holey) != row.expected)
             return "classification differs at " + describe(row.holey);
           const OrbitReport r = orbit(row.holey);
           if (r.size != orbit_class_size(row.expected))
             return "orbit size differs at " + describe(row.holey);
           if (r.stabilizer_order * r.size != 72)
             return "stabilizer order differs at " + describe(row.holey);
         }
         return {};
       }},
  };
}

// ---------------------------------------------------------------- enumeration

std::vector<NamedCheck> enumeration_checks() {
  return {
      {"path formula equals the dynamic program (rho <= 6 and samples)",
       []() -> std::string {
         std::string detail =
             check_all(all_upshifted_up_to(6), [](const Vec6& a) -> std::string {
               if (path_number(a) != oracle_path_count(from_sextuple(a)))
                 return "formula/oracle mismatch at " + describe(a);
               return {};
             });
         if (!detail.empty()) return detail;
         return check_all(random_upshifted(200, 12, 5), [](const Vec6& a) -> std::string {
           if (path_number(a) != oracle_path_count(from_sextuple(a)))
             return "formula/oracle mismatch at " + describe(a);
           return {};
         });
       }},
      {"path number is constant on orbits",
       []() -> std::string {
         for (const Vec6& a : random_upshifted(25, 10, 7)) {
           const Int v = path_number(a);
           for (const GroupElement& g : all_elements())
             if (path_number(act_slots(g, a)) != v)
               return "orbit invariance failed at " + describe(a);
         }
         return {};
       }},
      {"any representative gives the same path number",
       []() -> std::string {
         for (const Vec6& a : random_upshifted(50, 10, 13)) {
           const Int v = path_number(a);
           const Int m0 = a.head<3>().minCoeff();
           for (Int t = 1; t <= m0; ++t) {
             Vec6 shifted = a;
             for (int i = 0; i < 3; ++i) shifted(i) -= t;
             for (int i = 3; i < 6; ++i) shifted(i) += t;
             if (path_number_from_representative(shifted) != v)
               return "representative dependence at " + describe(a);
           }
         }
         return {};
       }},
      {"row sums: 6^t over each rank (t <= 7)",
       []() -> std::string {
         for (unsigned t = 0; t <= 7; ++t) {
           const auto [expected, total] = row_sum_check(t);
           if (expected != total) return "rank " + std::to_string(t) + " sums differ";
         }
         return {};
       }},
      {"multinomial times hypergeometric factor equals the path number (rho <= 8)",
       []() -> std::string {
         return check_all(all_upshifted_up_to(8), [](const Vec6& a) -> std::string {
           const std::array<Int, 6> parts = {a(0), a(1), a(2), a(3), a(4), a(5)};
           const Rat base(multinomial(a.sum(), std::span<const Int>(parts.data(), 6)));
           const HypergeometricFactor f = hypergeometric_factor(a);
           if (!f.terms.empty() && f.terms.front() != 1)
             return "q(a,0) != 1 at " + describe(a);
           if (base * f.sum() != Rat(path_number(a)))
             return "factorization failed at " + describe(a);
           return {};
         });
       }},
      {"p(s) equals the path number of sJ (s <= 8)",
       []() -> std::string {
         for (unsigned long s = 0; s <= 8; ++s) {
           Vec6 a;
           a << static_cast<long>(s), static_cast<long>(s), static_cast<long>(s), 0, 0, 0;
           if (p_of_s(s) != path_number(a)) return "p(s) mismatch at s = " + std::to_string(s);
         }
         return {};
       }},
      {"Franel and p(s) recurrences (s <= 20, s <= 8)",
       []() -> std::string {
         for (unsigned long s = 1; s <= 20; ++s)
           if (!franel_recurrence_check(s))
             return "Franel recurrence fails at s = " + std::to_string(s);
         for (unsigned long s = 1; s <= 8; ++s)
           if (!p_recurrence_check(s)) return "p recurrence fails at s = " + std::to_string(s);
         return {};
       }},
      {"polynomial shape: length m0+1, positive ends, F(1) = v",
       []() -> std::string {
         return check_all(all_upshifted_up_to(6), [](const Vec6& a) -> std::string {
           const PathPolynomial poly = path_polynomial(a);
           const Int m0 = a.head<3>().minCoeff();
           if (Int(static_cast<long>(poly.coeffs.size())) != m0 + 1)
             return "length != m0+1 at " + describe(a);
           if (poly.coeffs.front() <= 0 || poly.coeffs.back() <= 0)
             return "zero end coefficient at " + describe(a);
           if (poly.at_one() != path_number(a)) return "F(1) != v at " + describe(a);
           return {};
         });
       }},
  };
}

// ---------------------------------------------------------------- poset

std::vector<NamedCheck> poset_checks() {
  return {
      {"two element-generation strategies agree (s <= 3)",
       []() -> std::string {
         for (int s = 0; s <= 3; ++s) {
           const GradedPoset p = build(s);
           // Independent count: breadth-first closure upward from the zero
           // square along covers.
           std::set<Vec6, Vec6Less> reached;
           Vec6 zero = Vec6::Zero();
           std::vector<Vec6> frontier{zero};
           reached.insert(zero);
           while (!frontier.empty()) {
             std::vector<Vec6> next;
             for (const Vec6& a : frontier)
               for (int t = 0; t < 6; ++t) {
                 Vec6 up = a;
                 up(t) += 1;
                 const Vec6 candidate = upshift(up);
                 if (min_max_entries(candidate).second > s) continue;
                 if (reached.insert(candidate).second) next.push_back(candidate);
               }
             frontier = std::move(next);
           }
           if (static_cast<int>(reached.size()) != p.element_count())
             return "element counts differ at s = " + std::to_string(s);
           for (int id = 0; id < p.element_count(); ++id)
             if (!reached.count(p.sextuple(id)))
               return "element missing from closure at s = " + std::to_string(s);
         }
         return {};
       }},
      {"rank sizes are palindromic (s <= 3)",
       []() -> std::string {
         for (int s = 1; s <= 3; ++s) {
           const GradedPoset p = build(s);
           for (int k = 0; k < p.rank_count(); ++k)
             if (p.level(k).size() != p.level(3 * s - k).size())
               return "levels not palindromic at s = " + std::to_string(s);
         }
         return {};
       }},
      {"convolution holds at every rank (s <= 3)",
       []() -> std::string {
         for (int s = 1; s <= 3; ++s) {
           const GradedPoset p = build(s);
           for (int k = 0; k < p.rank_count(); ++k) {
             const ConvolutionReport r = vandermonde_check(p, k);
             if (r.breakdown_sum() != r.total)
               return "convolution fails at s = " + std::to_string(s) +
                      ", k = " + std::to_string(k);
             // ungrouped form
             Int plain = 0;
             for (int id : p.level(k))
               plain += p.path_number_of(id) *
                        p.path_number_of(p.find(dual(p.sextuple(id), s)));
             if (plain != r.total)
               return "ungrouped convolution fails at s = " + std::to_string(s) +
                      ", k = " + std::to_string(k);
           }
         }
         return {};
       }},
      {"poset path numbers equal the closed formula (s <= 3)",
       []() -> std::string {
         for (int s = 0; s <= 3; ++s) {
           const GradedPoset p = build(s);
           for (int id = 0; id < p.element_count(); ++id)
             if (p.path_number_of(id) != path_number(p.sextuple(id)))
               return "path number mismatch at s = " + std::to_string(s);
         }
         return {};
       }},
      {"the zero square has six covers; sJ covers six elements (s <= 3)",
       []() -> std::string {
         for (int s = 1; s <= 3; ++s) {
           const GradedPoset p = build(s);
           if (p.covers(p.bottom()).size() != 6)
             return "bottom cover count != 6 at s = " + std::to_string(s);
           int into_top = 0;
           for (int id : p.level(3 * s - 1))
             for (int t : p.covers(id))
               if (t == p.top()) ++into_top;
           if (into_top != 6) return "top lower-cover count != 6 at s = " + std::to_string(s);
         }
         return {};
       }},
      {"orbits stay inside each rank level (s = 2)",
       []() -> std::string {
         const GradedPoset p = build(2);
         for (int id = 0; id < p.element_count(); ++id)
           for (const Vec6& member : orbit(p.sextuple(id)).members) {
             const int found = p.find(member);
             if (found < 0 || p.rank_of(found) != p.rank_of(id))
               return "orbit leaves the level at id " + std::to_string(id);
           }
         return {};
       }},
      {"order ideals: |I(J)| = 8, |I(2J)| = |M(3,2)|",
       []() -> std::string {
         Vec6 j;
         j << 1, 1, 1, 0, 0, 0;
         if (order_ideal_size(from_sextuple(j)) != 8) return "|I(J)| != 8";
         Vec6 jj;
         jj << 2, 2, 2, 0, 0, 0;
         if (order_ideal_size(from_sextuple(jj)) != build(2).element_count())
           return "|I(2J)| != |M(3,2)|";
         return {};
       }},
  };
}

// ---------------------------------------------------------------- cg

std::vector<NamedCheck> cg_checks() {
  return {
      {"dictionary round trip (rho <= 8)",
       []() -> std::string {
         return check_all(all_upshifted_up_to(8), [](const Vec6& a) -> std::string {
           const SemiMagicSquare m = from_sextuple(a);
           if (!equal(square_from_cg(cg_from_square(m)).mat, m.mat))
             return "dictionary round trip failed at " + describe(a);
           return {};
         });
       }},
      {"reciprocity (rho <= 8 and samples up to 14)",
       []() -> std::string {
         std::string detail =
             check_all(all_upshifted_up_to(8), [](const Vec6& a) -> std::string {
               const ReciprocityReport r = reciprocity_check(a);
               if (r.lhs != r.rhs) return "reciprocity fails at " + describe(a);
               if (r.v != path_number(a)) return "side check fails at " + describe(a);
               return {};
             });
         if (!detail.empty()) return detail;
         return check_all(random_upshifted(200, 14, 21), [](const Vec6& a) -> std::string {
           const ReciprocityReport r = reciprocity_check(a);
           if (r.lhs != r.rhs) return "reciprocity fails at " + describe(a);
           return {};
         });
       }},
      {"polynomials transform by keeping or reversing coefficients (rho <= 6)",
       []() -> std::string {
         for (const Vec6& a : all_upshifted_up_to(6)) {
           const PathPolynomial source = path_polynomial(a);
           std::vector<Int> reversed_coeffs = source.coeffs;
           std::reverse(reversed_coeffs.begin(), reversed_coeffs.end());
           const Int lhs = source.at_minus_one();
           for (const GroupElement& g : all_elements()) {
             const PolynomialTransform tr = transform_polynomial(g, a);
             const PathPolynomial moved = path_polynomial(tr.target);
             if (moved.coeffs != (tr.reversed ? reversed_coeffs : source.coeffs))
               return "transform law fails for " + cycle_notation(g.slots) + " at " +
                      describe(a);
             const Int rhs = moved.at_minus_one();
             if (lhs != rhs && lhs != -rhs)
               return "|F(-1)| not invariant at " + describe(a);
           }
         }
         return {};
       }},
      {"weight bookkeeping in the dictionary rows",
       []() -> std::string {
         return check_all(all_upshifted_up_to(6), [](const Vec6& a) -> std::string {
           const SemiMagicSquare m = from_sextuple(a);
           const CGIndex idx = cg_from_square(m);
           if (m.mat(1, 0) + m.mat(1, 1) != idx.i + idx.j)
             return "row-2 prefix != i+j at " + describe(a);
           if (m.mat(2, 0) + m.mat(2, 1) != (idx.m - idx.i) + (idx.n - idx.j))
             return "row-3 prefix mismatch at " + describe(a);
           for (int c = 0; c < 3; ++c)
             if (m.mat(1, c) + m.mat(2, c) != m.rho - m.mat(0, c))
               return "column bookkeeping fails at " + describe(a);
           return {};
         });
       }},
      {"every symmetry identity verifies (50 samples x 72 elements)",
       []() -> std::string {
         const GroupElement& row_swap = element_from_spec("(14)(25)(36)");
         for (const Vec6& a : random_upshifted(50, 10, 31)) {
           const std::vector<ReggeIdentity> table = regge_orbit_table(a);
           if (table.size() != 72) return "table size != 72";
           // rows-1<->3 specialization: sign (-1)^(a2+a5), right parts
           // (a2+a4, a3+a5, a1+a6)
           const ReggeIdentity id = regge_identity(row_swap, a);
           const Int exponent = a(1) + a(4);
           const int expected_sign = mpz_odd_p(exponent.get_mpz_t()) ? -1 : 1;
           if (id.sign != expected_sign)
             return "row-swap sign differs at " + describe(a);
           if (id.right_multinomial !=
               multinomial(a.sum(), {Int(a(1) + a(3)), Int(a(2) + a(4)), Int(a(0) + a(5))}))
             return "row-swap multinomial differs at " + describe(a);
         }
         return {};
       }},
  };
}

std::vector<NamedCheck> suite_checks(const std::string& suite) {
  if (suite == "core") return core_checks();
  if (suite == "group") return group_checks();
  if (suite == "enumeration") return enumeration_checks();
  if (suite == "poset") return poset_checks();
  if (suite == "cg") return cg_checks();
  if (suite == "all") {
    std::vector<NamedCheck> all;
    for (const char* name : {"core", "group", "enumeration", "poset", "cg"})
      for (NamedCheck& check : suite_checks(name)) {
        check.name = std::string(name) + ": " + check.name;
        all.push_back(std::move(check));
      }
    return all;
  }
  raise("UsageError", "unknown suite '" + suite +
                          "' (expected core, group, enumeration, poset, cg, or all)");
}

}  // namespace

std::vector<CheckResult> verify_suite(const std::string& suite) {
  std::vector<CheckResult> results;
  for (const NamedCheck& check : suite_checks(suite)) {
    std::string detail = check.run();
    results.push_back({check.name, detail.empty(), std::move(detail)});
  }
  return results;
}

bool all_ok(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.ok) return false;
  return true;
}

}  // namespace sms3
