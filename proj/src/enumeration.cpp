#include "sms3/enumeration.hpp"

#include <map>

#include "sms3/error.hpp"

namespace sms3 {

Int binomial(const Int& n, const Int& k) {
  if (k < 0 || k > n) return 0;
  Int result;
  mpz_bin_ui(result.get_mpz_t(), n.get_mpz_t(), to_ulong(k));
  return result;
}

Int multinomial(const Int& n, std::span<const Int> parts) {
  Int sum = 0;
  for (const Int& p : parts) {
    if (p < 0) return 0;
    sum += p;
  }
  if (sum != n) return 0;
  Int result = 1;
  Int prefix = 0;
  for (const Int& p : parts) {
    prefix += p;
    result *= binomial(prefix, p);
  }
  return result;
}

Int multinomial(const Int& n, std::initializer_list<Int> parts) {
  return multinomial(n, std::span<const Int>(parts.begin(), parts.size()));
}

Int factorial(unsigned long n) {
  Int result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Int PathPolynomial::eval(const Int& z) const {
  Int value = 0;
  Int power = 1;
  for (const Int& c : coeffs) {
    value += c * power;
    power *= z;
  }
  return value;
}

Int PathPolynomial::at_one() const { return eval(1); }

Int PathPolynomial::at_minus_one() const { return eval(-1); }

namespace {

Int shifted_multinomial(const Vec6& a, const Int& t) {
  const std::array<Int, 6> parts = {a(0) - t, a(1) - t, a(2) - t,
                                    a(3) + t, a(4) + t, a(5) + t};
  return multinomial(a.sum(), std::span<const Int>(parts.data(), parts.size()));
}

}  // namespace

Int path_number(const Vec6& a) {
  const Vec6 u = upshift(a);
  const Int m0 = u.head<3>().minCoeff();
  Int total = 0;
  for (Int t = 0; t <= m0; ++t) total += shifted_multinomial(u, t);
  return total;
}

PathPolynomial path_polynomial(const Vec6& a) {
  const Vec6 u = upshift(a);
  const Int m0 = u.head<3>().minCoeff();
  PathPolynomial poly{{}, u.sum()};
  poly.coeffs.reserve(to_ulong(m0 + 1));
  for (Int t = 0; t <= m0; ++t) poly.coeffs.push_back(shifted_multinomial(u, t));
  return poly;
}

Rat HypergeometricFactor::sum() const {
  Rat total = 0;
  for (const Rat& q : terms) total += q;
  return total;
}

HypergeometricFactor hypergeometric_factor(const Vec6& a) {
  const Vec6 u = upshift(a);
  const Int m0 = u.head<3>().minCoeff();
  HypergeometricFactor factor;
  for (Int t = 0; t <= m0; ++t) {
    Int num = binomial(u(0), t) * binomial(u(1), t) * binomial(u(2), t);
    Int den = binomial(u(3) + t, t) * binomial(u(4) + t, t) * binomial(u(5) + t, t);
    Rat q(num, den);
    q.canonicalize();
    factor.terms.push_back(q);
  }
  return factor;
}

SeriesParameters hypergeometric_parameters(const Vec6& a) {
  const Vec6 u = upshift(a);
  return SeriesParameters{{Int(-u(0)), Int(-u(1)), Int(-u(2))},
                          {Int(u(3) + 1), Int(u(4) + 1), Int(u(5) + 1)}};
}

namespace {

void upshifted_rec(unsigned remaining, int slot, Vec6& a, std::vector<Vec6>& out) {
  if (slot == 5) {
    a(5) = remaining;
    if (a.tail<3>().minCoeff() == 0) out.push_back(a);
    return;
  }
  for (unsigned v = 0; v <= remaining; ++v) {
    a(slot) = v;
    upshifted_rec(remaining - v, slot + 1, a, out);
  }
}

}  // namespace

std::vector<Vec6> upshifted_with_rank(unsigned r) {
  std::vector<Vec6> out;
  Vec6 a;
  upshifted_rec(r, 0, a, out);
  return out;
}

std::pair<Int, Int> row_sum_check(unsigned t) {
  Int expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 6, t);
  Int total = 0;
  for (const Vec6& a : upshifted_with_rank(t)) total += path_number(a);
  return {expected, total};
}

Int franel(unsigned long s) {
  Int total = 0;
  for (unsigned long t = 0; t <= s; ++t) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), s, t);
    total += b * b * b;
  }
  return total;
}

Int p_of_s(unsigned long s) {
  const Int n = Int(3) * static_cast<long>(s);
  return multinomial(n, {Int(s), Int(s), Int(s)}) * franel(s);
}

bool franel_recurrence_check(unsigned long s) {
  const Int si(static_cast<long>(s));
  const Int lhs = (si + 1) * (si + 1) * franel(s + 1);
  const Int rhs = (7 * si * si + 7 * si + 2) * franel(s) + 8 * si * si * franel(s - 1);
  return lhs == rhs;
}

bool p_recurrence_check(unsigned long s) {
  const Int si(static_cast<long>(s));
  const Int s1 = si + 1;
  const Int lhs = s1 * s1 * s1 * s1 * p_of_s(s + 1);
  const Int rhs = 3 * (3 * si + 2) * (3 * si + 1) * (7 * si * si + 7 * si + 2) * p_of_s(s) +
                  72 * (9 * si * si - 4) * (9 * si * si - 1) * p_of_s(s - 1);
  return lhs == rhs;
}

Int oracle_path_count(const SemiMagicSquare& m) {
  // Rank-level sweep over the order ideal of M; no recursion.
  const auto& steps = permutation_matrices();
  std::map<Mat3, Int, Mat3Less> counts;
  std::vector<Mat3> level{Mat3(Mat3::Zero())};
  counts[level.front()] = 1;
  const unsigned long rank = to_ulong(m.rho);
  for (unsigned long r = 1; r <= rank; ++r) {
    std::vector<Mat3> next;
    for (const Mat3& below : level) {
      const Int base = counts.at(below);
      for (const Mat3& p : steps) {
        const Mat3 candidate = below + p;
        if (!(candidate.array() <= m.mat.array()).all()) continue;
        auto [it, fresh] = counts.emplace(candidate, 0);
        if (fresh) next.push_back(candidate);
        it->second += base;
      }
    }
    level = std::move(next);
  }
  auto it = counts.find(m.mat);
  return it == counts.end() ? Int(0) : it->second;
}

}  // namespace sms3
