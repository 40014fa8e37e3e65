#pragma once

// Independent oracles and fixtures shared by the unit and acceptance tests.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "econres/econres.hpp"

namespace econres::testing {

inline std::string data_path(const std::string& name) { return std::string(ECONRES_TEST_DATA) + "/" + name; }

inline Golden load_golden(const std::string& name) { return parse_golden(read_json_file(data_path(name))); }

inline Monomial mono(long long a, long long b, long long c) { return Monomial(a, b, c); }

inline std::set<Monomial> as_set(const std::vector<Monomial>& ms) { return {ms.begin(), ms.end()}; }

inline std::set<std::vector<Monomial>> as_set_of_sets(std::vector<std::vector<Monomial>> subsets) {
  std::set<std::vector<Monomial>> out;
  for (auto& s : subsets) {
    std::sort(s.begin(), s.end());
    out.insert(s);
  }
  return out;
}

/// Every subset of Γ filtered by the closure predicate, straight from the definition.
inline std::set<std::vector<Monomial>> naive_closed_subsets(const GBrick& b) {
  std::set<Monomial> gamma = b.as_set();
  std::vector<Monomial> elems(gamma.begin(), gamma.end());
  std::set<std::vector<Monomial>> out;
  const std::uint64_t n = elems.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::set<Monomial> A;
    for (std::uint64_t i = 0; i < n; ++i)
      if (mask >> i & 1u) A.insert(elems[i]);
    bool closed = true;
    for (const auto& m : A)
      for (Var f : kVars) {
        Monomial fm = m * Monomial::of(f);
        if (gamma.count(fm) && !A.count(fm)) closed = false;
      }
    if (closed) out.insert(std::vector<Monomial>(A.begin(), A.end()));
  }
  return out;
}

/// round_down preimages of target found by scanning the free exponent over [-bound, bound].
inline std::set<Monomial> scanned_fiber(const GroupType& g, Side side, const Monomial& target, long long bound) {
  const std::size_t k = side == Side::Central ? 0 : side == Side::Left ? 1 : 2;
  std::set<Monomial> out;
  for (long long t = -bound; t <= bound; ++t) {
    Monomial m = target;
    m[k] = t;
    if (round_down(g, side, m) == target) out.insert(m);
  }
  return out;
}

/// Rational product of two 3x3 matrices, entrywise.
inline RatMatrix product(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) out(i, j) += a(i, k) * b(k, j);
  return out;
}

/// Closure of the given weights under x, y, z inside Γ.
inline std::set<Monomial> generated_submodule(const GBrick& b, const std::vector<Monomial>& seeds) {
  std::set<Monomial> out(seeds.begin(), seeds.end());
  std::vector<Monomial> stack(seeds.begin(), seeds.end());
  while (!stack.empty()) {
    Monomial m = stack.back();
    stack.pop_back();
    for (Var f : kVars) {
      Monomial fm = m * Monomial::of(f);
      if (b.contains(fm) && out.insert(fm).second) stack.push_back(fm);
    }
  }
  return out;
}

inline bool brick_contains_x(const GBrick& b) { return b.contains(Monomial::of(Var::x)); }

/// Nonnegative-combination search by plain enumeration of coefficient vectors.
inline bool naive_in_monoid(const std::vector<Monomial>& gens, const Monomial& target, int max_coeff) {
  std::vector<int> c(gens.size(), 0);
  while (true) {
    IntVec3 s;
    for (std::size_t i = 0; i < gens.size(); ++i) s = s + BigInt(c[i]) * gens[i].e;
    if (s == target.e) return true;
    std::size_t i = 0;
    while (i < c.size() && c[i] == max_coeff) c[i++] = 0;
    if (i == c.size()) return false;
    ++c[i];
  }
}

inline Theta random_chamber_combo(const std::vector<std::vector<BigInt>>& rays, std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> coeff(lo, hi);
  Theta t = zero_theta(static_cast<int>(rays.front().size()));
  for (const auto& row : rays) t = t + Rational(coeff(rng)) * theta_from_row(row);
  return t;
}

}  // namespace econres::testing
