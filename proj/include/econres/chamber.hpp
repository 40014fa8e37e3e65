#pragma once

// Simple roots of A_{r-1} cutting out the chamber, and its rays.

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "econres/exact.hpp"
#include "econres/group.hpp"

namespace econres {

struct SingularBase : Error {
  SingularBase() : Error("simple roots are linearly dependent") {}
};

/// ε_head − ε_tail.
struct Root {
  int head = 0;
  int tail = 0;
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Root& r) {
    return os << "e" << r.head << "-e" << r.tail;
  }
};

/// Coefficients of α_1..α_{r-1}; index 0 is always zero.
struct AlphaVector {
  std::vector<long long> coefficients;
  friend bool operator==(const AlphaVector&, const AlphaVector&) = default;
};

using RootSet = std::vector<Root>;

/// α_i = ε_i − ε_{i−a}, summed along the head chain i, i−a, … that avoids 0.
inline AlphaVector expand_in_alpha(const GroupType& g, const Root& root) {
  if (root.head == root.tail || root.head < 0 || root.tail < 0 || root.head >= g.r || root.tail >= g.r)
    throw std::invalid_argument("invalid root");
  auto heads = [&](int from, int to) {
    std::vector<int> hs;
    for (int i = from; i != to; i = pos_mod(i - g.a, g.r)) hs.push_back(i);
    return hs;
  };
  AlphaVector out{std::vector<long long>(static_cast<std::size_t>(g.r), 0)};
  auto forward = heads(root.head, root.tail);
  bool hits_zero = std::find(forward.begin(), forward.end(), 0) != forward.end();
  const long long sign = hits_zero ? -1 : 1;
  for (int h : hits_zero ? heads(root.tail, root.head) : forward) out.coefficients[static_cast<std::size_t>(h)] += sign;
  return out;
}

/// θ(Σ n_i α_i) = Σ n_i θ(ρ_i).
inline Rational pair_alpha(const Theta& theta, const AlphaVector& v) {
  Rational s = 0;
  for (std::size_t i = 1; i < v.coefficients.size(); ++i)
    if (v.coefficients[i] != 0) s += theta[i] * v.coefficients[i];
  return s;
}

inline Root added_root(const GroupType& g) {
  const int head = ((g.r - 1) / g.a) * g.a;
  const int tail = ((g.r - 1) / g.b()) * g.b() - g.a;
  return {head, tail};
}

/// Δ^L (reindexed into [r−a, r)), the added root, then Δ^R.
inline RootSet simple_roots(const GroupType& g) {
  if (g.r == 1) return {};
  RootSet out;
  auto left_index = [&](int l) {
    for (int i = g.b(); i < g.r; ++i)
      if (pos_mod(i - l, g.a) == 0) return i;
    throw std::logic_error("no index for left character");
  };
  for (const Root& rt : simple_roots(child(g, Side::Left))) out.push_back({left_index(rt.head), left_index(rt.tail)});
  out.push_back(added_root(g));
  for (const Root& rt : simple_roots(child(g, Side::Right))) out.push_back(rt);
  return out;
}

/// Row j is the primitive θ with θ(δ_k) = [j == k] and Σθ = 0.
inline std::vector<std::vector<BigInt>> chamber_rays(const GroupType& g) {
  if (g.r == 1) throw TrivialGroup{};
  const RootSet roots = simple_roots(g);
  const std::size_t n = static_cast<std::size_t>(g.r);
  RatMatrix A(n, n);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    AlphaVector v = expand_in_alpha(g, roots[k]);
    for (std::size_t i = 1; i < n; ++i) A(k, i) = v.coefficients[i];
  }
  for (std::size_t i = 0; i < n; ++i) A(n - 1, i) = 1;
  if (matrix_rank(A) != n) throw SingularBase{};
  std::vector<std::vector<BigInt>> rows;
  for (std::size_t j = 0; j < roots.size(); ++j) {
    RatVector rhs(n);
    rhs[j] = 1;
    auto sol = solve_rational_system(A, rhs);
    if (!sol) throw SingularBase{};
    rows.push_back(primitive_scale(*sol));
  }
  return rows;
}

inline bool in_chamber(const GroupType& g, const Theta& theta) {
  if (static_cast<int>(theta.size()) != g.r) throw std::invalid_argument("parameter length differs from the group order");
  for (const Root& rt : simple_roots(g))
    if (pair_alpha(theta, expand_in_alpha(g, rt)) <= 0) return false;
  return true;
}

inline Theta theta_from_row(const std::vector<BigInt>& row) {
  Theta t;
  for (const auto& v : row) t.values.emplace_back(v);
  return t;
}

}  // namespace econres
