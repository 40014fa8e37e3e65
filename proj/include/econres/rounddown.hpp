#pragma once

// Round down maps of a weighted blowup and their fibers.

#include <vector>

#include "econres/exact.hpp"
#include "econres/group.hpp"
#include "econres/monomial.hpp"

namespace econres {

namespace detail {

inline std::size_t free_slot(Side side) {
  switch (side) {
    case Side::Central: return 0;
    case Side::Left: return 1;
    case Side::Right: return 2;
  }
  return 0;
}

inline void require_nontrivial(const GroupType& g) {
  if (g.r < 2) throw TrivialGroup{};
}

}  // namespace detail

inline BigInt weighted_floor(const GroupType& g, const Monomial& m) {
  return floor_div(m[0] + g.a * m[1] + g.b() * m[2], g.r);
}

/// The image of m in the child's eigencoordinates.
inline Monomial round_down(const GroupType& g, Side side, const Monomial& m) {
  detail::require_nontrivial(g);
  Monomial out = m;
  out[detail::free_slot(side)] = weighted_floor(g, m);
  return out;
}

/// All m with round_down(g, side, m) == target, sorted by the free exponent.
inline std::vector<Monomial> fiber(const GroupType& g, Side side, const Monomial& target) {
  detail::require_nontrivial(g);
  const std::size_t k = detail::free_slot(side);
  const BigInt weights[3] = {1, g.a, g.b()};
  const BigInt& coeff = weights[k];
  BigInt rest = 0;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != k) rest += weights[i] * target[i];
  const BigInt r = g.r;
  const BigInt lo = ceil_div(r * target[k] - rest, coeff);
  const BigInt hi = floor_div(r * target[k] + r - 1 - rest, coeff);
  std::vector<Monomial> out;
  for (BigInt t = lo; t <= hi; ++t) {
    Monomial m = target;
    m[k] = t;
    out.push_back(m);
  }
  return out;
}

}  // namespace econres
