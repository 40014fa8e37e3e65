#pragma once

// Stability parameters θ = θ_P + mϑ and the stability test for bricks.

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "econres/brick.hpp"
#include "econres/exact.hpp"
#include "econres/group.hpp"

namespace econres {

struct Infeasible : Error {
  Infeasible() : Error("linear system has no solution") {}
};

/// Represents base + m * direction for an unspecified large m.
struct SymbolicTheta {
  Theta base;
  Theta direction;
};

struct ConcreteTheta {
  Theta theta;
  BigInt m;
};

inline Theta zero_theta(int r) {
  Theta t;
  t.values.resize(static_cast<std::size_t>(r));
  return t;
}

/// The trivial group's parameter may be given as [] or [0].
inline Theta normalized_child_theta(const GroupType& c, const Theta& t) {
  if (c.r == 1 && t.size() == 0) return zero_theta(1);
  if (static_cast<int>(t.size()) != c.r)
    throw std::invalid_argument("parameter has " + std::to_string(t.size()) + " values, child order is " +
                                std::to_string(c.r));
  if (t.total() != 0) throw std::invalid_argument("parameter values must sum to zero");
  return t;
}

/// θ_P whose Left and Right fiber sums reproduce theta_left and theta_right.
inline Theta solve_theta_partial(const GroupType& g, const Theta& theta_left, const Theta& theta_right) {
  if (g.r == 1) return zero_theta(1);
  const GroupType cl = child(g, Side::Left), cr = child(g, Side::Right);
  const Theta tl = normalized_child_theta(cl, theta_left);
  const Theta tr = normalized_child_theta(cr, theta_right);
  const std::size_t nl = static_cast<std::size_t>(cl.r), nr = static_cast<std::size_t>(cr.r);
  RatMatrix A(nl + nr, static_cast<std::size_t>(g.r));
  RatVector rhs(nl + nr);
  for (int i = 0; i < g.r; ++i) {
    auto l = static_cast<std::size_t>(pushforward_character(g, Side::Left, {i}).weight);
    auto rr = static_cast<std::size_t>(pushforward_character(g, Side::Right, {i}).weight);
    A(l, static_cast<std::size_t>(i)) = 1;
    A(nl + rr, static_cast<std::size_t>(i)) = 1;
  }
  for (std::size_t k = 0; k < nl; ++k) rhs[k] = tl[k];
  for (std::size_t k = 0; k < nr; ++k) rhs[nl + k] = tr[k];
  auto sol = solve_rational_system(A, rhs);
  if (!sol) throw Infeasible{};
  return Theta{*sol};
}

/// Checks θ_P against the fiber-sum system without solving it.
inline bool satisfies_partial_system(const GroupType& g, const Theta& theta_p, const Theta& theta_left,
                                     const Theta& theta_right) {
  for (Side side : {Side::Left, Side::Right}) {
    const GroupType c = child(g, side);
    const Theta t = normalized_child_theta(c, side == Side::Left ? theta_left : theta_right);
    Theta sums = zero_theta(c.r);
    for (int i = 0; i < g.r; ++i)
      sums[static_cast<std::size_t>(pushforward_character(g, side, {i}).weight)] += theta_p[static_cast<std::size_t>(i)];
    if (sums != t) return false;
  }
  return true;
}

inline ConcreteTheta concretize(const SymbolicTheta& s) {
  Rational total = 0;
  for (const auto& v : s.base.values) total += abs(v);
  BigInt m = 1 + ceil(total);
  return {s.base + Rational(m) * s.direction, m};
}

inline SymbolicTheta kedzierski_theta(const GroupType& g, const std::optional<Theta>& left_seed = std::nullopt,
                                      const std::optional<Theta>& right_seed = std::nullopt);

/// The concrete parameter used for a child in the recursion.
inline Theta recursive_theta(const GroupType& c) {
  if (c.r == 1) return zero_theta(1);
  return concretize(kedzierski_theta(c)).theta;
}

inline SymbolicTheta kedzierski_theta(const GroupType& g, const std::optional<Theta>& left_seed,
                                      const std::optional<Theta>& right_seed) {
  if (g.r == 1) throw TrivialGroup{};
  Theta tl = left_seed ? *left_seed : recursive_theta(child(g, Side::Left));
  Theta tr = right_seed ? *right_seed : recursive_theta(child(g, Side::Right));
  return {solve_theta_partial(g, tl, tr), vartheta(g)};
}

inline Rational theta_eval(const Theta& theta, const GBrick& b, const std::vector<Monomial>& subset) {
  Rational s = 0;
  for (const auto& m : subset) s += theta[static_cast<std::size_t>(weight_int(b.group, m))];
  return s;
}

inline Rational theta_eval_mask(const Theta& theta, std::uint64_t mask) {
  Rational s = 0;
  for (std::size_t w = 0; mask; ++w, mask >>= 1)
    if (mask & 1u) s += theta[w];
  return s;
}

/// A common-denominator integer copy of θ, when every partial sum fits in int64.
inline std::optional<std::vector<std::int64_t>> integer_theta(const Theta& theta) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::gcd;
  using boost::multiprecision::numerator;
  BigInt lcm = 1;
  for (const auto& v : theta.values) lcm = lcm / gcd(lcm, denominator(v)) * denominator(v);
  BigInt bound = 0;
  std::vector<BigInt> scaled;
  for (const auto& v : theta.values) {
    scaled.push_back(numerator(v) * (lcm / denominator(v)));
    bound += abs(scaled.back());
  }
  if (bound > BigInt(std::numeric_limits<std::int64_t>::max() / 2)) return std::nullopt;
  std::vector<std::int64_t> out;
  for (const auto& v : scaled) out.push_back(v.convert_to<std::int64_t>());
  return out;
}

/// Closed subsets of a fixed brick, kept for repeated stability tests.
class StabilityChecker {
 public:
  explicit StabilityChecker(const GBrick& b) : full_((b.size() == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << b.size()) - 1)) {
    masks_ = closed_subset_masks(b);
  }

  bool is_stable(const Theta& theta) const {
    if (auto ints = integer_theta(theta)) {
      for (auto mask : masks_) {
        if (mask == 0 || mask == full_) continue;
        std::int64_t s = 0;
        for (std::uint64_t rest = mask; rest; rest &= rest - 1) s += (*ints)[static_cast<std::size_t>(std::countr_zero(rest))];
        if (s <= 0) return false;
      }
      return true;
    }
    for (auto mask : masks_) {
      if (mask == 0 || mask == full_) continue;
      if (theta_eval_mask(theta, mask) <= 0) return false;
    }
    return true;
  }

  /// The first proper closed subset with nonpositive value, if any.
  std::optional<std::uint64_t> destabilizing(const Theta& theta) const {
    for (auto mask : masks_) {
      if (mask == 0 || mask == full_) continue;
      if (theta_eval_mask(theta, mask) <= 0) return mask;
    }
    return std::nullopt;
  }

  const std::vector<std::uint64_t>& masks() const { return masks_; }

 private:
  std::uint64_t full_;
  std::vector<std::uint64_t> masks_;
};

inline bool is_stable(const GBrick& b, const Theta& theta) {
  if (theta.size() != b.size()) throw std::invalid_argument("parameter length differs from the group order");
  return StabilityChecker(b).is_stable(theta);
}

}  // namespace econres
