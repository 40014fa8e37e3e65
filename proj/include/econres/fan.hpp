#pragma once

// The economic resolution fan built by the recursive weighted blowup tower.

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "econres/exact.hpp"
#include "econres/group.hpp"
#include "econres/monomial.hpp"

namespace econres {

struct IntegralityViolation : Error {
  using Error::Error;
};

struct NotUnimodular : Error {
  NotUnimodular() : Error("cone is not unimodular") {}
};

/// True iff w/r lies in L = Z^3 + Z(1,a,r-a)/r.
inline bool in_lattice(const GroupType& g, const IntVec3& w) {
  const std::int64_t k = mod_int(w[0], g.r);
  return mod_int(w[1] - k * g.a, g.r) == 0 && mod_int(w[2] - k * g.b(), g.r) == 0;
}

/// The primitive point of L on the ray through the direction d, r-scaled.
inline IntVec3 primitive_lattice_point(const GroupType& g, const IntVec3& d) {
  if (d.is_zero()) throw ZeroVector{};
  IntVec3 p = primitive(d);
  for (int c = 1; c <= g.r; ++c) {
    IntVec3 w = BigInt(c) * p;
    if (in_lattice(g, w)) return w;
  }
  throw IntegralityViolation("no lattice point found on ray");
}

/// A simplicial cone; rays are r-scaled primitive points of L, sorted.
struct Cone {
  GroupType group;
  std::array<IntVec3, 3> rays;

  int scale() const { return group.r; }

  bool has_ray(const IntVec3& w) const { return std::find(rays.begin(), rays.end(), w) != rays.end(); }

  friend bool operator==(const Cone&, const Cone&) = default;
  friend bool operator<(const Cone& c, const Cone& d) { return c.rays < d.rays; }
};

inline IntVec3 unit_ray(const GroupType& g, int i) {
  IntVec3 w;
  w[static_cast<std::size_t>(i)] = g.r;
  return w;
}

inline Cone make_cone(const GroupType& g, const IntVec3& u, const IntVec3& v, const IntVec3& w) {
  Cone c{g, {primitive_lattice_point(g, u), primitive_lattice_point(g, v), primitive_lattice_point(g, w)}};
  std::sort(c.rays.begin(), c.rays.end());
  return c;
}

inline Cone positive_octant(const GroupType& g) {
  return make_cone(g, unit_ray(g, 0), unit_ray(g, 1), unit_ray(g, 2));
}

/// The r-scaled point (1,a,r-a) of the first blowup.
inline IntVec3 blowup_ray(const GroupType& g) { return {1, g.a, g.b()}; }

/// v_i = (i, ai mod r, (-ai) mod r)/r, r-scaled.
inline IntVec3 exceptional_ray(const GroupType& g, int i) {
  return {i, pos_mod(static_cast<long long>(g.a) * i, g.r), pos_mod(-static_cast<long long>(g.a) * i, g.r)};
}

/// Maps an r'-scaled ray of the child on `side` into G's r-scaled frame.
inline IntVec3 transport_ray(const GroupType& g, Side side, const GroupType& c, const IntVec3& w) {
  const BigInt r = g.r;
  IntVec3 out;
  switch (side) {
    case Side::Left:
      out = {r * w[0] + w[1], g.a * w[1], g.b() * w[1] + r * w[2]};
      break;
    case Side::Right:
      out = {r * w[0] + w[2], r * w[1] + g.a * w[2], g.b() * w[2]};
      break;
    case Side::Central:
      throw std::invalid_argument("the central chart has no child fan");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (out[i] % c.r != 0) throw IntegralityViolation("transported ray is not divisible by the child order");
    out[i] /= c.r;
  }
  if (!in_lattice(g, out)) throw IntegralityViolation("transported ray leaves the lattice");
  return out;
}

inline Cone transport_cone(const GroupType& g, Side side, const Cone& c) {
  return make_cone(g, transport_ray(g, side, c.group, c.rays[0]), transport_ray(g, side, c.group, c.rays[1]),
                   transport_ray(g, side, c.group, c.rays[2]));
}

inline Cone central_cone(const GroupType& g) {
  return make_cone(g, blowup_ray(g), unit_ray(g, 1), unit_ray(g, 2));
}

struct EconFan {
  GroupType group;
  std::vector<Cone> maximal_cones;
};

/// Maximal cones in recursion order: central, then left subtree, then right subtree.
inline EconFan econ_fan(const GroupType& g) {
  if (g.r == 1) return {g, {positive_octant(g)}};
  EconFan fan{g, {central_cone(g)}};
  for (Side side : {Side::Left, Side::Right}) {
    GroupType c = child(g, side);
    for (const Cone& sub : econ_fan(c).maximal_cones) fan.maximal_cones.push_back(transport_cone(g, side, sub));
  }
  return fan;
}

/// Distinct rays of the fan, sorted.
inline std::vector<IntVec3> fan_rays(const EconFan& fan) {
  std::set<IntVec3> s;
  for (const Cone& c : fan.maximal_cones) s.insert(c.rays.begin(), c.rays.end());
  return {s.begin(), s.end()};
}

/// Discrepancy of the divisor of the r-scaled primitive point w.
inline Rational discrepancy(const GroupType& g, const IntVec3& w) {
  return make_rational(w[0] + w[1] + w[2], g.r) - 1;
}

inline BigInt scaled_det(const Cone& c) { return det3(c.rays[0], c.rays[1], c.rays[2]); }

inline bool is_unimodular(const GroupType& g, const Cone& c) {
  BigInt d = abs(scaled_det(c));
  return d == BigInt(g.r) * g.r;
}

/// Rows of the inverse of the (unscaled) ray matrix whose columns are the rays.
inline std::array<Monomial, 3> chart_coordinates(const GroupType& g, const Cone& c) {
  if (!is_unimodular(g, c)) throw NotUnimodular{};
  RatMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = make_rational(c.rays[j][i], g.r);
  RatMatrix inv = invert_matrix3(m);
  std::array<Monomial, 3> out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (boost::multiprecision::denominator(inv(i, j)) != 1)
        throw IntegralityViolation("chart coordinate is not integral");
      out[i][j] = boost::multiprecision::numerator(inv(i, j));
    }
  return out;
}

/// Coordinates of the direction p in the basis of the cone's rays, up to a positive factor.
inline std::array<Rational, 3> cone_coordinates(const Cone& c, const std::array<Rational, 3>& p) {
  RatMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = Rational(c.rays[j][i]);
  RatVector x = invert_matrix3(m) * std::span<const Rational>(p);
  return {x[0], x[1], x[2]};
}

inline bool cone_contains(const Cone& c, const std::array<Rational, 3>& p) {
  auto x = cone_coordinates(c, p);
  return x[0] >= 0 && x[1] >= 0 && x[2] >= 0;
}

inline bool cone_interior_contains(const Cone& c, const std::array<Rational, 3>& p) {
  auto x = cone_coordinates(c, p);
  return x[0] > 0 && x[1] > 0 && x[2] > 0;
}

}  // namespace econres
