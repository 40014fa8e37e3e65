#pragma once

// The cyclic group 1/r(1,a,r-a), its characters and recursion children.

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "econres/exact.hpp"

namespace econres {

struct InvalidType : Error {
  using Error::Error;
};

struct TrivialGroup : Error {
  TrivialGroup() : Error("operation needs a nontrivial group") {}
};

struct GroupType {
  int r = 1;
  int a = 0;

  int b() const { return r == 1 ? 0 : r - a; }
  bool trivial() const { return r == 1; }

  friend bool operator==(const GroupType&, const GroupType&) = default;
  friend auto operator<=>(const GroupType&, const GroupType&) = default;

  friend std::ostream& operator<<(std::ostream& os, const GroupType& g) {
    return os << "1/" << g.r << "(1," << g.a << ',' << g.b() << ')';
  }
};

struct Character {
  int weight = 0;
  friend bool operator==(const Character&, const Character&) = default;
  friend auto operator<=>(const Character&, const Character&) = default;
};

enum class Side { Central, Left, Right };

inline const char* to_string(Side s) {
  switch (s) {
    case Side::Central: return "central";
    case Side::Left: return "left";
    case Side::Right: return "right";
  }
  return "?";
}

/// A parameter on characters, indexed by weight.
struct Theta {
  std::vector<Rational> values;

  std::size_t size() const { return values.size(); }
  const Rational& operator[](std::size_t i) const { return values[i]; }
  Rational& operator[](std::size_t i) { return values[i]; }

  Rational total() const {
    Rational s = 0;
    for (const auto& v : values) s += v;
    return s;
  }

  friend Theta operator+(const Theta& u, const Theta& v) {
    Theta out = u;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += v[i];
    return out;
  }
  friend Theta operator*(const Rational& k, const Theta& u) {
    Theta out = u;
    for (auto& e : out.values) e *= k;
    return out;
  }
  friend bool operator==(const Theta&, const Theta&) = default;
};

inline Theta make_theta(std::initializer_list<long long> vals) {
  Theta t;
  for (long long v : vals) t.values.emplace_back(v);
  return t;
}

inline GroupType make_group(int r, int a) {
  if (r < 1) throw InvalidType("group order must be positive, got r=" + std::to_string(r));
  if (r == 1) {
    if (a != 0) throw InvalidType("the trivial group is written 1/1(1,0,1); got a=" + std::to_string(a));
    return {1, 0};
  }
  if (a < 1 || a > r - 1) throw InvalidType("need 1 <= a <= r-1, got r=" + std::to_string(r) + " a=" + std::to_string(a));
  if (std::gcd(r, a) != 1) throw InvalidType("need gcd(r,a)=1, got r=" + std::to_string(r) + " a=" + std::to_string(a));
  return {r, a};
}

/// All valid types with 2 <= r <= max_r.
inline std::vector<GroupType> all_types(int max_r, int min_r = 2) {
  std::vector<GroupType> out;
  for (int r = std::max(min_r, 2); r <= max_r; ++r)
    for (int a = 1; a < r; ++a)
      if (std::gcd(r, a) == 1) out.push_back({r, a});
  return out;
}

inline int pos_mod(long long n, long long m) {
  long long v = n % m;
  return static_cast<int>(v < 0 ? v + m : v);
}

inline GroupType child(const GroupType& g, Side side) {
  if (g.r == 1) return {1, 0};
  int order = 1, second = 0;
  switch (side) {
    case Side::Central: return {1, 0};
    case Side::Left:
      order = g.a;
      second = pos_mod(-g.r, g.a);
      break;
    case Side::Right:
      order = g.r - g.a;
      second = pos_mod(g.r, g.r - g.a);
      break;
  }
  if (order == 1) return {1, 0};
  return {order, second};
}

inline Character pushforward_character(const GroupType& g, Side side, Character rho) {
  if (g.r == 1) return {0};
  switch (side) {
    case Side::Central: return {0};
    case Side::Left: return {pos_mod(rho.weight, g.a)};
    case Side::Right: return {pos_mod(rho.weight, g.r - g.a)};
  }
  return {0};
}

inline Theta vartheta(const GroupType& g) {
  if (g.r == 1) throw TrivialGroup{};
  const int s = std::min(g.a, g.r - g.a);
  const int t = std::max(g.a, g.r - g.a);
  Theta th;
  th.values.resize(static_cast<std::size_t>(g.r));
  for (int i = 0; i < g.r; ++i) th[static_cast<std::size_t>(i)] = i < s ? -1 : (i >= t ? 1 : 0);
  return th;
}

}  // namespace econres
