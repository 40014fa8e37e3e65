#pragma once

// Laurent monomials x^m1 y^m2 z^m3 in a level's eigencoordinates.

#include <array>
#include <compare>
#include <ostream>
#include <sstream>
#include <string>

#include "econres/exact.hpp"
#include "econres/group.hpp"

namespace econres {

enum class Var { x = 0, y = 1, z = 2 };

inline constexpr std::array<Var, 3> kVars{Var::x, Var::y, Var::z};

inline char var_name(Var v) { return "xyz"[static_cast<int>(v)]; }

struct Monomial {
  IntVec3 e;

  Monomial() = default;
  explicit Monomial(IntVec3 exps) : e(std::move(exps)) {}
  Monomial(BigInt m1, BigInt m2, BigInt m3) : e(std::move(m1), std::move(m2), std::move(m3)) {}

  static Monomial one() { return {}; }
  static Monomial of(Var v) {
    Monomial m;
    m.e[static_cast<std::size_t>(v)] = 1;
    return m;
  }

  const BigInt& operator[](std::size_t i) const { return e[i]; }
  BigInt& operator[](std::size_t i) { return e[i]; }

  bool is_one() const { return e.is_zero(); }
  bool is_genuine() const { return e[0] >= 0 && e[1] >= 0 && e[2] >= 0; }

  friend Monomial operator*(const Monomial& m, const Monomial& n) { return Monomial(m.e + n.e); }
  friend Monomial operator/(const Monomial& m, const Monomial& n) { return Monomial(m.e - n.e); }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& m, const Monomial& n) { return m.e <=> n.e; }

  friend std::ostream& operator<<(std::ostream& os, const Monomial& m);
};

inline Monomial mul(const Monomial& m, const Monomial& n) { return m * n; }
inline Monomial div(const Monomial& m, const Monomial& n) { return m / n; }

/// True iff n divides m by a genuine monomial.
inline bool divides(const Monomial& n, const Monomial& m) { return (m / n).is_genuine(); }

inline Character weight_of(const GroupType& g, const Monomial& m) {
  BigInt w = m[0] + g.a * m[1] + g.b() * m[2];
  return {static_cast<int>(mod_int(w, g.r))};
}

inline int weight_int(const GroupType& g, const Monomial& m) { return weight_of(g, m).weight; }

/// "1", "x", "xy^2/z^3", "1/y".
inline std::string format_monomial(const Monomial& m, const char* names = "xyz") {
  auto part = [&](bool positive) {
    std::string s;
    for (std::size_t i = 0; i < 3; ++i) {
      BigInt p = positive ? m[i] : BigInt(-m[i]);
      if (p <= 0) continue;
      s += names[i];
      if (p != 1) s += "^" + p.str();
    }
    return s;
  };
  std::string num = part(true), den = part(false);
  if (num.empty()) num = "1";
  return den.empty() ? num : num + "/" + den;
}

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << format_monomial(m); }

}  // namespace econres
