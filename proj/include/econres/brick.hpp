#pragma once

// G-prebricks and G-bricks: axioms, border bases, S(Γ), σ(Γ), submodules,
// pullbacks and the Danilov recursion.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "econres/exact.hpp"
#include "econres/fan.hpp"
#include "econres/group.hpp"
#include "econres/monomial.hpp"
#include "econres/rounddown.hpp"

namespace econres {

struct AxiomViolation : Error {
  int axiom;
  std::string witness;
  AxiomViolation(int ax, std::string w)
      : Error("prebrick axiom (" + std::string(ax == 1 ? "i" : ax == 2 ? "ii" : ax == 3 ? "iii" : "iv") +
              ") violated: " + w),
        axiom(ax),
        witness(std::move(w)) {}
};

struct FiberSizeMismatch : Error {
  using Error::Error;
};

struct NotSimplicial : Error {
  std::vector<IntVec3> rays;
  explicit NotSimplicial(std::vector<IntVec3> rs)
      : Error("dual cone has " + std::to_string(rs.size()) + " extremal rays"), rays(std::move(rs)) {}
};

struct SearchExhausted : Error {
  using Error::Error;
};

struct TooLarge : Error {
  using Error::Error;
};

/// Entries are indexed by weight: entries[i] is the unique member of weight i.
struct GBrick {
  GroupType group;
  std::vector<Monomial> entries;

  std::size_t size() const { return entries.size(); }
  const Monomial& operator[](std::size_t w) const { return entries[w]; }

  bool contains(const Monomial& m) const { return entries[static_cast<std::size_t>(weight_int(group, m))] == m; }

  /// wt_Γ(m): the member of Γ with the same weight as m.
  const Monomial& representative(const Monomial& m) const {
    return entries[static_cast<std::size_t>(weight_int(group, m))];
  }

  std::set<Monomial> as_set() const { return {entries.begin(), entries.end()}; }

  friend bool operator==(const GBrick&, const GBrick&) = default;
};

using Candidate = std::map<int, Monomial>;

struct Violation {
  int axiom;
  std::string witness;
};

inline std::vector<Violation> check_prebrick_axioms(const GroupType& g, const Candidate& cand) {
  std::vector<Violation> out;
  if (static_cast<int>(cand.size()) != g.r) {
    out.push_back({2, "expected " + std::to_string(g.r) + " entries, got " + std::to_string(cand.size())});
    return out;
  }
  for (const auto& [w, m] : cand) {
    if (w < 0 || w >= g.r) {
      out.push_back({2, "key " + std::to_string(w) + " is not a character"});
      return out;
    }
    if (weight_int(g, m) != w)
      out.push_back({2, format_monomial(m) + " has weight " + std::to_string(weight_int(g, m)) + ", listed under " +
                            std::to_string(w)});
  }
  if (!out.empty()) return out;
  if (!cand.at(0).is_one()) out.push_back({1, "weight 0 entry is " + format_monomial(cand.at(0))});

  std::vector<Monomial> entries;
  for (const auto& [w, m] : cand) entries.push_back(m);
  auto member = [&](const Monomial& m) { return entries[static_cast<std::size_t>(weight_int(g, m))] == m; };

  auto sandwich = [&]() -> std::optional<Violation> {
    for (const auto& m : entries)
      for (const auto& mp : entries) {
        Monomial d = mp / m;
        if (m == mp || !d.is_genuine()) continue;
        for (Var f : kVars) {
          if (d[static_cast<std::size_t>(f)] <= 0) continue;
          Monomial fm = m * Monomial::of(f);
          if (!member(fm))
            return Violation{3, format_monomial(m) + " divides " + format_monomial(mp) + " but " +
                                    format_monomial(fm) + " is missing"};
        }
      }
    return std::nullopt;
  };
  if (auto v = sandwich()) out.push_back(*v);

  {
    std::vector<bool> seen(entries.size(), false);
    std::queue<std::size_t> q;
    seen[0] = true;
    q.push(0);
    std::size_t count = 1;
    while (!q.empty()) {
      const Monomial m = entries[q.front()];
      q.pop();
      for (Var f : kVars)
        for (const Monomial& n : {m * Monomial::of(f), m / Monomial::of(f)}) {
          auto w = static_cast<std::size_t>(weight_int(g, n));
          if (!seen[w] && entries[w] == n) {
            seen[w] = true;
            ++count;
            q.push(w);
          }
        }
    }
    if (count != entries.size()) {
      std::string missing;
      for (std::size_t w = 0; w < entries.size(); ++w)
        if (!seen[w]) missing += (missing.empty() ? "" : ", ") + format_monomial(entries[w]);
      out.push_back({4, "not connected to 1: {" + missing + "}"});
    }
  }
  return out;
}

inline GBrick validate_prebrick(const GroupType& g, const Candidate& cand) {
  auto v = check_prebrick_axioms(g, cand);
  if (!v.empty()) throw AxiomViolation(v.front().axiom, v.front().witness);
  GBrick b{g, {}};
  for (const auto& [w, m] : cand) b.entries.push_back(m);
  return b;
}

/// Builds the weight-indexed candidate from an unordered list.
inline Candidate candidate_from(const GroupType& g, const std::vector<Monomial>& monos) {
  Candidate c;
  for (const auto& m : monos) {
    int w = weight_int(g, m);
    if (!c.emplace(w, m).second)
      throw AxiomViolation(2, "two entries of weight " + std::to_string(w) + ": " + format_monomial(c.at(w)) +
                                  " and " + format_monomial(m));
  }
  return c;
}

inline GBrick make_brick(const GroupType& g, const std::vector<Monomial>& monos) {
  return validate_prebrick(g, candidate_from(g, monos));
}

inline std::vector<Monomial> border_basis(const GBrick& b) {
  std::set<Monomial> out;
  for (const auto& m : b.entries)
    for (Var f : kVars) {
      Monomial fm = m * Monomial::of(f);
      if (!b.contains(fm)) out.insert(fm);
    }
  return {out.begin(), out.end()};
}

/// {b / wt_Γ(b) : b in B(Γ)}, sorted and without repeats.
inline std::vector<Monomial> semigroup_generators(const GBrick& b) {
  std::set<Monomial> out;
  for (const auto& m : border_basis(b)) out.insert(m / b.representative(m));
  return {out.begin(), out.end()};
}

struct Action {
  Var f;
  int rho;
  int rho_prime;
  Monomial s;
};

inline std::vector<Action> action_table(const GBrick& b) {
  std::vector<Action> out;
  for (Var f : kVars)
    for (std::size_t w = 0; w < b.size(); ++w) {
      Monomial fm = b[w] * Monomial::of(f);
      int wp = weight_int(b.group, fm);
      out.push_back({f, static_cast<int>(w), wp, fm / b[static_cast<std::size_t>(wp)]});
    }
  return out;
}

/// Extremal rays (primitive integer directions) of {u : <u,g> >= 0 for all g},
/// or nullopt when that region is not a pointed full-dimensional cone.
inline std::optional<std::vector<IntVec3>> dual_extremal_rays(const std::vector<Monomial>& gens) {
  std::set<IntVec3> found;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      IntVec3 d = cross(gens[i].e, gens[j].e);
      if (d.is_zero()) continue;
      d = primitive(d);
      for (const IntVec3& cand : {d, IntVec3(-d)}) {
        bool ok = true;
        for (const auto& g : gens)
          if (dot(cand, g.e) < 0) {
            ok = false;
            break;
          }
        if (!ok) continue;
        IntVec3 first;
        int rank = 0;
        for (const auto& g : gens) {
          if (dot(cand, g.e) != 0 || g.is_one()) continue;
          if (rank == 0) {
            first = g.e;
            rank = 1;
          } else if (!cross(first, g.e).is_zero()) {
            rank = 2;
            break;
          }
        }
        if (rank == 2) found.insert(cand);
      }
    }
  std::vector<IntVec3> rays(found.begin(), found.end());
  for (const auto& d : rays)
    if (std::find(rays.begin(), rays.end(), -d) != rays.end()) return std::nullopt;
  if (rays.size() < 3) return std::nullopt;
  return rays;
}

/// σ(Γ) when it is a 3-dimensional simplicial cone.
inline std::optional<Cone> sigma_cone(const GBrick& b) {
  auto rays = dual_extremal_rays(semigroup_generators(b));
  if (!rays) return std::nullopt;
  if (rays->size() > 3) throw NotSimplicial(*rays);
  const auto& rs = *rays;
  if (det3(rs[0], rs[1], rs[2]) == 0) return std::nullopt;
  return make_cone(b.group, rs[0], rs[1], rs[2]);
}

inline bool is_brick(const GBrick& b) { return sigma_cone(b).has_value(); }

/// Whether target lies in the monoid generated by gens. Every generator must
/// pair nonnegatively with every direction in `frame` and the frame must
/// detect nonzero generators; the search visits residuals dominated by target.
inline bool monoid_contains(const std::vector<Monomial>& gens, const Monomial& target,
                            const std::vector<IntVec3>& frame, std::size_t max_states = 1u << 20) {
  using Coords = std::vector<BigInt>;
  auto coords = [&](const Monomial& m) {
    Coords c;
    for (const auto& d : frame) c.push_back(dot(d, m.e));
    return c;
  };
  std::vector<std::pair<Monomial, Coords>> gs;
  for (const auto& g : gens) {
    if (g.is_one()) continue;
    Coords c = coords(g);
    bool positive = false;
    for (const auto& v : c) {
      if (v < 0) throw std::invalid_argument("generator " + format_monomial(g) + " is negative on the frame");
      if (v > 0) positive = true;
    }
    if (!positive) throw std::invalid_argument("frame does not separate generator " + format_monomial(g));
    gs.emplace_back(g, std::move(c));
  }
  if (target.is_one()) return true;
  std::set<Monomial> dead;
  std::function<bool(const Monomial&, const Coords&)> reach = [&](const Monomial& m, const Coords& c) -> bool {
    if (m.is_one()) return true;
    if (dead.count(m)) return false;
    for (const auto& [g, gc] : gs) {
      Coords rest(c.size());
      bool ok = true;
      for (std::size_t i = 0; i < c.size(); ++i) {
        rest[i] = c[i] - gc[i];
        if (rest[i] < 0) {
          ok = false;
          break;
        }
      }
      if (ok && reach(m / g, rest)) return true;
    }
    dead.insert(m);
    if (dead.size() > max_states) throw SearchExhausted("monoid membership search exceeded its box");
    return false;
  };
  Coords tc = coords(target);
  for (const auto& v : tc)
    if (v < 0) return false;
  return reach(target, tc);
}

/// Mutual containment of the monoids generated by A and B.
inline bool generates_same_monoid(const std::vector<Monomial>& A, const std::vector<Monomial>& B) {
  auto frame = dual_extremal_rays(A);
  if (!frame) return false;
  auto nonneg = [&](const Monomial& m) {
    for (const auto& d : *frame)
      if (dot(d, m.e) < 0) return false;
    return true;
  };
  for (const auto& m : B)
    if (!nonneg(m)) return false;
  for (const auto& m : B)
    if (!monoid_contains(A, m, *frame)) return false;
  for (const auto& m : A)
    if (!monoid_contains(B, m, *frame)) return false;
  return true;
}

/// S(Γ) equals σ(Γ)^∨ ∩ M, with σ(Γ) smooth.
inline bool is_saturated(const GBrick& b) {
  auto sigma = sigma_cone(b);
  if (!sigma || !is_unimodular(b.group, *sigma)) return false;
  auto gens = semigroup_generators(b);
  std::vector<IntVec3> frame(sigma->rays.begin(), sigma->rays.end());
  for (const auto& g : gens)
    for (const auto& ray : frame)
      if (dot(g.e, ray) < 0) return false;
  for (const auto& u : chart_coordinates(b.group, *sigma))
    if (!monoid_contains(gens, u, frame)) return false;
  return true;
}

inline GBrick pullback_brick(const GroupType& g, Side side, const GBrick& child_brick) {
  std::vector<Monomial> all;
  for (const auto& k : child_brick.entries) {
    auto f = fiber(g, side, k);
    all.insert(all.end(), f.begin(), f.end());
  }
  if (static_cast<int>(all.size()) != g.r)
    throw FiberSizeMismatch("pullback has " + std::to_string(all.size()) + " members, expected " +
                            std::to_string(g.r));
  Candidate c;
  for (const auto& m : all)
    if (!c.emplace(weight_int(g, m), m).second) throw FiberSizeMismatch("pullback repeats a weight");
  return validate_prebrick(g, c);
}

inline GBrick x_chain_brick(const GroupType& g) {
  std::vector<Monomial> ms;
  for (int i = 0; i < g.r; ++i) ms.emplace_back(i, 0, 0);
  return make_brick(g, ms);
}

struct ConeBrick {
  Cone cone;
  GBrick brick;
};

/// One (cone, brick) pair per maximal cone, in the order of econ_fan.
inline std::vector<ConeBrick> danilov_bricks(const GroupType& g) {
  if (g.r == 1) return {{positive_octant(g), GBrick{g, {Monomial::one()}}}};
  std::vector<ConeBrick> out;
  out.push_back({central_cone(g), pullback_brick(g, Side::Central, GBrick{{1, 0}, {Monomial::one()}})});
  for (Side side : {Side::Left, Side::Right}) {
    GroupType c = child(g, side);
    for (const auto& cb : danilov_bricks(c))
      out.push_back({transport_cone(g, side, cb.cone), pullback_brick(g, side, cb.brick)});
  }
  return out;
}

/// Successor masks: bit j of succ[i] is set when f * Γ[i] = Γ[j] for some f.
inline std::vector<std::uint64_t> successor_masks(const GBrick& b) {
  if (b.size() > 64) throw TooLarge("closed subsets are limited to r <= 64");
  std::vector<std::uint64_t> succ(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (Var f : kVars) {
      Monomial fm = b[i] * Monomial::of(f);
      if (b.contains(fm)) succ[i] |= std::uint64_t{1} << weight_int(b.group, fm);
    }
  return succ;
}

inline constexpr std::size_t kClosedSubsetCap = std::size_t{1} << 22;

/// Calls visit(mask) for each closed subset, as a bitmask over weights.
template <class Visit>
void for_each_closed_subset(const GBrick& b, Visit&& visit, std::size_t cap = kClosedSubsetCap) {
  const auto succ = successor_masks(b);
  const std::size_t n = b.size();
  if (n <= 20) {
    const std::uint64_t full = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < full; ++mask) {
      bool closed = true;
      for (std::uint64_t rest = mask; rest && closed; rest &= rest - 1)
        closed = (succ[static_cast<std::size_t>(std::countr_zero(rest))] & ~mask) == 0;
      if (closed) visit(mask);
    }
    return;
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  auto degree = [&](std::size_t i) { return b[i][0] + b[i][1] + b[i][2]; };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return degree(i) > degree(j); });
  std::size_t produced = 0;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t k, std::uint64_t mask) {
    if (k == n) {
      if (++produced > cap) throw TooLarge("more than " + std::to_string(cap) + " closed subsets");
      visit(mask);
      return;
    }
    const std::size_t i = order[k];
    rec(k + 1, mask);
    if ((succ[i] & ~mask) == 0) rec(k + 1, mask | (std::uint64_t{1} << i));
  };
  rec(0, 0);
}

inline std::vector<std::uint64_t> closed_subset_masks(const GBrick& b, std::size_t cap = kClosedSubsetCap) {
  std::vector<std::uint64_t> out;
  for_each_closed_subset(b, [&](std::uint64_t m) { out.push_back(m); }, cap);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Monomial> subset_of(const GBrick& b, std::uint64_t mask) {
  std::vector<Monomial> out;
  for (std::size_t w = 0; w < b.size(); ++w)
    if (mask >> w & 1u) out.push_back(b[w]);
  return out;
}

inline std::uint64_t mask_of(const GBrick& b, const std::vector<Monomial>& subset) {
  std::uint64_t mask = 0;
  for (const auto& m : subset) {
    if (!b.contains(m)) throw std::invalid_argument(format_monomial(m) + " is not in the brick");
    mask |= std::uint64_t{1} << weight_int(b.group, m);
  }
  return mask;
}

inline std::vector<std::vector<Monomial>> closed_subsets(const GBrick& b) {
  std::vector<std::vector<Monomial>> out;
  for (auto m : closed_subset_masks(b)) out.push_back(subset_of(b, m));
  return out;
}

}  // namespace econres
