#pragma once

// One-shot verification of a type, optionally against golden data.

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "econres/brick.hpp"
#include "econres/chamber.hpp"
#include "econres/fan.hpp"
#include "econres/io.hpp"
#include "econres/stability.hpp"

namespace econres {

struct GoldenBrick {
  Cone cone;
  std::vector<Monomial> monomials;
  std::optional<std::array<Monomial, 3>> chart;
};

struct GoldenSemigroup {
  std::vector<Monomial> brick;
  std::vector<Monomial> generators;
};

struct GoldenSpot {
  Theta left_seed;
  Theta right_seed;
  std::optional<Theta> theta_p;
  std::vector<Monomial> brick;
  std::vector<Monomial> subset;
  BigInt value_minus_m;
};

struct Golden {
  GroupType group;
  std::optional<std::vector<Cone>> fan;
  std::vector<GoldenBrick> bricks;
  bool bricks_complete = false;
  std::vector<GoldenSemigroup> semigroups;
  std::optional<RootSet> simple_roots;
  std::optional<std::vector<std::vector<BigInt>>> chamber_rays;
  std::optional<Theta> vartheta;
  std::optional<GoldenSpot> spot;
};

inline Cone json_cone(const GroupType& g, const Json& rays) {
  if (!rays.is_array() || rays.size() != 3) throw ParseError("a cone needs three rays");
  return make_cone(g, json_vec(rays[0]), json_vec(rays[1]), json_vec(rays[2]));
}

inline Golden parse_golden(const Json& j) {
  Golden out;
  try {
    out.group = make_group(j.at("r").get<int>(), j.at("a").get<int>());
    const GroupType& g = out.group;
    if (j.contains("fan")) {
      out.fan.emplace();
      for (const auto& c : j["fan"]) out.fan->push_back(json_cone(g, c));
    }
    out.bricks_complete = j.value("bricks_complete", false);
    if (j.contains("bricks"))
      for (const auto& b : j["bricks"]) {
        GoldenBrick gb{json_cone(g, b.at("rays")), json_monomials(b.at("brick")), std::nullopt};
        if (b.contains("chart")) {
          auto ms = json_monomials(b["chart"]);
          if (ms.size() != 3) throw ParseError("chart needs three monomials");
          gb.chart = std::array<Monomial, 3>{ms[0], ms[1], ms[2]};
        }
        out.bricks.push_back(std::move(gb));
      }
    if (j.contains("semigroups"))
      for (const auto& s : j["semigroups"])
        out.semigroups.push_back({json_monomials(s.at("brick")), json_monomials(s.at("generators"))});
    if (j.contains("simple_roots")) {
      out.simple_roots.emplace();
      for (const auto& r : j["simple_roots"]) out.simple_roots->push_back({r.at(0).get<int>(), r.at(1).get<int>()});
    }
    if (j.contains("chamber_rays")) {
      out.chamber_rays.emplace();
      for (const auto& row : j["chamber_rays"]) {
        std::vector<BigInt> r;
        for (const auto& v : row) r.push_back(json_int(v));
        out.chamber_rays->push_back(std::move(r));
      }
    }
    if (j.contains("vartheta")) out.vartheta = json_theta(j["vartheta"]);
    if (j.contains("stability_spot")) {
      const auto& s = j["stability_spot"];
      GoldenSpot spot{json_theta(s.at("left_seed")), json_theta(s.at("right_seed")), std::nullopt,
                      json_monomials(s.at("brick")), json_monomials(s.at("subset")),
                      json_int(s.at("value_minus_m"))};
      if (s.contains("theta_p")) spot.theta_p = json_theta(s["theta_p"]);
      out.spot = std::move(spot);
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed golden file: ") + e.what());
  }
  return out;
}

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

struct VerifyReport {
  GroupType group;
  std::vector<Check> checks;
  double seconds = 0;

  std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
  }
  std::size_t failed() const { return checks.size() - passed(); }
  bool ok() const { return failed() == 0; }

  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
};

inline std::set<Monomial> monomial_set(const std::vector<Monomial>& ms) { return {ms.begin(), ms.end()}; }

inline std::set<std::vector<BigInt>> row_set(const std::vector<std::vector<BigInt>>& rows) {
  return {rows.begin(), rows.end()};
}

/// True iff u = c * v for some rational c > 0.
inline bool positive_multiple(const std::vector<Rational>& u, const std::vector<BigInt>& v) {
  if (u.size() != v.size()) return false;
  std::optional<Rational> c;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (v[i] == 0) {
      if (u[i] != 0) return false;
      continue;
    }
    Rational q = u[i] / Rational(v[i]);
    if (c && *c != q) return false;
    c = q;
  }
  return c && *c > 0;
}

namespace detail {

template <class F>
void guarded(VerifyReport& rep, const std::string& name, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    rep.add(name, false, std::string("exception: ") + e.what());
  }
}

}  // namespace detail

inline VerifyReport run_verify(const GroupType& g, const std::optional<Golden>& golden = std::nullopt) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport rep{g, {}, 0};
  if (golden && golden->group != g) {
    rep.add("golden.group", false, "golden data is for another type");
    return rep;
  }

  const EconFan fan = econ_fan(g);
  {
    const auto n = fan.maximal_cones.size();
    rep.add("fan.cone_count", n == static_cast<std::size_t>(2 * g.r - 1), std::to_string(n) + " maximal cones");
    const auto e1 = unit_ray(g, 0);
    const auto with_e1 = std::count_if(fan.maximal_cones.begin(), fan.maximal_cones.end(),
                                       [&](const Cone& c) { return c.has_ray(e1); });
    rep.add("fan.cones_with_e1", with_e1 == g.r, std::to_string(with_e1) + " cones contain e1");
    std::set<IntVec3> expected{unit_ray(g, 0), unit_ray(g, 1), unit_ray(g, 2)};
    for (int i = 1; i < g.r; ++i) expected.insert(exceptional_ray(g, i));
    auto rays = fan_rays(fan);
    rep.add("fan.rays", std::set<IntVec3>(rays.begin(), rays.end()) == expected,
            std::to_string(rays.size()) + " rays");
    bool smooth = std::all_of(fan.maximal_cones.begin(), fan.maximal_cones.end(),
                              [&](const Cone& c) { return is_unimodular(g, c); });
    rep.add("fan.unimodular", smooth);
    bool disc = true;
    for (int i = 1; i < g.r; ++i) disc = disc && discrepancy(g, exceptional_ray(g, i)) == make_rational(i, g.r);
    rep.add("fan.discrepancy", disc, "discrepancy(v_i) = i/r");
  }

  std::vector<ConeBrick> bricks;
  detail::guarded(rep, "bricks.construct", [&] { bricks = danilov_bricks(g); });
  if (!bricks.empty()) {
    std::set<Cone> bc, fc(fan.maximal_cones.begin(), fan.maximal_cones.end());
    for (const auto& cb : bricks) bc.insert(cb.cone);
    rep.add("bricks.cones_match_fan", bc == fc && bricks.size() == fan.maximal_cones.size());
    std::size_t axioms = 0, sigma = 0, saturated = 0;
    std::string first_bad;
    for (const auto& cb : bricks) {
      Candidate cand;
      for (std::size_t w = 0; w < cb.brick.size(); ++w) cand.emplace(static_cast<int>(w), cb.brick[w]);
      if (check_prebrick_axioms(g, cand).empty()) ++axioms;
      else if (first_bad.empty()) first_bad = cone_name(cb.cone);
      auto s = sigma_cone(cb.brick);
      if (s && *s == cb.cone) ++sigma;
      if (is_saturated(cb.brick)) ++saturated;
    }
    const std::string of = " of " + std::to_string(bricks.size());
    rep.add("bricks.axioms", axioms == bricks.size(), std::to_string(axioms) + of + (first_bad.empty() ? "" : "; first failure at " + first_bad));
    rep.add("bricks.sigma", sigma == bricks.size(), std::to_string(sigma) + of);
    rep.add("bricks.saturated", saturated == bricks.size(), std::to_string(saturated) + of);
  }

  if (g.r >= 2) {
    detail::guarded(rep, "theta", [&] {
      const SymbolicTheta sym = kedzierski_theta(g);
      const auto cl = child(g, Side::Left), cr = child(g, Side::Right);
      rep.add("theta.partial_system",
              satisfies_partial_system(g, sym.base, recursive_theta(cl), recursive_theta(cr)));
      const ConcreteTheta ct = concretize(sym);
      std::size_t stable = 0;
      for (const auto& cb : bricks) stable += is_stable(cb.brick, ct.theta) ? 1 : 0;
      rep.add("theta.stable", stable == bricks.size() && !bricks.empty(),
              std::to_string(stable) + " of " + std::to_string(bricks.size()) + " stable, m = " + ct.m.str());
      rep.add("chamber.contains_theta", in_chamber(g, ct.theta), format_theta(ct.theta));

      const auto rays = chamber_rays(g);
      const Theta vt = vartheta(g);
      auto hits = std::count_if(rays.begin(), rays.end(), [&](const auto& row) { return positive_multiple(vt.values, row); });
      rep.add("chamber.vartheta_is_ray", hits == 1, std::to_string(hits) + " matching rays");

      Theta interior = zero_theta(g.r);
      for (const auto& row : rays) interior = interior + theta_from_row(row);
      const int s = std::min(g.a, g.b());
      bool pattern = in_chamber(g, interior);
      for (int i = 0; i < g.r; ++i) pattern = pattern && ((interior[static_cast<std::size_t>(i)] < 0) == (i < s));
      rep.add("chamber.sign_pattern", pattern, "sum of rays " + format_theta(interior));
    });
  }

  if (golden) {
    const Golden& gd = *golden;
    if (gd.fan) {
      std::set<Cone> want(gd.fan->begin(), gd.fan->end()), got(fan.maximal_cones.begin(), fan.maximal_cones.end());
      rep.add("golden.fan", want == got && gd.fan->size() == fan.maximal_cones.size(),
              std::to_string(gd.fan->size()) + " golden cones");
    }
    if (!gd.bricks.empty()) {
      std::size_t matched = 0;
      std::string first_bad;
      for (const auto& want : gd.bricks) {
        auto it = std::find_if(bricks.begin(), bricks.end(), [&](const ConeBrick& cb) { return cb.cone == want.cone; });
        bool ok = it != bricks.end() && it->brick.as_set() == monomial_set(want.monomials);
        if (ok && want.chart) {
          auto got = chart_coordinates(g, it->cone);
          ok = std::set<Monomial>(got.begin(), got.end()) == std::set<Monomial>(want.chart->begin(), want.chart->end());
        }
        if (ok) ++matched;
        else if (first_bad.empty()) first_bad = cone_name(want.cone);
      }
      bool complete = !gd.bricks_complete || gd.bricks.size() == bricks.size();
      rep.add("golden.bricks", matched == gd.bricks.size() && complete,
              std::to_string(matched) + " of " + std::to_string(gd.bricks.size()) + " golden rows" +
                  (first_bad.empty() ? "" : "; first mismatch at " + first_bad));
    }
    for (std::size_t i = 0; i < gd.semigroups.size(); ++i)
      detail::guarded(rep, "golden.semigroup", [&] {
        const auto& s = gd.semigroups[i];
        GBrick b = make_brick(g, s.brick);
        rep.add("golden.semigroup[" + std::to_string(i) + "]", generates_same_monoid(semigroup_generators(b), s.generators),
                "S(" + join_monomials(s.brick) + ")");
      });
    if (gd.simple_roots && g.r >= 2) {
      auto got = simple_roots(g);
      rep.add("golden.simple_roots",
              std::set<Root>(got.begin(), got.end()) == std::set<Root>(gd.simple_roots->begin(), gd.simple_roots->end()) &&
                  got.size() == gd.simple_roots->size());
    }
    if (gd.chamber_rays && g.r >= 2) {
      auto got = chamber_rays(g);
      rep.add("golden.chamber_rays", row_set(got) == row_set(*gd.chamber_rays) && got.size() == gd.chamber_rays->size());
    }
    if (gd.vartheta && g.r >= 2) rep.add("golden.vartheta", vartheta(g) == *gd.vartheta);
    if (gd.spot && g.r >= 2)
      detail::guarded(rep, "golden.theta_spot", [&] {
        const auto& s = *gd.spot;
        if (s.theta_p)
          rep.add("golden.theta_p_system", satisfies_partial_system(g, *s.theta_p, s.left_seed, s.right_seed));
        SymbolicTheta sym = kedzierski_theta(g, s.left_seed, s.right_seed);
        if (s.theta_p) sym.base = *s.theta_p;
        ConcreteTheta ct = concretize(sym);
        GBrick b = make_brick(g, s.brick);
        Rational value = theta_eval(ct.theta, b, s.subset);
        rep.add("golden.theta_spot", value == Rational(ct.m + s.value_minus_m),
                "theta(A) = " + to_string(value) + " with m = " + ct.m.str());
      });
  }

  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace econres
