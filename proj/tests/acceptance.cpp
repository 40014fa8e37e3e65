// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "support.hpp"

using namespace econres;
namespace t = econres::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Criterion {
  std::string id;
  std::optional<double> limit_seconds;
  std::function<Outcome()> run;
};

std::set<Cone> cone_set(const std::vector<Cone>& cs) { return {cs.begin(), cs.end()}; }

std::string name_of(const GroupType& g) { return "(" + std::to_string(g.r) + "," + std::to_string(g.a) + ")"; }

Outcome fan_goldens() {
  Outcome out;
  for (const char* file : {"golden_7_3.json", "golden_12_7.json"}) {
    Golden gd = t::load_golden(file);
    auto fan = econ_fan(gd.group);
    out.require(fan.maximal_cones.size() == gd.fan->size(), std::string(file) + ": cone count");
    out.require(cone_set(fan.maximal_cones) == cone_set(*gd.fan), std::string(file) + ": cone sets differ");
  }
  const auto g = make_group(7, 3);
  std::vector<IntVec3> want{unit_ray(g, 0), unit_ray(g, 1), unit_ray(g, 2)};
  for (int i = 1; i < 7; ++i) want.push_back(exceptional_ray(g, i));
  std::sort(want.begin(), want.end());
  out.require(fan_rays(econ_fan(g)) == want, "(7,3): ray set");
  return out;
}

Outcome fan_invariants() {
  Outcome out;
  int types = 0;
  for (const auto& g : all_types(30)) {
    ++types;
    auto fan = econ_fan(g);
    out.require(static_cast<int>(fan.maximal_cones.size()) == 2 * g.r - 1, name_of(g) + ": cone count");
    int with_e1 = 0;
    for (const auto& c : fan.maximal_cones) {
      with_e1 += c.has_ray(unit_ray(g, 0)) ? 1 : 0;
      out.require(is_unimodular(g, c), name_of(g) + ": singular cone");
    }
    out.require(with_e1 == g.r, name_of(g) + ": cones containing e1");
    for (int i = 1; i < g.r; ++i)
      out.require(discrepancy(g, exceptional_ray(g, i)) == make_rational(i, g.r), name_of(g) + ": discrepancy");
  }
  if (out.pass) out.detail = std::to_string(types) + " types";
  return out;
}

Outcome brick_goldens() {
  Outcome out;
  for (const char* file : {"golden_3_2.json", "golden_7_3.json", "golden_12_7.json"}) {
    Golden gd = t::load_golden(file);
    auto got = danilov_bricks(gd.group);
    std::map<Cone, GBrick> by_cone;
    for (const auto& cb : got) by_cone.emplace(cb.cone, cb.brick);
    if (gd.bricks_complete) out.require(got.size() == gd.bricks.size(), std::string(file) + ": brick count");
    for (const auto& gb : gd.bricks) {
      auto it = by_cone.find(gb.cone);
      if (it == by_cone.end()) {
        out.require(false, std::string(file) + ": missing cone " + cone_name(gb.cone));
        continue;
      }
      out.require(it->second.as_set() == t::as_set(gb.monomials), std::string(file) + ": brick on " + cone_name(gb.cone));
      if (gb.chart) {
        auto chart = chart_coordinates(gd.group, gb.cone);
        out.require(std::set<Monomial>(chart.begin(), chart.end()) ==
                        std::set<Monomial>(gb.chart->begin(), gb.chart->end()),
                    std::string(file) + ": chart on " + cone_name(gb.cone));
      }
    }
  }
  // The corrected chart entry: the printed monomial is not invariant, so it cannot be a chart coordinate.
  Json raw = read_json_file(t::data_path("golden_12_7.json"));
  const auto g = make_group(12, 7);
  for (const auto& e : raw.value("errata", Json::array())) {
    out.require(weight_int(g, json_monomial(e.at("printed"))) != 0, "erratum: printed value is invariant");
    out.require(weight_int(g, json_monomial(e.at("corrected"))) == 0, "erratum: corrected value is not invariant");
  }
  return out;
}

Outcome semigroup_goldens() {
  Outcome out;
  Golden gd = t::load_golden("golden_7_3.json");
  out.require(gd.semigroups.size() == 2, "expected two semigroup goldens");
  for (const auto& sg : gd.semigroups) {
    auto gens = semigroup_generators(make_brick(gd.group, sg.brick));
    out.require(generates_same_monoid(gens, sg.generators), "semigroup of {" + join_monomials(sg.brick) + "}");
  }
  return out;
}

Outcome brick_properties() {
  Outcome out;
  std::size_t count = 0;
  for (const auto& g : all_types(15)) {
    auto fan = econ_fan(g);
    auto bricks = danilov_bricks(g);
    std::set<Cone> bc;
    for (const auto& cb : bricks) {
      ++count;
      bc.insert(cb.cone);
      out.require(check_prebrick_axioms(g, candidate_from(g, cb.brick.entries)).empty(), name_of(g) + ": axioms");
      out.require(sigma_cone(cb.brick) == cb.cone, name_of(g) + ": sigma on " + cone_name(cb.cone));
      out.require(is_saturated(cb.brick), name_of(g) + ": saturation on " + cone_name(cb.cone));
    }
    out.require(bc == cone_set(fan.maximal_cones), name_of(g) + ": cones differ from the fan");
  }
  if (out.pass) out.detail = std::to_string(count) + " bricks";
  return out;
}

Outcome stability() {
  Outcome out;
  for (const auto& g : all_types(15)) {
    Theta theta = concretize(kedzierski_theta(g)).theta;
    for (const auto& cb : danilov_bricks(g))
      out.require(is_stable(cb.brick, theta), name_of(g) + ": unstable on " + cone_name(cb.cone));
  }
  Golden gd = t::load_golden("golden_7_3.json");
  const GoldenSpot& spot = *gd.spot;
  auto sym = kedzierski_theta(gd.group, spot.left_seed, spot.right_seed);
  out.require(satisfies_partial_system(gd.group, sym.base, spot.left_seed, spot.right_seed), "solver output");
  out.require(satisfies_partial_system(gd.group, *spot.theta_p, spot.left_seed, spot.right_seed),
              "reference partial solution");
  auto c = concretize(SymbolicTheta{*spot.theta_p, sym.direction});
  GBrick b = make_brick(gd.group, spot.brick);
  Rational value = theta_eval(c.theta, b, spot.subset);
  out.require(value == Rational(c.m + spot.value_minus_m), "spot value " + to_string(value));
  const auto masks = closed_subset_masks(b);
  out.require(std::find(masks.begin(), masks.end(), mask_of(b, spot.subset)) != masks.end(), "spot subset is not closed");
  if (out.pass) out.detail = "m=" + c.m.str() + ", value=" + to_string(value);
  return out;
}

Outcome chamber_goldens() {
  Outcome out;
  for (const char* file : {"golden_7_3.json", "golden_12_7.json"}) {
    Golden gd = t::load_golden(file);
    auto roots = simple_roots(gd.group);
    out.require(std::set<Root>(roots.begin(), roots.end()) ==
                    std::set<Root>(gd.simple_roots->begin(), gd.simple_roots->end()),
                std::string(file) + ": simple roots");
    out.require(row_set(chamber_rays(gd.group)) == row_set(*gd.chamber_rays), std::string(file) + ": ray matrix");
  }
  return out;
}

Outcome cross_validation() {
  Outcome out;
  for (const auto& g : all_types(15)) {
    out.require(in_chamber(g, concretize(kedzierski_theta(g)).theta), name_of(g) + ": theta outside the chamber");
    auto rays = chamber_rays(g);
    const Theta v = vartheta(g);
    int hits = 0;
    for (const auto& row : rays) hits += positive_multiple(v.values, row) ? 1 : 0;
    out.require(hits == 1, name_of(g) + ": vartheta matches " + std::to_string(hits) + " rays");
    Theta interior = zero_theta(g.r);
    for (const auto& row : rays) interior = interior + theta_from_row(row);
    const int s = std::min(g.a, g.b());
    for (int i = 0; i < g.r; ++i)
      out.require((interior[static_cast<std::size_t>(i)] < 0) == (i < s), name_of(g) + ": sign pattern");
  }
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> e(-6, 6);
  std::size_t samples = 0, stable_samples = 0;
  for (const auto& g : all_types(12)) {
    auto rays = chamber_rays(g);
    std::vector<StabilityChecker> all, without_x;
    for (const auto& cb : danilov_bricks(g)) {
      all.emplace_back(cb.brick);
      if (!t::brick_contains_x(cb.brick)) without_x.emplace_back(cb.brick);
    }
    auto stable = [](const std::vector<StabilityChecker>& cs, const Theta& th) {
      return std::all_of(cs.begin(), cs.end(), [&](const StabilityChecker& c) { return c.is_stable(th); });
    };
    for (int k = 0; k < 100; ++k, ++samples) {
      Theta th;
      if (k % 3 == 0) {
        th = t::random_chamber_combo(rays, rng, 1, 10);
      } else if (k % 3 == 1) {
        th = t::random_chamber_combo(rays, rng, -2, 10);
      } else {
        th = zero_theta(g.r);
        for (std::size_t i = 1; i < th.size(); ++i) {
          th[i] = e(rng);
          th[0] -= th[i];
        }
      }
      const bool full = stable(all, th);
      stable_samples += full ? 1 : 0;
      out.require(full == stable(without_x, th), name_of(g) + ": lemma fails at " + format_theta(th));
    }
  }
  if (out.pass)
    out.detail = std::to_string(samples) + " random parameters, " + std::to_string(stable_samples) + " stable";
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  std::size_t bricks = 0;
  for (const auto& g : all_types(12))
    for (const auto& cb : danilov_bricks(g)) {
      ++bricks;
      out.require(t::as_set_of_sets(closed_subsets(cb.brick)) == t::naive_closed_subsets(cb.brick),
                  name_of(g) + ": closed subsets on " + cone_name(cb.cone));
    }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(-6, 6);
  for (const auto& g : all_types(15))
    for (Side side : {Side::Central, Side::Left, Side::Right})
      for (int k = 0; k < 20; ++k) {
        Monomial target(e(rng), e(rng), e(rng));
        out.require(t::as_set(fiber(g, side, target)) == t::scanned_fiber(g, side, target, 200),
                    name_of(g) + ": fiber of " + format_monomial(target));
      }
  if (out.pass) out.detail = std::to_string(bricks) + " bricks";
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", 1.0, fan_goldens},         {"AC2", 10.0, fan_invariants},     {"AC3", std::nullopt, brick_goldens},
      {"AC4", std::nullopt, semigroup_goldens}, {"AC5", 60.0, brick_properties}, {"AC6", 30.0, stability},
      {"AC7", std::nullopt, chamber_goldens},   {"AC8", 60.0, cross_validation}, {"AC9", std::nullopt, oracle_equivalence},
  };
  bool all_pass = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& ex) {
      out = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds && secs >= *c.limit_seconds) {
      out.pass = false;
      out.detail = "over the time limit";
    }
    all_pass = all_pass && out.pass;
    char timing[64];
    if (c.limit_seconds) std::snprintf(timing, sizeof timing, "%.2fs < %.0fs", secs, *c.limit_seconds);
    else std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << c.id << ' ' << (out.pass ? "PASS" : "FAIL") << " [" << timing << "]"
              << (out.detail.empty() ? "" : " " + out.detail) << std::endl;
  }
  return all_pass ? 0 : 1;
}
