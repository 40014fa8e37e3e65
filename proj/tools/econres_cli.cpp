#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "econres/econres.hpp"

using namespace econres;

namespace {

enum class Format { Json, Tsv, Pretty };

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInvalid = 2;

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

int command_fan(const GroupType& g, Format fmt) {
  EconFan fan = econ_fan(g);
  std::sort(fan.maximal_cones.begin(), fan.maximal_cones.end());
  switch (fmt) {
    case Format::Json: print_json(fan_json(fan)); break;
    case Format::Tsv:
      std::cout << "cone\tgenerators\trays\n";
      for (std::size_t i = 0; i < fan.maximal_cones.size(); ++i) {
        const Cone& c = fan.maximal_cones[i];
        std::cout << i + 1 << '\t' << cone_name(c) << '\t' << c.rays[0] << ' ' << c.rays[1] << ' ' << c.rays[2] << '\n';
      }
      break;
    case Format::Pretty:
      std::cout << "economic resolution of " << g << ": " << fan.maximal_cones.size() << " maximal cones\n";
      for (const Cone& c : fan.maximal_cones) std::cout << "  Cone(" << cone_name(c) << ")\n";
      break;
  }
  return kOk;
}

int command_bricks(const GroupType& g, Format fmt) {
  auto rows = danilov_bricks(g);
  std::sort(rows.begin(), rows.end(), [](const ConeBrick& x, const ConeBrick& y) { return x.cone < y.cone; });
  switch (fmt) {
    case Format::Json: {
      Json out = Json::array();
      for (const auto& cb : rows) {
        auto chart = chart_coordinates(g, cb.cone);
        out.push_back({{"cone", cone_json(cb.cone)},
                       {"brick", brick_json(cb.brick)},
                       {"chart", monomials_json({chart.begin(), chart.end()})}});
      }
      print_json({{"r", g.r}, {"a", g.a}, {"rows", out}});
      break;
    }
    case Format::Tsv:
      std::cout << "cone\tgenerators\tbrick\tcoordinates\n";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        auto chart = chart_coordinates(g, rows[i].cone);
        std::cout << i + 1 << '\t' << cone_name(rows[i].cone) << '\t' << join_monomials(rows[i].brick.entries) << '\t'
                  << join_monomials({chart.begin(), chart.end()}) << '\n';
      }
      break;
    case Format::Pretty:
      std::cout << "Danilov bricks of " << g << ": " << rows.size() << '\n';
      for (const auto& cb : rows) {
        auto chart = chart_coordinates(g, cb.cone);
        std::cout << "  Cone(" << cone_name(cb.cone) << ")\n    brick       {" << join_monomials(cb.brick.entries, ", ")
                  << "}\n    coordinates " << join_monomials({chart.begin(), chart.end()}, ", ") << '\n';
      }
      break;
  }
  return kOk;
}

int command_chamber(const GroupType& g, Format fmt) {
  if (g.r < 2) throw InvalidType("the chamber needs r >= 2");
  auto roots = simple_roots(g);
  auto rays = chamber_rays(g);
  switch (fmt) {
    case Format::Json: {
      Json jr = Json::array();
      for (const auto& rt : roots) jr.push_back(root_json(rt));
      print_json({{"r", g.r}, {"a", g.a}, {"simple_roots", jr}, {"added_root", root_json(added_root(g))},
                  {"rays", matrix_json(rays)}});
      break;
    }
    case Format::Tsv:
      std::cout << "root";
      for (int i = 0; i < g.r; ++i) std::cout << "\trho" << i;
      std::cout << '\n';
      for (std::size_t k = 0; k < roots.size(); ++k) std::cout << roots[k] << '\t' << format_row(rays[k], "\t") << '\n';
      break;
    case Format::Pretty:
      std::cout << "simple roots of " << g << " (added root " << added_root(g) << "):\n";
      for (std::size_t k = 0; k < roots.size(); ++k) {
        AlphaVector v = expand_in_alpha(g, roots[k]);
        std::string expansion;
        for (std::size_t i = 1; i < v.coefficients.size(); ++i)
          if (v.coefficients[i] != 0)
            expansion += (v.coefficients[i] > 0 ? (expansion.empty() ? "" : "+") : "-") +
                         (std::abs(v.coefficients[i]) == 1 ? "" : std::to_string(std::abs(v.coefficients[i]))) + "a" +
                         std::to_string(i);
        std::cout << "  " << roots[k] << " = " << expansion << "\n    ray (" << format_row(rays[k], ",") << ")\n";
      }
      break;
  }
  return kOk;
}

int command_theta(const GroupType& g, Format fmt) {
  if (g.r < 2) throw InvalidType("the parameter needs r >= 2");
  SymbolicTheta sym = kedzierski_theta(g);
  ConcreteTheta ct = concretize(sym);
  switch (fmt) {
    case Format::Json:
      print_json({{"r", g.r}, {"a", g.a}, {"base", theta_json(sym.base)}, {"direction", theta_json(sym.direction)},
                  {"m", int_json(ct.m)}, {"theta", theta_json(ct.theta)}});
      break;
    case Format::Tsv:
      std::cout << "weight\tbase\tdirection\ttheta\n";
      for (std::size_t i = 0; i < ct.theta.size(); ++i)
        std::cout << i << '\t' << to_string(sym.base[i]) << '\t' << to_string(sym.direction[i]) << '\t'
                  << to_string(ct.theta[i]) << '\n';
      break;
    case Format::Pretty:
      std::cout << "base      " << format_theta(sym.base) << "\ndirection " << format_theta(sym.direction)
                << "\nm         " << ct.m << "\ntheta     " << format_theta(ct.theta) << '\n';
      break;
  }
  return kOk;
}

int command_stable(const GroupType& g, const Theta& theta, Format fmt) {
  if (static_cast<int>(theta.size()) != g.r)
    throw ParseError("parameter has " + std::to_string(theta.size()) + " values, expected " + std::to_string(g.r));
  if (theta.total() != 0) throw ParseError("parameter values must sum to zero");
  auto rows = danilov_bricks(g);
  std::sort(rows.begin(), rows.end(), [](const ConeBrick& x, const ConeBrick& y) { return x.cone < y.cone; });
  bool all = true;
  Json out = Json::array();
  if (fmt == Format::Tsv) std::cout << "generators\tstable\tdestabilizing\n";
  for (const auto& cb : rows) {
    StabilityChecker checker(cb.brick);
    auto bad = checker.destabilizing(theta);
    all = all && !bad;
    std::string sub = bad ? join_monomials(subset_of(cb.brick, *bad)) : "";
    switch (fmt) {
      case Format::Json:
        out.push_back({{"cone", cone_json(cb.cone)}, {"stable", !bad}, {"destabilizing", bad ? monomials_json(subset_of(cb.brick, *bad)) : Json()}});
        break;
      case Format::Tsv: std::cout << cone_name(cb.cone) << '\t' << (bad ? "no" : "yes") << '\t' << sub << '\n'; break;
      case Format::Pretty:
        std::cout << "  Cone(" << cone_name(cb.cone) << "): " << (bad ? "unstable, {" + sub + "}" : "stable") << '\n';
        break;
    }
  }
  bool chamber = g.r >= 2 && in_chamber(g, theta);
  if (fmt == Format::Json) print_json({{"r", g.r}, {"a", g.a}, {"all_stable", all}, {"in_chamber", chamber}, {"bricks", out}});
  else if (fmt == Format::Pretty)
    std::cout << (all ? "all bricks stable" : "some brick unstable") << "; " << (chamber ? "inside" : "outside")
              << " the chamber\n";
  return all ? kOk : kFailed;
}

int command_verify(const GroupType& g, const std::optional<std::string>& golden_path, Format fmt) {
  std::optional<Golden> golden;
  if (golden_path) golden = parse_golden(read_json_file(*golden_path));
  VerifyReport rep = run_verify(g, golden);
  switch (fmt) {
    case Format::Json: {
      Json checks = Json::array();
      for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
      print_json({{"r", g.r}, {"a", g.a}, {"checks", checks}, {"passed", rep.passed()}, {"failed", rep.failed()}});
      break;
    }
    case Format::Tsv:
      std::cout << "check\tstatus\tdetail\n";
      for (const auto& c : rep.checks) std::cout << c.name << '\t' << (c.pass ? "pass" : "fail") << '\t' << c.detail << '\n';
      break;
    case Format::Pretty:
      std::cout << "verify " << g << '\n';
      for (const auto& c : rep.checks)
        std::cout << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : "  " + c.detail) << '\n';
      std::cout << rep.passed() << " passed, " << rep.failed() << " failed\n";
      break;
  }
  return rep.ok() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Economic resolutions of terminal cyclic quotient singularities 1/r(1,a,r-a)"};
  app.require_subcommand(1);
  std::string format = "pretty";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv", "pretty"}));

  int r = 0, a = 0;
  auto add_type = [&](CLI::App* sub) {
    sub->add_option("r", r, "Group order")->required();
    sub->add_option("a", a, "Second weight")->required();
    sub->fallthrough();
  };
  auto* fan = app.add_subcommand("fan", "Maximal cones of the economic resolution");
  auto* bricks = app.add_subcommand("bricks", "Danilov bricks with their cones and chart coordinates");
  auto* chamber = app.add_subcommand("chamber", "Simple roots and rays of the chamber");
  auto* theta = app.add_subcommand("theta", "The recursive stability parameter");
  auto* stable = app.add_subcommand("stable", "Stability of every Danilov brick under a parameter");
  auto* verify = app.add_subcommand("verify", "Run every check for one type");
  for (auto* sub : {fan, bricks, chamber, theta, stable, verify}) add_type(sub);

  std::string theta_inline, theta_file;
  auto* ti = stable->add_option("--theta", theta_inline, "Comma separated fractions, one per weight");
  auto* tf = stable->add_option("--theta-file", theta_file, "JSON file {\"values\": [...]}");
  ti->excludes(tf);
  std::string golden;
  verify->add_option("--golden", golden, "Golden data to compare against");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  const Format fmt = format == "json" ? Format::Json : format == "tsv" ? Format::Tsv : Format::Pretty;
  try {
    const GroupType g = make_group(r, a);
    if (fan->parsed()) return command_fan(g, fmt);
    if (bricks->parsed()) return command_bricks(g, fmt);
    if (chamber->parsed()) return command_chamber(g, fmt);
    if (theta->parsed()) return command_theta(g, fmt);
    if (stable->parsed()) {
      if (theta_inline.empty() && theta_file.empty()) throw ParseError("stable needs --theta or --theta-file");
      Theta t = theta_file.empty() ? parse_theta_list(theta_inline) : json_theta(read_json_file(theta_file));
      return command_stable(g, t, fmt);
    }
    if (verify->parsed()) return command_verify(g, golden.empty() ? std::nullopt : std::optional(golden), fmt);
  } catch (const InvalidType& e) {
    std::cerr << "invalid type: " << e.what() << '\n';
    return kInvalid;
  } catch (const ParseError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kInvalid;
}
