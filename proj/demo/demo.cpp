#include <iostream>

#include "econres/econres.hpp"

int main() {
  using namespace econres;
  const GroupType g = make_group(7, 3);
  for (const auto& [cone, brick] : danilov_bricks(g)) {
    std::cout << cone_name(cone) << "  {" << join_monomials(brick.entries, ", ") << "}\n";
  }
  const ConcreteTheta theta = concretize(kedzierski_theta(g));
  std::cout << "theta = " << format_theta(theta.theta) << ", in chamber: " << std::boolalpha
            << in_chamber(g, theta.theta) << '\n';
}
