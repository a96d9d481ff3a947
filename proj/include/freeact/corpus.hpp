#pragma once

#include <string>
#include <vector>

#include "freeact/soi.hpp"

namespace freeact::corpus {

struct Named {
  std::string name;
  SoISystem system;
};

// alpha = (sqrt5 - 1)/2 on [0,1]: a translates [0, 1-alpha] by alpha and
// b translates [0, alpha] by 1-alpha. Labels a, b.
SoISystem golden();
Scalar golden_alpha();
// a: [0,3/4] -> [1/4,1]. Label a.
SoISystem quarter_shift();
// a: [0,1/2] -> [1/2,1], b: [1/2,1] -> [0,1/2]. Labels a, b.
SoISystem rotation_pair();
// x -> 1 - x on [0,1]. Label a.
SoISystem flip();
// Two components [0,1] and [2,3], one half shift on each. Labels a, b.
SoISystem two_components();

// Independent systems with every orbit family resolvable.
std::vector<Named> glp_systems();
// Systems with domain sum above the total measure.
std::vector<Named> dependent_systems();

SoISystem by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace freeact::corpus
