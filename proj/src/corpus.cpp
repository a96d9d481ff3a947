#include "freeact/corpus.hpp"

#include "freeact/error.hpp"

namespace freeact::corpus {

namespace {

Scalar q(long n, long d) { return Scalar::rational(n, d); }

PartialIsometry shift(Scalar lo, Scalar hi, Scalar t, std::optional<Letter> label = std::nullopt) {
  return {{std::move(lo), std::move(hi)}, 1, std::move(t), label};
}

SoISystem on_unit(std::vector<PartialIsometry> gens) {
  return SoISystem(MultiInterval::forest({{0, 1}}), std::move(gens));
}

SoISystem translation(Scalar t) { return on_unit({shift(0, Scalar(1) - t, t, 1)}); }

}  // namespace

Scalar golden_alpha() { return (Scalar::sqrt(5) - Scalar(1)) / Scalar(2); }

SoISystem golden() {
  const Scalar a = golden_alpha();
  return on_unit({shift(0, Scalar(1) - a, a, 1), shift(0, a, Scalar(1) - a, 2)});
}

SoISystem quarter_shift() { return on_unit({shift(0, q(3, 4), q(1, 4), 1)}); }

SoISystem rotation_pair() {
  return on_unit({shift(0, q(1, 2), q(1, 2), 1), shift(q(1, 2), 1, q(-1, 2), 2)});
}

SoISystem flip() { return on_unit({{{0, 1}, -1, Scalar(1), 1}}); }

SoISystem two_components() {
  return SoISystem(MultiInterval::forest({{0, 1}, {2, 3}}),
                   {shift(0, q(1, 2), q(1, 2), 1), shift(2, q(5, 2), q(1, 2), 2)});
}

std::vector<Named> glp_systems() {
  std::vector<Named> out;
  for (auto [n, d] : {std::pair{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 7}}) {
    out.push_back({"translate_" + std::to_string(n) + "_" + std::to_string(d), translation(q(n, d))});
  }
  out.push_back({"quarter_shift", quarter_shift()});
  out.push_back({"partial_flip", on_unit({{{0, q(1, 3)}, -1, Scalar(1), 1}})});
  out.push_back({"disjoint_shifts",
                 on_unit({shift(0, q(1, 4), q(1, 2), 1), shift(q(1, 4), q(1, 2), q(1, 2), 2)})});
  out.push_back({"two_components", two_components()});
  out.push_back({"fan_shifts", on_unit({shift(0, q(1, 5), q(2, 5), 1), shift(0, q(1, 5), q(4, 5), 2)})});
  out.push_back({"flip_and_shift", SoISystem(MultiInterval::forest({{0, 1}, {2, 3}}),
                                             {{{0, q(1, 2)}, -1, Scalar(3), 1}, shift(2, q(9, 4), q(1, 2), 2)})});
  out.push_back({"cross_components",
                 SoISystem(MultiInterval::forest({{0, 1}, {2, 3}}), {shift(0, q(1, 2), Scalar(2), 1)})});
  return out;
}

std::vector<Named> dependent_systems() {
  std::vector<Named> out;
  out.push_back({"double_identity_shift",
                 on_unit({shift(0, q(3, 4), q(1, 4), 1), shift(0, q(3, 4), q(1, 4), 2)})});
  out.push_back({"three_halves", on_unit({shift(0, q(1, 2), q(1, 2), 1), shift(0, q(1, 2), q(1, 2), 2),
                                          shift(q(1, 2), 1, q(-1, 2), 3)})});
  out.push_back({"stacked_flips", on_unit({{{0, 1}, -1, Scalar(1), 1}, {{0, 1}, -1, Scalar(1), 2}})});
  out.push_back({"rotation_and_shift", on_unit({shift(0, q(1, 2), q(1, 2), 1),
                                                shift(q(1, 2), 1, q(-1, 2), 2),
                                                shift(0, q(2, 3), q(1, 3), 3)})});
  out.push_back({"full_maps", on_unit({shift(0, 1, 0, 1), {{0, 1}, -1, Scalar(1), 2}})});
  return out;
}

std::vector<std::string> names() {
  return {"golden", "quarter_shift", "rotation_pair", "flip", "two_components"};
}

SoISystem by_name(const std::string& name) {
  if (name == "golden") return golden();
  if (name == "quarter_shift") return quarter_shift();
  if (name == "rotation_pair") return rotation_pair();
  if (name == "flip") return flip();
  if (name == "two_components") return two_components();
  for (auto& n : glp_systems()) if (n.name == name) return n.system;
  for (auto& n : dependent_systems()) if (n.name == name) return n.system;
  throw Error(ErrorKind::precondition_violated, "unknown system " + name);
}

}  // namespace freeact::corpus
