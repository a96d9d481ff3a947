#include <map>

#include "freeact/cli.hpp"
#include "freeact/corpus.hpp"
#include "freeact/error.hpp"

namespace freeact::cli {

namespace {

const char* const kGolden = R"({"D": 5, "forest": [["0", "1"]], "generators": [
  {"dom": ["0", "3/2 - 1/2*sqrt5"], "orient": 1, "offset": "-1/2 + 1/2*sqrt5", "label": "a"},
  {"dom": ["0", "-1/2 + 1/2*sqrt5"], "orient": 1, "offset": "3/2 - 1/2*sqrt5", "label": "b"}]})";

const char* const kThinRose = R"({"rose": ["1/10", "1"]})";

json hall() {
  return json::parse(R"({"name": "hall", "seed": 42, "steps": [
    {"id": "batch", "op": "stallings.hall-batch", "args": {"count": 200}, "expect": {"/verified": 200, "/failures": []}}
  ]})");
}

json glp() {
  json steps = json::array();
  steps.push_back(json::parse(R"({"id": "worked", "op": "soi.glp",
    "args": {"forest": [["0", "1"]], "generators": [{"dom": ["0", "3/4"], "offset": "1/4", "label": "a"}]},
    "expect": {"/m": "1", "/d": "3/4", "/e": "1/4", "/residual": "0", "/verdict": "identity-verified"}})"));
  for (const auto& n : corpus::glp_systems()) {
    steps.push_back({{"id", n.name},
                     {"op", "soi.glp"},
                     {"args", {{"corpus", n.name}}},
                     {"expect", {{"/residual", "0"}, {"/verdict", "identity-verified"}}}});
  }
  for (const auto& n : corpus::dependent_systems()) {
    steps.push_back({{"id", n.name},
                     {"op", "soi.glp"},
                     {"args", {{"corpus", n.name}}},
                     {"expect", {{"/verdict", "dependent generators certified"}}}});
  }
  steps.push_back(json::parse(R"({"id": "rotation", "op": "soi.glp", "flags": {"max_word": 2},
    "args": {"corpus": "rotation_pair"},
    "expect": {"/independence/violation": "ab", "/verdict": "dependent generators, identity inapplicable"}})"));
  return {{"name", "glp"}, {"seed", 42}, {"steps", steps}};
}

json grow() {
  json golden = json::parse(kGolden);
  json steps = json::array();
  json g = golden;
  g["f0"] = json::parse(R"([["1/10", "11/100"], ["27/50", "3/5"], ["77/100", "79/100"]])");
  steps.push_back({{"id", "golden"}, {"op", "soi.grow"}, {"args", g}, {"expect", {{"/monotone", true}}}});
  json whole = golden;
  whole["f0"] = json::parse(R"([["0", "1"]])");
  whole["steps"] = 3;
  steps.push_back({{"id", "stationary"}, {"op", "soi.grow"}, {"args", whole},
                   {"expect", {{"/stages/3/residual", "0"}, {"/stages/3/m", "1"}}}});
  steps.push_back(json::parse(R"({"id": "quarter", "op": "soi.grow",
    "args": {"corpus": "quarter_shift", "f0": [["0", "1/8"]], "steps": 4},
    "expect": {"/monotone": true, "/stages/1/forest": [["0", "1/8"], ["1/4", "3/8"]]}})"));
  for (const auto& n : corpus::glp_systems()) {
    steps.push_back({{"id", "grow_" + n.name},
                     {"op", "soi.grow"},
                     {"args", {{"corpus", n.name}, {"f0", json::parse(R"([["0", "1/7"]])")}}},
                     {"expect", {{"/monotone", true}}}});
  }
  return {{"name", "grow"}, {"seed", 42}, {"steps", steps}};
}

json main_theorem() {
  json golden = json::parse(kGolden);
  golden["samples"] = json::array({"1/7", "1/3", "1/2"});
  json steps = json::array();
  json full = golden;
  full["subgroup"] = json::array({"a", "b"});
  steps.push_back({{"id", "full"}, {"op", "soi.discrete"}, {"args", full}, {"expect", {{"/verdict", "suggests-dense"}}}});
  json cyclic = golden;
  cyclic["subgroup"] = json::array({"a"});
  steps.push_back({{"id", "cyclic"}, {"op", "soi.discrete"}, {"args", cyclic},
                   {"expect", {{"/verdict", "suggests-discrete"}, {"/min_gap", "-1/2 + 1/2*sqrt5"}}}});
  steps.push_back(json::parse(R"({"id": "hall", "op": "stallings.hall", "args": {"rank": 2, "generators": ["aa", "b"]},
    "expect": {"/witness/index": 2, "/verified": true}})"));
  json index2 = golden;
  index2["subgroup"] = json::parse(R"({"$ref": "hall/witness/cover/basis"})");
  steps.push_back({{"id", "index2"}, {"op", "soi.discrete"}, {"args", index2}, {"expect", {{"/verdict", "suggests-dense"}}}});
  return {{"name", "main-theorem"}, {"seed", 42}, {"steps", steps}};
}

json carrier() {
  json steps = json::array();
  auto scan = [&](const char* id, json subgroup, const char* status, json expect) {
    json step = {{"id", id},
                 {"op", "lam.scan"},
                 {"flags", {{"max_word", 4}, {"max_translate", 2}, {"epsilon", "1/2"}}},
                 {"args", {{"tree", json::parse(kThinRose)}, {"subgroup", std::move(subgroup)}}},
                 {"expect", std::move(expect)}};
    if (status) step["expect_status"] = status;
    steps.push_back(std::move(step));
  };
  scan("full", json::array({"a", "b"}), nullptr, {{"/verdict", "carried leaves found"}, {"/finite_index", true}});
  scan("index2", json::array({"aa", "b", "abA"}), nullptr, {{"/verdict", "carried leaves found"}});
  scan("index3", json::array({"aaa", "b", "abA", "aabAA"}), nullptr, {{"/verdict", "carried leaves found"}});
  scan("conjugate", json::array({"baB"}), "budget-exhausted", {{"/verdict", "none-up-to-budget"}});
  scan("control", json::array({"a"}), nullptr, {{"/verdict", "carried leaves found"}, {"/finite_index", false}});
  return {{"name", "carrier"}, {"seed", 42}, {"steps", steps}};
}

const std::map<std::string, json (*)()>& table() {
  static const std::map<std::string, json (*)()> t{
      {"carrier", carrier}, {"glp", glp}, {"grow", grow}, {"hall", hall}, {"main-theorem", main_theorem}};
  return t;
}

}  // namespace

std::vector<std::string> bundled_scenarios() {
  std::vector<std::string> out;
  for (const auto& [name, make] : table()) out.push_back(name);
  return out;
}

json bundled_scenario(const std::string& name) {
  const auto it = table().find(name);
  if (it == table().end()) throw Error(ErrorKind::schema_mismatch, "no bundled scenario " + name);
  return it->second();
}

}  // namespace freeact::cli
