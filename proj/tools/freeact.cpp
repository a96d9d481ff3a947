#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "freeact/cli.hpp"
#include "freeact/error.hpp"

using namespace freeact;
using cli::json;

namespace {

struct Flags {
  bool as_json = false;
  bool as_text = false;
  int budget = 500;
  int max_word = 8;
  int radius = 6;
  int max_translate = 2;
  std::string epsilon;
  unsigned long seed = 42;
  std::string in;
  std::string doc;
  std::string out;
};

cli::Options options_of(const Flags& f) {
  cli::Options o;
  o.budget = f.budget;
  o.max_word = f.max_word;
  o.radius = f.radius;
  o.max_translate = f.max_translate;
  o.seed = f.seed;
  if (!f.epsilon.empty()) o.epsilon = Scalar::parse(f.epsilon);
  return o;
}

int emit(const Flags& f, const json& report, cli::Status status) {
  const std::string text = f.as_json ? report.dump(2) + "\n" : cli::render_text(report);
  if (f.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream(f.out) << text;
  }
  return cli::exit_code(status);
}

json input_document(const Flags& f) {
  if (!f.doc.empty()) return io::parse_document(f.doc);
  if (!f.in.empty()) return io::read_document(f.in);
  throw Error(ErrorKind::parse_error, "no input document (use --in FILE or --doc JSON)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgroups of free groups, metric trees and systems of isometries, in exact arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  auto* fmt = app.add_option_group("format");
  fmt->add_flag("--json", f.as_json, "Emit the JSON report");
  fmt->add_flag("--text", f.as_text, "Emit the text rendering (default)");
  fmt->require_option(0, 1);
  app.add_option("--budget", f.budget, "Orbit/state budget")->capture_default_str();
  app.add_option("--max-word", f.max_word, "Word length budget")->capture_default_str();
  app.add_option("--radius", f.radius, "Radius budget for tree searches")->capture_default_str();
  app.add_option("--max-translate", f.max_translate, "Translate length for leaf scans")->capture_default_str();
  app.add_option("--epsilon", f.epsilon, "Scalar epsilon, e.g. 1/2");
  app.add_option("--seed", f.seed, "Seed for randomized steps")->capture_default_str();
  app.add_option("--in", f.in, "Input JSON document");
  app.add_option("--doc", f.doc, "Inline JSON document");
  app.add_option("--out", f.out, "Write the report to a file");

  std::string group, command, scenario;
  std::map<std::string, std::vector<std::string>> groups;
  for (const std::string& c : cli::commands()) {
    const auto space = c.find(' ');
    groups[c.substr(0, space)].push_back(c.substr(space + 1));
  }
  groups["soi"].push_back("subgroup");
  for (const auto& [g, cmds] : groups) {
    auto* sub = app.add_subcommand(g, g + " commands");
    sub->require_subcommand(1);
    sub->fallthrough();
    for (const std::string& c : cmds) {
      sub->add_subcommand(c)->fallthrough()->callback([&group, &command, g, c] {
        group = g;
        command = c;
      });
    }
  }
  auto* sc = app.add_subcommand("scenario", "Bundled and file scenarios");
  sc->require_subcommand(1);
  sc->fallthrough();
  auto* run = sc->add_subcommand("run", "Run a bundled scenario or a scenario file");
  run->add_option("scenario", scenario, "Name or path")->required();
  run->fallthrough();
  auto* list = sc->add_subcommand("list", "List bundled scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  cli::Options opt;
  const std::string name = group.empty() ? "scenario " + scenario : group + " " + command;
  try {
    opt = options_of(f);
    if (list->parsed()) {
      for (const std::string& s : cli::bundled_scenarios()) std::cout << s << "\n";
      return 0;
    }
    if (run->parsed()) {
      json doc;
      const auto names = cli::bundled_scenarios();
      if (std::find(names.begin(), names.end(), scenario) != names.end()) {
        doc = cli::bundled_scenario(scenario);
      } else {
        doc = io::read_document(scenario);
      }
      const cli::Outcome out = cli::run_scenario(doc, opt);
      return emit(f, cli::make_report(name, opt, out), out.status);
    }
    const cli::Outcome out = cli::run_command(group, command, input_document(f), opt);
    return emit(f, cli::make_report(name, opt, out), out.status);
  } catch (const Error& e) {
    emit(f, cli::error_report(name, opt, e), cli::Status::error);
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return 1;
  }
}
