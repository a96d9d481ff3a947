#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freeact/error.hpp"
#include "freeact/io.hpp"

namespace freeact::cli {

using io::json;

struct Options {
  int budget = 500;
  int max_word = 8;
  int radius = 6;
  int max_translate = 2;
  std::optional<Scalar> epsilon;
  unsigned long seed = 42;
};

// ok: computed or proved. budget: a search ran out before deciding.
// error: bad input, failed assertion or a violated check.
enum class Status { ok, budget, error };
const char* to_string(Status s);
int exit_code(Status s);

struct Outcome {
  json result;
  Status status = Status::ok;
};

// group/command as on the command line, e.g. ("soi", "glp").
Outcome run_command(const std::string& group, const std::string& command, const json& doc, const Options& opt);
std::vector<std::string> commands();

// Canonical report document; "result" holds the outcome, "budgets" echoes
// the effective options.
json make_report(const std::string& command, const Options& opt, const Outcome& outcome);
json error_report(const std::string& command, const Options& opt, const Error& e);
std::string render_text(const json& report);

// Steps run in order. "$ref": "step/json-pointer" pulls a value out of an
// earlier step's result; "expect" maps result pointers to expected values.
Outcome run_scenario(const json& scenario, const Options& opt);
std::vector<std::string> bundled_scenarios();
json bundled_scenario(const std::string& name);

}  // namespace freeact::cli
