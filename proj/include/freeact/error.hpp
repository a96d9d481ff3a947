#pragma once

#include <stdexcept>
#include <string>

namespace freeact {

enum class ErrorKind {
  malformed_word,
  malformed_scalar,
  field_mismatch,
  precondition_violated,
  budget_exhausted,
  degenerate_subgroup,
  malformed_path,
  out_of_support,
  missing_labels,
  support_mismatch,
  invalid_graph,
  invalid_system,
  parse_error,
  schema_mismatch,
};

const char* to_string(ErrorKind kind);

// Every recoverable failure in the library is reported through this type.
// Budget outcomes of searches are result values, not errors; the one
// exception is hall_completion, whose contract makes exhaustion an error.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace freeact
