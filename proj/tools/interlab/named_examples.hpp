#pragma once

// Built-in reproductions of the worked examples, runnable by name.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "interlab/budget.hpp"
#include "report.hpp"

namespace interlab::cli {

struct ExampleOutcome {
  bool reproduced = false;
  Report report;
};

/// Canonical names, in the order `examples run all` uses.
const std::vector<std::string>& example_names();

/// nullopt for an unknown name. "gödel4-3.1" is accepted for "goedel4-3.1".
std::optional<ExampleOutcome> run_example(std::string_view name, const Budget& budget);

}  // namespace interlab::cli
