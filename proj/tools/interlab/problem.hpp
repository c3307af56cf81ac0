#pragma once

// A problem bundle: one JSON document naming a signature and the sets,
// formulas, relations, distances and splits built over it.
//
//   {
//     "signature": ["a", {"name": "b", "k": 3}],
//     "formulas":  {"phi": "a & b"},
//     "sets":      {"S": {"models": [[0, 1]]}, "A": {"formula": "a"}},
//     "relations": {"R": {"builtin": "circumscription"}},
//     "distances": {"d": {"variant": "set"}},
//     "splits":    {"main": {"left": ["a"]}},
//     "checks":    [{"kind": "size", "set": "S", "subset": "A", "split": "main"}]
//   }
//
// Everything but "signature" is optional. Names used by checks must be
// declared; errors carry the JSON pointer of the offending value.

#include <filesystem>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "interlab/formula.hpp"
#include "interlab/model_space.hpp"
#include "interlab/preferential.hpp"
#include "interlab/revision.hpp"

namespace interlab::cli {

struct SizeCheck {
  std::string set;
  std::string subset;
  std::string split;
  std::optional<std::string> relation;
  /// Expected "n/m" strings, compared literally.
  std::optional<std::string> expect_fraction;
  std::optional<std::string> expect_projected;
};

struct Problem {
  Signature signature;
  std::map<std::string, Formula> formulas;
  std::map<std::string, ModelSet> sets;
  std::map<std::string, PreferenceStructure> relations;
  std::map<std::string, DistanceModel> distances;
  std::map<std::string, CoordSplit> splits;
  std::vector<SizeCheck> checks;
};

Problem parse_problem(const nlohmann::json& doc);
/// Throws InvalidArgument when the file cannot be read or is not JSON.
Problem load_problem(const std::filesystem::path& path);

nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace interlab::cli
