#pragma once

// Verdict reports shared by all subcommands. JSON reports keep insertion
// order and always start with "report_version".

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "interlab/model_space.hpp"
#include "interlab/preferential.hpp"

namespace interlab::cli {

using Report = nlohmann::ordered_json;

enum class Format { kText, kJson };

std::optional<Format> parse_format(std::string_view text);

/// {"report_version": 1, "command": ..., "verdict": ...}; an empty command is
/// left out.
Report make_report(std::string_view command, std::string_view verdict);

/// JSON: one compact document per line. Text: "key: value" lines, nested
/// values as compact JSON.
std::string emit_report(const Report& r, Format format);

Report models_json(const ModelSet& s);
Report names_json(const CoordSet& c);
/// {"Sigma": [[0, 1], ...], ...} in the order given.
Report witness_json(const std::vector<NamedSet>& sets);
Report split_json(const CoordSplit& split);

}  // namespace interlab::cli
