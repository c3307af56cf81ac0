#include "report.hpp"

namespace interlab::cli {

std::optional<Format> parse_format(std::string_view text) {
  if (text == "text") return Format::kText;
  if (text == "json") return Format::kJson;
  return std::nullopt;
}

Report make_report(std::string_view command, std::string_view verdict) {
  Report r;
  r["report_version"] = 1;
  if (!command.empty()) r["command"] = command;
  r["verdict"] = verdict;
  return r;
}

std::string emit_report(const Report& r, Format format) {
  if (format == Format::kJson) return r.dump() + "\n";
  std::string out;
  for (const auto& [key, value] : r.items()) {
    if (key == "report_version") continue;
    out += key;
    out += ": ";
    out += value.is_string() ? value.get<std::string>() : value.dump();
    out += '\n';
  }
  return out;
}

Report models_json(const ModelSet& s) {
  Report out = Report::array();
  for (const auto& t : s.tuples()) out.push_back(t);
  return out;
}

Report names_json(const CoordSet& c) { return Report(std::vector<std::string>(c.begin(), c.end())); }

Report witness_json(const std::vector<NamedSet>& sets) {
  Report out = Report::object();
  for (const auto& [name, set] : sets) out[name] = models_json(set);
  return out;
}

Report split_json(const CoordSplit& split) {
  return {{"left", names_json(split.left)}, {"right", names_json(split.right)}};
}

}  // namespace interlab::cli
