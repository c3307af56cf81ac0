#include "problem.hpp"

#include <fstream>

#include "interlab/json_io.hpp"
#include "interlab/prop_logic.hpp"

namespace interlab::cli {

using nlohmann::json;

namespace {

const json* member_object(const json& doc, const char* key) {
  if (!doc.contains(key)) return nullptr;
  if (!doc[key].is_object()) throw SchemaError(json_pointer("", key), std::string(key) + " must be an object");
  return &doc[key];
}

Formula checked_formula(const json& j, const Signature& sig, const std::string& at) {
  if (!j.is_string()) throw SchemaError(at, "formula must be a string");
  Formula f = Formula::atom("x");
  try {
    f = parse_formula(j.get<std::string>());
  } catch (const SyntaxError& e) {
    throw SchemaError(at, e.what());
  }
  for (const auto& a : f.atoms()) {
    if (!sig.contains(a)) throw SchemaError(at, "undeclared coordinate '" + a + "'");
  }
  return f;
}

std::string required_name(const json& check, const char* key, const std::string& at) {
  if (!check.contains(key) || !check[key].is_string()) {
    throw SchemaError(json_pointer(at, key), std::string("check needs a string \"") + key + "\"");
  }
  return check[key].get<std::string>();
}

template <class Map>
void require_declared(const Map& m, const std::string& name, const std::string& at, const char* what) {
  if (!m.contains(name)) throw SchemaError(at, std::string("unknown ") + what + " '" + name + "'");
}

}  // namespace

Problem parse_problem(const json& doc) {
  if (!doc.is_object()) throw SchemaError("", "problem must be an object");
  if (!doc.contains("signature")) throw SchemaError("", "problem needs a \"signature\"");
  Problem p;
  p.signature = signature_from_json(doc["signature"], "/signature");
  const Signature& sig = p.signature;

  if (const json* fs = member_object(doc, "formulas")) {
    for (const auto& [name, f] : fs->items()) {
      p.formulas.emplace(name, checked_formula(f, sig, json_pointer("/formulas", name)));
    }
  }
  if (const json* ss = member_object(doc, "sets")) {
    for (const auto& [name, s] : ss->items()) {
      const std::string at = json_pointer("/sets", name);
      if (s.is_array()) {
        p.sets.emplace(name, models_from_json(s, sig, at));
      } else if (s.is_object() && s.contains("formula")) {
        p.sets.emplace(name, models(checked_formula(s["formula"], sig, json_pointer(at, "formula")), sig));
      } else if (s.is_object() && s.contains("models")) {
        p.sets.emplace(name, models_from_json(s["models"], sig, json_pointer(at, "models")));
      } else {
        throw SchemaError(at, "set needs \"models\" or \"formula\"");
      }
    }
  }
  if (const json* rs = member_object(doc, "relations")) {
    for (const auto& [name, r] : rs->items()) {
      p.relations.emplace(name, relation_from_json(r, sig, json_pointer("/relations", name)));
    }
  }
  if (const json* ds = member_object(doc, "distances")) {
    for (const auto& [name, d] : ds->items()) {
      p.distances.emplace(name, distance_from_json(d, json_pointer("/distances", name)));
    }
  }
  if (const json* sp = member_object(doc, "splits")) {
    for (const auto& [name, s] : sp->items()) {
      const std::string at = json_pointer("/splits", name);
      if (!s.is_object() || !s.contains("left")) throw SchemaError(at, "split needs \"left\"");
      const CoordSet left = coord_set_from_json(s["left"], sig, json_pointer(at, "left"));
      CoordSplit split = CoordSplit::from_left(sig, left);
      if (s.contains("right")) {
        const CoordSet right = coord_set_from_json(s["right"], sig, json_pointer(at, "right"));
        if (right != split.right) throw SchemaError(json_pointer(at, "right"), "left and right must partition the signature");
      }
      p.splits.emplace(name, std::move(split));
    }
  }
  if (doc.contains("checks")) {
    const json& cs = doc["checks"];
    if (!cs.is_array()) throw SchemaError("/checks", "checks must be an array");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string at = json_pointer("/checks", i);
      const json& c = cs[i];
      if (!c.is_object()) throw SchemaError(at, "check must be an object");
      const std::string kind = required_name(c, "kind", at);
      if (kind != "size") throw SchemaError(json_pointer(at, "kind"), "unknown check kind '" + kind + "'");
      SizeCheck sc;
      sc.set = required_name(c, "set", at);
      sc.subset = required_name(c, "subset", at);
      sc.split = required_name(c, "split", at);
      require_declared(p.sets, sc.set, json_pointer(at, "set"), "set");
      require_declared(p.sets, sc.subset, json_pointer(at, "subset"), "set");
      require_declared(p.splits, sc.split, json_pointer(at, "split"), "split");
      if (!p.sets.at(sc.subset).is_subset_of(p.sets.at(sc.set))) {
        throw SchemaError(json_pointer(at, "subset"), "'" + sc.subset + "' is not a subset of '" + sc.set + "'");
      }
      if (c.contains("relation")) {
        sc.relation = required_name(c, "relation", at);
        require_declared(p.relations, *sc.relation, json_pointer(at, "relation"), "relation");
      }
      if (c.contains("expect")) {
        const json& e = c["expect"];
        const std::string eat = json_pointer(at, "expect");
        if (!e.is_object()) throw SchemaError(eat, "expect must be an object");
        if (e.contains("fraction")) sc.expect_fraction = required_name(e, "fraction", eat);
        if (e.contains("projected_fraction")) sc.expect_projected = required_name(e, "projected_fraction", eat);
      }
      p.checks.push_back(std::move(sc));
    }
  }
  return p;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
}

Problem load_problem(const std::filesystem::path& path) { return parse_problem(read_json_file(path)); }

}  // namespace interlab::cli
