#include "interlab/json_io.hpp"

namespace interlab {

using nlohmann::json;

std::string json_pointer(const std::string& base, const std::string& token) {
  std::string out = base + "/";
  for (char c : token) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

std::string json_pointer(const std::string& base, std::size_t index) { return base + "/" + std::to_string(index); }

json to_json(const Signature& sig) {
  json out = json::array();
  for (const auto& c : sig.coords()) out.push_back({{"name", c.name}, {"k", c.domain_size}});
  return out;
}

json to_json(const Tuple& t) { return json(t); }

json models_to_json(const ModelSet& s) {
  json out = json::array();
  for (const auto& t : s.tuples()) out.push_back(t);
  return out;
}

json to_json(const ModelSet& s) { return {{"signature", to_json(s.signature())}, {"models", models_to_json(s)}}; }

json to_json(const CoordSet& c) { return json(std::vector<std::string>(c.begin(), c.end())); }

json to_json(const PreferenceStructure& r) {
  json pairs = json::array();
  for (const auto& [lo, hi] : r.pairs()) pairs.push_back({r.signature().decode(lo), r.signature().decode(hi)});
  return {{"signature", to_json(r.signature())}, {"pairs", pairs}};
}

json to_json(const DistanceValue& d) {
  if (d.variant == DistanceVariant::kSet) return to_json(d.coords);
  return d.amount;
}

Signature signature_from_json(const json& j, const std::string& at) {
  if (!j.is_array()) throw SchemaError(at, "signature must be an array");
  std::vector<Coord> coords;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = json_pointer(at, i);
    const json& c = j[i];
    if (c.is_string()) {
      coords.push_back({c.get<std::string>(), 2});
      continue;
    }
    if (!c.is_object() || !c.contains("name") || !c["name"].is_string()) {
      throw SchemaError(p, "coordinate needs a string \"name\"");
    }
    int k = 2;
    if (c.contains("k")) {
      if (!c["k"].is_number_integer() || c["k"].get<int>() < 1) throw SchemaError(json_pointer(p, "k"), "k must be an integer >= 1");
      k = c["k"].get<int>();
    }
    coords.push_back({c["name"].get<std::string>(), k});
  }
  try {
    return Signature(std::move(coords));
  } catch (const InvalidArgument& e) {
    throw SchemaError(at, e.what());
  }
}

Tuple tuple_from_json(const json& j, const Signature& sig, const std::string& at) {
  if (!j.is_array()) throw SchemaError(at, "tuple must be an array");
  if (j.size() != sig.arity()) {
    throw SchemaError(at, "tuple has " + std::to_string(j.size()) + " values, signature has " + std::to_string(sig.arity()));
  }
  Tuple t;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) throw SchemaError(json_pointer(at, i), "value must be an integer");
    const int v = j[i].get<int>();
    if (v < 0 || v >= sig.coord(i).domain_size) {
      throw SchemaError(json_pointer(at, i), "value " + std::to_string(v) + " outside the domain of " + sig.coord(i).name);
    }
    t.push_back(v);
  }
  return t;
}

ModelSet models_from_json(const json& j, const Signature& sig, const std::string& at) {
  if (!j.is_array()) throw SchemaError(at, "models must be an array of tuples");
  ModelSet s(sig);
  for (std::size_t i = 0; i < j.size(); ++i) s.insert(tuple_from_json(j[i], sig, json_pointer(at, i)));
  return s;
}

ModelSet model_set_from_json(const json& j, const Signature* fallback, const std::string& at) {
  if (!j.is_object()) throw SchemaError(at, "model set must be an object");
  Signature sig;
  if (j.contains("signature")) {
    sig = signature_from_json(j["signature"], json_pointer(at, "signature"));
  } else if (fallback) {
    sig = *fallback;
  } else {
    throw SchemaError(at, "model set needs a \"signature\"");
  }
  if (!j.contains("models")) throw SchemaError(at, "model set needs \"models\"");
  return models_from_json(j["models"], sig, json_pointer(at, "models"));
}

CoordSet coord_set_from_json(const json& j, const Signature& sig, const std::string& at) {
  if (!j.is_array()) throw SchemaError(at, "coordinate list must be an array");
  CoordSet out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw SchemaError(json_pointer(at, i), "coordinate name must be a string");
    const auto name = j[i].get<std::string>();
    if (!sig.contains(name)) throw SchemaError(json_pointer(at, i), "undeclared coordinate '" + name + "'");
    out.insert(name);
  }
  return out;
}

PreferenceStructure relation_from_json(const json& j, const Signature& sig, const std::string& at) {
  if (!j.is_object()) throw SchemaError(at, "relation must be an object");
  Signature own = sig;
  if (j.contains("signature")) own = signature_from_json(j["signature"], json_pointer(at, "signature"));
  if (j.contains("builtin")) {
    if (!j["builtin"].is_string()) throw SchemaError(json_pointer(at, "builtin"), "builtin must be a string");
    try {
      return PreferenceStructure::builtin(j["builtin"].get<std::string>(), own);
    } catch (const InvalidArgument& e) {
      throw SchemaError(json_pointer(at, "builtin"), e.what());
    }
  }
  if (!j.contains("pairs") || !j["pairs"].is_array()) throw SchemaError(at, "relation needs a \"pairs\" array");
  PreferenceStructure r(own);
  const json& pairs = j["pairs"];
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string p = json_pointer(json_pointer(at, "pairs"), i);
    if (!pairs[i].is_array() || pairs[i].size() != 2) throw SchemaError(p, "pair must be [tuple, tuple]");
    const Tuple lo = tuple_from_json(pairs[i][0], own, json_pointer(p, 0));
    const Tuple hi = tuple_from_json(pairs[i][1], own, json_pointer(p, 1));
    if (lo == hi) throw SchemaError(p, "relation must be irreflexive");
    r.add(lo, hi);
  }
  return r;
}

DistanceModel distance_from_json(const json& j, const std::string& at) {
  if (!j.is_object()) throw SchemaError(at, "distance must be an object");
  DistanceModel d;
  // A bare {"p": 1, "q": 2} is a weight map of the counting variant.
  const bool bare = !j.contains("variant") && !j.contains("weights") && !j.contains("metrics");
  if (!bare && j.contains("variant")) {
    const json& v = j["variant"];
    if (v == "set") {
      d = DistanceModel::set_variant();
    } else if (v != "count" && v != "counting") {
      throw SchemaError(json_pointer(at, "variant"), "variant must be \"set\" or \"count\"");
    }
  }
  const json* weights = bare ? &j : (j.contains("weights") ? &j["weights"] : nullptr);
  const std::string wat = bare ? at : json_pointer(at, "weights");
  if (weights) {
    if (!weights->is_object()) throw SchemaError(wat, "weights must be an object");
    for (const auto& [name, w] : weights->items()) {
      if (!w.is_number() || !(w.get<double>() > 0)) throw SchemaError(json_pointer(wat, name), "weight must be a positive number");
      d.set_weight(name, w.get<double>());
    }
  }
  if (!bare && j.contains("metrics")) {
    const json& m = j["metrics"];
    if (!m.is_object()) throw SchemaError(json_pointer(at, "metrics"), "metrics must be an object");
    for (const auto& [name, table] : m.items()) {
      const std::string p = json_pointer(json_pointer(at, "metrics"), name);
      try {
        d.set_metric(name, table.get<std::vector<std::vector<double>>>());
      } catch (const json::exception&) {
        throw SchemaError(p, "metric must be a square array of numbers");
      } catch (const InvalidArgument& e) {
        throw SchemaError(p, e.what());
      }
    }
  }
  return d;
}

}  // namespace interlab
