#pragma once

// JSON encodings of signatures, model sets, relations and distances.
//   signature:  [{"name": "p", "k": 2}, ...]
//   model set:  {"signature": [...], "models": [[0, 1], ...]}
//   relation:   {"pairs": [[tuple, tuple], ...]} or {"builtin": "circumscription"}
//   distance:   {"variant": "set"|"count", "weights": {"p": 2}, "metrics": {"p": [[0, 1], [1, 0]]}}
// Decoding errors carry the JSON pointer of the offending value.

#include <nlohmann/json.hpp>
#include <string>

#include "interlab/model_space.hpp"
#include "interlab/preferential.hpp"
#include "interlab/revision.hpp"

namespace interlab {

class SchemaError : public InvalidArgument {
 public:
  SchemaError(const std::string& pointer, const std::string& what)
      : InvalidArgument(what + " at " + (pointer.empty() ? std::string("/") : pointer)), pointer_(pointer) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

/// `base` + "/" + escaped `token`.
std::string json_pointer(const std::string& base, const std::string& token);
std::string json_pointer(const std::string& base, std::size_t index);

nlohmann::json to_json(const Signature& sig);
nlohmann::json to_json(const Tuple& t);
/// Just the tuple list.
nlohmann::json models_to_json(const ModelSet& s);
/// {"signature": ..., "models": ...}.
nlohmann::json to_json(const ModelSet& s);
nlohmann::json to_json(const CoordSet& c);
nlohmann::json to_json(const PreferenceStructure& r);
nlohmann::json to_json(const DistanceValue& d);

Signature signature_from_json(const nlohmann::json& j, const std::string& at = "");
Tuple tuple_from_json(const nlohmann::json& j, const Signature& sig, const std::string& at = "");
/// A tuple list over `sig`.
ModelSet models_from_json(const nlohmann::json& j, const Signature& sig, const std::string& at = "");
/// {"signature", "models"}; the signature may be omitted when `fallback` is given.
ModelSet model_set_from_json(const nlohmann::json& j, const Signature* fallback = nullptr, const std::string& at = "");
CoordSet coord_set_from_json(const nlohmann::json& j, const Signature& sig, const std::string& at = "");
/// A relation over `sig`, unless the document carries its own "signature".
PreferenceStructure relation_from_json(const nlohmann::json& j, const Signature& sig, const std::string& at = "");
DistanceModel distance_from_json(const nlohmann::json& j, const std::string& at = "");

}  // namespace interlab
