#include "interlab/budget.hpp"

namespace interlab {

ModelSet random_subset(const ModelSet& base, std::mt19937_64& rng) {
  ModelSet out(base.signature_ptr());
  std::uint64_t bits = 0;
  int left = 0;
  base.for_each_index([&](std::uint64_t i) {
    if (left == 0) {
      bits = rng();
      left = 64;
    }
    if (bits & 1u) out.insert_index(i);
    bits >>= 1;
    --left;
  });
  return out;
}

ModelSet random_subset(const std::shared_ptr<const Signature>& sig, std::mt19937_64& rng) {
  ModelSet full(sig);
  for (std::uint64_t i = 0; i < sig->cardinality(); ++i) full.insert_index(i);
  return random_subset(full, rng);
}

}  // namespace interlab
