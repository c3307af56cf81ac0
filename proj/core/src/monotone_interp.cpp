#include "interlab/monotone_interp.hpp"

#include <algorithm>
#include <iterator>

namespace interlab {

namespace {

CoordSet intersection(const CoordSet& a, const CoordSet& b) {
  CoordSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

void require_subset(const ModelSet& inner, const ModelSet& outer, const char* what) {
  if (auto w = inner.first_outside(outer)) {
    throw PreconditionViolation(std::string(what) + ": tuple " + to_string(*w) + " is not in the outer set", w);
  }
}

// Σ↾keep cylindrified to the coordinates of `block`.
ModelSet interpolate_block(const ModelSet& source, const CoordSet& keep, const Signature& block) {
  return cylindrify(restrict_to(source, keep), block);
}

}  // namespace

ModelSet semantic_interpolant(const ModelSet& inner, const ModelSet& outer) {
  require_subset(inner, outer, "semantic interpolation");
  const CoordSet keep = intersection(relevant(outer), relevant(inner));
  return cylindrify(restrict_to(inner, keep), inner.signature());
}

ModelSet parallel_interpolant_left(const std::vector<ModelSet>& inner_factors, const ModelSet& outer) {
  const Signature& sig = outer.signature();
  const ModelSet inner = product(inner_factors, sig);
  require_subset(inner, outer, "parallel interpolation");
  const CoordSet outer_relevant = relevant(outer);
  std::vector<ModelSet> blocks;
  for (const auto& factor : inner_factors) {
    const CoordSet keep = intersection(outer_relevant, relevant(factor));
    blocks.push_back(interpolate_block(factor, keep, factor.signature()));
  }
  return product(blocks, sig);
}

ModelSet parallel_interpolant_right(const ModelSet& inner, const std::vector<ModelSet>& outer_factors) {
  const Signature& sig = inner.signature();
  const ModelSet outer = product(outer_factors, sig);
  require_subset(inner, outer, "parallel interpolation");
  const CoordSet inner_relevant = relevant(inner);
  std::vector<ModelSet> blocks;
  for (const auto& factor : outer_factors) {
    const CoordSet keep = intersection(inner_relevant, relevant(factor));
    blocks.push_back(interpolate_block(inner, keep, factor.signature()));
  }
  return product(blocks, sig);
}

bool product_relevance_identity(const std::vector<ModelSet>& factors, const Signature& sig) {
  const CoordSet whole = relevant(product(factors, sig));
  for (const auto& f : factors) {
    if (relevant(f) != intersection(whole, f.signature().names())) return false;
  }
  return true;
}

}  // namespace interlab
