#pragma once

// Semantic interpolation for monotone (classical or many-valued) logics.
// All constructions work on model sets; syntactic interpolants are a separate
// question of definability.

#include <vector>

#include "interlab/model_space.hpp"

namespace interlab {

/// Σ'' := Σ'↾(R(Σ)∩R(Σ')) × Π↾(I(Σ)∪I(Σ')), satisfying Σ' ⊆ Σ'' ⊆ Σ.
/// Throws PreconditionViolation (with a tuple of Σ' - Σ) unless Σ' ⊆ Σ.
ModelSet semantic_interpolant(const ModelSet& inner, const ModelSet& outer);

/// Parallel interpolation when the inner set is a product of `inner_factors`
/// (one per partition block). Each block is interpolated on its own:
///   Σ''_K := Σ'_K↾(R(Σ)∩R(Σ'_K)) × Π{X_i : i ∈ K ∩ (I(Σ)∪I(Σ'_K))}
/// and the result is the product of the Σ''_K, laid out like `outer`.
ModelSet parallel_interpolant_left(const std::vector<ModelSet>& inner_factors, const ModelSet& outer);

/// Parallel interpolation when the outer set is a product of `outer_factors`:
///   Σ''_K := Σ'↾(R(Σ')∩R(Σ_K)) × Π{X_i : i ∈ K ∩ (I(Σ_K)∪I(Σ'))}.
ModelSet parallel_interpolant_right(const ModelSet& inner, const std::vector<ModelSet>& outer_factors);

/// R(Σ_K) = R(Σ) ∩ K for every factor of Σ = Π Σ_K over `sig`.
bool product_relevance_identity(const std::vector<ModelSet>& factors, const Signature& sig);

}  // namespace interlab
