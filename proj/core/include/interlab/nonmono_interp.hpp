#pragma once

// Preferential consequence φ |~ ψ :⇔ μ(M(φ)) ⊆ M(ψ) and interpolation for
//   (1) φ |~ α ⊢ ψ,   (2) φ ⊢ α |~ ψ,   (3) φ |~ α |~ ψ.
// Formulas are evaluated over the signature of the preference structure.

#include <optional>
#include <string>

#include "interlab/budget.hpp"
#include "interlab/formula.hpp"
#include "interlab/preferential.hpp"

namespace interlab {

bool nm_consequence(const Formula& phi, const Formula& psi, const PreferenceStructure& r);

struct Form1Verdict {
  bool holds = true;
  bool sampled = false;
  std::uint64_t checked = 0;
  /// On failure: Σ with I(Σ) ⊄ I(μ(Σ)), largest first (so Π when Π fails).
  std::optional<ModelSet> witness;
  CoordSet irrelevant;     // I(Σ)
  CoordSet mu_irrelevant;  // I(μ(Σ))
};

/// I(Σ) ⊆ I(μ(Σ)) for every Σ ⊆ Π: the condition under which every
/// consequence pair has a form-(1) interpolant.
Form1Verdict form1_condition(const PreferenceStructure& r, const Budget& budget = {});

struct InterpolationResult {
  bool found = false;
  std::optional<Formula> interpolant;
  /// The constructed model set, also on failure.
  std::optional<ModelSet> models;
  /// On failure, the inclusion that does not hold and a tuple breaking it.
  std::string failed_inclusion;
  std::optional<Tuple> witness;
};

/// Σ'' := μ(Σ)↾K × Π↾(J-K) with K = R(μ(Σ)) ∩ R(M(ψ)) ∩ R(M(φ)), checked
/// against μ(Σ) ⊆ Σ'' ⊆ M(ψ). Throws InvalidArgument unless φ |~ ψ.
InterpolationResult interpolant_form1(const Formula& phi, const Formula& psi, const PreferenceStructure& r);

/// α := Th(Π' × M(φ)↾X'') with X' the atoms occurring only in φ, checked
/// against M(φ) ⊆ M(α) and μ(M(α)) ⊆ M(ψ). Throws InvalidArgument unless
/// φ |~ ψ.
InterpolationResult interpolant_form2(const Formula& phi, const Formula& psi, const PreferenceStructure& r);

/// The split X' | X'' used by interpolant_form2.
CoordSplit form2_split(const Formula& phi, const Formula& psi, const Signature& sig);

/// The size-rule hypotheses under which form (2) is guaranteed: (S*1) and
/// (S*2) towards X'', or (S*3). Factor relations are derived from `r`;
/// `available` is false when they are ill-defined.
struct Form2Hypotheses {
  bool available = false;
  std::string reason;
  std::optional<RuleVerdict> s1, s2, s3;
  bool satisfied() const {
    return available && ((s1->holds && s2->holds) || s3->holds);
  }
};

Form2Hypotheses form2_hypotheses(const Formula& phi, const Formula& psi, const PreferenceStructure& r,
                                 const Budget& budget = {});

struct SearchHit {
  Formula interpolant;
  ModelSet models;
};

/// Brute force over every model set on the atoms shared by φ and ψ; returns
/// the least one (by cardinality, then lex) passing both legs of `form`.
/// Throws ResourceLimit when the candidates exceed the budget.
std::optional<SearchHit> search_interpolant(const Formula& phi, const Formula& psi, const PreferenceStructure& r,
                                            int form, const Budget& budget = {});

}  // namespace interlab
