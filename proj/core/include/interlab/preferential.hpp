#pragma once

// Preference relations over model spaces: minimal elements, smoothness,
// Hamming relations, size classification and the product size rules.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "interlab/budget.hpp"
#include "interlab/model_space.hpp"

namespace interlab {

/// An irreflexive relation ≺ on the tuples of a signature. Transitivity is
/// not assumed anywhere; it is a checked property.
class PreferenceStructure {
 public:
  PreferenceStructure() : PreferenceStructure(Signature{}) {}
  explicit PreferenceStructure(Signature sig);
  explicit PreferenceStructure(std::shared_ptr<const Signature> sig);

  static PreferenceStructure from_pairs(Signature sig, const std::vector<std::pair<Tuple, Tuple>>& pairs);
  /// Componentwise value order: σ ≺ τ iff σ(i) ≤ τ(i) everywhere and σ ≠ τ.
  static PreferenceStructure circumscription(Signature sig);
  /// Strict total order listing `order` from best to worst (transitively closed).
  static PreferenceStructure linear(Signature sig, const std::vector<Tuple>& order);
  /// pq ≺ p¬q ≺ ¬p¬q ≺ ¬pq over boolean (p, q), transitively closed.
  static PreferenceStructure chain_example();
  /// "circumscription", "chain-example-4.1" or "empty". Signature-free
  /// builtins ignore `sig`.
  static PreferenceStructure builtin(std::string_view name, const Signature& sig);

  const Signature& signature() const noexcept { return *sig_; }
  const std::shared_ptr<const Signature>& signature_ptr() const noexcept { return sig_; }
  std::uint64_t size() const noexcept { return sig_->cardinality(); }

  /// Adds lo ≺ hi. Throws InvalidArgument for lo == hi.
  void add(std::uint64_t lo, std::uint64_t hi);
  void add(const Tuple& lo, const Tuple& hi);

  bool less(std::uint64_t a, std::uint64_t b) const { return below_[b].contains_index(a); }
  bool less_eq(std::uint64_t a, std::uint64_t b) const { return a == b || less(a, b); }
  /// {σ : σ ≺ τ} for the tuple with index τ.
  const ModelSet& below(std::uint64_t t) const { return below_[t]; }

  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs() const;
  std::size_t pair_count() const;
  bool is_transitive() const;

  friend bool operator==(const PreferenceStructure& a, const PreferenceStructure& b);

 private:
  std::shared_ptr<const Signature> sig_;
  std::vector<ModelSet> below_;
};

/// μ(S): the elements of S with nothing of S strictly below them.
ModelSet mu(const PreferenceStructure& r, const ModelSet& s);

enum class SizeClass { kBig, kSmall, kMedium };
std::string to_string(SizeClass c);

/// Size of A ⊆ S in the principal filter generated by μ(S).
SizeClass classify_subset(const ModelSet& a, const ModelSet& s, const PreferenceStructure& r);

struct SmoothnessVerdict {
  bool smooth = true;
  bool sampled = false;
  std::uint64_t checked = 0;
  /// On failure: a set S and an element x ∈ S - μ(S) with no y ∈ μ(S), y ≺ x.
  std::optional<ModelSet> set;
  std::optional<Tuple> element;
};

/// Exhaustive over all nonempty S ⊆ Π while 2^|Π| fits the budget, sampled
/// beyond. The witness is minimal by (|S|, lex), then by x.
SmoothnessVerdict is_smooth(const PreferenceStructure& r, const Budget& budget = {});

struct FactorRelations {
  PreferenceStructure left;
  PreferenceStructure right;
  /// False when the order of two factor tuples depends on the other
  /// component; the factor relation then keeps only the pairs ordered in
  /// every fiber, and `conflict` shows a pair ordered in one fiber but not
  /// in another.
  bool left_uniform = true;
  bool right_uniform = true;
  std::optional<std::pair<std::pair<Tuple, Tuple>, std::pair<Tuple, Tuple>>> conflict;

  bool uniform() const { return left_uniform && right_uniform; }
};

/// The factor relations induced along a split: σ' ≺' τ' iff σ'∘σ'' ≺ τ'∘σ''
/// for every σ'' (and symmetrically). For a Hamming relation these are
/// exactly its components.
FactorRelations factor_relations(const PreferenceStructure& r, const CoordSplit& split);

struct HammingVerdict {
  bool holds = true;
  /// First pair (σ, τ) in index order where the biconditional fails.
  std::optional<std::pair<Tuple, Tuple>> witness;
  std::string detail;
};

/// σ ⪯ τ ⇔ σ' ⪯' τ' and σ'' ⪯'' τ'' for all pairs.
HammingVerdict is_hamming_relation(const PreferenceStructure& r, const PreferenceStructure& left,
                                   const PreferenceStructure& right, const CoordSplit& split);
/// As above with the factor relations derived from `r`.
HammingVerdict is_hamming_relation(const PreferenceStructure& r, const CoordSplit& split);

/// The Hamming relation of the factors over their concatenated signature.
PreferenceStructure compose_hamming(const PreferenceStructure& left, const PreferenceStructure& right);
/// n-ary version, laid out in `target` (whose coordinates are exactly the
/// union of the factor coordinates).
PreferenceStructure compose_hamming(const std::vector<PreferenceStructure>& factors, const Signature& target);

// ---------------------------------------------------------------------------
// Size rules. Big sets are those of the principal filter generated by μ; on
// the factors Π' and Π'' the factor relations' μ is used.

enum class Rule { kS1, kS2, kS3, kS1Prime, kMu1, kMu2, kMu3 };

std::string to_string(Rule r);
/// Accepts S1, S2, S3, S1' (or S1p), mu1, mu2, mu3; case-insensitive.
std::optional<Rule> parse_rule(std::string_view text);

struct NamedSet {
  std::string name;
  ModelSet set;
};

struct RuleVerdict {
  Rule rule = Rule::kS1;
  bool holds = true;
  bool sampled = false;
  std::uint64_t instances = 0;
  /// Sets instantiating the rule's quantifiers where it fails.
  std::vector<NamedSet> witness;
  std::string detail;
  /// Whether the derived factor relations were fiber-independent (always
  /// true for explicit factors).
  bool factors_uniform = true;
};

/// Checks `rule` for `r` along `split`, with the factor relations it needs
/// derived from `r` (see factor_relations). Exhaustive within budget,
/// otherwise sampled. Universes of at most 64 tuples.
RuleVerdict check_rule(Rule rule, const PreferenceStructure& r, const CoordSplit& split, const Budget& budget = {});
/// As above with explicit factor relations over Π' and Π''.
RuleVerdict check_rule(Rule rule, const PreferenceStructure& r, const PreferenceStructure& left,
                       const PreferenceStructure& right, const CoordSplit& split, const Budget& budget = {});

/// μ(Σ) against μ'(Σ↾X') × μ''(Σ↾X'') for one, not necessarily product, Σ.
struct MuProductCheck {
  ModelSet mu;
  ModelSet mu_left;
  ModelSet mu_right;
  ModelSet product;
  bool product_inside = false;  // μ'(Σ') × μ''(Σ'') ⊆ Σ
  bool equal = false;
};

MuProductCheck check_mu_product(const PreferenceStructure& r, const PreferenceStructure& left,
                                const PreferenceStructure& right, const CoordSplit& split, const ModelSet& s);

using MuOracle = std::function<ModelSet(const ModelSet&)>;

/// σ ≺ τ iff τ ∉ μ({σ, τ}). Throws PreconditionViolation if the oracle
/// returns something outside its argument.
PreferenceStructure relation_from_mu(const MuOracle& oracle, const Signature& sig);

}  // namespace interlab
