#pragma once

// Hamming distances between tuples, the minimal-distance operator X | Y and
// decomposable (Parikh-style) revision.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "interlab/formula.hpp"
#include "interlab/model_space.hpp"

namespace interlab {

enum class DistanceVariant { kSet, kCounting };

std::string to_string(DistanceVariant v);

/// d_s: the set of disagreeing coordinates; d_c: a (weighted) count.
struct DistanceValue {
  DistanceVariant variant = DistanceVariant::kCounting;
  CoordSet coords;
  double amount = 0;

  friend bool operator==(const DistanceValue&, const DistanceValue&) = default;
};

std::string to_string(const DistanceValue& d);

/// The set variant, or the counting variant with per-coordinate weights and
/// optional per-coordinate value metrics. Coordinates are referred to by
/// name, so one model serves a signature and all of its sub-signatures.
class DistanceModel {
 public:
  /// Counting amounts closer than this compare equal.
  static constexpr double kTolerance = 1e-9;

  static DistanceModel set_variant();
  static DistanceModel counting(std::map<std::string, double> weights = {});

  DistanceVariant variant() const noexcept { return variant_; }

  /// Weight > 0 of a coordinate in the counting variant (default 1).
  DistanceModel& set_weight(const std::string& coord, double w);
  double weight(const std::string& coord) const;
  const std::map<std::string, double>& weights() const noexcept { return weights_; }

  /// Symmetric table with zero diagonal and non-negative entries, replacing
  /// the discrete 0/1 metric on one coordinate's values.
  DistanceModel& set_metric(const std::string& coord, std::vector<std::vector<double>> table);
  const std::map<std::string, std::vector<std::vector<double>>>& metrics() const noexcept { return metrics_; }

  DistanceValue distance(const Signature& sig, const Tuple& x, const Tuple& y) const;

  bool leq(const DistanceValue& a, const DistanceValue& b) const;
  bool less(const DistanceValue& a, const DistanceValue& b) const;

 private:
  DistanceVariant variant_ = DistanceVariant::kCounting;
  std::map<std::string, double> weights_;
  std::map<std::string, std::vector<std::vector<double>>> metrics_;
};

/// X | Y: the elements of Y at a minimal distance from X (under the strict
/// order of the distance values; incomparable set distances can both be
/// minimal). Throws InvalidArgument when X or Y is empty.
ModelSet bar(const ModelSet& x, const ModelSet& y, const DistanceModel& d);

/// The minimal realized distances between X and Y, sorted.
std::vector<DistanceValue> minimal_distances(const ModelSet& x, const ModelSet& y, const DistanceModel& d);

struct PairOfPairs {
  Tuple sigma1, tau1, sigma2, tau2;
};

struct HammingDistanceVerdict {
  /// Total order on the distance values and, for all pairs of pairs,
  /// d(σ1,τ1) ≤ d(σ2,τ2) iff both component distances are ≤.
  bool strict_iff = true;
  std::optional<PairOfPairs> strict_witness;
  std::string strict_detail;
  /// d is a function of the component distances, strictly monotone in each.
  bool compositional = true;
  std::optional<PairOfPairs> compositional_witness;
  std::string compositional_detail;
};

HammingDistanceVerdict is_generalized_hamming_distance(const DistanceModel& d, const Signature& sig,
                                                       const CoordSplit& split);

struct HdProductCheck {
  bool left_factorizes = false;   // Σ1 = Σ1' × Σ1''
  bool right_factorizes = false;  // Σ2 = Σ2' × Σ2''
  bool side_forward = false;      // (Σ1'|Σ2') × (Σ1''|Σ2'') ⊆ Σ2
  bool side_backward = false;     // (Σ2'|Σ1') × (Σ2''|Σ1'') ⊆ Σ1
  bool applicable = false;
  bool equal = false;
  ModelSet direct;      // Σ1 | Σ2
  ModelSet composed;    // (Σ1'|Σ2') × (Σ1''|Σ2'')
  ModelSet left_bar;    // Σ1' | Σ2'
  ModelSet right_bar;   // Σ1'' | Σ2''

  /// The product law holds whenever its hypotheses do.
  bool holds() const { return !applicable || equal; }
};

HdProductCheck check_hd_product(const ModelSet& s1, const ModelSet& s2, const DistanceModel& d,
                                const CoordSplit& split);

struct HdProjectionCheck {
  bool antecedent = false;  // Π | Σ ⊆ Γ
  bool consequent = false;  // Π' | (Σ↾X') ⊆ Γ↾X'
  std::optional<Tuple> antecedent_witness;
  std::optional<Tuple> consequent_witness;

  bool holds() const { return !antecedent || consequent; }
};

HdProjectionCheck check_hd_projection(const ModelSet& s, const ModelSet& g, const DistanceModel& d,
                                      const CoordSplit& split);

struct RevisionResult {
  ModelSet result;
  std::vector<DistanceValue> min_distances;
  /// True when a split was given and both operands factorized along it.
  bool decomposed = false;
};

/// M(K) | M(φ). With a split along which both operands factorize, the result
/// is also computed componentwise and must agree with the direct one.
RevisionResult parikh_revise(const ModelSet& k, const ModelSet& phi, const DistanceModel& d,
                             const std::optional<CoordSplit>& split = std::nullopt);
RevisionResult parikh_revise(const Formula& k, const Formula& phi, const Signature& sig, const DistanceModel& d,
                             const std::optional<CoordSplit>& split = std::nullopt);

}  // namespace interlab
