#pragma once

// Finite many-valued model spaces: signatures, sets of total assignments,
// restriction, cylindrification and relevance.

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "interlab/errors.hpp"

namespace interlab {

struct Coord {
  std::string name;
  int domain_size = 2;

  friend bool operator==(const Coord&, const Coord&) = default;
};

using CoordSet = std::set<std::string>;

/// Ordered list of named coordinates with finite value domains 0..k-1.
/// Tuples are laid out in coordinate order and indexed in mixed radix with the
/// first coordinate most significant, so index order is lexicographic order.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Coord> coords);

  static Signature boolean(const std::vector<std::string>& names);
  static Signature uniform(const std::vector<std::string>& names, int domain_size);

  std::size_t arity() const noexcept { return coords_.size(); }
  const std::vector<Coord>& coords() const noexcept { return coords_; }
  const Coord& coord(std::size_t i) const { return coords_.at(i); }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }

  CoordSet names() const;
  std::vector<std::string> ordered_names() const;
  bool is_boolean() const;

  /// |Π|, saturating at UINT64_MAX.
  std::uint64_t cardinality() const noexcept { return cardinality_; }

  std::uint64_t encode(std::span<const Value> tuple) const;
  Tuple decode(std::uint64_t index) const;
  Value value_at(std::uint64_t index, std::size_t coord) const {
    return static_cast<Value>((index / strides_[coord]) % coords_[coord].domain_size);
  }
  std::uint64_t stride(std::size_t coord) const { return strides_.at(coord); }

  /// Sub-signature over `keep`, original order preserved.
  Signature project(const CoordSet& keep) const;
  /// This signature followed by `other`; coordinates must be disjoint.
  Signature concat(const Signature& other) const;
  /// Coordinates of this signature not in `drop`, original order preserved.
  Signature without(const CoordSet& drop) const;

  friend bool operator==(const Signature& a, const Signature& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<Coord> coords_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t cardinality_ = 1;
};

/// A set of total tuples over a signature, stored as a bitset over the
/// tuple indices of the full product.
class ModelSet {
 public:
  static constexpr std::uint64_t kMaxUniverse = std::uint64_t{1} << 26;

  ModelSet() : ModelSet(Signature{}) {}
  explicit ModelSet(Signature sig);
  ModelSet(std::shared_ptr<const Signature> sig);

  static ModelSet full(Signature sig);
  static ModelSet from_tuples(Signature sig, const std::vector<Tuple>& tuples);
  static ModelSet from_indices(std::shared_ptr<const Signature> sig,
                               std::span<const std::uint64_t> indices);
  /// Bit i of `mask` is tuple index i. Universes of at most 64 tuples only.
  static ModelSet from_mask(std::shared_ptr<const Signature> sig, std::uint64_t mask);

  const Signature& signature() const noexcept { return *sig_; }
  const std::shared_ptr<const Signature>& signature_ptr() const noexcept { return sig_; }
  std::uint64_t universe_size() const noexcept { return sig_->cardinality(); }

  bool contains(std::span<const Value> tuple) const;
  bool contains_index(std::uint64_t index) const noexcept {
    return (words_[index >> 6] >> (index & 63)) & 1u;
  }
  void insert(std::span<const Value> tuple);
  void insert_index(std::uint64_t index) noexcept { words_[index >> 6] |= std::uint64_t{1} << (index & 63); }
  void erase_index(std::uint64_t index) noexcept { words_[index >> 6] &= ~(std::uint64_t{1} << (index & 63)); }

  std::size_t size() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept { return size() == universe_size(); }

  std::vector<Tuple> tuples() const;
  std::vector<std::uint64_t> indices() const;
  std::optional<std::uint64_t> first_index() const noexcept;

  template <class F>
  void for_each_index(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<std::uint64_t>(w) * 64 + static_cast<std::uint64_t>(b));
        bits &= bits - 1;
      }
    }
  }

  bool is_subset_of(const ModelSet& other) const;
  bool intersects(const ModelSet& other) const;
  /// Lexicographically smallest tuple of this set that is not in `other`.
  std::optional<Tuple> first_outside(const ModelSet& other) const;

  ModelSet complement() const;
  ModelSet& operator|=(const ModelSet& other);
  ModelSet& operator&=(const ModelSet& other);
  ModelSet& operator-=(const ModelSet& other);
  friend ModelSet operator|(ModelSet a, const ModelSet& b) { return a |= b; }
  friend ModelSet operator&(ModelSet a, const ModelSet& b) { return a &= b; }
  friend ModelSet operator-(ModelSet a, const ModelSet& b) { return a -= b; }

  friend bool operator==(const ModelSet& a, const ModelSet& b);

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }
  /// The set as a bit mask. Universes of at most 64 tuples only.
  std::uint64_t mask() const;

 private:
  void require_same_signature(const ModelSet& other) const;

  std::shared_ptr<const Signature> sig_;
  std::vector<std::uint64_t> words_;
};

/// Orders model sets by cardinality, then lexicographically on their sorted
/// tuple lists. Used wherever a deterministic minimal witness is reported.
bool size_lex_less(const ModelSet& a, const ModelSet& b);

std::string to_string(const Tuple& tuple);
std::string to_string(const ModelSet& set);
std::string to_string(const CoordSet& coords);

/// {σ↾J' : σ ∈ S} over the sub-signature induced by `keep`.
ModelSet restrict_to(const ModelSet& s, const CoordSet& keep);

/// S × Π over the coordinates of `extra`, laid out as S's signature followed
/// by `extra`.
ModelSet expand(const ModelSet& s, const Signature& extra);

/// Cylindrification of `s` into `target`, whose coordinates must include those
/// of `s` with equal domains. The result uses the layout of `target`.
ModelSet cylindrify(const ModelSet& s, const Signature& target);

/// Product of factors over pairwise disjoint coordinate sets covering
/// `target`, laid out in `target` order.
ModelSet product(const std::vector<ModelSet>& factors, const Signature& target);

struct EssentialSplit {
  CoordSet irrelevant;
  CoordSet relevant;
};

/// I(S) and R(S). A coordinate i is irrelevant iff S = S↾(J-{i}) × X_i; for
/// S = ∅ every coordinate is irrelevant.
EssentialSplit essential_split(const ModelSet& s);
CoordSet relevant(const ModelSet& s);
CoordSet irrelevant(const ModelSet& s);

/// Disjoint cover X', X'' of a signature.
struct CoordSplit {
  CoordSet left;
  CoordSet right;

  static CoordSplit from_left(const Signature& sig, const CoordSet& left);
  void validate(const Signature& sig) const;
  CoordSplit swapped() const { return {right, left}; }
};

/// Pairwise-disjoint, nonempty blocks covering a signature.
struct Partition {
  std::vector<CoordSet> blocks;

  void validate(const Signature& sig) const;
};

/// Precomputed index maps between Π and Π' × Π'' for one split.
class SplitIndex {
 public:
  SplitIndex(std::shared_ptr<const Signature> sig, const CoordSplit& split);

  const std::shared_ptr<const Signature>& whole() const noexcept { return sig_; }
  const std::shared_ptr<const Signature>& left() const noexcept { return left_; }
  const std::shared_ptr<const Signature>& right() const noexcept { return right_; }

  std::uint64_t left_of(std::uint64_t i) const { return left_of_[i]; }
  std::uint64_t right_of(std::uint64_t i) const { return right_of_[i]; }
  std::uint64_t join(std::uint64_t l, std::uint64_t r) const { return join_[l * right_->cardinality() + r]; }

  ModelSet project_left(const ModelSet& s) const;
  ModelSet project_right(const ModelSet& s) const;
  /// l × r laid out in the whole signature.
  ModelSet join(const ModelSet& l, const ModelSet& r) const;

 private:
  std::shared_ptr<const Signature> sig_, left_, right_;
  std::vector<std::uint64_t> left_of_, right_of_, join_;
};

/// The factors S↾K when S equals their product, nullopt otherwise.
std::optional<std::vector<ModelSet>> factorize(const ModelSet& s, const Partition& p);

/// Calls f on every subset of `base` (2^|base| calls). Stops early when f
/// returns false. Throws ResourceLimit when |base| > 62.
template <class F>
void for_each_subset(const ModelSet& base, F&& f) {
  const std::vector<std::uint64_t> elems = base.indices();
  if (elems.size() > 62) throw ResourceLimit("subset enumeration over more than 62 elements");
  const std::uint64_t count = std::uint64_t{1} << elems.size();
  ModelSet sub(base.signature_ptr());
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if ((mask >> i) & 1u) {
        sub.insert_index(elems[i]);
      } else {
        sub.erase_index(elems[i]);
      }
    }
    if (!f(static_cast<const ModelSet&>(sub))) return;
  }
}

}  // namespace interlab
