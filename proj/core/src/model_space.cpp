#include "interlab/model_space.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace interlab {

Signature::Signature(std::vector<Coord> coords) : coords_(std::move(coords)) {
  std::unordered_set<std::string> seen;
  for (const Coord& c : coords_) {
    if (c.name.empty()) throw InvalidArgument("coordinate with empty name");
    if (c.domain_size < 1) {
      throw InvalidArgument("coordinate '" + c.name + "' has domain size < 1");
    }
    if (!seen.insert(c.name).second) throw InvalidArgument("duplicate coordinate '" + c.name + "'");
  }
  strides_.assign(coords_.size(), 1);
  std::uint64_t card = 1;
  bool saturated = false;
  for (std::size_t i = coords_.size(); i-- > 0;) {
    strides_[i] = saturated ? 0 : card;
    const auto k = static_cast<std::uint64_t>(coords_[i].domain_size);
    if (!saturated && card > std::numeric_limits<std::uint64_t>::max() / k) {
      saturated = true;
    } else if (!saturated) {
      card *= k;
    }
  }
  cardinality_ = saturated ? std::numeric_limits<std::uint64_t>::max() : card;
}

Signature Signature::boolean(const std::vector<std::string>& names) { return uniform(names, 2); }

Signature Signature::uniform(const std::vector<std::string>& names, int domain_size) {
  std::vector<Coord> coords;
  coords.reserve(names.size());
  for (const auto& n : names) coords.push_back({n, domain_size});
  return Signature(std::move(coords));
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Signature::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InvalidArgument("unknown coordinate '" + std::string(name) + "'");
}

CoordSet Signature::names() const {
  CoordSet out;
  for (const auto& c : coords_) out.insert(c.name);
  return out;
}

std::vector<std::string> Signature::ordered_names() const {
  std::vector<std::string> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.name);
  return out;
}

bool Signature::is_boolean() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Coord& c) { return c.domain_size == 2; });
}

std::uint64_t Signature::encode(std::span<const Value> tuple) const {
  if (tuple.size() != coords_.size()) {
    throw InvalidArgument("tuple of length " + std::to_string(tuple.size()) + " for signature of arity " +
                          std::to_string(coords_.size()));
  }
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] < 0 || tuple[i] >= coords_[i].domain_size) {
      throw InvalidArgument("value " + std::to_string(tuple[i]) + " out of range for coordinate '" +
                            coords_[i].name + "'");
    }
    index += static_cast<std::uint64_t>(tuple[i]) * strides_[i];
  }
  return index;
}

Tuple Signature::decode(std::uint64_t index) const {
  Tuple t(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) t[i] = value_at(index, i);
  return t;
}

Signature Signature::project(const CoordSet& keep) const {
  for (const auto& name : keep) index_of(name);
  std::vector<Coord> out;
  for (const auto& c : coords_) {
    if (keep.count(c.name)) out.push_back(c);
  }
  return Signature(std::move(out));
}

Signature Signature::without(const CoordSet& drop) const {
  std::vector<Coord> out;
  for (const auto& c : coords_) {
    if (!drop.count(c.name)) out.push_back(c);
  }
  return Signature(std::move(out));
}

Signature Signature::concat(const Signature& other) const {
  std::vector<Coord> out = coords_;
  for (const auto& c : other.coords_) {
    if (contains(c.name)) throw InvalidArgument("coordinate '" + c.name + "' occurs in both signatures");
    out.push_back(c);
  }
  return Signature(std::move(out));
}

// ---------------------------------------------------------------------------

namespace {

std::size_t word_count(std::uint64_t universe) { return static_cast<std::size_t>((universe + 63) / 64); }

std::shared_ptr<const Signature> checked(std::shared_ptr<const Signature> sig) {
  if (!sig) throw InvalidArgument("null signature");
  if (sig->cardinality() > ModelSet::kMaxUniverse) {
    throw ResourceLimit("model space of signature exceeds " + std::to_string(ModelSet::kMaxUniverse) +
                        " tuples");
  }
  return sig;
}

}  // namespace

ModelSet::ModelSet(Signature sig) : ModelSet(std::make_shared<const Signature>(std::move(sig))) {}

ModelSet::ModelSet(std::shared_ptr<const Signature> sig)
    : sig_(checked(std::move(sig))), words_(word_count(sig_->cardinality()), 0) {}

ModelSet ModelSet::full(Signature sig) {
  ModelSet s(std::move(sig));
  const std::uint64_t n = s.universe_size();
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (n % 64) s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  return s;
}

ModelSet ModelSet::from_tuples(Signature sig, const std::vector<Tuple>& tuples) {
  ModelSet s(std::move(sig));
  for (const auto& t : tuples) s.insert(t);
  return s;
}

ModelSet ModelSet::from_indices(std::shared_ptr<const Signature> sig, std::span<const std::uint64_t> indices) {
  ModelSet s(std::move(sig));
  for (auto i : indices) {
    if (i >= s.universe_size()) throw InvalidArgument("tuple index out of range");
    s.insert_index(i);
  }
  return s;
}

ModelSet ModelSet::from_mask(std::shared_ptr<const Signature> sig, std::uint64_t mask) {
  ModelSet s(std::move(sig));
  if (s.universe_size() > 64) throw InvalidArgument("mask construction needs a universe of at most 64 tuples");
  if (s.universe_size() < 64) mask &= (std::uint64_t{1} << s.universe_size()) - 1;
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

std::uint64_t ModelSet::mask() const {
  if (universe_size() > 64) throw InvalidArgument("mask of a universe larger than 64 tuples");
  return words_.empty() ? 0 : words_[0];
}

bool ModelSet::contains(std::span<const Value> tuple) const { return contains_index(sig_->encode(tuple)); }

void ModelSet::insert(std::span<const Value> tuple) { insert_index(sig_->encode(tuple)); }

std::size_t ModelSet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ModelSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<Tuple> ModelSet::tuples() const {
  std::vector<Tuple> out;
  for_each_index([&](std::uint64_t i) { out.push_back(sig_->decode(i)); });
  return out;
}

std::vector<std::uint64_t> ModelSet::indices() const {
  std::vector<std::uint64_t> out;
  for_each_index([&](std::uint64_t i) { out.push_back(i); });
  return out;
}

std::optional<std::uint64_t> ModelSet::first_index() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w]) return static_cast<std::uint64_t>(w) * 64 + static_cast<std::uint64_t>(std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

void ModelSet::require_same_signature(const ModelSet& other) const {
  if (sig_ != other.sig_ && !(*sig_ == *other.sig_)) {
    throw InvalidArgument("model sets over different signatures");
  }
}

bool ModelSet::is_subset_of(const ModelSet& other) const {
  require_same_signature(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

bool ModelSet::intersects(const ModelSet& other) const {
  require_same_signature(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & other.words_[w]) return true;
  }
  return false;
}

std::optional<Tuple> ModelSet::first_outside(const ModelSet& other) const {
  require_same_signature(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::uint64_t diff = words_[w] & ~other.words_[w];
    if (diff) return sig_->decode(static_cast<std::uint64_t>(w) * 64 + static_cast<std::uint64_t>(std::countr_zero(diff)));
  }
  return std::nullopt;
}

ModelSet ModelSet::complement() const { return full(*sig_) - *this; }

ModelSet& ModelSet::operator|=(const ModelSet& other) {
  require_same_signature(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

ModelSet& ModelSet::operator&=(const ModelSet& other) {
  require_same_signature(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

ModelSet& ModelSet::operator-=(const ModelSet& other) {
  require_same_signature(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

bool operator==(const ModelSet& a, const ModelSet& b) {
  return (a.sig_ == b.sig_ || *a.sig_ == *b.sig_) && a.words_ == b.words_;
}

bool size_lex_less(const ModelSet& a, const ModelSet& b) {
  const auto na = a.size(), nb = b.size();
  if (na != nb) return na < nb;
  const auto ia = a.indices(), ib = b.indices();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

std::string to_string(const Tuple& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(tuple[i]);
  }
  return out + ")";
}

std::string to_string(const ModelSet& set) {
  std::string out = "{";
  bool first = true;
  set.for_each_index([&](std::uint64_t i) {
    if (!first) out += ", ";
    first = false;
    out += to_string(set.signature().decode(i));
  });
  return out + "}";
}

std::string to_string(const CoordSet& coords) {
  std::string out = "{";
  bool first = true;
  for (const auto& c : coords) {
    if (!first) out += ",";
    first = false;
    out += c;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------

ModelSet restrict_to(const ModelSet& s, const CoordSet& keep) {
  const Signature& sig = s.signature();
  Signature target = sig.project(keep);
  std::vector<std::size_t> src;
  for (const auto& c : target.coords()) src.push_back(sig.index_of(c.name));
  ModelSet out(std::move(target));
  const Signature& tsig = out.signature();
  s.for_each_index([&](std::uint64_t i) {
    std::uint64_t j = 0;
    for (std::size_t k = 0; k < src.size(); ++k) {
      j += static_cast<std::uint64_t>(sig.value_at(i, src[k])) * tsig.stride(k);
    }
    out.insert_index(j);
  });
  return out;
}

ModelSet expand(const ModelSet& s, const Signature& extra) {
  return cylindrify(s, s.signature().concat(extra));
}

ModelSet cylindrify(const ModelSet& s, const Signature& target) {
  const Signature& sig = s.signature();
  std::vector<std::size_t> pos;
  for (const auto& c : sig.coords()) {
    const std::size_t t = target.index_of(c.name);
    if (target.coord(t).domain_size != c.domain_size) {
      throw InvalidArgument("coordinate '" + c.name + "' has different domains");
    }
    pos.push_back(t);
  }
  ModelSet out(target);
  const std::uint64_t n = out.universe_size();
  for (std::uint64_t i = 0; i < n; ++i) {
    std::uint64_t j = 0;
    for (std::size_t k = 0; k < pos.size(); ++k) {
      j += static_cast<std::uint64_t>(target.value_at(i, pos[k])) * sig.stride(k);
    }
    if (s.contains_index(j)) out.insert_index(i);
  }
  return out;
}

ModelSet product(const std::vector<ModelSet>& factors, const Signature& target) {
  Partition p;
  for (const auto& f : factors) p.blocks.push_back(f.signature().names());
  if (target.arity() == 0 && factors.empty()) return ModelSet::full(target);
  p.validate(target);
  ModelSet out = ModelSet::full(target);
  for (const auto& f : factors) out &= cylindrify(f, target);
  return out;
}

EssentialSplit essential_split(const ModelSet& s) {
  const Signature& sig = s.signature();
  EssentialSplit out;
  for (std::size_t c = 0; c < sig.arity(); ++c) {
    const std::uint64_t stride = sig.stride(c);
    const int k = sig.coord(c).domain_size;
    bool closed = true;
    s.for_each_index([&](std::uint64_t i) {
      if (!closed) return;
      const std::uint64_t base = i - static_cast<std::uint64_t>(sig.value_at(i, c)) * stride;
      for (int v = 0; v < k; ++v) {
        if (!s.contains_index(base + static_cast<std::uint64_t>(v) * stride)) {
          closed = false;
          return;
        }
      }
    });
    (closed ? out.irrelevant : out.relevant).insert(sig.coord(c).name);
  }
  return out;
}

CoordSet relevant(const ModelSet& s) { return essential_split(s).relevant; }
CoordSet irrelevant(const ModelSet& s) { return essential_split(s).irrelevant; }

CoordSplit CoordSplit::from_left(const Signature& sig, const CoordSet& left) {
  CoordSplit split{left, {}};
  for (const auto& c : sig.coords()) {
    if (!left.count(c.name)) split.right.insert(c.name);
  }
  split.validate(sig);
  return split;
}

void CoordSplit::validate(const Signature& sig) const {
  for (const auto& c : left) {
    if (right.count(c)) throw InvalidArgument("coordinate '" + c + "' on both sides of the split");
    sig.index_of(c);
  }
  for (const auto& c : right) sig.index_of(c);
  if (left.size() + right.size() != sig.arity()) {
    throw InvalidArgument("split does not cover the signature");
  }
}

void Partition::validate(const Signature& sig) const {
  CoordSet seen;
  for (const auto& block : blocks) {
    if (block.empty()) throw InvalidArgument("empty partition block");
    for (const auto& c : block) {
      sig.index_of(c);
      if (!seen.insert(c).second) throw InvalidArgument("coordinate '" + c + "' in two partition blocks");
    }
  }
  if (seen.size() != sig.arity()) throw InvalidArgument("partition does not cover the signature");
}

SplitIndex::SplitIndex(std::shared_ptr<const Signature> sig, const CoordSplit& split) : sig_(std::move(sig)) {
  split.validate(*sig_);
  left_ = std::make_shared<const Signature>(sig_->project(split.left));
  right_ = std::make_shared<const Signature>(sig_->project(split.right));
  const std::uint64_t n = sig_->cardinality();
  if (n > ModelSet::kMaxUniverse) throw ResourceLimit("split index over too large a model space");
  std::vector<std::size_t> lpos, rpos;
  for (const auto& c : left_->coords()) lpos.push_back(sig_->index_of(c.name));
  for (const auto& c : right_->coords()) rpos.push_back(sig_->index_of(c.name));
  left_of_.resize(n);
  right_of_.resize(n);
  join_.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    std::uint64_t l = 0, r = 0;
    for (std::size_t k = 0; k < lpos.size(); ++k) l += static_cast<std::uint64_t>(sig_->value_at(i, lpos[k])) * left_->stride(k);
    for (std::size_t k = 0; k < rpos.size(); ++k) r += static_cast<std::uint64_t>(sig_->value_at(i, rpos[k])) * right_->stride(k);
    left_of_[i] = l;
    right_of_[i] = r;
    join_[l * right_->cardinality() + r] = i;
  }
}

ModelSet SplitIndex::project_left(const ModelSet& s) const {
  ModelSet out(left_);
  s.for_each_index([&](std::uint64_t i) { out.insert_index(left_of_[i]); });
  return out;
}

ModelSet SplitIndex::project_right(const ModelSet& s) const {
  ModelSet out(right_);
  s.for_each_index([&](std::uint64_t i) { out.insert_index(right_of_[i]); });
  return out;
}

ModelSet SplitIndex::join(const ModelSet& l, const ModelSet& r) const {
  ModelSet out(sig_);
  l.for_each_index([&](std::uint64_t a) { r.for_each_index([&](std::uint64_t b) { out.insert_index(join(a, b)); }); });
  return out;
}

std::optional<std::vector<ModelSet>> factorize(const ModelSet& s, const Partition& p) {
  p.validate(s.signature());
  std::vector<ModelSet> factors;
  factors.reserve(p.blocks.size());
  for (const auto& block : p.blocks) factors.push_back(restrict_to(s, block));
  if (product(factors, s.signature()) == s) return factors;
  return std::nullopt;
}

}  // namespace interlab
