#include "interlab/preferential.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cmath>

namespace interlab {

PreferenceStructure::PreferenceStructure(Signature sig)
    : PreferenceStructure(std::make_shared<const Signature>(std::move(sig))) {}

PreferenceStructure::PreferenceStructure(std::shared_ptr<const Signature> sig) : sig_(std::move(sig)) {
  const ModelSet empty(sig_);
  below_.assign(sig_->cardinality(), empty);
}

PreferenceStructure PreferenceStructure::from_pairs(Signature sig,
                                                    const std::vector<std::pair<Tuple, Tuple>>& pairs) {
  PreferenceStructure r(std::move(sig));
  for (const auto& [lo, hi] : pairs) r.add(lo, hi);
  return r;
}

PreferenceStructure PreferenceStructure::circumscription(Signature sig) {
  PreferenceStructure r(std::move(sig));
  const Signature& s = *r.sig_;
  const std::uint64_t n = s.cardinality();
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      if (a == b) continue;
      bool le = true;
      for (std::size_t i = 0; i < s.arity() && le; ++i) le = s.value_at(a, i) <= s.value_at(b, i);
      if (le) r.add(a, b);
    }
  }
  return r;
}

PreferenceStructure PreferenceStructure::linear(Signature sig, const std::vector<Tuple>& order) {
  PreferenceStructure r(std::move(sig));
  std::vector<std::uint64_t> idx;
  for (const auto& t : order) idx.push_back(r.sig_->encode(t));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) r.add(idx[i], idx[j]);
  }
  return r;
}

PreferenceStructure PreferenceStructure::chain_example() {
  return linear(Signature::boolean({"p", "q"}), {{1, 1}, {1, 0}, {0, 0}, {0, 1}});
}

PreferenceStructure PreferenceStructure::builtin(std::string_view name, const Signature& sig) {
  if (name == "circumscription") return circumscription(sig);
  if (name == "chain-example-4.1" || name == "chain-example") return chain_example();
  if (name == "empty") return PreferenceStructure(sig);
  throw InvalidArgument("unknown built-in relation '" + std::string(name) + "'");
}

void PreferenceStructure::add(std::uint64_t lo, std::uint64_t hi) {
  if (lo >= size() || hi >= size()) throw InvalidArgument("tuple index out of range");
  if (lo == hi) throw InvalidArgument("preference relations are irreflexive: " + to_string(sig_->decode(lo)));
  below_[hi].insert_index(lo);
}

void PreferenceStructure::add(const Tuple& lo, const Tuple& hi) { add(sig_->encode(lo), sig_->encode(hi)); }

std::vector<std::pair<std::uint64_t, std::uint64_t>> PreferenceStructure::pairs() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t hi = 0; hi < size(); ++hi) {
    below_[hi].for_each_index([&](std::uint64_t lo) { out.emplace_back(lo, hi); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t PreferenceStructure::pair_count() const {
  std::size_t n = 0;
  for (const auto& b : below_) n += b.size();
  return n;
}

bool PreferenceStructure::is_transitive() const {
  for (std::uint64_t c = 0; c < size(); ++c) {
    bool ok = true;
    below_[c].for_each_index([&](std::uint64_t b) { ok = ok && below_[b].is_subset_of(below_[c]); });
    if (!ok) return false;
  }
  return true;
}

bool operator==(const PreferenceStructure& a, const PreferenceStructure& b) {
  return *a.sig_ == *b.sig_ && a.below_ == b.below_;
}

ModelSet mu(const PreferenceStructure& r, const ModelSet& s) {
  if (!(r.signature() == s.signature())) throw InvalidArgument("mu: relation and set over different signatures");
  ModelSet out(s.signature_ptr());
  s.for_each_index([&](std::uint64_t t) {
    if (!r.below(t).intersects(s)) out.insert_index(t);
  });
  return out;
}

std::string to_string(SizeClass c) {
  switch (c) {
    case SizeClass::kBig:
      return "big";
    case SizeClass::kSmall:
      return "small";
    case SizeClass::kMedium:
      return "medium";
  }
  return "?";
}

SizeClass classify_subset(const ModelSet& a, const ModelSet& s, const PreferenceStructure& r) {
  if (auto w = a.first_outside(s)) {
    throw PreconditionViolation("classify_subset: " + to_string(*w) + " is not in the base set", w);
  }
  const ModelSet m = mu(r, s);
  if (m.is_subset_of(a)) return SizeClass::kBig;
  if (!m.intersects(a)) return SizeClass::kSmall;
  return SizeClass::kMedium;
}

// ---------------------------------------------------------------------------
// Bit-mask machinery for spaces of at most 64 tuples.

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::uint64_t i) { return Mask{1} << i; }

Mask low_mask(std::uint64_t n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

// (popcount, lexicographic order of the sorted elements).
bool mask_less(Mask a, Mask b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  const Mask d = a ^ b;
  return (a & d & (~d + 1)) != 0;
}

template <class F>
void for_bits(Mask m, F&& f) {
  while (m) {
    f(static_cast<std::uint64_t>(std::countr_zero(m)));
    m &= m - 1;
  }
}

// Calls f on every submask of m, stopping when f returns false.
template <class F>
void for_submasks(Mask m, F&& f) {
  for (Mask s = m;; s = (s - 1) & m) {
    if (!f(s) || s == 0) return;
  }
}

struct MaskRel {
  std::vector<Mask> below;

  explicit MaskRel(const PreferenceStructure& r) {
    if (r.size() > 64) throw ResourceLimit("bit-mask checks need a model space of at most 64 tuples");
    for (std::uint64_t t = 0; t < r.size(); ++t) below.push_back(r.below(t).mask());
  }

  Mask mu(Mask s) const {
    Mask out = 0;
    for_bits(s, [&](std::uint64_t t) {
      if (!(below[t] & s)) out |= bit(t);
    });
    return out;
  }
};

struct SmoothWitness {
  Mask set = 0;
  std::uint64_t element = 0;
};

std::optional<SmoothWitness> smooth_violation(const MaskRel& r, Mask s) {
  const Mask m = r.mu(s);
  std::optional<SmoothWitness> out;
  for_bits(s & ~m, [&](std::uint64_t x) {
    if (!out && !(r.below[x] & m)) out = SmoothWitness{s, x};
  });
  return out;
}

std::optional<std::pair<ModelSet, std::uint64_t>> smooth_violation(const PreferenceStructure& r, const ModelSet& s) {
  const ModelSet m = mu(r, s);
  std::optional<std::pair<ModelSet, std::uint64_t>> out;
  (s - m).for_each_index([&](std::uint64_t x) {
    if (!out && !r.below(x).intersects(m)) out.emplace(s, x);
  });
  return out;
}

}  // namespace

SmoothnessVerdict is_smooth(const PreferenceStructure& r, const Budget& budget) {
  SmoothnessVerdict v;
  const std::uint64_t n = r.size();
  const bool exhaustive = n < 63 && (bit(n) - 1) <= budget.max_instances;
  v.sampled = !exhaustive;

  if (n <= 64) {
    const MaskRel rel(r);
    const Mask full = low_mask(n);
    const std::uint64_t count = exhaustive ? bit(n) - 1 : budget.samples;
    auto probe = [&](std::uint64_t i) -> std::optional<SmoothWitness> {
      if (exhaustive) return smooth_violation(rel, i + 1);
      std::mt19937_64 rng(sample_seed(budget.seed, i));
      const Mask s = rng() & full;
      return s ? smooth_violation(rel, s) : std::nullopt;
    };
    auto less = [](const SmoothWitness& a, const SmoothWitness& b) {
      if (a.set != b.set) return mask_less(a.set, b.set);
      return a.element < b.element;
    };
    v.checked = count;
    if (auto w = detail::scan_min<SmoothWitness>(count, budget.jobs, probe, less)) {
      v.smooth = false;
      v.set = ModelSet::from_mask(r.signature_ptr(), w->set);
      v.element = r.signature().decode(w->element);
    }
    return v;
  }

  using W = std::pair<ModelSet, std::uint64_t>;
  auto probe = [&](std::uint64_t i) -> std::optional<W> {
    std::mt19937_64 rng(sample_seed(budget.seed, i));
    const ModelSet s = random_subset(r.signature_ptr(), rng);
    return s.empty() ? std::nullopt : smooth_violation(r, s);
  };
  auto less = [](const W& a, const W& b) {
    if (!(a.first == b.first)) return size_lex_less(a.first, b.first);
    return a.second < b.second;
  };
  v.checked = budget.samples;
  if (auto w = detail::scan_min<W>(budget.samples, budget.jobs, probe, less)) {
    v.smooth = false;
    v.set = w->first;
    v.element = r.signature().decode(w->second);
  }
  return v;
}

// ---------------------------------------------------------------------------

namespace {

struct FactorConflict {
  std::pair<std::uint64_t, std::uint64_t> ordered, unordered;
};

// Relation on one side of the split, kept where it holds in every fiber of
// the other side. Reports the first fiber dependence in `conflict`.
PreferenceStructure derive_factor(const PreferenceStructure& r, const SplitIndex& idx, bool left_side,
                                  std::optional<FactorConflict>& conflict) {
  const auto& side = left_side ? idx.left() : idx.right();
  const auto& other = left_side ? idx.right() : idx.left();
  auto join = [&](std::uint64_t mine, std::uint64_t theirs) {
    return left_side ? idx.join(mine, theirs) : idx.join(theirs, mine);
  };
  PreferenceStructure out(side);
  const std::uint64_t n = side->cardinality(), m = other->cardinality();
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      if (a == b) continue;
      std::optional<std::uint64_t> in, out_of;
      for (std::uint64_t f = 0; f < m; ++f) {
        (r.less(join(a, f), join(b, f)) ? in : out_of) = f;
        if (in && out_of) break;
      }
      if (in && !out_of) out.add(a, b);
      if (in && out_of && !conflict) {
        conflict = FactorConflict{{join(a, *in), join(b, *in)}, {join(a, *out_of), join(b, *out_of)}};
      }
    }
  }
  return out;
}

void require_factor_signatures(const SplitIndex& idx, const PreferenceStructure& left,
                               const PreferenceStructure& right) {
  if (!(left.signature() == *idx.left()) || !(right.signature() == *idx.right())) {
    throw InvalidArgument("factor relations do not match the split's sub-signatures");
  }
}

}  // namespace

FactorRelations factor_relations(const PreferenceStructure& r, const CoordSplit& split) {
  const SplitIndex idx(r.signature_ptr(), split);
  std::optional<FactorConflict> lc, rc;
  FactorRelations f;
  f.left = derive_factor(r, idx, true, lc);
  f.right = derive_factor(r, idx, false, rc);
  f.left_uniform = !lc;
  f.right_uniform = !rc;
  if (auto c = lc ? lc : rc) {
    const Signature& sig = r.signature();
    f.conflict.emplace(std::pair{sig.decode(c->ordered.first), sig.decode(c->ordered.second)},
                       std::pair{sig.decode(c->unordered.first), sig.decode(c->unordered.second)});
  }
  return f;
}

HammingVerdict is_hamming_relation(const PreferenceStructure& r, const PreferenceStructure& left,
                                   const PreferenceStructure& right, const CoordSplit& split) {
  const SplitIndex idx(r.signature_ptr(), split);
  require_factor_signatures(idx, left, right);
  const std::uint64_t n = r.size();
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      const bool whole = r.less_eq(a, b);
      const bool parts = left.less_eq(idx.left_of(a), idx.left_of(b)) && right.less_eq(idx.right_of(a), idx.right_of(b));
      if (whole != parts) {
        HammingVerdict v;
        v.holds = false;
        v.witness.emplace(r.signature().decode(a), r.signature().decode(b));
        v.detail = whole ? "ordered in the product but not componentwise" : "ordered componentwise but not in the product";
        return v;
      }
    }
  }
  return {};
}

HammingVerdict is_hamming_relation(const PreferenceStructure& r, const CoordSplit& split) {
  const FactorRelations f = factor_relations(r, split);
  return is_hamming_relation(r, f.left, f.right, split);
}

PreferenceStructure compose_hamming(const PreferenceStructure& left, const PreferenceStructure& right) {
  return compose_hamming({left, right}, left.signature().concat(right.signature()));
}

PreferenceStructure compose_hamming(const std::vector<PreferenceStructure>& factors, const Signature& target) {
  Signature all;
  for (const auto& f : factors) all = all.concat(f.signature());
  if (all.arity() != target.arity()) throw InvalidArgument("factor coordinates do not cover the target signature");
  for (const auto& c : all.coords()) {
    const auto i = target.find(c.name);
    if (!i || target.coord(*i).domain_size != c.domain_size) {
      throw InvalidArgument("coordinate " + c.name + " does not match the target signature");
    }
  }

  PreferenceStructure out(target);
  const std::uint64_t n = target.cardinality();
  std::vector<std::vector<std::uint64_t>> component(factors.size(), std::vector<std::uint64_t>(n));
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const Signature& fs = factors[k].signature();
    std::vector<std::size_t> pos;
    for (const auto& c : fs.coords()) pos.push_back(target.index_of(c.name));
    for (std::uint64_t t = 0; t < n; ++t) {
      std::uint64_t j = 0;
      for (std::size_t c = 0; c < pos.size(); ++c) j += static_cast<std::uint64_t>(target.value_at(t, pos[c])) * fs.stride(c);
      component[k][t] = j;
    }
  }
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      if (a == b) continue;
      bool le = true;
      for (std::size_t k = 0; k < factors.size() && le; ++k) le = factors[k].less_eq(component[k][a], component[k][b]);
      if (le) out.add(a, b);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Size rules.

std::string to_string(Rule r) {
  switch (r) {
    case Rule::kS1:
      return "S1";
    case Rule::kS2:
      return "S2";
    case Rule::kS3:
      return "S3";
    case Rule::kS1Prime:
      return "S1'";
    case Rule::kMu1:
      return "mu1";
    case Rule::kMu2:
      return "mu2";
    case Rule::kMu3:
      return "mu3";
  }
  return "?";
}

std::optional<Rule> parse_rule(std::string_view text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "s1") return Rule::kS1;
  if (t == "s2") return Rule::kS2;
  if (t == "s3") return Rule::kS3;
  if (t == "s1'" || t == "s1p" || t == "s1prime") return Rule::kS1Prime;
  if (t == "mu1") return Rule::kMu1;
  if (t == "mu2") return Rule::kMu2;
  if (t == "mu3") return Rule::kMu3;
  return std::nullopt;
}

namespace {

// Existential quantifiers over big sets are enumerated literally while the
// candidates number at most 2^kLiteralBits; beyond that only the generator
// is tried, which is exact since big sets are upward closed and every such
// quantifier asks for a big set below some bound.
constexpr int kLiteralBits = 10;

enum Space { kWhole, kLeft, kRight };

struct RuleWitness {
  std::vector<Mask> sets;
  int code = 0;
};

bool witness_less(const RuleWitness& a, const RuleWitness& b) {
  for (std::size_t k = 0; k < a.sets.size(); ++k) {
    if (a.sets[k] != b.sets[k]) return mask_less(a.sets[k], b.sets[k]);
  }
  return a.code < b.code;
}

void keep_min(std::optional<RuleWitness>& best, RuleWitness w) {
  if (!best || witness_less(w, *best)) best = std::move(w);
}

std::uint64_t saturate(long double x) {
  return x >= 1.8e19L ? UINT64_MAX : static_cast<std::uint64_t>(x);
}

long double binom(int n, int k) {
  long double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

class RuleEngine {
 public:
  RuleEngine(const PreferenceStructure& r, const PreferenceStructure& left, const PreferenceStructure& right,
             const CoordSplit& split)
      : idx_(r.signature_ptr(), split), whole_(r), left_(left), right_(right) {
    require_factor_signatures(idx_, left, right);
    n_ = r.size();
    nl_ = left.size();
    nr_ = right.size();
  }

  RuleVerdict run(Rule rule, const Budget& budget) const {
    RuleVerdict v;
    v.rule = rule;
    const std::uint64_t exact = instance_count(rule);
    const std::uint64_t outer = outer_count(rule);
    const bool exhaustive = exact <= budget.max_instances && outer != UINT64_MAX;
    v.sampled = !exhaustive;
    v.instances = exhaustive ? exact : budget.samples;

    auto probe = [&](std::uint64_t i) -> std::optional<RuleWitness> {
      if (exhaustive) return check_outer(rule, i);
      std::mt19937_64 rng(sample_seed(budget.seed, i));
      return check_sample(rule, rng);
    };
    const auto w =
        detail::scan_min<RuleWitness>(exhaustive ? outer : budget.samples, budget.jobs, probe, witness_less);
    if (w) {
      v.holds = false;
      const auto layout = names(rule);
      for (std::size_t k = 0; k < layout.size(); ++k) {
        const auto& sig = layout[k].second == kWhole ? idx_.whole() : layout[k].second == kLeft ? idx_.left() : idx_.right();
        v.witness.push_back({layout[k].first, ModelSet::from_mask(sig, w->sets[k])});
      }
      v.detail = describe(rule, w->code);
    }
    return v;
  }

 private:
  static std::vector<std::pair<std::string, Space>> names(Rule rule) {
    switch (rule) {
      case Rule::kS1:
        return {{"Sigma", kWhole}, {"Sigma'", kLeft}, {"Sigma''", kRight}, {"Delta", kWhole}};
      case Rule::kS1Prime:
        return {{"Sigma", kWhole}, {"Sigma'", kLeft}, {"Sigma''", kRight}, {"Gamma'", kLeft}};
      case Rule::kS2:
        return {{"Sigma", kWhole}, {"Gamma", kWhole}};
      case Rule::kS3:
        return {{"Sigma", kWhole}, {"A", kWhole}};
      case Rule::kMu1:
        return {{"Sigma", kWhole}, {"Sigma'", kLeft}, {"Sigma''", kRight}, {"mu(Sigma)", kWhole},
                {"mu'(Sigma') x mu''(Sigma'')", kWhole}};
      case Rule::kMu2:
        return {{"Sigma", kWhole}, {"Gamma", kWhole}, {"mu'(Sigma|X')", kLeft}, {"Gamma|X'", kLeft}};
      case Rule::kMu3:
        return {{"Sigma", kWhole}, {"Pi' x Sigma''", kWhole}, {"mu(Pi' x Sigma'')", kWhole}, {"mu(Sigma)", kWhole}};
    }
    return {};
  }

  static std::string describe(Rule rule, int code) {
    switch (rule) {
      case Rule::kS1:
        return code == 0 ? "Delta is big but contains no product of big sets"
                         : "Delta contains a product of big sets but is not big";
      case Rule::kS1Prime:
        return code == 0 ? "Gamma' x Sigma'' is big but Gamma' is not" : "Gamma' is big but Gamma' x Sigma'' is not";
      case Rule::kS2:
        return "Gamma is big in Sigma but Gamma|X' is not big in Sigma|X'";
      case Rule::kS3:
        return "A is big in Sigma but no big B in Pi' x Sigma'' has B|X'' inside A|X''";
      case Rule::kMu1:
        return "mu(Sigma' x Sigma'') differs from mu'(Sigma') x mu''(Sigma'')";
      case Rule::kMu2:
        return "mu(Sigma) is inside Gamma but mu'(Sigma|X') is not inside Gamma|X'";
      case Rule::kMu3:
        return "mu(Pi' x Sigma'')|X'' is not inside mu(Sigma)|X''";
    }
    return {};
  }

  std::uint64_t instance_count(Rule rule) const {
    const int n = static_cast<int>(n_), nl = static_cast<int>(nl_), nr = static_cast<int>(nr_);
    long double c = 0;
    switch (rule) {
      case Rule::kS1:
        for (int a = 0; a <= nl; ++a) {
          for (int b = 0; b <= nr; ++b) c += binom(nl, a) * binom(nr, b) * std::pow(2.0L, a * b);
        }
        break;
      case Rule::kS1Prime:
        c = std::pow(3.0L, nl) * (std::pow(2.0L, nr) - 1);
        break;
      case Rule::kS2:
      case Rule::kS3:
        c = std::pow(3.0L, n);
        break;
      case Rule::kMu1:
        c = std::pow(2.0L, nl + nr);
        break;
      case Rule::kMu2:
      case Rule::kMu3:
        c = std::pow(2.0L, n);
        break;
    }
    return saturate(c);
  }

  std::uint64_t outer_count(Rule rule) const {
    const std::uint64_t bits = (rule == Rule::kS2 || rule == Rule::kS3 || rule == Rule::kMu2 || rule == Rule::kMu3)
                                   ? n_
                                   : nl_ + nr_;
    return bits >= 63 ? UINT64_MAX : bit(bits);
  }

  Mask proj_left(Mask s) const {
    Mask out = 0;
    for_bits(s, [&](std::uint64_t t) { out |= bit(idx_.left_of(t)); });
    return out;
  }
  Mask proj_right(Mask s) const {
    Mask out = 0;
    for_bits(s, [&](std::uint64_t t) { out |= bit(idx_.right_of(t)); });
    return out;
  }
  Mask join(Mask l, Mask r) const {
    Mask out = 0;
    for_bits(l, [&](std::uint64_t a) { for_bits(r, [&](std::uint64_t b) { out |= bit(idx_.join(a, b)); }); });
    return out;
  }

  // All supersets of `base` within `within`, or just `base` when too many.
  static std::vector<Mask> big_candidates(Mask base, Mask within) {
    const Mask free = within & ~base;
    if (std::popcount(free) > kLiteralBits) return {base};
    std::vector<Mask> out;
    for_submasks(free, [&](Mask extra) {
      out.push_back(base | extra);
      return true;
    });
    return out;
  }

  // ---- (S*1): Delta ⊆ Σ'×Σ'' big iff it contains Γ'×Γ'' with Γ', Γ'' big.
  std::vector<Mask> s1_products(Mask sl, Mask sr) const {
    std::vector<Mask> out;
    const auto gl = big_candidates(left_.mu(sl), sl);
    const auto gr = big_candidates(right_.mu(sr), sr);
    if (gl.size() * gr.size() > (std::size_t{1} << kLiteralBits)) return {join(left_.mu(sl), right_.mu(sr))};
    for (Mask a : gl) {
      for (Mask b : gr) out.push_back(join(a, b));
    }
    return out;
  }
  std::optional<RuleWitness> s1_delta(Mask sl, Mask sr, Mask s, Mask ms, const std::vector<Mask>& prods,
                                      Mask delta) const {
    const bool big = !(ms & ~delta);
    const bool has_product = std::any_of(prods.begin(), prods.end(), [&](Mask p) { return !(p & ~delta); });
    if (big == has_product) return std::nullopt;
    return RuleWitness{{s, sl, sr, delta}, big ? 0 : 1};
  }

  // ---- (S*1'): Γ'×Σ'' big in Σ'×Σ'' iff Γ' big in Σ'.
  std::optional<RuleWitness> s1p_gamma(Mask sl, Mask sr, Mask s, Mask ms, Mask ml, Mask gamma) const {
    const bool prod_big = !(ms & ~join(gamma, sr));
    const bool factor_big = !(ml & ~gamma);
    if (prod_big == factor_big) return std::nullopt;
    return RuleWitness{{s, sl, sr, gamma}, prod_big ? 0 : 1};
  }

  // ---- (S*2): Γ ⊆ Σ big ⇒ Γ↾X' ⊆ Σ↾X' big.
  std::optional<RuleWitness> s2_gamma(Mask s, Mask ms, Mask mproj, Mask gamma) const {
    if (ms & ~gamma) return std::nullopt;
    if (!(mproj & ~proj_left(gamma))) return std::nullopt;
    return RuleWitness{{s, gamma}, 0};
  }

  // ---- (S*3): A ⊆ Σ big ⇒ ∃B ⊆ Π'×Σ'' big with B↾X'' ⊆ A↾X''.
  std::vector<Mask> s3_projections(Mask s) const {
    const Mask delta = join(low_mask(nl_), proj_right(s));
    std::vector<Mask> out;
    for (Mask b : big_candidates(whole_.mu(delta), delta)) out.push_back(proj_right(b));
    return out;
  }
  std::optional<RuleWitness> s3_a(Mask s, Mask ms, const std::vector<Mask>& bproj, Mask a) const {
    if (ms & ~a) return std::nullopt;
    const Mask ar = proj_right(a);
    if (std::any_of(bproj.begin(), bproj.end(), [&](Mask p) { return !(p & ~ar); })) return std::nullopt;
    return RuleWitness{{s, a}, 0};
  }

  std::optional<RuleWitness> mu1(Mask sl, Mask sr) const {
    const Mask s = join(sl, sr);
    const Mask ms = whole_.mu(s), mp = join(left_.mu(sl), right_.mu(sr));
    if (ms == mp) return std::nullopt;
    return RuleWitness{{s, sl, sr, ms, mp}, 0};
  }

  // Γ = μ(Σ) is the strongest instance: Γ↾X' only grows with Γ.
  std::optional<RuleWitness> mu2(Mask s) const {
    const Mask ms = whole_.mu(s);
    const Mask lhs = left_.mu(proj_left(s)), rhs = proj_left(ms);
    if (!(lhs & ~rhs)) return std::nullopt;
    return RuleWitness{{s, ms, lhs, rhs}, 0};
  }

  std::optional<RuleWitness> mu3(Mask s) const {
    const Mask delta = join(low_mask(nl_), proj_right(s));
    const Mask md = whole_.mu(delta), ms = whole_.mu(s);
    if (!(proj_right(md) & ~proj_right(ms))) return std::nullopt;
    return RuleWitness{{s, delta, md, ms}, 0};
  }

  std::optional<RuleWitness> check_outer(Rule rule, std::uint64_t i) const {
    std::optional<RuleWitness> best;
    switch (rule) {
      case Rule::kS1: {
        const Mask sl = i >> nr_, sr = i & low_mask(nr_);
        const Mask s = join(sl, sr), ms = whole_.mu(s);
        const auto prods = s1_products(sl, sr);
        for_submasks(s, [&](Mask delta) {
          if (auto w = s1_delta(sl, sr, s, ms, prods, delta)) keep_min(best, std::move(*w));
          return true;
        });
        break;
      }
      case Rule::kS1Prime: {
        const Mask sl = i >> nr_, sr = i & low_mask(nr_);
        if (!sr) break;
        const Mask s = join(sl, sr), ms = whole_.mu(s), ml = left_.mu(sl);
        for_submasks(sl, [&](Mask g) {
          if (auto w = s1p_gamma(sl, sr, s, ms, ml, g)) keep_min(best, std::move(*w));
          return true;
        });
        break;
      }
      case Rule::kS2: {
        const Mask s = i, ms = whole_.mu(s), mp = left_.mu(proj_left(s));
        for_submasks(s, [&](Mask g) {
          if (auto w = s2_gamma(s, ms, mp, g)) keep_min(best, std::move(*w));
          return true;
        });
        break;
      }
      case Rule::kS3: {
        const Mask s = i, ms = whole_.mu(s);
        const auto bproj = s3_projections(s);
        for_submasks(s, [&](Mask a) {
          if (auto w = s3_a(s, ms, bproj, a)) keep_min(best, std::move(*w));
          return true;
        });
        break;
      }
      case Rule::kMu1:
        return mu1(i >> nr_, i & low_mask(nr_));
      case Rule::kMu2:
        return mu2(i);
      case Rule::kMu3:
        return mu3(i);
    }
    return best;
  }

  // One random instantiation of the universal quantifiers. Where a rule's
  // antecedent asks for a big set, the sample is drawn among big sets.
  std::optional<RuleWitness> check_sample(Rule rule, std::mt19937_64& rng) const {
    const Mask full = low_mask(n_), full_l = low_mask(nl_), full_r = low_mask(nr_);
    switch (rule) {
      case Rule::kS1: {
        const Mask sl = rng() & full_l, sr = rng() & full_r;
        const Mask s = join(sl, sr);
        return s1_delta(sl, sr, s, whole_.mu(s), s1_products(sl, sr), rng() & s);
      }
      case Rule::kS1Prime: {
        const Mask sl = rng() & full_l, sr = rng() & full_r;
        if (!sr) return std::nullopt;
        const Mask s = join(sl, sr);
        return s1p_gamma(sl, sr, s, whole_.mu(s), left_.mu(sl), rng() & sl);
      }
      case Rule::kS2: {
        const Mask s = rng() & full, ms = whole_.mu(s);
        return s2_gamma(s, ms, left_.mu(proj_left(s)), ms | (rng() & s));
      }
      case Rule::kS3: {
        const Mask s = rng() & full, ms = whole_.mu(s);
        return s3_a(s, ms, s3_projections(s), ms | (rng() & s));
      }
      case Rule::kMu1:
        return mu1(rng() & full_l, rng() & full_r);
      case Rule::kMu2:
        return mu2(rng() & full);
      case Rule::kMu3:
        return mu3(rng() & full);
    }
    return std::nullopt;
  }

  SplitIndex idx_;
  MaskRel whole_, left_, right_;
  std::uint64_t n_ = 0, nl_ = 0, nr_ = 0;
};

}  // namespace

RuleVerdict check_rule(Rule rule, const PreferenceStructure& r, const CoordSplit& split, const Budget& budget) {
  const FactorRelations f = factor_relations(r, split);
  // (S*3)/(μ*3) use μ on Π only; (S*2)/(μ*2) use the X' factor only.
  const bool needs_left = rule != Rule::kS3 && rule != Rule::kMu3;
  const bool needs_right = needs_left && rule != Rule::kS2 && rule != Rule::kMu2;
  RuleVerdict v = check_rule(rule, r, f.left, f.right, split, budget);
  v.factors_uniform = (!needs_left || f.left_uniform) && (!needs_right || f.right_uniform);
  return v;
}

RuleVerdict check_rule(Rule rule, const PreferenceStructure& r, const PreferenceStructure& left,
                       const PreferenceStructure& right, const CoordSplit& split, const Budget& budget) {
  return RuleEngine(r, left, right, split).run(rule, budget);
}

MuProductCheck check_mu_product(const PreferenceStructure& r, const PreferenceStructure& left,
                                const PreferenceStructure& right, const CoordSplit& split, const ModelSet& s) {
  const SplitIndex idx(r.signature_ptr(), split);
  require_factor_signatures(idx, left, right);
  MuProductCheck c{mu(r, s), mu(left, idx.project_left(s)), mu(right, idx.project_right(s)), ModelSet(), false, false};
  c.product = idx.join(c.mu_left, c.mu_right);
  c.product_inside = c.product.is_subset_of(s);
  c.equal = c.mu == c.product;
  return c;
}

PreferenceStructure relation_from_mu(const MuOracle& oracle, const Signature& sig) {
  PreferenceStructure out(sig);
  const auto& ptr = out.signature_ptr();
  const std::uint64_t n = sig.cardinality();
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = a + 1; b < n; ++b) {
      const std::array<std::uint64_t, 2> pair{a, b};
      const ModelSet s = ModelSet::from_indices(ptr, pair);
      const ModelSet m = oracle(s);
      if (!(m.signature() == sig)) throw PreconditionViolation("mu oracle answered over a different signature");
      if (auto w = m.first_outside(s)) {
        throw PreconditionViolation("mu oracle returned " + to_string(*w) + " outside its argument", w);
      }
      if (!m.contains_index(b)) out.add(a, b);
      if (!m.contains_index(a)) out.add(b, a);
    }
  }
  return out;
}

}  // namespace interlab
