#include "interlab/revision.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "interlab/prop_logic.hpp"

namespace interlab {

std::string to_string(DistanceVariant v) { return v == DistanceVariant::kSet ? "set" : "count"; }

std::string to_string(const DistanceValue& d) {
  if (d.variant == DistanceVariant::kSet) return to_string(d.coords);
  std::string s = std::to_string(d.amount);
  s.erase(s.find_last_not_of('0') + 1);
  if (s.back() == '.') s.pop_back();
  return s;
}

DistanceModel DistanceModel::set_variant() {
  DistanceModel d;
  d.variant_ = DistanceVariant::kSet;
  return d;
}

DistanceModel DistanceModel::counting(std::map<std::string, double> weights) {
  DistanceModel d;
  for (const auto& [c, w] : weights) d.set_weight(c, w);
  return d;
}

DistanceModel& DistanceModel::set_weight(const std::string& coord, double w) {
  if (!(w > 0) || !std::isfinite(w)) throw InvalidArgument("weight of " + coord + " must be a positive number");
  weights_[coord] = w;
  return *this;
}

double DistanceModel::weight(const std::string& coord) const {
  const auto it = weights_.find(coord);
  return it == weights_.end() ? 1.0 : it->second;
}

DistanceModel& DistanceModel::set_metric(const std::string& coord, std::vector<std::vector<double>> table) {
  const std::size_t k = table.size();
  for (std::size_t a = 0; a < k; ++a) {
    if (table[a].size() != k) throw InvalidArgument("metric of " + coord + " is not a square table");
    for (std::size_t b = 0; b < k; ++b) {
      const double v = table[a][b];
      if (!std::isfinite(v) || v < 0) throw InvalidArgument("metric of " + coord + " has a negative entry");
      if (a == b && v != 0) throw InvalidArgument("metric of " + coord + " has a nonzero diagonal");
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (table[a][b] != table[b][a]) throw InvalidArgument("metric of " + coord + " is not symmetric");
    }
  }
  metrics_[coord] = std::move(table);
  return *this;
}

bool DistanceModel::leq(const DistanceValue& a, const DistanceValue& b) const {
  if (a.variant == DistanceVariant::kSet) {
    return std::includes(b.coords.begin(), b.coords.end(), a.coords.begin(), a.coords.end());
  }
  return a.amount <= b.amount + kTolerance;
}

bool DistanceModel::less(const DistanceValue& a, const DistanceValue& b) const { return leq(a, b) && !leq(b, a); }

namespace {

// Distances between tuple indices of one signature. Set distances are bit
// masks over coordinate positions.
class Compiled {
 public:
  Compiled(const DistanceModel& d, const Signature& sig) : sig_(sig), set_(d.variant() == DistanceVariant::kSet) {
    if (sig.arity() > 64) throw ResourceLimit("distance over more than 64 coordinates");
    for (std::size_t i = 0; i < sig.arity(); ++i) {
      const Coord& c = sig.coord(i);
      weights_.push_back(d.weight(c.name));
      const auto it = d.metrics().find(c.name);
      if (it != d.metrics().end()) {
        if (it->second.size() < static_cast<std::size_t>(c.domain_size)) {
          throw InvalidArgument("metric of " + c.name + " does not cover its domain");
        }
        metrics_.push_back(&it->second);
      } else {
        metrics_.push_back(nullptr);
      }
    }
  }

  bool is_set() const { return set_; }

  std::uint64_t mask(std::uint64_t x, std::uint64_t y) const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < sig_.arity(); ++i) {
      if (sig_.value_at(x, i) != sig_.value_at(y, i)) m |= std::uint64_t{1} << i;
    }
    return m;
  }

  double amount(std::uint64_t x, std::uint64_t y) const {
    double s = 0;
    for (std::size_t i = 0; i < sig_.arity(); ++i) {
      const Value a = sig_.value_at(x, i), b = sig_.value_at(y, i);
      if (a == b) continue;
      s += weights_[i] * (metrics_[i] ? (*metrics_[i])[a][b] : 1.0);
    }
    return s;
  }

  DistanceValue value(std::uint64_t x, std::uint64_t y) const {
    DistanceValue v;
    v.variant = set_ ? DistanceVariant::kSet : DistanceVariant::kCounting;
    if (set_) {
      v.coords = coords(mask(x, y));
    } else {
      v.amount = amount(x, y);
    }
    return v;
  }

  CoordSet coords(std::uint64_t m) const {
    CoordSet out;
    for (std::size_t i = 0; i < sig_.arity(); ++i) {
      if ((m >> i) & 1u) out.insert(sig_.coord(i).name);
    }
    return out;
  }

 private:
  const Signature& sig_;
  bool set_;
  std::vector<double> weights_;
  std::vector<const std::vector<std::vector<double>>*> metrics_;
};

bool strict_subset(std::uint64_t a, std::uint64_t b) { return a != b && (a & ~b) == 0; }

struct BarResult {
  ModelSet result;
  std::vector<DistanceValue> minima;
};

BarResult compute_bar(const ModelSet& x, const ModelSet& y, const DistanceModel& d) {
  if (!(x.signature() == y.signature())) throw InvalidArgument("bar: operands over different signatures");
  if (x.empty() || y.empty()) throw InvalidArgument("bar: both operands must be nonempty");
  const Compiled c(d, x.signature());
  const auto xs = x.indices(), ys = y.indices();
  BarResult out{ModelSet(y.signature_ptr()), {}};

  if (!c.is_set()) {
    double best = INFINITY;
    for (auto a : xs) {
      for (auto b : ys) best = std::min(best, c.amount(a, b));
    }
    for (auto b : ys) {
      for (auto a : xs) {
        if (c.amount(a, b) <= best + DistanceModel::kTolerance) {
          out.result.insert_index(b);
          break;
        }
      }
    }
    DistanceValue v;
    v.amount = best;
    out.minima.push_back(v);
    return out;
  }

  std::unordered_set<std::uint64_t> realized;
  for (auto a : xs) {
    for (auto b : ys) realized.insert(c.mask(a, b));
  }
  std::unordered_set<std::uint64_t> minimal;
  for (auto m : realized) {
    if (std::none_of(realized.begin(), realized.end(), [&](std::uint64_t o) { return strict_subset(o, m); })) {
      minimal.insert(m);
    }
  }
  for (auto b : ys) {
    for (auto a : xs) {
      if (minimal.count(c.mask(a, b))) {
        out.result.insert_index(b);
        break;
      }
    }
  }
  std::vector<std::uint64_t> sorted(minimal.begin(), minimal.end());
  std::sort(sorted.begin(), sorted.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (auto m : sorted) {
    DistanceValue v;
    v.variant = DistanceVariant::kSet;
    v.coords = c.coords(m);
    out.minima.push_back(std::move(v));
  }
  return out;
}

bool factorizes(const SplitIndex& idx, const ModelSet& s) {
  return idx.join(idx.project_left(s), idx.project_right(s)) == s;
}

}  // namespace

DistanceValue DistanceModel::distance(const Signature& sig, const Tuple& x, const Tuple& y) const {
  return Compiled(*this, sig).value(sig.encode(x), sig.encode(y));
}

ModelSet bar(const ModelSet& x, const ModelSet& y, const DistanceModel& d) { return compute_bar(x, y, d).result; }

std::vector<DistanceValue> minimal_distances(const ModelSet& x, const ModelSet& y, const DistanceModel& d) {
  return compute_bar(x, y, d).minima;
}

HammingDistanceVerdict is_generalized_hamming_distance(const DistanceModel& d, const Signature& sig,
                                                       const CoordSplit& split) {
  const SplitIndex idx(std::make_shared<const Signature>(sig), split);
  const Compiled whole(d, *idx.whole()), left(d, *idx.left()), right(d, *idx.right());
  const std::uint64_t n = sig.cardinality();

  // One representative pair per realized triple (d, d', d'').
  struct Triple {
    DistanceValue v, l, r;
    std::uint64_t s, t;
  };
  std::vector<Triple> triples;
  for (std::uint64_t s = 0; s < n; ++s) {
    for (std::uint64_t t = 0; t < n; ++t) {
      Triple tr{whole.value(s, t), left.value(idx.left_of(s), idx.left_of(t)),
                right.value(idx.right_of(s), idx.right_of(t)), s, t};
      const bool seen = std::any_of(triples.begin(), triples.end(), [&](const Triple& o) {
        return d.leq(o.v, tr.v) && d.leq(tr.v, o.v) && d.leq(o.l, tr.l) && d.leq(tr.l, o.l) && d.leq(o.r, tr.r) &&
               d.leq(tr.r, o.r);
      });
      if (!seen) triples.push_back(std::move(tr));
    }
  }

  HammingDistanceVerdict v;
  auto witness = [&](const Triple& a, const Triple& b) {
    return PairOfPairs{sig.decode(a.s), sig.decode(a.t), sig.decode(b.s), sig.decode(b.t)};
  };
  for (const auto& a : triples) {
    for (const auto& b : triples) {
      if (v.strict_iff) {
        if (!d.leq(a.v, b.v) && !d.leq(b.v, a.v)) {
          v.strict_iff = false;
          v.strict_witness = witness(a, b);
          v.strict_detail = "distances " + to_string(a.v) + " and " + to_string(b.v) + " are incomparable";
        } else if (d.leq(a.v, b.v) != (d.leq(a.l, b.l) && d.leq(a.r, b.r))) {
          v.strict_iff = false;
          v.strict_witness = witness(a, b);
          v.strict_detail = "d = " + to_string(a.v) + " vs " + to_string(b.v) + " with components (" +
                            to_string(a.l) + ", " + to_string(a.r) + ") vs (" + to_string(b.l) + ", " +
                            to_string(b.r) + ")";
        }
      }
      if (v.compositional) {
        const bool comp_le = d.leq(a.l, b.l) && d.leq(a.r, b.r);
        const bool comp_lt = comp_le && (d.less(a.l, b.l) || d.less(a.r, b.r));
        if ((comp_lt && !d.less(a.v, b.v)) || (comp_le && !d.leq(a.v, b.v))) {
          v.compositional = false;
          v.compositional_witness = witness(a, b);
          v.compositional_detail = "components (" + to_string(a.l) + ", " + to_string(a.r) + ") <= (" +
                                   to_string(b.l) + ", " + to_string(b.r) + ") but d = " + to_string(a.v) +
                                   " vs " + to_string(b.v);
        }
      }
    }
  }
  return v;
}

HdProductCheck check_hd_product(const ModelSet& s1, const ModelSet& s2, const DistanceModel& d,
                                const CoordSplit& split) {
  if (!(s1.signature() == s2.signature())) throw InvalidArgument("operands over different signatures");
  const SplitIndex idx(s1.signature_ptr(), split);
  HdProductCheck c;
  c.left_factorizes = factorizes(idx, s1);
  c.right_factorizes = factorizes(idx, s2);
  const ModelSet l1 = idx.project_left(s1), r1 = idx.project_right(s1);
  const ModelSet l2 = idx.project_left(s2), r2 = idx.project_right(s2);
  c.direct = bar(s1, s2, d);
  c.left_bar = bar(l1, l2, d);
  c.right_bar = bar(r1, r2, d);
  c.composed = idx.join(c.left_bar, c.right_bar);
  c.side_forward = c.composed.is_subset_of(s2);
  c.side_backward = idx.join(bar(l2, l1, d), bar(r2, r1, d)).is_subset_of(s1);
  c.applicable = (c.left_factorizes && c.right_factorizes) || (c.side_forward && c.side_backward);
  c.equal = c.direct == c.composed;
  return c;
}

HdProjectionCheck check_hd_projection(const ModelSet& s, const ModelSet& g, const DistanceModel& d,
                                      const CoordSplit& split) {
  if (!(s.signature() == g.signature())) throw InvalidArgument("operands over different signatures");
  const SplitIndex idx(s.signature_ptr(), split);
  HdProjectionCheck c;
  const ModelSet whole = bar(ModelSet::full(s.signature()), s, d);
  c.antecedent_witness = whole.first_outside(g);
  c.antecedent = !c.antecedent_witness;
  const ModelSet part = bar(ModelSet::full(*idx.left()), idx.project_left(s), d);
  c.consequent_witness = part.first_outside(idx.project_left(g));
  c.consequent = !c.consequent_witness;
  return c;
}

RevisionResult parikh_revise(const ModelSet& k, const ModelSet& phi, const DistanceModel& d,
                             const std::optional<CoordSplit>& split) {
  BarResult direct = compute_bar(k, phi, d);
  RevisionResult out{std::move(direct.result), std::move(direct.minima), false};
  if (!split) return out;
  const SplitIndex idx(k.signature_ptr(), *split);
  if (!factorizes(idx, k) || !factorizes(idx, phi)) return out;
  const ModelSet composed = idx.join(bar(idx.project_left(k), idx.project_left(phi), d),
                                     bar(idx.project_right(k), idx.project_right(phi), d));
  if (!(composed == out.result)) {
    throw Error("componentwise revision " + to_string(composed) + " disagrees with the direct result " +
                to_string(out.result));
  }
  out.decomposed = true;
  return out;
}

RevisionResult parikh_revise(const Formula& k, const Formula& phi, const Signature& sig, const DistanceModel& d,
                             const std::optional<CoordSplit>& split) {
  return parikh_revise(models(k, sig), models(phi, sig), d, split);
}

}  // namespace interlab
