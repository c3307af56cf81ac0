#include <gtest/gtest.h>

#include <random>

#include "interlab/prop_logic.hpp"
#include "interlab/revision.hpp"
#include "oracles.hpp"

namespace interlab {
namespace {

using oracle::Tuples;

const Signature kPq = Signature::boolean({"p", "q"});

ModelSet set_of(const Signature& sig, std::vector<Tuple> ts) { return ModelSet::from_tuples(sig, ts); }

// Independent distance and bar.
struct OracleDistance {
  bool set_variant;
  std::map<std::string, double> w;

  CoordSet ds(const Signature& sig, const Tuple& x, const Tuple& y) const {
    CoordSet out;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != y[i]) out.insert(sig.coord(i).name);
    }
    return out;
  }
  double dc(const Signature& sig, const Tuple& x, const Tuple& y) const {
    double out = 0;
    for (const auto& n : ds(sig, x, y)) out += w.contains(n) ? w.at(n) : 1.0;
    return out;
  }
  bool less(const Signature& sig, const Tuple& a, const Tuple& b, const Tuple& c, const Tuple& e) const {
    if (!set_variant) return dc(sig, a, b) < dc(sig, c, e) - 1e-9;
    const CoordSet x = ds(sig, a, b), y = ds(sig, c, e);
    return x != y && std::includes(y.begin(), y.end(), x.begin(), x.end());
  }
  Tuples bar(const Signature& sig, const Tuples& xs, const Tuples& ys) const {
    Tuples out;
    for (const auto& y : ys) {
      for (const auto& x : xs) {
        bool minimal = true;
        for (const auto& x2 : xs) {
          for (const auto& y2 : ys) minimal = minimal && !less(sig, x2, y2, x, y);
        }
        if (minimal) out.insert(y);
      }
    }
    return out;
  }
  DistanceModel model() const { return set_variant ? DistanceModel::set_variant() : DistanceModel::counting(w); }
};

// --- distances ------------------------------------------------------------------

TEST(Distance, Examples) {
  const auto ds = DistanceModel::set_variant();
  EXPECT_TRUE(ds.distance(kPq, {1, 0}, {1, 0}).coords.empty());
  EXPECT_EQ(ds.distance(kPq, {1, 1}, {0, 1}).coords, (CoordSet{"p"}));
  const auto dc = DistanceModel::counting({{"p", 1}, {"q", 2}});
  EXPECT_DOUBLE_EQ(dc.distance(kPq, {1, 1}, {0, 0}).amount, 3);
  EXPECT_DOUBLE_EQ(DistanceModel::counting().distance(kPq, {1, 1}, {0, 0}).amount, 2);
  EXPECT_THROW(DistanceModel::counting().set_weight("p", 0), InvalidArgument);
  EXPECT_THROW(DistanceModel::counting().set_metric("p", {{0, 1}, {2, 0}}), InvalidArgument);
}

TEST(Distance, OrderAndSymmetry) {
  std::mt19937_64 rng(1);
  const Signature sig({{"a", 3}, {"b", 2}, {"c", 4}});
  const auto all = oracle::all_tuples(sig);
  DistanceModel metric = DistanceModel::counting({{"a", 2.5}});
  metric.set_metric("c", {{0, 1, 2, 3}, {1, 0, 1, 2}, {2, 1, 0, 1}, {3, 2, 1, 0}});
  for (const auto& d : {DistanceModel::set_variant(), DistanceModel::counting({{"b", 0.5}}), metric}) {
    for (int k = 0; k < 500; ++k) {
      const Tuple& x = all[rng() % all.size()];
      const Tuple& y = all[rng() % all.size()];
      const DistanceValue xy = d.distance(sig, x, y);
      ASSERT_EQ(xy, d.distance(sig, y, x));
      ASSERT_TRUE(d.leq(d.distance(sig, x, x), xy));
      ASSERT_EQ(d.less(xy, xy), false);
    }
  }
  // Set distances are only partially ordered.
  const auto ds = DistanceModel::set_variant();
  const DistanceValue p = ds.distance(kPq, {1, 1}, {0, 1}), q = ds.distance(kPq, {1, 1}, {1, 0});
  EXPECT_FALSE(ds.leq(p, q));
  EXPECT_FALSE(ds.leq(q, p));
  EXPECT_TRUE(ds.less(p, ds.distance(kPq, {1, 1}, {0, 0})));
}

TEST(Distance, MetricTableWeighted) {
  const Signature sig({{"a", 3}});
  DistanceModel d = DistanceModel::counting({{"a", 2}});
  d.set_metric("a", {{0, 1, 4}, {1, 0, 2}, {4, 2, 0}});
  EXPECT_DOUBLE_EQ(d.distance(sig, {0}, {2}).amount, 8);
  EXPECT_DOUBLE_EQ(d.distance(sig, {1}, {2}).amount, 4);
}

// --- bar --------------------------------------------------------------------------

TEST(Bar, Examples) {
  const ModelSet x = set_of(kPq, {{1, 1}});
  EXPECT_EQ(bar(x, set_of(kPq, {{0, 1}, {0, 0}}), DistanceModel::counting()), set_of(kPq, {{0, 1}}));
  const ModelSet y = set_of(kPq, {{1, 0}, {0, 1}});
  EXPECT_EQ(bar(x, y, DistanceModel::set_variant()), y);
  const auto mins = minimal_distances(x, y, DistanceModel::set_variant());
  EXPECT_EQ(mins.size(), 2u);
  const ModelSet z = set_of(kPq, {{1, 1}, {0, 0}});
  EXPECT_EQ(bar(z, set_of(kPq, {{0, 0}, {1, 0}}), DistanceModel::counting()), set_of(kPq, {{0, 0}}));
  EXPECT_THROW(bar(ModelSet(kPq), y, DistanceModel::counting()), InvalidArgument);
  EXPECT_THROW(bar(x, ModelSet(kPq), DistanceModel::counting()), InvalidArgument);
}

TEST(Bar, MatchesOracle) {
  std::mt19937_64 rng(2);
  const Signature sig = Signature::boolean({"a", "b", "c", "d"});
  const auto all = oracle::all_tuples(sig);
  const OracleDistance variants[] = {{true, {}}, {false, {}}, {false, {{"a", 2}, {"c", 0.5}}}};
  for (const auto& od : variants) {
    const DistanceModel d = od.model();
    for (int trial = 0; trial < 200; ++trial) {
      const Tuples xs = oracle::random_tuples(all, rng, 0.2), ys = oracle::random_tuples(all, rng, 0.3);
      if (xs.empty() || ys.empty()) continue;
      const ModelSet got = bar(oracle::to_model_set(sig, xs), oracle::to_model_set(sig, ys), d);
      ASSERT_EQ(oracle::tuples(got), od.bar(sig, xs, ys));
      ASSERT_FALSE(got.empty());
      Tuples both;
      std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(), std::inserter(both, both.end()));
      if (!both.empty()) {
        ASSERT_EQ(oracle::tuples(got), both);
      }
    }
  }
}

// Unit weights: the counting bar picks cardinality-minimal disagreement sets,
// which are inclusion-minimal too.
TEST(Bar, SetVariantRefinesCounting) {
  std::mt19937_64 rng(3);
  const Signature sig = Signature::boolean({"a", "b", "c", "d"});
  const auto all = oracle::all_tuples(sig);
  for (int trial = 0; trial < 300; ++trial) {
    const ModelSet x = oracle::to_model_set(sig, oracle::random_tuples(all, rng, 0.15));
    const ModelSet y = oracle::to_model_set(sig, oracle::random_tuples(all, rng, 0.2));
    if (x.empty() || y.empty()) continue;
    const auto dc = DistanceModel::counting(), ds = DistanceModel::set_variant();
    ASSERT_TRUE(bar(x, y, dc).is_subset_of(bar(x, y, ds)));
    const auto cmin = minimal_distances(x, y, dc);
    ASSERT_EQ(cmin.size(), 1u);
    for (const auto& v : minimal_distances(x, y, ds)) ASSERT_GE(static_cast<double>(v.coords.size()), cmin[0].amount);
  }
}

// --- generalized Hamming distances ---------------------------------------------------

TEST(GeneralizedHamming, Examples) {
  const CoordSplit split = CoordSplit::from_left(kPq, {"p"});
  for (const auto& d : {DistanceModel::counting(), DistanceModel::set_variant()}) {
    const HammingDistanceVerdict v = is_generalized_hamming_distance(d, kPq, split);
    EXPECT_FALSE(v.strict_iff);
    EXPECT_TRUE(v.strict_witness.has_value());
    EXPECT_TRUE(v.compositional);
  }
  const HammingDistanceVerdict c = is_generalized_hamming_distance(DistanceModel::counting(), kPq, split);
  const auto& w = *c.strict_witness;
  const auto dc = DistanceModel::counting();
  const Signature p = kPq.project({"p"}), q = kPq.project({"q"});
  // Component distances (1,0) against (0,1) or the reverse.
  const double l1 = dc.distance(p, {w.sigma1[0]}, {w.tau1[0]}).amount, r1 = dc.distance(q, {w.sigma1[1]}, {w.tau1[1]}).amount;
  const double l2 = dc.distance(p, {w.sigma2[0]}, {w.tau2[0]}).amount, r2 = dc.distance(q, {w.sigma2[1]}, {w.tau2[1]}).amount;
  EXPECT_EQ(l1 + r1, 1);
  EXPECT_EQ(l2 + r2, 1);
  EXPECT_NE(l1, l2);

  const CoordSplit degenerate = CoordSplit::from_left(kPq, {"p", "q"});
  EXPECT_TRUE(is_generalized_hamming_distance(DistanceModel::counting(), kPq, degenerate).strict_iff);
  EXPECT_TRUE(
      is_generalized_hamming_distance(DistanceModel::counting(), Signature::boolean({"p"}), CoordSplit::from_left(Signature::boolean({"p"}), {"p"}))
          .strict_iff);
}

TEST(GeneralizedHamming, WeightedAndMetricStayCompositional) {
  const Signature sig({{"a", 3}, {"b", 2}, {"c", 2}});
  DistanceModel d = DistanceModel::counting({{"a", 3}, {"b", 0.25}});
  d.set_metric("a", {{0, 1, 5}, {1, 0, 1}, {5, 1, 0}});
  for (const auto& left : std::vector<CoordSet>{{"a"}, {"b"}, {"a", "c"}}) {
    const HammingDistanceVerdict v = is_generalized_hamming_distance(d, sig, CoordSplit::from_left(sig, left));
    EXPECT_TRUE(v.compositional);
    EXPECT_FALSE(v.strict_iff);
  }
}

// --- product and projection --------------------------------------------------------------

struct Product {
  Signature sig = Signature::boolean({"a", "b", "c", "d"});
  CoordSplit split = CoordSplit::from_left(sig, {"a", "b"});
  std::vector<ModelSet> left, right;  // nonempty factor subsets, as cylinders
  Product() {
    for (const CoordSet& side : {CoordSet{"a", "b"}, CoordSet{"c", "d"}}) {
      const Signature f = sig.project(side);
      for (const auto& s : oracle::all_subsets(oracle::all_tuples(f))) {
        if (!s.empty()) (side.contains("a") ? left : right).push_back(cylindrify(oracle::to_model_set(f, s), sig));
      }
    }
  }
};

TEST(HdProduct, Examples) {
  const CoordSplit split = CoordSplit::from_left(kPq, {"p"});
  const HdProductCheck c =
      check_hd_product(set_of(kPq, {{1, 1}}), set_of(kPq, {{0, 1}, {0, 0}}), DistanceModel::counting(), split);
  EXPECT_TRUE(c.left_factorizes && c.right_factorizes && c.applicable && c.equal);
  EXPECT_EQ(c.direct, set_of(kPq, {{0, 1}}));
  EXPECT_EQ(c.composed, c.direct);

  const ModelSet one = set_of(kPq, {{1, 0}});
  const HdProductCheck s = check_hd_product(one, one, DistanceModel::set_variant(), split);
  EXPECT_EQ(s.direct, one);
  EXPECT_EQ(s.composed, one);

  const HdProductCheck n = check_hd_product(set_of(kPq, {{0, 0}, {1, 1}}), one, DistanceModel::counting(), split);
  EXPECT_FALSE(n.left_factorizes);
  EXPECT_TRUE(n.right_factorizes);
}

TEST(HdProduct, ExhaustiveOnProducts) {
  const Product pr;
  const DistanceModel models[] = {DistanceModel::set_variant(), DistanceModel::counting(),
                                  DistanceModel::counting({{"a", 2}, {"d", 3}})};
  std::size_t n = 0;
  for (const auto& d : models) {
    for (const auto& l1 : pr.left) {
      for (const auto& r1 : pr.right) {
        const ModelSet s1 = l1 & r1;
        for (const auto& l2 : pr.left) {
          for (const auto& r2 : pr.right) {
            const HdProductCheck c = check_hd_product(s1, l2 & r2, d, pr.split);
            ASSERT_TRUE(c.left_factorizes && c.right_factorizes);
            ASSERT_TRUE(c.equal) << to_string(d.variant());
            ++n;
          }
        }
      }
    }
  }
  EXPECT_EQ(n, 3u * 15 * 15 * 15 * 15);
}

TEST(HdProduct, SideConditionsOnNonProducts) {
  std::mt19937_64 rng(5);
  const Product pr;
  const auto all = oracle::all_tuples(pr.sig);
  int applicable = 0;
  for (const auto& d : {DistanceModel::set_variant(), DistanceModel::counting()}) {
    for (int trial = 0; trial < 4000; ++trial) {
      const ModelSet s1 = oracle::to_model_set(pr.sig, oracle::random_tuples(all, rng, 0.2));
      const ModelSet s2 = oracle::to_model_set(pr.sig, oracle::random_tuples(all, rng, 0.6));
      if (s1.empty() || s2.empty()) continue;
      const HdProductCheck c = check_hd_product(s1, s2, d, pr.split);
      ASSERT_EQ(c.applicable, (c.left_factorizes && c.right_factorizes) || (c.side_forward && c.side_backward));
      ASSERT_TRUE(c.holds());
      applicable += c.applicable && !(c.left_factorizes && c.right_factorizes);
    }
  }
  EXPECT_GT(applicable, 0);
}

TEST(HdProjection, Examples) {
  const CoordSplit split = CoordSplit::from_left(kPq, {"p"});
  const auto d = DistanceModel::counting();
  const ModelSet s = set_of(kPq, {{0, 1}}), g = set_of(kPq, {{0, 1}, {1, 1}});
  const HdProjectionCheck in = check_hd_projection(s, g, d, split);
  EXPECT_TRUE(in.antecedent);
  EXPECT_TRUE(in.consequent);
  EXPECT_TRUE(in.holds());
  const HdProjectionCheck out = check_hd_projection(g, s, d, split);
  EXPECT_FALSE(out.antecedent);
  EXPECT_TRUE(out.antecedent_witness.has_value());
  EXPECT_TRUE(out.holds());
}

TEST(HdProjection, ExhaustiveSmall) {
  const CoordSplit split = CoordSplit::from_left(kPq, {"q"});
  const auto all = oracle::all_tuples(kPq);
  for (const auto& d : {DistanceModel::set_variant(), DistanceModel::counting()}) {
    for (const auto& s : oracle::all_subsets(all)) {
      if (s.empty()) continue;
      for (const auto& g : oracle::all_subsets(all)) {
        const HdProjectionCheck c = check_hd_projection(oracle::to_model_set(kPq, s), oracle::to_model_set(kPq, g), d, split);
        ASSERT_EQ(c.antecedent, oracle::subset(s, g));
        ASSERT_TRUE(c.holds());
      }
    }
  }
}

TEST(HdProjection, RandomThreePlusThree) {
  std::mt19937_64 rng(6);
  const Signature sig = Signature::boolean({"a", "b", "c", "d", "e", "f"});
  const CoordSplit split = CoordSplit::from_left(sig, {"a", "c", "e"});
  const auto all = oracle::all_tuples(sig);
  for (int trial = 0; trial < 300; ++trial) {
    const Tuples s = oracle::random_tuples(all, rng, 0.1);
    if (s.empty()) continue;
    Tuples g = oracle::random_tuples(all, rng, 0.3);
    if (trial % 2) g.insert(s.begin(), s.end());
    ASSERT_TRUE(check_hd_projection(oracle::to_model_set(sig, s), oracle::to_model_set(sig, g), DistanceModel::counting(), split).holds());
  }
}

// --- revision ---------------------------------------------------------------------------

TEST(Revision, Examples) {
  const auto dc = DistanceModel::counting();
  const RevisionResult r = parikh_revise(parse_formula("p & q"), parse_formula("!p"), kPq, dc);
  EXPECT_EQ(r.result, models(parse_formula("!p & q"), kPq));
  ASSERT_EQ(r.min_distances.size(), 1u);
  EXPECT_DOUBLE_EQ(r.min_distances[0].amount, 1);
  EXPECT_FALSE(r.decomposed);

  const RevisionResult c = parikh_revise(parse_formula("p"), parse_formula("q"), kPq, dc);
  EXPECT_EQ(c.result, models(parse_formula("p & q"), kPq));
  EXPECT_DOUBLE_EQ(c.min_distances[0].amount, 0);

  const CoordSplit split = CoordSplit::from_left(kPq, {"p"});
  const RevisionResult s = parikh_revise(parse_formula("p & q"), parse_formula("!p & !q"), kPq, dc, split);
  EXPECT_TRUE(s.decomposed);
  EXPECT_EQ(s.result, models(parse_formula("!p & !q"), kPq));

  EXPECT_THROW(parikh_revise(parse_formula("p & !p"), parse_formula("q"), kPq, dc), InvalidArgument);
}

TEST(Revision, DecomposedAgreesWithDirect) {
  std::mt19937_64 rng(7);
  const Product pr;
  for (const auto& d : {DistanceModel::set_variant(), DistanceModel::counting({{"b", 2}})}) {
    for (int trial = 0; trial < 300; ++trial) {
      const ModelSet k = pr.left[rng() % pr.left.size()] & pr.right[rng() % pr.right.size()];
      const ModelSet phi = pr.left[rng() % pr.left.size()] & pr.right[rng() % pr.right.size()];
      const RevisionResult split = parikh_revise(k, phi, d, pr.split);
      ASSERT_TRUE(split.decomposed);
      ASSERT_EQ(split.result, bar(k, phi, d));
      ASSERT_EQ(split.result, parikh_revise(k, phi, d).result);
    }
  }
}

}  // namespace
}  // namespace interlab
