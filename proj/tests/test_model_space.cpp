#include <gtest/gtest.h>

#include <random>

#include "interlab/model_space.hpp"
#include "oracles.hpp"

namespace interlab {
namespace {

Signature pqr() { return Signature::boolean({"p", "q", "r"}); }

TEST(Signature, LayoutIsLexicographic) {
  const Signature sig({{"a", 3}, {"b", 2}});
  EXPECT_EQ(sig.cardinality(), 6u);
  const auto all = oracle::all_tuples(sig);
  for (std::uint64_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(sig.decode(i), all[i]);
    EXPECT_EQ(sig.encode(all[i]), i);
  }
}

TEST(Signature, RejectsDuplicatesAndEmptyDomains) {
  EXPECT_THROW(Signature({{"p", 2}, {"p", 2}}), InvalidArgument);
  EXPECT_THROW(Signature({{"p", 0}}), InvalidArgument);
}

TEST(Signature, ProjectKeepsOrder) {
  const Signature sig({{"c", 2}, {"a", 3}, {"b", 4}});
  const Signature sub = sig.project({"b", "c"});
  ASSERT_EQ(sub.arity(), 2u);
  EXPECT_EQ(sub.coord(0).name, "c");
  EXPECT_EQ(sub.coord(1).name, "b");
  EXPECT_EQ(sub.coord(1).domain_size, 4);
}

TEST(ModelSet, RejectsOutOfRangeTuples) {
  ModelSet s(pqr());
  EXPECT_THROW(s.insert(Tuple{1, 2, 0}), InvalidArgument);
  EXPECT_THROW(s.insert(Tuple{1, 0}), InvalidArgument);
}

TEST(ModelSet, EmptyAndFullAreRepresentable) {
  const ModelSet e(pqr()), f = ModelSet::full(pqr());
  EXPECT_TRUE(e.empty());
  EXPECT_EQ(f.size(), 8u);
  EXPECT_TRUE(f.is_full());
  EXPECT_EQ(e.complement(), f);
}

TEST(Restrict, ProjectsComponentwise) {
  const ModelSet s = ModelSet::from_tuples(pqr(), {{1, 1, 0}, {1, 0, 0}});
  const ModelSet r = restrict_to(s, {"p", "r"});
  EXPECT_EQ(r.signature().ordered_names(), (std::vector<std::string>{"p", "r"}));
  EXPECT_EQ(r.tuples(), (std::vector<Tuple>{{1, 0}}));
}

TEST(Restrict, IdentityEmptyAndZeroCoordinates) {
  const ModelSet s = ModelSet::from_tuples(pqr(), {{0, 1, 0}, {1, 1, 1}});
  EXPECT_EQ(restrict_to(s, {"p", "q", "r"}), s);
  EXPECT_TRUE(restrict_to(ModelSet(pqr()), {"q"}).empty());
  const ModelSet none = restrict_to(s, {});
  EXPECT_EQ(none.size(), 1u);
  EXPECT_EQ(none.tuples(), (std::vector<Tuple>{Tuple{}}));
  EXPECT_TRUE(restrict_to(ModelSet(pqr()), {}).empty());
}

TEST(Restrict, UnknownCoordinate) { EXPECT_THROW(restrict_to(ModelSet(pqr()), {"z"}), InvalidArgument); }

TEST(Expand, AppendsFreeCoordinates) {
  const ModelSet s = ModelSet::from_tuples(Signature::boolean({"p"}), {{1}});
  const ModelSet e = expand(s, Signature::boolean({"q"}));
  EXPECT_EQ(e.tuples(), (std::vector<Tuple>{{1, 0}, {1, 1}}));
  EXPECT_EQ(expand(s, Signature{}), s);
  EXPECT_TRUE(expand(ModelSet(Signature::boolean({"p"})), Signature::boolean({"q"})).empty());
  EXPECT_THROW(expand(s, Signature::boolean({"p"})), InvalidArgument);
}

TEST(Relevance, Examples) {
  const Signature pq = Signature::boolean({"p", "q"});
  EXPECT_EQ(irrelevant(ModelSet::full(pq)), (CoordSet{"p", "q"}));
  const ModelSet p = ModelSet::from_tuples(pq, {{1, 0}, {1, 1}});
  EXPECT_EQ(irrelevant(p), CoordSet{"q"});
  EXPECT_EQ(relevant(p), CoordSet{"p"});
  EXPECT_TRUE(irrelevant(ModelSet::from_tuples(pq, {{1, 1}, {0, 0}})).empty());
  EXPECT_EQ(irrelevant(ModelSet(pq)), (CoordSet{"p", "q"}));
}

TEST(Relevance, UnitDomainIsIrrelevant) {
  const Signature sig({{"u", 1}, {"p", 2}});
  const ModelSet s = ModelSet::from_tuples(sig, {{0, 1}});
  EXPECT_EQ(irrelevant(s), CoordSet{"u"});
}

TEST(Factorize, Examples) {
  const Signature pq = Signature::boolean({"p", "q"});
  const Partition blocks{{{"p"}, {"q"}}};
  const auto f = factorize(ModelSet::from_tuples(pq, {{1, 1}}), blocks);
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ((*f)[0].tuples(), (std::vector<Tuple>{{1}}));
  EXPECT_EQ((*f)[1].tuples(), (std::vector<Tuple>{{1}}));
  EXPECT_FALSE(factorize(ModelSet::from_tuples(pq, {{1, 1}, {0, 0}}), blocks).has_value());
  const auto full = factorize(ModelSet::full(pq), blocks);
  ASSERT_TRUE(full.has_value());
  EXPECT_TRUE((*full)[0].is_full());
  EXPECT_TRUE((*full)[1].is_full());
}

TEST(Partition, Validation) {
  const Signature sig = pqr();
  EXPECT_NO_THROW((Partition{{{"p"}, {"q", "r"}}}).validate(sig));
  EXPECT_THROW((Partition{{{"p"}, {"p", "q", "r"}}}).validate(sig), InvalidArgument);
  EXPECT_THROW((Partition{{{"p"}, {"q"}}}).validate(sig), InvalidArgument);
  EXPECT_THROW((Partition{{{"p", "q", "r"}, {}}}).validate(sig), InvalidArgument);
}

TEST(SplitIndex, JoinInvertsProjection) {
  const Signature sig({{"a", 3}, {"b", 2}, {"c", 2}});
  const auto ptr = std::make_shared<const Signature>(sig);
  const SplitIndex idx(ptr, CoordSplit::from_left(sig, {"a", "c"}));
  for (std::uint64_t i = 0; i < sig.cardinality(); ++i) EXPECT_EQ(idx.join(idx.left_of(i), idx.right_of(i)), i);
}

// Exhaustive and sampled agreement with the tuple-set oracle.

struct Space {
  Signature sig;
  std::vector<Tuple> all;
};

std::vector<Space> small_spaces() {
  std::vector<Space> out;
  for (const Signature& sig : {Signature::boolean({"a", "b", "c"}), Signature::uniform({"a", "b"}, 3),
                               Signature({{"a", 2}, {"b", 3}, {"c", 2}})}) {
    out.push_back({sig, oracle::all_tuples(sig)});
  }
  return out;
}

TEST(ModelSpaceProperties, RelevanceAndReconstructionExhaustive) {
  for (const auto& [sig, all] : small_spaces()) {
    if (all.size() > 12) continue;
    for (const auto& t : oracle::all_subsets(all)) {
      const ModelSet s = oracle::to_model_set(sig, t);
      const CoordSet irr = irrelevant(s), rel = relevant(s);
      ASSERT_EQ(irr, oracle::irrelevant(t, sig));
      ASSERT_EQ(rel, oracle::relevant(t, sig));
      // S = S↾R(S) × Π↾I(S).
      ASSERT_EQ(cylindrify(restrict_to(s, rel), sig), s);
    }
  }
}

TEST(ModelSpaceProperties, SampledInvariants) {
  std::mt19937_64 rng(7);
  const Signature sig({{"a", 2}, {"b", 3}, {"c", 2}, {"d", 2}, {"e", 3}});
  const auto all = oracle::all_tuples(sig);
  for (int trial = 0; trial < 300; ++trial) {
    // Mix dense sets with cylinders so that irrelevant coordinates occur.
    oracle::Tuples t = oracle::random_tuples(all, rng, trial % 3 == 0 ? 0.9 : 0.5);
    if (trial % 2 == 0) t = oracle::cylinder(t, sig, {"a", "c"});
    const ModelSet s = oracle::to_model_set(sig, t);
    const CoordSet rel = relevant(s);
    ASSERT_EQ(rel, oracle::relevant(t, sig));

    // Membership closure: σ↾R(S) = σ'↾R(S) and σ ∈ S give σ' ∈ S.
    const auto pos = oracle::positions(sig, rel);
    for (const auto& x : t) {
      for (const auto& y : all) {
        if (oracle::project(x, pos) == oracle::project(y, pos)) {
          ASSERT_TRUE(s.contains(y));
        }
      }
    }
    // restrict(restrict(S, A), B) = restrict(S, B).
    const CoordSet a{"a", "b", "d", "e"}, b{"b", "e"};
    ASSERT_EQ(restrict_to(restrict_to(s, a), b), restrict_to(s, b));
    ASSERT_EQ(oracle::tuples(restrict_to(s, a)), oracle::restrict(t, sig, a));

    // Expanding adds irrelevant coordinates.
    const Signature extra({{"x", 3}, {"y", 2}});
    const CoordSet irr = irrelevant(expand(s, extra));
    ASSERT_TRUE(irr.contains("x") && irr.contains("y"));
  }
}

TEST(ModelSpaceProperties, FactorizeMatchesProductCheck) {
  std::mt19937_64 rng(11);
  const Signature sig = Signature::uniform({"a", "b", "c"}, 3);
  const auto all = oracle::all_tuples(sig);
  const Partition p{{{"a", "c"}, {"b"}}};
  for (int trial = 0; trial < 200; ++trial) {
    oracle::Tuples t;
    if (trial % 2 == 0) {
      // A genuine product of random factors.
      const auto l = oracle::random_tuples(oracle::all_tuples({3, 3}), rng);
      const auto r = oracle::random_tuples(oracle::all_tuples({3}), rng);
      for (const auto& x : all) {
        if (l.contains({x[0], x[2]}) && r.contains({x[1]})) t.insert(x);
      }
    } else {
      t = oracle::random_tuples(all, rng);
    }
    const ModelSet s = oracle::to_model_set(sig, t);
    const auto l = oracle::restrict(t, sig, {"a", "c"}), r = oracle::restrict(t, sig, {"b"});
    bool is_product = true;
    for (const auto& x : all) {
      const bool in_product = l.contains({x[0], x[2]}) && r.contains({x[1]});
      if (in_product != t.contains(x)) is_product = false;
    }
    const auto f = factorize(s, p);
    ASSERT_EQ(f.has_value(), is_product);
    if (f) {
      ASSERT_EQ(product(*f, sig), s);
    }
  }
}

TEST(SizeLex, OrdersBySizeThenTuples) {
  const Signature pq = Signature::boolean({"p", "q"});
  const ModelSet a = ModelSet::from_tuples(pq, {{1, 1}});
  const ModelSet b = ModelSet::from_tuples(pq, {{0, 0}, {0, 1}});
  const ModelSet c = ModelSet::from_tuples(pq, {{0, 0}, {1, 0}});
  EXPECT_TRUE(size_lex_less(a, b));
  EXPECT_TRUE(size_lex_less(b, c));
  EXPECT_FALSE(size_lex_less(c, b));
  EXPECT_FALSE(size_lex_less(b, b));
}

}  // namespace
}  // namespace interlab
