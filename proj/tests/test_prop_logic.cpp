#include <gtest/gtest.h>

#include <random>

#include "interlab/prop_logic.hpp"
#include "oracles.hpp"

namespace interlab {
namespace {

Formula P(std::string_view s) { return parse_formula(s); }
Formula atom(const char* n) { return Formula::atom(n); }

TEST(Parser, GrammarCases) {
  EXPECT_EQ(P("p & !q"), Formula::conjunction(atom("p"), Formula::negation(atom("q"))));
  EXPECT_EQ(P("p -> q -> r"), Formula::implication(atom("p"), Formula::implication(atom("q"), atom("r"))));
  EXPECT_EQ(P("p | q & r"), Formula::disjunction(atom("p"), Formula::conjunction(atom("q"), atom("r"))));
  EXPECT_EQ(P("p <-> q -> r"), Formula::equivalence(atom("p"), Formula::implication(atom("q"), atom("r"))));
  EXPECT_EQ(P("J !p"), Formula::next(Formula::negation(atom("p"))));
  EXPECT_EQ(P("(p)"), atom("p"));
  EXPECT_EQ(P("true | false"), Formula::disjunction(Formula::top(), Formula::bottom()));
  EXPECT_EQ(P("a_1 & b2"), Formula::conjunction(atom("a_1"), atom("b2")));
}

TEST(Parser, Errors) {
  try {
    P("p ->");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(P("p & & q"), SyntaxError);
  EXPECT_THROW(P("(p"), SyntaxError);
  EXPECT_THROW(P("P"), SyntaxError);
  EXPECT_THROW(P(""), SyntaxError);
}

TEST(Parser, RenderingRoundTrips) {
  for (const char* s : {"p & !q", "p -> q -> r", "(p -> q) -> r", "!(p | q) & J r", "p <-> q <-> r",
                        "p <-> (q <-> r)", "(p | q) & r", "true -> false", "J J !p"}) {
    const Formula f = P(s);
    EXPECT_EQ(P(f.to_string()), f) << s << " rendered as " << f.to_string();
  }
}

TEST(Models, BooleanExamples) {
  const Signature pq = Signature::boolean({"p", "q"});
  EXPECT_EQ(models(P("p & !q"), pq).tuples(), (std::vector<Tuple>{{1, 0}}));
  EXPECT_TRUE(models(P("true"), Signature::boolean({"p"})).is_full());
  EXPECT_TRUE(models(P("false"), pq).empty());
  EXPECT_THROW(models(P("z"), pq), InvalidArgument);
}

TEST(Models, AgreeWithTruthTables) {
  const Signature sig = Signature::boolean({"p", "q", "r"});
  const Formula f = P("(p -> q) <-> !(r & p)");
  for (const auto& t : oracle::all_tuples(sig)) {
    const bool p = t[0], q = t[1], r = t[2];
    const bool expect = (!p || q) == !(r && p);
    EXPECT_EQ(models(f, sig).contains(t), expect);
  }
}

TEST(Theory, Examples) {
  const Signature pq = Signature::boolean({"p", "q"});
  const ModelSet s = ModelSet::from_tuples(pq, {{1, 0}});
  EXPECT_EQ(models(theory_of(s), pq), s);
  EXPECT_EQ(theory_of(ModelSet(pq)), Formula::bottom());
  EXPECT_EQ(theory_of(ModelSet::full(pq)), Formula::top());
  EXPECT_THROW(theory_of(ModelSet(Signature::uniform({"p"}, 3))), Unsupported);
}

TEST(Theory, RoundTripExhaustive) {
  const Signature sig = Signature::boolean({"a", "b", "c"});
  for (const auto& t : oracle::all_subsets(oracle::all_tuples(sig))) {
    const ModelSet s = oracle::to_model_set(sig, t);
    ASSERT_EQ(models(theory_of(s), sig), s);
    ASSERT_EQ(models(theory_of(s, {.simplify = true}), sig), s);
    const Formula d = defining_formula(s);
    ASSERT_EQ(models(d, sig), s);
    ASSERT_EQ(d.atoms(), oracle::relevant(t, sig));
    ASSERT_EQ(P(d.to_string()), d);
  }
}

TEST(NormalForms, DnfAndCnfPreserveModels) {
  const Signature sig = Signature::boolean({"p", "q", "r"});
  for (const char* s : {"p -> q", "!(p <-> q) | r", "(p | q) & (!p | r)", "true", "false", "!(p & (q -> !r))"}) {
    const Formula f = P(s);
    EXPECT_EQ(dnf_models(to_dnf(f), sig), models(f, sig)) << s;
    EXPECT_EQ(cnf_models(to_cnf(f), sig), models(f, sig)) << s;
    EXPECT_EQ(models(to_formula(to_dnf(f)), sig), models(f, sig)) << s;
    EXPECT_EQ(models(to_formula(to_cnf(f)), sig), models(f, sig)) << s;
  }
}

TEST(ProjectDnf, Examples) {
  const Signature pd = Signature::boolean({"p", "d"});
  const Dnf f = to_dnf(P("(p & d) | (!p & !d)"));
  EXPECT_TRUE(dnf_models(project_dnf(f, {"p"}), pd).is_full());
  const Dnf g = to_dnf(P("p & q"));
  const Signature pq = Signature::boolean({"p", "q"});
  EXPECT_EQ(dnf_models(project_dnf(g, {"p"}), pq), models(P("p"), pq));
  EXPECT_EQ(project_dnf(g, {"p", "q"}), g);
}

Dnf random_dnf(const std::vector<std::string>& atoms, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> conjuncts(0, 4), value(0, 2);
  Dnf f;
  const int n = conjuncts(rng);
  for (int i = 0; i < n; ++i) {
    Conjunct c;
    for (const auto& a : atoms) {
      const int v = value(rng);  // 2: atom absent
      if (v < 2) c.push_back({a, v});
    }
    f.conjuncts.push_back(std::move(c));
  }
  return f;
}

TEST(ProjectDnf, MatchesRestrictAndExpand) {
  std::mt19937_64 rng(3);
  const std::vector<std::string> names{"a", "b", "c", "d"};
  const Signature sig = Signature::boolean(names);
  for (int trial = 0; trial < 300; ++trial) {
    const Dnf f = random_dnf(names, rng);
    const auto t = oracle::tuples(dnf_models(f, sig));
    for (std::uint64_t m = 0; m < 16; ++m) {
      CoordSet keep;
      for (std::size_t i = 0; i < names.size(); ++i) {
        if ((m >> i) & 1u) keep.insert(names[i]);
      }
      ASSERT_EQ(oracle::tuples(dnf_models(project_dnf(f, keep), sig)), oracle::cylinder(t, sig, keep));
    }
  }
}

TEST(PrimeImplicants, CoverExactly) {
  std::mt19937_64 rng(5);
  const Signature sig = Signature::boolean({"a", "b", "c", "d"});
  const auto all = oracle::all_tuples(sig);
  for (int trial = 0; trial < 100; ++trial) {
    const ModelSet s = oracle::to_model_set(sig, oracle::random_tuples(all, rng));
    const Dnf d = prime_implicant_dnf(s);
    ASSERT_EQ(dnf_models(d, sig), s);
    ASSERT_LE(d.conjuncts.size(), minterm_dnf(s).conjuncts.size());
  }
}

// --- Gödel-4 -----------------------------------------------------------------

TEST(Goedel4, TableExamples) {
  const Algebra& g = Algebra::goedel4();
  EXPECT_EQ(eval_many_valued(P("p -> p"), {{"p", 1}}, g), 0);
  EXPECT_EQ(eval_many_valued(P("p -> q"), {{"p", 2}, {"q", 1}}, g), 0);
  EXPECT_EQ(eval_many_valued(P("J p"), {{"p", 2}}, g), 1);
  EXPECT_EQ(eval_many_valued(P("q -> p"), {{"p", 2}, {"q", 1}}, g), 2);
  EXPECT_THROW(eval_many_valued(P("p & q"), {{"p", 0}}, g), InvalidArgument);
  EXPECT_THROW(eval_many_valued(P("J p"), {{"p", 1}}, Algebra::boolean()), Unsupported);
}

struct Pair {
  Formula f;
  oracle::KripkeFormula k;
};

Pair random_formula(int depth, const std::vector<std::string>& atoms, std::mt19937_64& rng) {
  using K = oracle::KripkeFormula;
  std::uniform_int_distribution<int> pick(0, depth == 0 ? 2 : 9);
  const int c = pick(rng);
  if (c <= 1 || depth == 0) {
    if (c == 2) return {Formula::bottom(), {K::kBottom, "", {}}};
    const auto& a = atoms[std::uniform_int_distribution<std::size_t>(0, atoms.size() - 1)(rng)];
    return {Formula::atom(a), {K::kAtom, a, {}}};
  }
  if (c == 2) return {Formula::top(), {K::kTop, "", {}}};
  Pair x = random_formula(depth - 1, atoms, rng);
  if (c == 3) return {Formula::negation(x.f), {K::kNot, "", {x.k}}};
  if (c == 4) return {Formula::next(x.f), {K::kJ, "", {x.k}}};
  Pair y = random_formula(depth - 1, atoms, rng);
  switch (c) {
    case 5:
    case 6:
      return {Formula::conjunction(x.f, y.f), {K::kAnd, "", {x.k, y.k}}};
    case 7:
      return {Formula::disjunction(x.f, y.f), {K::kOr, "", {x.k, y.k}}};
    case 8:
      return {Formula::implication(x.f, y.f), {K::kImplies, "", {x.k, y.k}}};
    default: {
      // a <-> b as (a -> b) & (b -> a) on the Kripke side.
      K both{K::kAnd, "", {{K::kImplies, "", {x.k, y.k}}, {K::kImplies, "", {y.k, x.k}}}};
      return {Formula::equivalence(x.f, y.f), both};
    }
  }
}

TEST(Goedel4, AgreesWithKripkeFrame) {
  std::mt19937_64 rng(17);
  const std::vector<std::string> atoms{"p", "q", "r"};
  const Algebra& g = Algebra::goedel4();
  for (int trial = 0; trial < 400; ++trial) {
    const Pair x = random_formula(4, atoms, rng);
    for (const auto& t : oracle::all_tuples({4, 4, 4})) {
      const std::map<std::string, int> kv{{"p", t[0]}, {"q", t[1]}, {"r", t[2]}};
      const Valuation v{{"p", t[0]}, {"q", t[1]}, {"r", t[2]}};
      ASSERT_EQ(eval_many_valued(x.f, v, g), oracle::kripke_value(x.k, kv)) << x.f.to_string();
    }
  }
}

TEST(Goedel4, PaperPairIsValid) {
  const Formula alpha = P("(p -> (((q -> r) -> q) -> q)) -> p");
  const Formula beta = P("((s -> p) -> s) -> s");
  const Formula imp = Formula::implication(alpha, beta);
  const Algebra& g = Algebra::goedel4();
  for (const auto& t : oracle::all_tuples({4, 4, 4, 4})) {
    ASSERT_EQ(eval_many_valued(imp, {{"p", t[0]}, {"q", t[1]}, {"r", t[2]}, {"s", t[3]}}, g), 0);
  }
}

TEST(Definability, BooleanSingleAtomIsComplete) {
  const auto sets = definable_sets(Signature::boolean({"p"}), Algebra::boolean(),
                                   {Connective::kNot, Connective::kAnd, Connective::kOr, Connective::kImplies});
  EXPECT_EQ(sets.size(), 4u);
}

TEST(Definability, GoedelSingleAtomWithAndWithoutJ) {
  const Algebra& g = Algebra::goedel4();
  const Signature p = Signature::uniform({"p"}, 4);
  ConnectiveSet plain = g.connectives();
  plain.erase(Connective::kJ);
  // The interpolant set {0, 1} ("p holds from the second world on").
  const ModelSet target = ModelSet::from_tuples(p, {{0}, {1}});
  const auto without = definable_sets(p, g, plain);
  const auto with = definable_sets(p, g, g.connectives());
  EXPECT_EQ(std::count(without.begin(), without.end(), target), 0);
  EXPECT_EQ(std::count(with.begin(), with.end(), target), 1);
  EXPECT_LT(without.size(), with.size());
  // Without J only the sets {0..k} reachable from p, ¬p and the constants.
  for (const auto& s : without) EXPECT_TRUE(std::find(with.begin(), with.end(), s) != with.end());
}

TEST(Definability, ResourceLimit) {
  EXPECT_THROW(definable_sets(Signature::uniform({"a", "b", "c", "d", "e"}, 4), Algebra::goedel4(),
                              Algebra::goedel4().connectives()),
               ResourceLimit);
}

}  // namespace
}  // namespace interlab
