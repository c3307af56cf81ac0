#include "named_examples.hpp"

#include <functional>

#include "interlab/monotone_interp.hpp"
#include "interlab/nonmono_interp.hpp"
#include "interlab/preferential.hpp"
#include "interlab/prop_logic.hpp"

namespace interlab::cli {

namespace {

using Runner = std::function<ExampleOutcome(const Budget&)>;

std::string fraction(std::size_t num, std::size_t den) { return std::to_string(num) + "/" + std::to_string(den); }

ExampleOutcome finish(Report details, bool reproduced) {
  ExampleOutcome out;
  out.reproduced = reproduced;
  out.report = std::move(details);
  return out;
}

// pq ≺ p¬q ≺ ¬p¬q ≺ ¬pq: ¬p |~ ¬q with no shared atoms, and no interpolant of
// any of the three forms.
ExampleOutcome chain(const Budget& budget) {
  const auto r = PreferenceStructure::chain_example();
  const Formula not_p = parse_formula("!p"), not_q = parse_formula("!q");
  const bool c1 = nm_consequence(not_p, not_q, r);
  const bool c2 = nm_consequence(Formula::top(), parse_formula("q"), r);
  const bool c3 = nm_consequence(not_p, Formula::bottom(), r);

  Report searches = Report::object();
  bool none = true;
  for (int form = 1; form <= 3; ++form) {
    const auto hit = search_interpolant(not_p, not_q, r, form, budget);
    searches["form" + std::to_string(form)] = hit ? hit->interpolant.to_string() : "none";
    none = none && !hit;
  }
  const Form1Verdict f1 = form1_condition(r, budget);
  const InterpolationResult i2 = interpolant_form2(not_p, not_q, r);

  Report d;
  d["mu(M(!p))"] = models_json(mu(r, models(not_p, r.signature())));
  d["!p |~ !q"] = c1;
  d["true |~ q"] = c2;
  d["!p |~ false"] = c3;
  d["search"] = searches;
  d["form1_condition"] = f1.holds;
  if (f1.witness) d["form1_witness"] = models_json(*f1.witness);
  d["form2_construction"] = i2.found ? "found" : "fails at " + i2.failed_inclusion;
  if (i2.witness) d["form2_witness"] = *i2.witness;
  return finish(std::move(d), c1 && c2 && !c3 && none && !f1.holds && !i2.found);
}

// σ' ≺' τ', τ'' ≺'' σ'': Σ = {σ'σ'', τ'τ''} is its own μ, yet μ'(Σ') × μ''(Σ'')
// is the single tuple σ'τ''.
ExampleOutcome component_inverse(const Budget& budget) {
  const Signature left = Signature::boolean({"p"}), right = Signature::boolean({"q"});
  const auto lr = PreferenceStructure::linear(left, {{0}, {1}});   // σ' = 0, τ' = 1
  const auto rr = PreferenceStructure::linear(right, {{0}, {1}});  // τ'' = 0, σ'' = 1
  const auto r = compose_hamming(lr, rr);
  const CoordSplit split{{"p"}, {"q"}};
  const ModelSet sigma = ModelSet::from_tuples(r.signature(), {{0, 1}, {1, 0}});
  const MuProductCheck m = check_mu_product(r, lr, rr, split, sigma);
  const bool smooth = is_smooth(r, budget).smooth;
  const bool hamming = is_hamming_relation(r, lr, rr, split).holds;
  const bool mu2 = check_rule(Rule::kMu2, r, lr, rr, split, budget).holds;

  Report d;
  d["Sigma"] = models_json(sigma);
  d["mu(Sigma)"] = models_json(m.mu);
  d["mu'(Sigma')"] = models_json(m.mu_left);
  d["mu''(Sigma'')"] = models_json(m.mu_right);
  d["product"] = models_json(m.product);
  d["product_inside"] = m.product_inside;
  d["smooth"] = smooth;
  d["hamming"] = hamming;
  d["mu2"] = mu2;
  return finish(std::move(d), m.mu == sigma && !m.equal && !m.product_inside && smooth && hamming && mu2);
}

// Ten models over a..e; the big subset d ∧ e covers 8 of them but only one
// of the three projections to {d, e}.
ExampleOutcome prod_size(const Budget&) {
  const Signature sig = Signature::boolean({"a", "b", "c", "d", "e"});
  ModelSet sigma = models(parse_formula("d & e"), sig);
  sigma |= models(parse_formula("!a & !b & !c & !d"), sig);
  const ModelSet a = models(parse_formula("d & e"), sig);
  const CoordSet right{"d", "e"};
  const ModelSet sr = restrict_to(sigma, right), ar = restrict_to(a, right);

  Report d;
  d["Sigma"] = models_json(sigma);
  d["A"] = models_json(a);
  d["fraction"] = fraction(a.size(), sigma.size());
  d["projected_to"] = names_json(right);
  d["projected_fraction"] = fraction(ar.size(), sr.size());
  return finish(std::move(d), a.size() == 8 && sigma.size() == 10 && ar.size() == 1 && sr.size() == 3);
}

// Circumscription over p, q, r is the Hamming composition of the
// one-coordinate circumscriptions along every split.
ExampleOutcome circumscription_hamming(const Budget& budget) {
  const Signature sig = Signature::boolean({"p", "q", "r"});
  const auto circ = PreferenceStructure::circumscription(sig);
  bool ok = is_smooth(circ, budget).smooth;
  Report splits = Report::array();
  for (std::uint64_t m = 1; m + 1 < (std::uint64_t{1} << sig.arity()); ++m) {
    CoordSet left;
    for (std::size_t i = 0; i < sig.arity(); ++i) {
      if ((m >> i) & 1u) left.insert(sig.coord(i).name);
    }
    const CoordSplit split = CoordSplit::from_left(sig, left);
    const auto lc = PreferenceStructure::circumscription(sig.project(split.left));
    const auto rc = PreferenceStructure::circumscription(sig.project(split.right));
    const FactorRelations f = factor_relations(circ, split);
    const bool hamming = is_hamming_relation(circ, lc, rc, split).holds;
    const bool factors = f.uniform() && f.left == lc && f.right == rc;
    const bool composed = compose_hamming({lc, rc}, sig) == circ;
    ok = ok && hamming && factors && composed;
    splits.push_back({{"split", split_json(split)}, {"hamming", hamming}, {"factors", factors}, {"composed", composed}});
  }
  Report d;
  d["pairs"] = circ.pair_count();
  d["splits"] = std::move(splits);
  return finish(std::move(d), ok);
}

// α(p,q,r) → β(p,s) is valid in Gödel-4; the semantic interpolant over {p}
// is not definable from →, ∧, ∨, ¬ but is once J is added.
ExampleOutcome goedel4(const Budget&) {
  const Algebra& g = Algebra::goedel4();
  const Formula alpha = parse_formula("(p -> (((q -> r) -> q) -> q)) -> p");
  const Formula beta = parse_formula("((s -> p) -> s) -> s");
  const Signature sig = Signature::uniform({"p", "q", "r", "s"}, 4);

  bool valid = true;
  const Formula imp = Formula::implication(alpha, beta);
  for (std::uint64_t i = 0; i < sig.cardinality(); ++i) {
    valid = valid && evaluate(imp, sig, sig.decode(i), g) == g.designated();
  }
  const ModelSet ma = models(alpha, sig, g), mb = models(beta, sig, g);
  const ModelSet inter = semantic_interpolant(ma, mb);
  const ModelSet over_p = restrict_to(inter, {"p"});

  ConnectiveSet without_j = g.connectives();
  without_j.erase(Connective::kJ);
  const bool plain = is_definable(over_p, g, without_j);
  const bool with_j = is_definable(over_p, g, g.connectives());

  Report d;
  d["alpha -> beta valid"] = valid;
  d["interpolant_relevant"] = names_json(relevant(inter));
  d["interpolant_over_p"] = models_json(over_p);
  d["definable_without_J"] = plain;
  d["definable_with_J"] = with_j;
  return finish(std::move(d), valid && ma.is_subset_of(inter) && inter.is_subset_of(mb) &&
                                  relevant(inter).size() <= 1 && !plain && with_j);
}

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"chain-4.1", chain},
      {"component-inverse-4.4", component_inverse},
      {"prod-size-4.2", prod_size},
      {"circumscription-hamming-4.3", circumscription_hamming},
      {"goedel4-3.1", goedel4},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, _] : registry()) out.push_back(n);
    return out;
  }();
  return names;
}

std::optional<ExampleOutcome> run_example(std::string_view name, const Budget& budget) {
  if (name == "gödel4-3.1") name = "goedel4-3.1";
  for (const auto& [n, run] : registry()) {
    if (n != name) continue;
    ExampleOutcome out = run(budget);
    Report r = make_report("", out.reproduced ? "reproduced" : "not-reproduced");
    r["example"] = n;
    for (const auto& [k, v] : out.report.items()) r[k] = v;
    out.report = std::move(r);
    return out;
  }
  return std::nullopt;
}

}  // namespace interlab::cli
