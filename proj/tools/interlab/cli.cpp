#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "interlab/json_io.hpp"
#include "interlab/monotone_interp.hpp"
#include "interlab/nonmono_interp.hpp"
#include "interlab/preferential.hpp"
#include "interlab/prop_logic.hpp"
#include "interlab/revision.hpp"
#include "named_examples.hpp"
#include "problem.hpp"
#include "report.hpp"

namespace interlab::cli {

namespace {

struct Context {
  std::ostream& out;
  Format format = Format::kText;
  Budget budget;

  int emit(const Report& r, int code) const {
    out << emit_report(r, format);
    return code;
  }
};

std::uint64_t parse_count(std::string_view text, const char* what) {
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || end != text.data() + text.size() || v == 0) {
    throw InvalidArgument(std::string(what) + ": expected a positive integer, got '" + std::string(text) + "'");
  }
  return v;
}

// INTERLAB_BUDGET is "max_instances" or "max_instances,samples".
void apply_budget_env(Budget& b) {
  const char* env = std::getenv("INTERLAB_BUDGET");
  if (!env || !*env) return;
  const std::string_view text(env);
  const auto comma = text.find(',');
  b.max_instances = parse_count(text.substr(0, comma), "INTERLAB_BUDGET");
  if (comma != std::string_view::npos) b.samples = parse_count(text.substr(comma + 1), "INTERLAB_BUDGET");
}

std::vector<std::string> split_list(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(sep, start), text.size());
    std::string item(text.substr(start, end - start));
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    out.push_back(std::move(item));
    start = end + 1;
  }
  return out;
}

CoordSet name_set(std::string_view text) {
  CoordSet out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  for (auto& n : split_list(text, ',')) {
    if (n.empty()) throw InvalidArgument("empty coordinate name in '" + std::string(text) + "'");
    out.insert(std::move(n));
  }
  return out;
}

// "p,q/r,s", or just "p,q" with the rest of the signature on the right.
CoordSplit parse_split(std::string_view text, const Signature& sig) {
  const auto parts = split_list(text, '/');
  if (parts.size() > 2) throw InvalidArgument("split takes the form 'left/right': " + std::string(text));
  const CoordSet left = name_set(parts[0]);
  for (const auto& n : left) {
    if (!sig.contains(n)) throw InvalidArgument("unknown coordinate '" + n + "' in split");
  }
  CoordSplit split = CoordSplit::from_left(sig, left);
  if (parts.size() == 2 && name_set(parts[1]) != split.right) {
    throw InvalidArgument("split '" + std::string(text) + "' does not partition the coordinates");
  }
  return split;
}

Partition parse_blocks(std::string_view text, const Signature& sig) {
  Partition p;
  for (const auto& block : split_list(text, '/')) p.blocks.push_back(name_set(block));
  p.validate(sig);
  return p;
}

Signature boolean_over(const std::vector<Formula>& fs, const CoordSet& extra) {
  CoordSet names = extra;
  for (const auto& f : fs) names.merge(f.atoms());
  return Signature::boolean(std::vector<std::string>(names.begin(), names.end()));
}

CoordSet shared_atoms(const Formula& a, const Formula& b) {
  CoordSet out;
  const CoordSet bb = b.atoms();
  for (const auto& n : a.atoms()) {
    if (bb.contains(n)) out.insert(n);
  }
  return out;
}

// A formula given inline, or "@path" for a file with one formula per line
// (the lines are conjoined).
Formula formula_arg(const std::string& text) {
  if (text.empty() || text[0] != '@') return parse_formula(text);
  std::ifstream in(text.substr(1));
  if (!in) throw InvalidArgument("cannot open " + text.substr(1));
  std::vector<Formula> lines;
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(parse_formula(line));
  }
  if (lines.empty()) throw InvalidArgument(text.substr(1) + " contains no formula");
  return Formula::conjunction(lines);
}

// A JSON file when the path exists, otherwise a builtin name.
PreferenceStructure load_relation(const std::string& spec, const Signature& sig) {
  if (std::filesystem::is_regular_file(spec)) return relation_from_json(read_json_file(spec), sig);
  return PreferenceStructure::builtin(spec, sig);
}

Report pair_json(const std::pair<Tuple, Tuple>& p) { return Report::array({p.first, p.second}); }

Report signature_names(const Signature& sig) { return Report(sig.ordered_names()); }

// ---------------------------------------------------------------------------

struct MonoOptions {
  std::string phi, psi, algebra = "boolean", parallel, blocks;
};

int interp_mono(const MonoOptions& o, const Context& ctx) {
  const Formula phi = formula_arg(o.phi), psi = formula_arg(o.psi);
  const bool goedel = o.algebra == "goedel4";
  const Algebra& alg = goedel ? Algebra::goedel4() : Algebra::boolean();
  const Signature bsig = boolean_over({phi, psi}, {});
  const Signature sig = goedel ? Signature::uniform(bsig.ordered_names(), 4) : bsig;
  const ModelSet inner = models(phi, sig, alg), outer = models(psi, sig, alg);

  if (auto w = inner.first_outside(outer)) {
    Report r = make_report("interp mono", "not-a-consequence");
    r["signature"] = signature_names(sig);
    r["witness"] = *w;
    return ctx.emit(r, 1);
  }

  ModelSet inter(sig);
  if (o.parallel.empty()) {
    inter = semantic_interpolant(inner, outer);
  } else {
    if (o.blocks.empty()) throw InvalidArgument("--parallel needs --blocks");
    const Partition p = parse_blocks(o.blocks, sig);
    const bool left = o.parallel == "left";
    const auto factors = factorize(left ? inner : outer, p);
    if (!factors) {
      Report r = make_report("interp mono", "precondition-fails");
      r["detail"] = std::string(left ? "M(phi)" : "M(psi)") + " is not a product over the blocks";
      return ctx.emit(r, 1);
    }
    inter = left ? parallel_interpolant_left(*factors, outer) : parallel_interpolant_right(inner, *factors);
  }

  Report r = make_report("interp mono", "found");
  const CoordSet rel = relevant(inter);
  if (goedel) {
    const ModelSet core = restrict_to(inter, rel);
    ConnectiveSet plain = alg.connectives();
    plain.erase(Connective::kJ);
    r["interpolant_models"] = models_json(core);
    r["relevant"] = names_json(rel);
    r["definable_without_J"] = is_definable(core, alg, plain);
    r["definable_with_J"] = is_definable(core, alg, alg.connectives());
  } else {
    r["interpolant"] = defining_formula(inter).to_string();
    r["relevant"] = names_json(rel);
    r["signature"] = signature_names(sig);
    r["models"] = models_json(inter);
  }
  return ctx.emit(r, 0);
}

// ---------------------------------------------------------------------------

struct NmOptions {
  int form = 1;
  std::string relation, phi, psi, atoms;
  bool verify_rules = false;
};

Report rule_json(const RuleVerdict& v) {
  Report r;
  r["rule"] = to_string(v.rule);
  r["verdict"] = v.holds ? "holds" : "fails";
  r["instances"] = v.instances;
  r["sampled"] = v.sampled;
  r["factors_uniform"] = v.factors_uniform;
  if (!v.witness.empty()) r["witness"] = witness_json(v.witness);
  if (!v.detail.empty()) r["detail"] = v.detail;
  return r;
}

int interp_nm(const NmOptions& o, const Context& ctx) {
  const Formula phi = formula_arg(o.phi), psi = formula_arg(o.psi);
  const PreferenceStructure r = load_relation(o.relation, boolean_over({phi, psi}, name_set(o.atoms)));
  const Signature& sig = r.signature();
  for (const auto& a : boolean_over({phi, psi}, {}).names()) {
    if (!sig.contains(a)) throw InvalidArgument("atom '" + a + "' is not a coordinate of the relation");
  }

  Report rep = make_report("interp nm", "none");
  rep["form"] = o.form;
  rep["signature"] = signature_names(sig);
  if (!nm_consequence(phi, psi, r)) {
    rep["verdict"] = "not-a-consequence";
    rep["witness"] = *mu(r, models(phi, sig)).first_outside(models(psi, sig));
    return ctx.emit(rep, 1);
  }

  std::optional<InterpolationResult> built;
  if (o.form == 1) {
    const Form1Verdict f1 = form1_condition(r, ctx.budget);
    Report c{{"holds", f1.holds}, {"sampled", f1.sampled}};
    if (f1.witness) {
      c["witness"] = models_json(*f1.witness);
      c["irrelevant"] = names_json(f1.irrelevant);
      c["mu_irrelevant"] = names_json(f1.mu_irrelevant);
    }
    rep["form1_condition"] = c;
    built = interpolant_form1(phi, psi, r);
  } else if (o.form == 2) {
    built = interpolant_form2(phi, psi, r);
    if (o.verify_rules) {
      const Form2Hypotheses h = form2_hypotheses(phi, psi, r, ctx.budget);
      Report hj{{"split", split_json(form2_split(phi, psi, sig))}, {"available", h.available}};
      if (!h.available) hj["reason"] = h.reason;
      if (h.s1) hj["S1"] = rule_json(*h.s1);
      if (h.s2) hj["S2"] = rule_json(*h.s2);
      if (h.s3) hj["S3"] = rule_json(*h.s3);
      rep["hypotheses"] = hj;
    }
  }
  if (built) {
    Report c{{"found", built->found}};
    if (!built->found) {
      c["failed_inclusion"] = built->failed_inclusion;
      if (built->witness) c["witness"] = *built->witness;
    }
    rep["construction"] = c;
    if (built->found) {
      rep["verdict"] = "found";
      rep["method"] = "construction";
      rep["interpolant"] = built->interpolant->to_string();
      rep["models"] = models_json(*built->models);
      return ctx.emit(rep, 0);
    }
  }
  if (auto hit = search_interpolant(phi, psi, r, o.form, ctx.budget)) {
    rep["verdict"] = "found";
    rep["method"] = "search";
    rep["interpolant"] = hit->interpolant.to_string();
    rep["models"] = models_json(hit->models);
    return ctx.emit(rep, 0);
  }
  rep["searched_over"] = names_json(shared_atoms(phi, psi));
  return ctx.emit(rep, 1);
}

// ---------------------------------------------------------------------------

struct RelationOptions {
  std::string relation, split, atoms, rule, problem;
};

std::vector<CoordSplit> default_splits(const Signature& sig) {
  if (sig.arity() < 2) throw InvalidArgument("splitting needs at least two coordinates");
  const CoordSplit s = CoordSplit::from_left(sig, {sig.coord(0).name});
  return {s, s.swapped()};
}

int check_rule_cmd(const RelationOptions& o, const Context& ctx) {
  const auto rule = parse_rule(o.rule);
  if (!rule) throw InvalidArgument("unknown rule '" + o.rule + "'");
  const PreferenceStructure r = load_relation(o.relation, boolean_over({}, name_set(o.atoms)));
  const auto splits = o.split.empty() ? default_splits(r.signature()) : std::vector{parse_split(o.split, r.signature())};

  Report rep = make_report("check rule", "holds");
  rep["rule"] = to_string(*rule);
  Report checks = Report::array();
  bool holds = true;
  for (const auto& split : splits) {
    const RuleVerdict v = check_rule(*rule, r, split, ctx.budget);
    Report c = rule_json(v);
    c.erase("rule");
    Report entry{{"split", split_json(split)}};
    entry.update(c);
    if (!v.holds && holds) {
      rep["verdict"] = "fails";
      rep["split"] = split_json(split);
      rep["witness"] = witness_json(v.witness);
      holds = false;
    }
    checks.push_back(std::move(entry));
  }
  rep["checks"] = std::move(checks);
  return ctx.emit(rep, holds ? 0 : 1);
}

int check_hamming_cmd(const RelationOptions& o, const Context& ctx) {
  const PreferenceStructure r = load_relation(o.relation, boolean_over({}, name_set(o.atoms)));
  const CoordSplit split = o.split.empty() ? default_splits(r.signature())[0] : parse_split(o.split, r.signature());
  const FactorRelations f = factor_relations(r, split);
  const HammingVerdict v = is_hamming_relation(r, f.left, f.right, split);

  Report rep = make_report("check hamming", v.holds ? "holds" : "fails");
  rep["split"] = split_json(split);
  rep["factors_uniform"] = f.uniform();
  if (f.conflict) rep["factor_conflict"] = Report::array({pair_json(f.conflict->first), pair_json(f.conflict->second)});
  if (v.witness) rep["witness"] = pair_json(*v.witness);
  if (!v.detail.empty()) rep["detail"] = v.detail;
  return ctx.emit(rep, v.holds ? 0 : 1);
}

int check_smooth_cmd(const RelationOptions& o, const Context& ctx) {
  const PreferenceStructure r = load_relation(o.relation, boolean_over({}, name_set(o.atoms)));
  const SmoothnessVerdict v = is_smooth(r, ctx.budget);
  Report rep = make_report("check smooth", v.smooth ? "holds" : "fails");
  rep["checked"] = v.checked;
  rep["sampled"] = v.sampled;
  if (v.set) rep["witness"] = {{"set", models_json(*v.set)}, {"element", *v.element}};
  return ctx.emit(rep, v.smooth ? 0 : 1);
}

std::string fraction(std::size_t num, std::size_t den) { return std::to_string(num) + "/" + std::to_string(den); }

int check_size_cmd(const RelationOptions& o, const Context& ctx) {
  const Problem p = load_problem(o.problem);
  Report rep = make_report("check size", "holds");
  Report checks = Report::array();
  bool ok = true;
  for (const auto& c : p.checks) {
    const ModelSet& s = p.sets.at(c.set);
    const ModelSet& a = p.sets.at(c.subset);
    const CoordSplit& split = p.splits.at(c.split);
    const std::string frac = fraction(a.size(), s.size());
    const std::string proj = fraction(restrict_to(a, split.right).size(), restrict_to(s, split.right).size());
    Report entry{{"set", c.set}, {"subset", c.subset}, {"fraction", frac}, {"projected_to", names_json(split.right)},
                 {"projected_fraction", proj}};
    if (c.relation) entry["class"] = to_string(classify_subset(a, s, p.relations.at(*c.relation)));
    const bool match = (!c.expect_fraction || *c.expect_fraction == frac) && (!c.expect_projected || *c.expect_projected == proj);
    entry["verdict"] = match ? "holds" : "fails";
    ok = ok && match;
    checks.push_back(std::move(entry));
  }
  if (!ok) rep["verdict"] = "fails";
  rep["checks"] = std::move(checks);
  return ctx.emit(rep, ok ? 0 : 1);
}

// ---------------------------------------------------------------------------

struct ReviseOptions {
  std::string k, phi, distance = "count", weights, split, atoms;
};

int revise_cmd(const ReviseOptions& o, const Context& ctx) {
  const Formula k = formula_arg(o.k), phi = formula_arg(o.phi);
  const Signature sig = boolean_over({k, phi}, name_set(o.atoms));
  DistanceModel d = o.distance == "set" ? DistanceModel::set_variant() : DistanceModel::counting();
  if (!o.weights.empty()) {
    if (o.distance == "set") throw InvalidArgument("--weights applies to the counting distance only");
    d = distance_from_json(read_json_file(o.weights));
    if (d.variant() != DistanceVariant::kCounting) throw InvalidArgument("--weights file must describe a counting distance");
    for (const auto& [name, _] : d.weights()) {
      if (!sig.contains(name)) throw InvalidArgument("weight for unknown coordinate '" + name + "'");
    }
  }
  std::optional<CoordSplit> split;
  if (!o.split.empty()) split = parse_split(o.split, sig);

  const RevisionResult res = parikh_revise(k, phi, sig, d, split);
  Report rep = make_report("revise", "revised");
  rep["signature"] = signature_names(sig);
  rep["result"] = models_json(res.result);
  rep["formula"] = defining_formula(res.result).to_string();
  if (res.min_distances.size() == 1) {
    rep["min_distance"] = Report(to_json(res.min_distances[0]));
  } else {
    Report all = Report::array();
    for (const auto& v : res.min_distances) all.push_back(Report(to_json(v)));
    rep["min_distance"] = std::move(all);
  }
  rep["decomposed"] = res.decomposed;
  return ctx.emit(rep, 0);
}

// ---------------------------------------------------------------------------

int examples_run(const std::string& name, const Context& ctx) {
  if (name == "all") {
    Report rep = make_report("examples run", "reproduced");
    Report all = Report::array();
    bool ok = true;
    for (const auto& n : example_names()) {
      auto o = run_example(n, ctx.budget);
      ok = ok && o->reproduced;
      o->report.erase("report_version");
      all.push_back(std::move(o->report));
    }
    if (!ok) rep["verdict"] = "not-reproduced";
    rep["examples"] = std::move(all);
    return ctx.emit(rep, ok ? 0 : 1);
  }
  auto o = run_example(name, ctx.budget);
  if (!o) throw InvalidArgument("unknown example '" + name + "' (try 'examples list')");
  Report rep = make_report("examples run", o->report["verdict"].get<std::string>());
  for (const auto& [key, v] : o->report.items()) {
    if (key != "report_version" && key != "verdict") rep[key] = v;
  }
  return ctx.emit(rep, o->reproduced ? 0 : 1);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semantic interpolation, preferential structures and distance-based revision", "interlab"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "Seed for all sampling");
  app.add_option("--jobs", jobs, "Worker threads for exhaustive scans")->check(CLI::Range(1u, 1024u));

  auto* interp = app.add_subcommand("interp", "Compute interpolants")->require_subcommand(1);
  MonoOptions mono;
  auto* mono_cmd = interp->add_subcommand("mono", "Semantic interpolant of phi |= psi");
  mono_cmd->add_option("--phi", mono.phi, "Antecedent")->required();
  mono_cmd->add_option("--psi", mono.psi, "Consequent")->required();
  mono_cmd->add_option("--algebra", mono.algebra, "Truth-value algebra")->check(CLI::IsMember({"boolean", "goedel4"}));
  mono_cmd->add_option("--parallel", mono.parallel, "Which side is a product")->check(CLI::IsMember({"left", "right"}));
  mono_cmd->add_option("--blocks", mono.blocks, "Coordinate blocks, e.g. 'p,q/r'");

  NmOptions nm;
  auto* nm_cmd = interp->add_subcommand("nm", "Interpolant of phi |~ psi under a preference relation");
  nm_cmd->add_option("--form", nm.form, "1: phi |~ a |- psi, 2: phi |- a |~ psi, 3: phi |~ a |~ psi")
      ->required()
      ->check(CLI::Range(1, 3));
  nm_cmd->add_option("--relation", nm.relation, "Relation JSON file or builtin name")->required();
  nm_cmd->add_option("--phi", nm.phi)->required();
  nm_cmd->add_option("--psi", nm.psi)->required();
  nm_cmd->add_option("--atoms", nm.atoms, "Extra coordinates for builtin relations, e.g. 'p,q,r'");
  nm_cmd->add_flag("--verify-rules", nm.verify_rules, "Also check the product size rules behind form 2");

  auto* check = app.add_subcommand("check", "Check structural properties")->require_subcommand(1);
  RelationOptions rel;
  auto* rule_cmd = check->add_subcommand("rule", "Check a product size rule");
  rule_cmd->add_option("--rule", rel.rule, "S1, S2, S3, S1', mu1, mu2 or mu3")->required();
  auto* hamming_cmd = check->add_subcommand("hamming", "Check that a relation is Hamming along a split");
  auto* smooth_cmd = check->add_subcommand("smooth", "Check smoothness");
  for (auto* c : {rule_cmd, hamming_cmd, smooth_cmd}) {
    c->add_option("--relation", rel.relation, "Relation JSON file or builtin name")->required();
    c->add_option("--atoms", rel.atoms, "Coordinates for builtin relations, e.g. 'p,q'");
  }
  rule_cmd->add_option("--split", rel.split, "X'/X'', e.g. 'p/q' (default: both orientations of the first coordinate)");
  hamming_cmd->add_option("--split", rel.split, "X'/X'' (default: first coordinate / rest)");
  auto* size_cmd = check->add_subcommand("size", "Size fractions before and after projection");
  size_cmd->add_option("--problem", rel.problem, "Problem bundle")->required()->check(CLI::ExistingFile);

  ReviseOptions rv;
  auto* revise = app.add_subcommand("revise", "Distance-based revision K * phi");
  revise->add_option("--k", rv.k, "Belief base")->required();
  revise->add_option("--phi", rv.phi, "New information")->required();
  revise->add_option("--distance", rv.distance, "Hamming distance variant")->check(CLI::IsMember({"set", "count"}));
  revise->add_option("--weights", rv.weights, "Counting-distance weights (JSON)")->check(CLI::ExistingFile);
  revise->add_option("--split", rv.split, "Revise componentwise along 'p,q/r,s'");
  revise->add_option("--atoms", rv.atoms, "Extra coordinates");

  auto* examples = app.add_subcommand("examples", "Reproduce the built-in worked examples")->require_subcommand(1);
  std::string example;
  auto* ex_run = examples->add_subcommand("run", "Run one example or all");
  ex_run->add_option("name", example, "Example name or 'all'")->required();
  auto* ex_list = examples->add_subcommand("list", "List example names");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    Context ctx{out, Format::kText, {}};
    ctx.format = *parse_format(format);
    ctx.budget.seed = seed;
    ctx.budget.jobs = jobs;
    apply_budget_env(ctx.budget);

    if (mono_cmd->parsed()) return interp_mono(mono, ctx);
    if (nm_cmd->parsed()) return interp_nm(nm, ctx);
    if (rule_cmd->parsed()) return check_rule_cmd(rel, ctx);
    if (hamming_cmd->parsed()) return check_hamming_cmd(rel, ctx);
    if (smooth_cmd->parsed()) return check_smooth_cmd(rel, ctx);
    if (size_cmd->parsed()) return check_size_cmd(rel, ctx);
    if (revise->parsed()) return revise_cmd(rv, ctx);
    if (ex_run->parsed()) return examples_run(example, ctx);
    if (ex_list->parsed()) {
      for (const auto& n : example_names()) out << n << '\n';
      return 0;
    }
  } catch (const PreconditionViolation& e) {
    err << "interlab: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "interlab: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace interlab::cli
