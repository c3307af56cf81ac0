#include "interlab/nonmono_interp.hpp"

#include <algorithm>
#include <bit>
#include <iterator>

#include "interlab/prop_logic.hpp"

namespace interlab {

namespace {

CoordSet intersection(const CoordSet& a, const CoordSet& b) {
  CoordSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

CoordSet difference(const CoordSet& a, const CoordSet& b) {
  CoordSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

void require_consequence(const ModelSet& mu_phi, const ModelSet& psi) {
  if (auto w = mu_phi.first_outside(psi)) {
    throw InvalidArgument("not a preferential consequence: minimal model " + to_string(*w) + " violates psi");
  }
}

// Records the first inclusion of `checks` that fails.
bool verify(InterpolationResult& out, std::initializer_list<std::pair<const char*, std::pair<const ModelSet*, const ModelSet*>>> checks) {
  for (const auto& [name, sets] : checks) {
    if (auto w = sets.first->first_outside(*sets.second)) {
      out.failed_inclusion = name;
      out.witness = w;
      return false;
    }
  }
  return true;
}

}  // namespace

bool nm_consequence(const Formula& phi, const Formula& psi, const PreferenceStructure& r) {
  const Signature& sig = r.signature();
  return mu(r, models(phi, sig)).is_subset_of(models(psi, sig));
}

Form1Verdict form1_condition(const PreferenceStructure& r, const Budget& budget) {
  Form1Verdict v;
  const std::uint64_t n = r.size();
  const bool exhaustive = n <= 62 && (std::uint64_t{1} << n) <= budget.max_instances;
  v.sampled = !exhaustive;
  v.checked = exhaustive ? std::uint64_t{1} << n : budget.samples;

  auto probe = [&](std::uint64_t i) -> std::optional<ModelSet> {
    ModelSet s(r.signature_ptr());
    if (exhaustive) {
      s = ModelSet::from_mask(r.signature_ptr(), i);
    } else {
      std::mt19937_64 rng(sample_seed(budget.seed, i));
      s = random_subset(r.signature_ptr(), rng);
    }
    const CoordSet is = irrelevant(s), im = irrelevant(mu(r, s));
    if (std::includes(im.begin(), im.end(), is.begin(), is.end())) return std::nullopt;
    return s;
  };
  // Larger sets first, so a failing Π is reported as Π.
  auto less = [](const ModelSet& a, const ModelSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return size_lex_less(a, b);
  };
  if (auto w = detail::scan_min<ModelSet>(v.checked, budget.jobs, probe, less)) {
    v.holds = false;
    v.irrelevant = irrelevant(*w);
    v.mu_irrelevant = irrelevant(mu(r, *w));
    v.witness = std::move(w);
  }
  return v;
}

InterpolationResult interpolant_form1(const Formula& phi, const Formula& psi, const PreferenceStructure& r) {
  const Signature& sig = r.signature();
  const ModelSet sigma = models(phi, sig), gamma = models(psi, sig);
  const ModelSet m = mu(r, sigma);
  require_consequence(m, gamma);

  const CoordSet keep = intersection(intersection(relevant(m), relevant(gamma)), relevant(sigma));
  const ModelSet inter = cylindrify(restrict_to(m, keep), sig);

  InterpolationResult out;
  out.models = inter;
  if (!verify(out, {{"mu(M(phi)) <= Sigma''", {&m, &inter}}, {"Sigma'' <= M(psi)", {&inter, &gamma}}})) return out;
  out.found = true;
  out.interpolant = defining_formula(inter);
  return out;
}

CoordSplit form2_split(const Formula& phi, const Formula& psi, const Signature& sig) {
  const CoordSet only_phi = intersection(difference(phi.atoms(), psi.atoms()), sig.names());
  return CoordSplit::from_left(sig, only_phi);
}

InterpolationResult interpolant_form2(const Formula& phi, const Formula& psi, const PreferenceStructure& r) {
  const Signature& sig = r.signature();
  const ModelSet sigma = models(phi, sig), gamma = models(psi, sig);
  require_consequence(mu(r, sigma), gamma);

  const CoordSplit split = form2_split(phi, psi, sig);
  const ModelSet alpha = cylindrify(restrict_to(sigma, split.right), sig);
  const ModelSet m = mu(r, alpha);

  InterpolationResult out;
  out.models = alpha;
  if (!verify(out, {{"M(phi) <= M(alpha)", {&sigma, &alpha}}, {"mu(M(alpha)) <= M(psi)", {&m, &gamma}}})) return out;
  out.found = true;
  out.interpolant = defining_formula(alpha);
  return out;
}

Form2Hypotheses form2_hypotheses(const Formula& phi, const Formula& psi, const PreferenceStructure& r,
                                 const Budget& budget) {
  Form2Hypotheses h;
  const CoordSplit split = form2_split(phi, psi, r.signature());
  const FactorRelations f = factor_relations(r, split);
  if (!f.uniform()) {
    h.reason = "factor relations depend on the other component";
    return h;
  }
  h.available = true;
  h.s1 = check_rule(Rule::kS1, r, f.left, f.right, split, budget);
  h.s2 = check_rule(Rule::kS2, r, f.right, f.left, split.swapped(), budget);
  h.s3 = check_rule(Rule::kS3, r, f.left, f.right, split, budget);
  return h;
}

std::optional<SearchHit> search_interpolant(const Formula& phi, const Formula& psi, const PreferenceStructure& r,
                                            int form, const Budget& budget) {
  if (form < 1 || form > 3) throw InvalidArgument("interpolation form must be 1, 2 or 3");
  const Signature& sig = r.signature();
  const ModelSet sigma = models(phi, sig), gamma = models(psi, sig);
  const ModelSet mu_sigma = mu(r, sigma);

  const CoordSet shared = intersection(intersection(phi.atoms(), psi.atoms()), sig.names());
  const auto shared_sig = std::make_shared<const Signature>(sig.project(shared));
  const std::uint64_t points = shared_sig->cardinality();
  if (points >= 63 || (std::uint64_t{1} << points) > budget.max_instances) {
    throw ResourceLimit("interpolant search over " + std::to_string(points) + " shared valuations exceeds the budget");
  }

  auto passes = [&](const ModelSet& a) {
    switch (form) {
      case 1:
        return mu_sigma.is_subset_of(a) && a.is_subset_of(gamma);
      case 2:
        return sigma.is_subset_of(a) && mu(r, a).is_subset_of(gamma);
      default:
        return mu_sigma.is_subset_of(a) && mu(r, a).is_subset_of(gamma);
    }
  };
  auto probe = [&](std::uint64_t mask) -> std::optional<std::uint64_t> {
    const ModelSet a = cylindrify(ModelSet::from_mask(shared_sig, mask), sig);
    return passes(a) ? std::optional(mask) : std::nullopt;
  };
  auto less = [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    const std::uint64_t d = a ^ b;
    return (a & d & (~d + 1)) != 0;
  };
  const auto best = detail::scan_min<std::uint64_t>(std::uint64_t{1} << points, budget.jobs, probe, less);
  if (!best) return std::nullopt;
  ModelSet a = cylindrify(ModelSet::from_mask(shared_sig, *best), sig);
  Formula f = defining_formula(a);
  return SearchHit{std::move(f), std::move(a)};
}

}  // namespace interlab
