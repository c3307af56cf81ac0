#include "interlab/prop_logic.hpp"

#include <algorithm>
#include <unordered_set>

namespace interlab {

std::string to_string(Connective c) {
  switch (c) {
    case Connective::kNot: return "not";
    case Connective::kJ: return "J";
    case Connective::kAnd: return "and";
    case Connective::kOr: return "or";
    case Connective::kImplies: return "implies";
    case Connective::kIff: return "iff";
  }
  return "?";
}

namespace {

bool is_unary(Connective c) { return c == Connective::kNot || c == Connective::kJ; }

Connective connective_of(Op op) {
  switch (op) {
    case Op::kNot: return Connective::kNot;
    case Op::kJ: return Connective::kJ;
    case Op::kAnd: return Connective::kAnd;
    case Op::kOr: return Connective::kOr;
    case Op::kImplies: return Connective::kImplies;
    case Op::kIff: return Connective::kIff;
    default: throw InvalidArgument("not a connective");
  }
}

}  // namespace

Algebra::Algebra(std::string name, int value_count, Value designated, Value top, Value bottom)
    : name_(std::move(name)), value_count_(value_count), designated_(designated), top_(top), bottom_(bottom) {
  if (value_count_ < 1) throw InvalidArgument("algebra needs at least one value");
  check_value(designated_);
  check_value(top_);
  check_value(bottom_);
}

void Algebra::check_value(Value v) const {
  if (v < 0 || v >= value_count_) throw InvalidArgument("value " + std::to_string(v) + " outside algebra " + name_);
}

Algebra& Algebra::set_unary(Connective c, std::vector<Value> table) {
  if (!is_unary(c)) throw InvalidArgument(to_string(c) + " is binary");
  if (table.size() != static_cast<std::size_t>(value_count_)) throw InvalidArgument("unary table size");
  for (Value v : table) check_value(v);
  tables_[c] = std::move(table);
  return *this;
}

Algebra& Algebra::set_binary(Connective c, std::vector<Value> table) {
  if (is_unary(c)) throw InvalidArgument(to_string(c) + " is unary");
  if (table.size() != static_cast<std::size_t>(value_count_ * value_count_)) {
    throw InvalidArgument("binary table size");
  }
  for (Value v : table) check_value(v);
  tables_[c] = std::move(table);
  return *this;
}

const Algebra& Algebra::boolean() {
  static const Algebra alg = [] {
    Algebra a("boolean", 2, 1, 1, 0);
    a.set_unary(Connective::kNot, {1, 0});
    a.set_binary(Connective::kAnd, {0, 0, 0, 1});
    a.set_binary(Connective::kOr, {0, 1, 1, 1});
    a.set_binary(Connective::kImplies, {1, 1, 0, 1});
    a.set_binary(Connective::kIff, {1, 0, 0, 1});
    return a;
  }();
  return alg;
}

const Algebra& Algebra::goedel4() {
  static const Algebra alg = [] {
    constexpr int n = 4;
    constexpr Value never = 3;
    auto imp = [](Value a, Value b) { return b <= a ? 0 : b; };
    Algebra a("goedel4", n, 0, 0, never);
    std::vector<Value> conj(n * n), disj(n * n), impl(n * n), iff(n * n), neg(n);
    for (Value x = 0; x < n; ++x) {
      neg[x] = imp(x, never);
      for (Value y = 0; y < n; ++y) {
        conj[x * n + y] = std::max(x, y);
        disj[x * n + y] = std::min(x, y);
        impl[x * n + y] = imp(x, y);
        iff[x * n + y] = std::max(imp(x, y), imp(y, x));
      }
    }
    a.set_unary(Connective::kNot, neg);
    // J: true at world k iff true at k+1, or at k itself when k is the last world.
    a.set_unary(Connective::kJ, {0, 0, 1, never});
    a.set_binary(Connective::kAnd, conj);
    a.set_binary(Connective::kOr, disj);
    a.set_binary(Connective::kImplies, impl);
    a.set_binary(Connective::kIff, iff);
    return a;
  }();
  return alg;
}

bool Algebra::supports(Connective c) const { return tables_.count(c) > 0; }

ConnectiveSet Algebra::connectives() const {
  ConnectiveSet out;
  for (const auto& [c, _] : tables_) out.insert(c);
  return out;
}

const std::vector<Value>& Algebra::table(Connective c) const {
  auto it = tables_.find(c);
  if (it == tables_.end()) throw Unsupported("algebra " + name_ + " has no connective " + to_string(c));
  return it->second;
}

Value Algebra::apply(Connective c, Value a) const {
  check_value(a);
  return table(c)[static_cast<std::size_t>(a)];
}

Value Algebra::apply(Connective c, Value a, Value b) const {
  check_value(a);
  check_value(b);
  return table(c)[static_cast<std::size_t>(a * value_count_ + b)];
}

// ---------------------------------------------------------------------------

Value eval_many_valued(const Formula& f, const Valuation& v, const Algebra& alg) {
  switch (f.op()) {
    case Op::kAtom: {
      auto it = v.find(f.name());
      if (it == v.end()) throw InvalidArgument("no value for atom '" + f.name() + "'");
      if (it->second < 0 || it->second >= alg.value_count()) {
        throw InvalidArgument("value of atom '" + f.name() + "' outside algebra " + alg.name());
      }
      return it->second;
    }
    case Op::kTop: return alg.top();
    case Op::kBottom: return alg.bottom();
    case Op::kNot:
    case Op::kJ: return alg.apply(connective_of(f.op()), eval_many_valued(f.child(0), v, alg));
    default:
      return alg.apply(connective_of(f.op()), eval_many_valued(f.child(0), v, alg),
                       eval_many_valued(f.child(1), v, alg));
  }
}

namespace {

// Postfix program over coordinate positions of a fixed signature.
struct Program {
  struct Instr {
    Op op;
    std::size_t coord;
  };
  std::vector<Instr> code;
  std::size_t max_stack = 0;

  static Program compile(const Formula& f, const Signature& sig, const Algebra& alg) {
    Program p;
    std::size_t depth = 0;
    p.emit(f, sig, alg, depth);
    return p;
  }

  void emit(const Formula& f, const Signature& sig, const Algebra& alg, std::size_t& depth) {
    for (std::size_t i = 0; i < f.arity(); ++i) emit(f.child(i), sig, alg, depth);
    std::size_t coord = 0;
    if (f.op() == Op::kAtom) {
      auto c = sig.find(f.name());
      if (!c) throw InvalidArgument("unknown atom '" + f.name() + "'");
      if (sig.coord(*c).domain_size != alg.value_count()) {
        throw InvalidArgument("coordinate '" + f.name() + "' has domain size " +
                              std::to_string(sig.coord(*c).domain_size) + " but algebra " + alg.name() + " has " +
                              std::to_string(alg.value_count()) + " values");
      }
      coord = *c;
    } else if (f.arity() > 0) {
      // Fails early for connectives the algebra lacks.
      if (!alg.supports(connective_of(f.op()))) {
        throw Unsupported("algebra " + alg.name() + " has no connective " + to_string(connective_of(f.op())));
      }
    }
    code.push_back({f.op(), coord});
    depth = depth + 1 - f.arity();
    max_stack = std::max(max_stack, depth + f.arity());
  }

  Value run(const Signature& sig, std::uint64_t index, const Algebra& alg, std::vector<Value>& stack) const {
    stack.clear();
    for (const auto& in : code) {
      switch (in.op) {
        case Op::kAtom: stack.push_back(sig.value_at(index, in.coord)); break;
        case Op::kTop: stack.push_back(alg.top()); break;
        case Op::kBottom: stack.push_back(alg.bottom()); break;
        case Op::kNot:
        case Op::kJ: stack.back() = alg.apply(connective_of(in.op), stack.back()); break;
        default: {
          const Value b = stack.back();
          stack.pop_back();
          stack.back() = alg.apply(connective_of(in.op), stack.back(), b);
        }
      }
    }
    return stack.back();
  }
};

}  // namespace

Value evaluate(const Formula& f, const Signature& sig, std::span<const Value> tuple, const Algebra& alg) {
  const Program p = Program::compile(f, sig, alg);
  std::vector<Value> stack;
  stack.reserve(p.max_stack);
  return p.run(sig, sig.encode(tuple), alg, stack);
}

ModelSet models(const Formula& f, const Signature& sig, const Algebra& alg) {
  const Program p = Program::compile(f, sig, alg);
  ModelSet out(sig);
  std::vector<Value> stack;
  stack.reserve(p.max_stack);
  const std::uint64_t n = out.universe_size();
  for (std::uint64_t i = 0; i < n; ++i) {
    if (p.run(sig, i, alg, stack) == alg.designated()) out.insert_index(i);
  }
  return out;
}

Signature boolean_signature_for(std::initializer_list<Formula> formulas) {
  CoordSet atoms;
  for (const auto& f : formulas) atoms.merge(f.atoms());
  return Signature::boolean(std::vector<std::string>(atoms.begin(), atoms.end()));
}

// ---------------------------------------------------------------------------
// Normal forms

namespace {

void require_boolean_literal(const Literal& l) {
  if (l.value != 0 && l.value != 1) {
    throw Unsupported("literal " + l.coord + "=" + std::to_string(l.value) + " is not boolean");
  }
}

// Merges two conjuncts; nullopt when they contradict.
std::optional<Conjunct> merge(const Conjunct& a, const Conjunct& b) {
  Conjunct out = a;
  for (const auto& l : b) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Literal& x) { return x.coord == l.coord; });
    if (it == out.end()) {
      out.push_back(l);
    } else if (it->value != l.value) {
      return std::nullopt;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Conjunct> cross(const std::vector<Conjunct>& a, const std::vector<Conjunct>& b) {
  std::vector<Conjunct> out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (auto m = merge(x, y)) {
        if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(std::move(*m));
      }
    }
  }
  return out;
}

std::vector<Conjunct> join(std::vector<Conjunct> a, const std::vector<Conjunct>& b) {
  for (const auto& y : b) {
    if (std::find(a.begin(), a.end(), y) == a.end()) a.push_back(y);
  }
  return a;
}

std::vector<Conjunct> dnf_of(const Formula& f, bool positive) {
  switch (f.op()) {
    case Op::kAtom: return {{Literal{f.name(), positive ? 1 : 0}}};
    case Op::kTop: return positive ? std::vector<Conjunct>{{}} : std::vector<Conjunct>{};
    case Op::kBottom: return positive ? std::vector<Conjunct>{} : std::vector<Conjunct>{{}};
    case Op::kNot: return dnf_of(f.child(0), !positive);
    case Op::kJ: throw Unsupported("J has no classical normal form");
    case Op::kAnd:
      return positive ? cross(dnf_of(f.child(0), true), dnf_of(f.child(1), true))
                      : join(dnf_of(f.child(0), false), dnf_of(f.child(1), false));
    case Op::kOr:
      return positive ? join(dnf_of(f.child(0), true), dnf_of(f.child(1), true))
                      : cross(dnf_of(f.child(0), false), dnf_of(f.child(1), false));
    case Op::kImplies:
      return positive ? join(dnf_of(f.child(0), false), dnf_of(f.child(1), true))
                      : cross(dnf_of(f.child(0), true), dnf_of(f.child(1), false));
    case Op::kIff: {
      const auto ap = dnf_of(f.child(0), true), an = dnf_of(f.child(0), false);
      const auto bp = dnf_of(f.child(1), true), bn = dnf_of(f.child(1), false);
      return positive ? join(cross(ap, bp), cross(an, bn)) : join(cross(ap, bn), cross(an, bp));
    }
  }
  return {};
}

struct BoundLiteral {
  std::size_t coord;
  Value value;
};

std::vector<BoundLiteral> bind(const std::vector<Literal>& ls, const Signature& sig) {
  std::vector<BoundLiteral> out;
  for (const auto& l : ls) {
    const std::size_t c = sig.index_of(l.coord);
    if (l.value < 0 || l.value >= sig.coord(c).domain_size) {
      throw InvalidArgument("literal value out of range for '" + l.coord + "'");
    }
    out.push_back({c, l.value});
  }
  return out;
}

Formula literal_formula(const Literal& l) {
  require_boolean_literal(l);
  Formula a = Formula::atom(l.coord);
  return l.value == 1 ? a : Formula::negation(a);
}

}  // namespace

void Dnf::validate() const {
  for (const auto& c : conjuncts) {
    CoordSet seen;
    for (const auto& l : c) {
      if (!seen.insert(l.coord).second) {
        throw InvalidArgument("conjunct mentions '" + l.coord + "' more than once");
      }
    }
  }
}

CoordSet Dnf::atoms() const {
  CoordSet out;
  for (const auto& c : conjuncts) {
    for (const auto& l : c) out.insert(l.coord);
  }
  return out;
}

Dnf to_dnf(const Formula& f) { return Dnf{dnf_of(f, true)}; }

Cnf to_cnf(const Formula& f) {
  Cnf out;
  for (const auto& conj : dnf_of(f, false)) {
    Clause clause;
    for (const auto& l : conj) clause.push_back({l.coord, 1 - l.value});
    out.clauses.push_back(std::move(clause));
  }
  return out;
}

ModelSet dnf_models(const Dnf& f, const Signature& sig) {
  f.validate();
  std::vector<std::vector<BoundLiteral>> bound;
  for (const auto& c : f.conjuncts) bound.push_back(bind(c, sig));
  ModelSet out(sig);
  const std::uint64_t n = out.universe_size();
  for (std::uint64_t i = 0; i < n; ++i) {
    for (const auto& c : bound) {
      if (std::all_of(c.begin(), c.end(), [&](const BoundLiteral& l) { return sig.value_at(i, l.coord) == l.value; })) {
        out.insert_index(i);
        break;
      }
    }
  }
  return out;
}

ModelSet cnf_models(const Cnf& f, const Signature& sig) {
  std::vector<std::vector<BoundLiteral>> bound;
  for (const auto& c : f.clauses) bound.push_back(bind(c, sig));
  ModelSet out(sig);
  const std::uint64_t n = out.universe_size();
  for (std::uint64_t i = 0; i < n; ++i) {
    const bool sat = std::all_of(bound.begin(), bound.end(), [&](const std::vector<BoundLiteral>& c) {
      return std::any_of(c.begin(), c.end(), [&](const BoundLiteral& l) { return sig.value_at(i, l.coord) == l.value; });
    });
    if (sat) out.insert_index(i);
  }
  return out;
}

Formula to_formula(const Dnf& f) {
  std::vector<Formula> disjuncts;
  for (const auto& c : f.conjuncts) {
    std::vector<Formula> lits;
    for (const auto& l : c) lits.push_back(literal_formula(l));
    disjuncts.push_back(Formula::conjunction(lits));
  }
  return Formula::disjunction(disjuncts);
}

Formula to_formula(const Cnf& f) {
  std::vector<Formula> clauses;
  for (const auto& c : f.clauses) {
    std::vector<Formula> lits;
    for (const auto& l : c) lits.push_back(literal_formula(l));
    clauses.push_back(Formula::disjunction(lits));
  }
  return Formula::conjunction(clauses);
}

std::string to_string(const Dnf& f) {
  if (f.conjuncts.empty()) return "false";
  std::string out;
  for (std::size_t i = 0; i < f.conjuncts.size(); ++i) {
    if (i) out += " | ";
    const auto& c = f.conjuncts[i];
    if (c.empty()) out += "true";
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) out += " & ";
      out += c[j].coord + "=" + std::to_string(c[j].value);
    }
  }
  return out;
}

Dnf project_dnf(const Dnf& f, const CoordSet& keep) {
  f.validate();
  Dnf out;
  for (const auto& c : f.conjuncts) {
    Conjunct kept;
    for (const auto& l : c) {
      if (keep.count(l.coord)) kept.push_back(l);
    }
    out.conjuncts.push_back(std::move(kept));
  }
  return out;
}

Dnf minterm_dnf(const ModelSet& s) {
  const Signature& sig = s.signature();
  Dnf out;
  s.for_each_index([&](std::uint64_t i) {
    Conjunct c;
    for (std::size_t k = 0; k < sig.arity(); ++k) c.push_back({sig.coord(k).name, sig.value_at(i, k)});
    out.conjuncts.push_back(std::move(c));
  });
  return out;
}

Dnf prime_implicant_dnf(const ModelSet& s) {
  const Signature& sig = s.signature();
  if (!sig.is_boolean()) throw Unsupported("prime implicants need a boolean signature");
  const std::size_t n = sig.arity();
  if (n > 20) throw ResourceLimit("prime implicant computation limited to 20 coordinates");

  // An implicant is (value, dash): dashed bits are unconstrained.
  using Implicant = std::pair<std::uint64_t, std::uint64_t>;
  std::set<Implicant> current;
  s.for_each_index([&](std::uint64_t i) { current.insert({i, 0}); });
  std::set<Implicant> primes;
  while (!current.empty()) {
    std::set<Implicant> next, used;
    for (auto a = current.begin(); a != current.end(); ++a) {
      for (auto b = std::next(a); b != current.end(); ++b) {
        if (a->second != b->second) continue;
        const std::uint64_t diff = a->first ^ b->first;
        if (std::popcount(diff) != 1) continue;
        next.insert({a->first & ~diff, a->second | diff});
        used.insert(*a);
        used.insert(*b);
      }
    }
    for (const auto& imp : current) {
      if (!used.count(imp)) primes.insert(imp);
    }
    current = std::move(next);
  }

  const std::vector<std::uint64_t> minterms = s.indices();
  const std::vector<Implicant> prime_list(primes.begin(), primes.end());
  auto covers = [](const Implicant& p, std::uint64_t m) { return (m & ~p.second) == p.first; };

  std::vector<bool> chosen(prime_list.size(), false), covered(minterms.size(), false);
  auto choose = [&](std::size_t p) {
    chosen[p] = true;
    for (std::size_t m = 0; m < minterms.size(); ++m) {
      if (covers(prime_list[p], minterms[m])) covered[m] = true;
    }
  };
  for (std::size_t m = 0; m < minterms.size(); ++m) {
    std::size_t count = 0, last = 0;
    for (std::size_t p = 0; p < prime_list.size(); ++p) {
      if (covers(prime_list[p], minterms[m])) {
        ++count;
        last = p;
      }
    }
    if (count == 1 && !chosen[last]) choose(last);
  }
  while (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    std::size_t best = 0, best_gain = 0;
    for (std::size_t p = 0; p < prime_list.size(); ++p) {
      if (chosen[p]) continue;
      std::size_t gain = 0;
      for (std::size_t m = 0; m < minterms.size(); ++m) {
        if (!covered[m] && covers(prime_list[p], minterms[m])) ++gain;
      }
      const bool better = gain > best_gain ||
                          (gain == best_gain && gain > 0 &&
                           std::popcount(prime_list[p].second) > std::popcount(prime_list[best].second));
      if (better) {
        best = p;
        best_gain = gain;
      }
    }
    choose(best);
  }

  Dnf out;
  for (std::size_t p = 0; p < prime_list.size(); ++p) {
    if (!chosen[p]) continue;
    Conjunct c;
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t bit = std::uint64_t{1} << (n - 1 - k);
      if (prime_list[p].second & bit) continue;
      c.push_back({sig.coord(k).name, (prime_list[p].first & bit) ? 1 : 0});
    }
    out.conjuncts.push_back(std::move(c));
  }
  return out;
}

Formula theory_of(const ModelSet& s, TheoryOptions opts) {
  if (!s.signature().is_boolean()) throw Unsupported("theory_of needs a boolean signature");
  if (s.empty()) return Formula::bottom();
  if (s.is_full()) return Formula::top();
  return to_formula(opts.simplify ? prime_implicant_dnf(s) : minterm_dnf(s));
}

Formula defining_formula(const ModelSet& s, TheoryOptions opts) {
  return theory_of(restrict_to(s, relevant(s)), opts);
}

// ---------------------------------------------------------------------------

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<Value>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Value x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

std::vector<ModelSet> definable_sets(const Signature& sig, const Algebra& alg, const ConnectiveSet& connectives,
                                     DefinabilityLimits limits) {
  for (const auto& c : sig.coords()) {
    if (c.domain_size != alg.value_count()) {
      throw InvalidArgument("coordinate '" + c.name + "' does not match algebra " + alg.name());
    }
  }
  for (Connective c : connectives) {
    if (!alg.supports(c)) throw Unsupported("algebra " + alg.name() + " has no connective " + to_string(c));
  }
  const std::uint64_t points = sig.cardinality();
  if (points > limits.max_points) {
    throw ResourceLimit("definability closure over " + std::to_string(points) + " points exceeds bound " +
                        std::to_string(limits.max_points));
  }

  std::unordered_set<std::vector<Value>, VectorHash> seen;
  std::vector<std::vector<Value>> funcs;
  auto add = [&](std::vector<Value> f) {
    if (seen.insert(f).second) {
      if (seen.size() > limits.max_functions) {
        throw ResourceLimit("definability closure exceeds " + std::to_string(limits.max_functions) + " functions");
      }
      funcs.push_back(std::move(f));
    }
  };

  add(std::vector<Value>(points, alg.top()));
  add(std::vector<Value>(points, alg.bottom()));
  for (std::size_t c = 0; c < sig.arity(); ++c) {
    std::vector<Value> f(points);
    for (std::uint64_t i = 0; i < points; ++i) f[i] = sig.value_at(i, c);
    add(std::move(f));
  }

  std::vector<Connective> unary, binary;
  for (Connective c : connectives) (is_unary(c) ? unary : binary).push_back(c);

  // Semi-naive closure: every function is combined with all earlier ones once.
  for (std::size_t next = 0; next < funcs.size(); ++next) {
    for (Connective c : unary) {
      std::vector<Value> g(points);
      for (std::uint64_t i = 0; i < points; ++i) g[i] = alg.apply(c, funcs[next][i]);
      add(std::move(g));
    }
    for (std::size_t other = 0; other <= next; ++other) {
      for (Connective c : binary) {
        std::vector<Value> g(points), h(points);
        for (std::uint64_t i = 0; i < points; ++i) {
          g[i] = alg.apply(c, funcs[next][i], funcs[other][i]);
          h[i] = alg.apply(c, funcs[other][i], funcs[next][i]);
        }
        add(std::move(g));
        add(std::move(h));
      }
    }
  }

  std::vector<ModelSet> out;
  auto sig_ptr = std::make_shared<const Signature>(sig);
  for (const auto& f : funcs) {
    ModelSet m(sig_ptr);
    for (std::uint64_t i = 0; i < points; ++i) {
      if (f[i] == alg.designated()) m.insert_index(i);
    }
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

bool is_definable(const ModelSet& s, const Algebra& alg, const ConnectiveSet& connectives,
                  DefinabilityLimits limits) {
  const auto sets = definable_sets(s.signature(), alg, connectives, limits);
  return std::find(sets.begin(), sets.end(), s) != sets.end();
}

}  // namespace interlab
