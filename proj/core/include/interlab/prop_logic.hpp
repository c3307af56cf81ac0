#pragma once

// Evaluation of formulas in finite algebras, model enumeration, normal forms
// and definability.

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "interlab/formula.hpp"
#include "interlab/model_space.hpp"

namespace interlab {

enum class Connective { kNot, kJ, kAnd, kOr, kImplies, kIff };
using ConnectiveSet = std::set<Connective>;

std::string to_string(Connective c);

/// A finite algebra of truth values with one designated ("holds") value.
/// Unary tables map v -> value; binary tables are row-major over (a, b).
class Algebra {
 public:
  Algebra(std::string name, int value_count, Value designated, Value top, Value bottom);

  Algebra& set_unary(Connective c, std::vector<Value> table);
  Algebra& set_binary(Connective c, std::vector<Value> table);

  /// Values {0,1}; 1 designated.
  static const Algebra& boolean();
  /// Gödel logic of a three-world linear Kripke frame. Value v means "true
  /// from world v on" (3 = never); 0 is designated. Includes J.
  static const Algebra& goedel4();

  const std::string& name() const noexcept { return name_; }
  int value_count() const noexcept { return value_count_; }
  Value designated() const noexcept { return designated_; }
  Value top() const noexcept { return top_; }
  Value bottom() const noexcept { return bottom_; }

  bool supports(Connective c) const;
  ConnectiveSet connectives() const;
  Value apply(Connective c, Value a) const;
  Value apply(Connective c, Value a, Value b) const;

 private:
  const std::vector<Value>& table(Connective c) const;
  void check_value(Value v) const;

  std::string name_;
  int value_count_;
  Value designated_, top_, bottom_;
  std::map<Connective, std::vector<Value>> tables_;
};

using Valuation = std::map<std::string, Value, std::less<>>;

/// Bottom-up table evaluation. Every atom of `f` needs a value in `v`.
Value eval_many_valued(const Formula& f, const Valuation& v, const Algebra& alg);

/// Evaluates `f` at one tuple of `sig`.
Value evaluate(const Formula& f, const Signature& sig, std::span<const Value> tuple, const Algebra& alg);

/// All tuples of `sig` at which `f` takes the designated value.
ModelSet models(const Formula& f, const Signature& sig, const Algebra& alg = Algebra::boolean());

/// Boolean signature over the atoms of the given formulas, sorted by name.
Signature boolean_signature_for(std::initializer_list<Formula> formulas);

// ---------------------------------------------------------------------------
// Normal forms. A literal constrains a coordinate to one value; for boolean
// coordinates value 1 is the positive and value 0 the negative literal.

struct Literal {
  std::string coord;
  Value value = 1;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Conjunct = std::vector<Literal>;
using Clause = std::vector<Literal>;

/// Disjunction of conjunctions. No conjuncts means false; an empty conjunct
/// means true.
struct Dnf {
  std::vector<Conjunct> conjuncts;

  void validate() const;
  CoordSet atoms() const;
  friend bool operator==(const Dnf&, const Dnf&) = default;
};

/// Conjunction of clauses (disjunctions of literals).
struct Cnf {
  std::vector<Clause> clauses;

  friend bool operator==(const Cnf&, const Cnf&) = default;
};

Dnf to_dnf(const Formula& f);
Cnf to_cnf(const Formula& f);
ModelSet dnf_models(const Dnf& f, const Signature& sig);
ModelSet cnf_models(const Cnf& f, const Signature& sig);
Formula to_formula(const Dnf& f);
Formula to_formula(const Cnf& f);
std::string to_string(const Dnf& f);

/// Keeps, in every conjunct, only the literals over `keep`; the others are
/// replaced by true. The result defines M(f)↾X' × Π↾X''.
Dnf project_dnf(const Dnf& f, const CoordSet& keep);

/// One conjunct per tuple, in lexicographic order.
Dnf minterm_dnf(const ModelSet& s);
/// Prime implicants (Quine-McCluskey) with a deterministic greedy cover.
Dnf prime_implicant_dnf(const ModelSet& s);

struct TheoryOptions {
  bool simplify = false;
};

/// A boolean formula whose models are exactly `s`: false for ∅, true for the
/// full product, else the minterm DNF (or its simplification).
Formula theory_of(const ModelSet& s, TheoryOptions opts = {});

/// theory_of applied to s↾R(s), so only essential coordinates occur.
Formula defining_formula(const ModelSet& s, TheoryOptions opts = {});

// ---------------------------------------------------------------------------

struct DefinabilityLimits {
  std::uint64_t max_points = 256;
  std::size_t max_functions = std::size_t{1} << 16;
};

/// All model sets over `sig` definable from its atoms and the constants with
/// the given connectives, as the fixpoint of pointwise application.
std::vector<ModelSet> definable_sets(const Signature& sig, const Algebra& alg, const ConnectiveSet& connectives,
                                     DefinabilityLimits limits = {});

bool is_definable(const ModelSet& s, const Algebra& alg, const ConnectiveSet& connectives,
                  DefinabilityLimits limits = {});

}  // namespace interlab
