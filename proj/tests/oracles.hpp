#pragma once

// Brute-force reference implementations over std::set<Tuple>. They share no
// code with the library beyond the Signature/ModelSet containers used to
// exchange data.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "interlab/model_space.hpp"

namespace oracle {

using interlab::CoordSet;
using interlab::ModelSet;
using interlab::Signature;
using interlab::Tuple;
using Tuples = std::set<Tuple>;

inline std::vector<Tuple> all_tuples(const std::vector<int>& domains) {
  std::vector<Tuple> out{Tuple{}};
  for (int k : domains) {
    std::vector<Tuple> next;
    for (const auto& t : out) {
      for (int v = 0; v < k; ++v) {
        Tuple u = t;
        u.push_back(v);
        next.push_back(std::move(u));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::vector<int> domains(const Signature& sig) {
  std::vector<int> out;
  for (const auto& c : sig.coords()) out.push_back(c.domain_size);
  return out;
}

inline std::vector<Tuple> all_tuples(const Signature& sig) { return all_tuples(domains(sig)); }

inline Tuples tuples(const ModelSet& s) {
  const auto v = s.tuples();
  return {v.begin(), v.end()};
}

inline ModelSet to_model_set(const Signature& sig, const Tuples& t) {
  return ModelSet::from_tuples(sig, std::vector<Tuple>(t.begin(), t.end()));
}

inline std::vector<std::size_t> positions(const Signature& sig, const CoordSet& keep) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sig.arity(); ++i) {
    if (keep.contains(sig.coord(i).name)) out.push_back(i);
  }
  return out;
}

inline Tuple project(const Tuple& t, const std::vector<std::size_t>& pos) {
  Tuple out;
  for (auto i : pos) out.push_back(t[i]);
  return out;
}

inline Tuples restrict(const Tuples& s, const Signature& sig, const CoordSet& keep) {
  const auto pos = positions(sig, keep);
  Tuples out;
  for (const auto& t : s) out.insert(project(t, pos));
  return out;
}

/// S↾keep × Π over the rest, in sig order.
inline Tuples cylinder(const Tuples& s, const Signature& sig, const CoordSet& keep) {
  const Tuples r = restrict(s, sig, keep);
  const auto pos = positions(sig, keep);
  Tuples out;
  for (const auto& t : all_tuples(sig)) {
    if (r.contains(project(t, pos))) out.insert(t);
  }
  return out;
}

/// i is irrelevant iff changing coordinate i never leaves S.
inline CoordSet irrelevant(const Tuples& s, const Signature& sig) {
  CoordSet out;
  for (std::size_t i = 0; i < sig.arity(); ++i) {
    bool irr = true;
    for (const auto& t : s) {
      for (int v = 0; v < sig.coord(i).domain_size && irr; ++v) {
        Tuple u = t;
        u[i] = v;
        irr = s.contains(u);
      }
    }
    if (irr) out.insert(sig.coord(i).name);
  }
  return out;
}

inline CoordSet relevant(const Tuples& s, const Signature& sig) {
  const CoordSet irr = irrelevant(s, sig);
  CoordSet out;
  for (const auto& c : sig.coords()) {
    if (!irr.contains(c.name)) out.insert(c.name);
  }
  return out;
}

inline bool subset(const Tuples& a, const Tuples& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline CoordSet intersect(const CoordSet& a, const CoordSet& b) {
  CoordSet out;
  for (const auto& x : a) {
    if (b.contains(x)) out.insert(x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Relations as explicit pair sets.

using Pairs = std::set<std::pair<Tuple, Tuple>>;

inline Tuples mu(const Pairs& r, const Tuples& s) {
  Tuples out;
  for (const auto& x : s) {
    bool minimal = true;
    for (const auto& y : s) {
      if (r.contains({y, x})) minimal = false;
    }
    if (minimal) out.insert(x);
  }
  return out;
}

inline std::vector<Tuples> all_subsets(const std::vector<Tuple>& base) {
  std::vector<Tuples> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << base.size()); ++m) {
    Tuples s;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if ((m >> i) & 1u) s.insert(base[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline bool smooth(const Pairs& r, const std::vector<Tuple>& universe) {
  for (const auto& s : all_subsets(universe)) {
    const Tuples m = mu(r, s);
    for (const auto& x : s) {
      if (m.contains(x)) continue;
      bool covered = false;
      for (const auto& y : m) covered = covered || r.contains({y, x});
      if (!covered) return false;
    }
  }
  return true;
}

/// Componentwise Hamming composition of factor relations over a split given
/// by coordinate positions.
inline Pairs hamming(const Pairs& left, const Pairs& right, const std::vector<Tuple>& universe,
                     const std::vector<std::size_t>& lpos, const std::vector<std::size_t>& rpos) {
  Pairs out;
  auto leq = [](const Pairs& r, const Tuple& a, const Tuple& b) { return a == b || r.contains({a, b}); };
  for (const auto& s : universe) {
    for (const auto& t : universe) {
      if (s == t) continue;
      if (leq(left, project(s, lpos), project(t, lpos)) && leq(right, project(s, rpos), project(t, rpos))) {
        out.insert({s, t});
      }
    }
  }
  return out;
}

/// A random strict partial order: a random DAG along a random permutation,
/// transitively closed.
inline Pairs random_strict_order(const std::vector<Tuple>& universe, std::mt19937_64& rng, double density = 0.4) {
  std::vector<Tuple> perm = universe;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(density);
  Pairs r;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (coin(rng)) r.insert({perm[i], perm[j]});
    }
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& [a, b] : Pairs(r)) {
      for (const auto& [c, d] : Pairs(r)) {
        if (b == c && r.insert({a, d}).second) grew = true;
      }
    }
  }
  return r;
}

inline Pairs random_irreflexive(const std::vector<Tuple>& universe, std::mt19937_64& rng, double density = 0.3) {
  std::bernoulli_distribution coin(density);
  Pairs r;
  for (const auto& a : universe) {
    for (const auto& b : universe) {
      if (a != b && coin(rng)) r.insert({a, b});
    }
  }
  return r;
}

inline Tuples random_tuples(const std::vector<Tuple>& universe, std::mt19937_64& rng, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  Tuples s;
  for (const auto& t : universe) {
    if (coin(rng)) s.insert(t);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Gödel logic on a linear frame 0 < 1 < 2: an atom with value v holds at the
// worlds >= v (3: nowhere). A formula's value is the first world from which
// it holds.

struct KripkeFormula {
  enum Kind { kAtom, kTop, kBottom, kNot, kJ, kAnd, kOr, kImplies } kind;
  std::string atom;
  std::vector<KripkeFormula> kids;
};

inline bool forces(int w, const KripkeFormula& f, const std::map<std::string, int>& v) {
  switch (f.kind) {
    case KripkeFormula::kAtom:
      return w >= v.at(f.atom);
    case KripkeFormula::kTop:
      return true;
    case KripkeFormula::kBottom:
      return false;
    case KripkeFormula::kAnd:
      return forces(w, f.kids[0], v) && forces(w, f.kids[1], v);
    case KripkeFormula::kOr:
      return forces(w, f.kids[0], v) || forces(w, f.kids[1], v);
    case KripkeFormula::kNot:
      for (int u = w; u < 3; ++u) {
        if (forces(u, f.kids[0], v)) return false;
      }
      return true;
    case KripkeFormula::kImplies:
      for (int u = w; u < 3; ++u) {
        if (forces(u, f.kids[0], v) && !forces(u, f.kids[1], v)) return false;
      }
      return true;
    case KripkeFormula::kJ:
      // From the next moment on; at the last moment, now.
      if (w == 2) return forces(2, f.kids[0], v);
      for (int u = w + 1; u < 3; ++u) {
        if (!forces(u, f.kids[0], v)) return false;
      }
      return true;
  }
  return false;
}

inline int kripke_value(const KripkeFormula& f, const std::map<std::string, int>& v) {
  for (int w = 0; w < 3; ++w) {
    if (forces(w, f, v)) return w;
  }
  return 3;
}

}  // namespace oracle
