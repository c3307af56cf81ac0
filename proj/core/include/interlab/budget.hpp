#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "interlab/model_space.hpp"

namespace interlab {

/// Enumeration bounds shared by every exhaustive checker. When the number of
/// quantifier instantiations exceeds `max_instances`, checkers fall back to
/// `samples` random instantiations and flag their verdict as sampled.
struct Budget {
  std::uint64_t max_instances = std::uint64_t{1} << 24;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

/// Seed for the i-th sample of a run seeded with `seed` (splitmix64), so
/// sampled checks do not depend on how work is split across threads.
inline std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + (i + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// A random subset of `base`, each element kept with probability 1/2.
ModelSet random_subset(const ModelSet& base, std::mt19937_64& rng);
/// A random subset of the full product of `sig`.
ModelSet random_subset(const std::shared_ptr<const Signature>& sig, std::mt19937_64& rng);

namespace detail {

/// Evaluates probe(i) for every i in [0, count) on `jobs` threads and returns
/// the least witness under `less`. The answer does not depend on `jobs`.
template <class W, class Probe, class Less>
std::optional<W> scan_min(std::uint64_t count, unsigned jobs, Probe probe, Less less) {
  auto run = [&](std::uint64_t lo, std::uint64_t hi) {
    std::optional<W> best;
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (std::optional<W> w = probe(i); w && (!best || less(*w, *best))) best = std::move(w);
    }
    return best;
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2 * jobs) return run(0, count);

  std::vector<std::optional<W>> partial(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (count + jobs - 1) / jobs;
  for (unsigned j = 0; j < jobs; ++j) {
    const std::uint64_t lo = std::min(count, j * chunk), hi = std::min(count, lo + chunk);
    threads.emplace_back([&, j, lo, hi] {
      try {
        partial[j] = run(lo, hi);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::optional<W> best;
  for (auto& p : partial) {
    if (p && (!best || less(*p, *best))) best = std::move(p);
  }
  return best;
}

}  // namespace detail
}  // namespace interlab
