#pragma once

// Seeded instance generators. Output depends only on (kind, params, seed):
// draws come from mt19937_64 through a rejection sampler rather than the
// implementation-defined std distributions.

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "scensched/core.hpp"
#include "scensched/reductions.hpp"

namespace scensched {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  // `count` distinct values from [0, n), in draw order.
  std::vector<int> sample(int n, int count);

 private:
  std::mt19937_64 gen_;
};

enum class GenKind { kRandom, kPairs, kTriples, kUnit, kMaxcutGadget,
                     kSetsplitGadget };

GenKind parse_gen_kind(std::string_view name);
std::string_view gen_kind_name(GenKind kind);

struct GenParams {
  int n = 10;        // jobs, or vertices / objects for gadgets
  int k = 6;         // scenarios, or edges / sets for gadgets
  int r = 3;         // largest scenario size (random, unit)
  Time pmax = 9;     // processing times drawn from [0, pmax]
};

// Scenario sizes uniform in [1, min(r, n)], members drawn without replacement.
Instance random_instance(int n, int k, int r, Time pmax, std::uint64_t seed);
// Every scenario has exactly `size` jobs (2 or 3 typically).
Instance fixed_size_instance(int n, int k, int size, Time pmax,
                             std::uint64_t seed);
Instance unit_instance(int n, int k, int r, std::uint64_t seed);

// `edges` distinct edges on `vertices` vertices (uniform among all simple
// graphs with that many edges).
SimpleGraph random_graph(int vertices, int edges, std::uint64_t seed);
std::vector<std::vector<int>> random_triple_family(int objects, int sets,
                                                   std::uint64_t seed);

// Throws Error(kUsage) on parameters the kind cannot honor.
Instance generate(GenKind kind, const GenParams& params, std::uint64_t seed);

}  // namespace scensched
