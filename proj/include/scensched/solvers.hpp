#pragma once

// Approximation algorithms and solution back ends.

#include <cstdint>
#include <vector>

#include "scensched/core.hpp"
#include "scensched/rational.hpp"
#include "scensched/reductions.hpp"

namespace scensched {

inline constexpr int kDefaultDerandSizeCap = 12;
inline constexpr int kDefaultExactVertexCap = 22;

// ---------------------------------------------------------------------------
// Random assignment

// Trial `trial` of seed `seed`: each job gets M1 or M2 with probability 1/2,
// drawn from an mt19937_64 stream keyed by (seed, trial). Job j reads bit
// (j mod 64) of the (j / 64)-th word, so a trial never depends on others.
Assignment random_trial(int num_jobs, std::uint64_t seed, std::uint64_t trial);

struct TrialResult {
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;  // index of the winning trial
  Assignment assignment;
  Time minsum = 0;
  Time minmax = 0;
};

// Best of `trials` independent random assignments under `objective`; ties go
// to the lowest trial index. Throws Error(kUsage) if trials == 0.
TrialResult random_assign(const Instance& inst, Objective objective,
                          std::uint64_t seed, std::uint64_t trials);

// ---------------------------------------------------------------------------
// Derandomization by conditional expectations

// Fixes jobs in id order, each time keeping the machine that minimizes the
// exact expected MinSum value with the undecided jobs still random. Ties go
// to M1. The result never exceeds expected_random_minsum(inst).
Assignment derandomized_assign(const Instance& inst,
                               int size_cap = kDefaultDerandSizeCap);

// Expected MinSum value with jobs [0, decided) fixed as in `partial` and the
// rest uniformly random.
Rational conditional_expected_minsum(const Instance& inst,
                                     const Assignment& partial, int decided);

// ---------------------------------------------------------------------------
// Max Cut back ends

struct Cut {
  Assignment side;  // M1 = left
  Rational weight;
};

// Exhaustive, vertex 1 pinned left; ties to the lexicographically smallest
// side string.
Cut exact_maxcut(const CutGraph& g, int vertex_cap = kDefaultExactVertexCap);

// Single-vertex flips from a seeded random start until no flip gains. The
// result weighs at least half the total edge weight.
Cut local_search_cut(const CutGraph& g, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Max-NAE-SAT back ends (maximize satisfied shifted weight)

struct NaeSolution {
  std::vector<char> truth;
  Rational satisfied;  // shifted weight
};

// Exhaustive over all variables with variable 1 pinned true.
NaeSolution exact_max_nae(const ClauseSet& cs,
                          int var_cap = kDefaultExactVertexCap);

// Variable-flip local search from a seeded random start.
NaeSolution local_search_nae(const ClauseSet& cs, std::uint64_t seed);

// ---------------------------------------------------------------------------
// MinSum through the reductions

enum class Backend { kExact, kLocalSearch };

struct SolverCaps {
  int exact_vertices = kDefaultExactVertexCap;
  int nae_size = kDefaultNaeSizeCap;
};

Assignment solve_sm2_via_cut(const Instance& inst, Backend backend,
                             std::uint64_t seed, const SolverCaps& caps = {});

Assignment solve_sm2_via_nae(const Instance& inst, Backend backend,
                             std::uint64_t seed, const SolverCaps& caps = {});

// ---------------------------------------------------------------------------
// Vector Scheduling heuristic

// Vectors by descending infinity norm (ties by index); each goes to the
// machine that gives the smallest resulting overall maximum, then the
// smallest resulting own norm, then the lowest index.
std::vector<int> vector_list_schedule(const VectorSet& vs);

}  // namespace scensched
