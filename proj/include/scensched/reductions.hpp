#pragma once

// Problem transformations:
//   * MinSum -> weighted Max-NAE-r-SAT (clause weights make the satisfied
//     weight of a scenario equal its least machine load),
//   * MinSum with |S| <= 3 -> weighted Max Cut,
//   * MinMax -> Vector Scheduling,
//   * Max Cut -> MinSum and 3-Set Splitting -> MinMax gadget instances.
//
// All weights are exact rationals.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scensched/core.hpp"
#include "scensched/rational.hpp"

namespace scensched {

// Approximation ratios of external solvers the reductions are meant to feed.
// None of those solvers ship here; the constants are for reference only.
namespace external_ratio {
inline constexpr double kMaxNae3Sat = 0.90871;
inline constexpr double kMaxNae4Sat = 7.0 / 8.0;
inline constexpr double kMaxNaeSat = 0.74996;
inline constexpr double kMaxCut = 0.87856;
}  // namespace external_ratio

inline constexpr int kDefaultNaeSizeCap = 6;

// ---------------------------------------------------------------------------
// Max-NAE-SAT

// A partition {A, B} of an r-job scenario is a mask over the scenario's
// positions: bit i set puts member i in B. The N = 2^(r-1) canonical masks
// keep position 0 in A; they are (m << 1) for m = 0 .. N-1.

// (1/(N-1)) * sum over all partitions of min{p(B), p(B')} - min{p(A), p(A')}.
// For r = 1 there is a single clause and the weight is 0.
Rational nae_base_weight(std::span<const Time> times, std::uint32_t b_mask);

// K(S) = (1/4) * (N-2)/(N-1) * p(S); 0 when N <= 2.
Rational nae_shift(std::span<const Time> times);

struct Literal {
  int var = 0;  // 0-based variable, equal to the job id for real jobs
  bool negated = false;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct NaeClause {
  std::vector<Literal> literals;
  Rational weight;          // w, may be negative
  Rational shifted_weight;  // w + K(S) >= 0
  int scenario = 0;
  friend bool operator==(const NaeClause&, const NaeClause&) = default;
};

struct ClauseSet {
  int num_vars = 0;      // real jobs plus zero-time padding jobs
  int num_real_jobs = 0;
  int clause_length = 0;  // r
  std::vector<Rational> shifts;  // K(S) per scenario
  std::vector<NaeClause> clauses;  // grouped by scenario, canonical order
  friend bool operator==(const ClauseSet&, const ClauseSet&) = default;
};

// A clause is satisfied iff its literals are not all equal. truth[v] is the
// value of variable v.
bool nae_satisfied(const NaeClause& clause, std::span<const char> truth);

// Satisfied weight per scenario, using the base (or shifted) weights.
std::vector<Rational> nae_satisfied_by_scenario(const ClauseSet& cs,
                                                std::span<const char> truth,
                                                bool shifted);

// Pads every scenario to size r with shared zero-time jobs numbered n, n+1,
// ... and emits 2^(r-1) clauses per scenario. Clause literals list the side
// holding the scenario's lowest job first and positive, the other side
// negated; both sides are in ascending job order.
ClauseSet to_nae_sat(const Instance& inst, int size_cap = kDefaultNaeSizeCap);

// Truth values for the assignment: true means M1. Padding variables are false.
std::vector<char> truth_from_assignment(const ClauseSet& cs,
                                        const Assignment& a);
// Inverse; padding variables are dropped.
Assignment assignment_from_truth(const ClauseSet& cs,
                                 std::span<const char> truth);

// Text format:
//   p nae <vars> <clauses> <r> <real jobs>
//   c scenario <id> shift <K num/den>
//   nae <w_shifted num/den> <+-var> ... 0
// Variables are 1-based; a leading '-' marks negation.
std::string serialize_clause_set(const ClauseSet& cs);
ClauseSet parse_clause_set(std::istream& in);

// ---------------------------------------------------------------------------
// Max Cut

struct CutEdge {
  JobId u = 0;
  JobId v = 0;
  Rational weight;
  int scenario = 0;
  friend bool operator==(const CutEdge&, const CutEdge&) = default;
};

// For a triple {i, j, k}: b_x = least load when x sits alone, i.e.
// min{p_x, p(S) - p_x}.
struct TripleRecord {
  int scenario = 0;
  std::array<JobId, 3> jobs{};
  std::array<Time, 3> b{};
  friend bool operator==(const TripleRecord&, const TripleRecord&) = default;
};

struct CutGraph {
  int num_vertices = 0;
  std::vector<CutEdge> edges;
  std::vector<TripleRecord> triples;
  friend bool operator==(const CutGraph&, const CutGraph&) = default;
};

// Pair scenarios get one edge of weight min{p_i, p_j}; triples get three
// edges with w(e) = (b_i + b_j + b_k)/2 - b_v, v the vertex opposite e;
// singletons get none. Throws Error(kPrecondition) on a scenario larger
// than 3.
CutGraph to_maxcut3(const Instance& inst);

Rational total_weight(const CutGraph& g);

// Weight of edges whose endpoints lie on different machines.
Rational cut_weight(const CutGraph& g, const Assignment& sides);

// Text format:
//   p cut <vertices> <edges>
//   e <u> <v> <num/den>
// Triple bookkeeping is not serialized.
std::string serialize_cut_graph(const CutGraph& g);
CutGraph parse_cut_graph(std::istream& in);

// ---------------------------------------------------------------------------
// Vector Scheduling

struct VectorSet {
  int dimension = 0;  // k
  int machines = 2;
  std::vector<std::vector<Time>> vectors;  // one per job
};

// Coordinate i of job j is p_j if j is in S_i, else 0.
VectorSet to_vector_scheduling(const Instance& inst, int machines = 2);

// Per-machine coordinate sums, then the largest entry over all of them.
// part[j] is the 0-based machine of vector j.
Time vector_makespan(const VectorSet& vs, std::span<const int> part);

// ---------------------------------------------------------------------------
// Gadgets

struct SimpleGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based, u != v, no repeats
};

// Unit job per vertex, pair scenario per edge. For every partition the MinSum
// value equals 2|E| minus the cut size.
Instance gadget_from_maxcut(const SimpleGraph& graph);

// Unit job per object, one scenario per 3-set. The MinMax optimum is 2 iff
// the family can be split, 3 otherwise (0 for an empty family).
Instance gadget_from_set_splitting(int num_objects,
                                   std::span<const std::vector<int>> sets);

}  // namespace scensched
