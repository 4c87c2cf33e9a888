#pragma once

// Exact ground truth: exhaustive search, the unit-job type-count enumeration
// for a constant number of scenarios, and exact expectations of the uniform
// random assignment.

#include <cstdint>
#include <vector>

#include "scensched/core.hpp"
#include "scensched/rational.hpp"

namespace scensched {

struct Optimum {
  Time value = 0;
  Assignment witness;
};

inline constexpr int kDefaultBruteForceCap = 24;
inline constexpr int kDefaultUnitDpScenarioCap = 10;
inline constexpr int kDefaultProfileCap = 20;

// Enumerates the 2^(n-1) assignments with job 1 pinned to M1. Among optimal
// assignments the witness has the lexicographically smallest to_string().
Optimum brute_force(const Instance& inst, Objective objective,
                    int cap = kDefaultBruteForceCap);

// Jobs sharing the same set of scenarios are interchangeable.
struct JobType {
  std::uint32_t signature = 0;  // bit i set iff the job is in scenario i
  int count = 0;
  std::vector<JobId> members;   // ascending
};

// Types in ascending signature order. Requires k <= 32.
std::vector<JobType> job_types(const Instance& inst);

// Unit processing times only. Enumerates, for every job type, how many of its
// jobs go to M1; prod(count + 1) combinations.
Optimum unit_dp(const Instance& inst, Objective objective,
                int scenario_cap = kDefaultUnitDpScenarioCap);

struct RandomProfile {
  Rational expected_min;
  Rational expected_max;
};

// Expected least and largest load of a scenario when every job picks a
// machine by a fair coin. Exact over all 2^|s| outcomes.
RandomProfile exact_random_profile(const Scenario& s, const Instance& inst,
                                   int cap = kDefaultProfileCap);

// Sum over scenarios of the expected makespan, i.e. the expected MinSum value
// of the random assignment.
Rational expected_random_minsum(const Instance& inst,
                                int cap = kDefaultProfileCap);

}  // namespace scensched
