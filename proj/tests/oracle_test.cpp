#include "scensched/oracle.hpp"

#include <gtest/gtest.h>

#include "scensched/error.hpp"
#include "scensched/generators.hpp"
#include "test_util.hpp"

namespace scensched {
namespace {

using testing::make_instance;
using testing::naive_optimum;
using testing::naive_value;

Instance example() {
  return make_instance({2, 1, 1}, {{1, 2, 3}, {2, 3}, {2, 3}});
}

TEST(BruteForce, WorkedExample) {
  const Optimum mm = brute_force(example(), Objective::kMinMax);
  EXPECT_EQ(mm.value, 2);
  EXPECT_EQ(mm.witness.to_string(), "122");

  const Optimum ms = brute_force(example(), Objective::kMinSum);
  EXPECT_EQ(ms.value, 5);
  // {1,2}|{3} and {1,3}|{2} tie; the smaller string wins.
  EXPECT_EQ(ms.witness.to_string(), "112");
}

TEST(BruteForce, SingleJob) {
  const Instance inst = make_instance({6}, {{1}});
  EXPECT_EQ(brute_force(inst, Objective::kMinMax).value, 6);
  EXPECT_EQ(brute_force(inst, Objective::kMinSum).value, 6);
}

TEST(BruteForce, EmptyInstance) {
  const Instance inst({}, {});
  EXPECT_EQ(brute_force(inst, Objective::kMinSum).value, 0);
  EXPECT_EQ(brute_force(inst, Objective::kMinSum).witness.size(), 0);
}

TEST(BruteForce, CapExceeded) {
  const Instance inst(std::vector<Time>(25, 1), {{0, 1}});
  EXPECT_THROW(brute_force(inst, Objective::kMinMax), Error);
  EXPECT_THROW(brute_force(example(), Objective::kMinMax, 2), Error);
}

TEST(BruteForce, MatchesNaiveEnumeration) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Instance inst = random_instance(1 + seed % 11, 1 + seed % 6,
                                          1 + seed % 5, 9, seed);
    for (Objective obj : {Objective::kMinMax, Objective::kMinSum}) {
      const Optimum opt = brute_force(inst, obj);
      EXPECT_EQ(opt.value, naive_optimum(inst, obj)) << "seed " << seed;
      EXPECT_EQ(naive_value(inst, opt.witness, obj), opt.value);
      EXPECT_EQ(opt.witness[0], Machine::kM1);
    }
  }
}

TEST(BruteForce, WitnessIsLexicographicallySmallest) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance inst = random_instance(7, 4, 3, 3, seed);
    const Optimum opt = brute_force(inst, Objective::kMinSum);
    std::string smallest;
    testing::for_each_assignment(7, [&](const Assignment& a) {
      if (a[0] != Machine::kM1) return;
      if (naive_value(inst, a, Objective::kMinSum) != opt.value) return;
      if (smallest.empty() || a.to_string() < smallest) smallest = a.to_string();
    });
    EXPECT_EQ(opt.witness.to_string(), smallest);
  }
}

TEST(UnitDp, Examples) {
  const Instance unitized = make_instance({1, 1, 1}, {{1, 2, 3}, {2, 3}, {2, 3}});
  EXPECT_EQ(unit_dp(unitized, Objective::kMinMax).value, 2);

  const Instance full = make_instance({1, 1, 1, 1}, {{1, 2, 3, 4}, {1, 2, 3, 4}});
  EXPECT_EQ(unit_dp(full, Objective::kMinMax).value, 2);

  EXPECT_EQ(unit_dp(make_instance({1}, {{1}}), Objective::kMinMax).value, 1);
}

TEST(UnitDp, Errors) {
  EXPECT_THROW(unit_dp(example(), Objective::kMinMax), Error);
  const Instance many = unit_instance(5, 11, 3, 1);
  EXPECT_THROW(unit_dp(many, Objective::kMinMax), Error);
  EXPECT_NO_THROW(unit_dp(many, Objective::kMinMax, 11));
}

TEST(UnitDp, JobTypesPartitionTheJobs) {
  const Instance inst = unit_instance(12, 4, 6, 3);
  const auto types = job_types(inst);
  int total = 0;
  for (const auto& t : types) {
    total += t.count;
    EXPECT_EQ(t.count, static_cast<int>(t.members.size()));
  }
  EXPECT_EQ(total, 12);
  EXPECT_LE(types.size(), 16u);
}

TEST(UnitDp, AgreesWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Instance inst =
        unit_instance(1 + seed % 14, 1 + seed % 4, 1 + seed % 9, seed);
    for (Objective obj : {Objective::kMinMax, Objective::kMinSum}) {
      const Optimum dp = unit_dp(inst, obj);
      EXPECT_EQ(dp.value, brute_force(inst, obj).value) << "seed " << seed;
      EXPECT_EQ(naive_value(inst, dp.witness, obj), dp.value);
    }
  }
}

TEST(RandomProfile, Examples) {
  const Instance two = make_instance({1, 1}, {{1, 2}});
  const RandomProfile pair = exact_random_profile(two.scenario(0), two);
  EXPECT_EQ(pair.expected_min, make_rational(1, 2));
  EXPECT_EQ(pair.expected_max, make_rational(3, 2));

  const Instance one = make_instance({5}, {{1}});
  const RandomProfile single = exact_random_profile(one.scenario(0), one);
  EXPECT_EQ(single.expected_min, 0);
  EXPECT_EQ(single.expected_max, 5);

  const Instance three = make_instance({1, 1, 1}, {{1, 2, 3}});
  EXPECT_EQ(exact_random_profile(three.scenario(0), three).expected_min,
            make_rational(3, 4));
}

TEST(RandomProfile, CapExceeded) {
  const Instance inst(std::vector<Time>(21, 1),
                      {Scenario{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13,
                                14, 15, 16, 17, 18, 19, 20}});
  EXPECT_THROW(exact_random_profile(inst.scenario(0), inst), Error);
}

// Least load of the random assignment is at least half the least side of any
// fixed split; the expected makespan is within 3/2 of the scenario optimum.
TEST(RandomProfile, HalfLeastLoadAndThreeHalvesBound) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = random_instance(12, 3, 10, 9, seed);
    for (const Scenario& s : inst.scenarios()) {
      const RandomProfile prof = exact_random_profile(s, inst);
      Time total = 0;
      for (JobId j : s) total += inst.proc(j);
      EXPECT_EQ(prof.expected_min + prof.expected_max, Rational(total));

      Time best_makespan = total;
      for (std::uint64_t mask = 0; mask < (1u << s.size()); ++mask) {
        Time a = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
          if ((mask >> i) & 1) a += inst.proc(s[i]);
        }
        const Time least = std::min(a, total - a);
        EXPECT_GE(prof.expected_min, Rational(least) / 2);
        best_makespan = std::min(best_makespan, std::max(a, total - a));
      }
      EXPECT_LE(prof.expected_max, Rational(best_makespan) * 3 / 2);
    }
  }
}

TEST(ExpectedRandomMinsum, WithinThreeHalvesOfOptimum) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance inst = random_instance(10, 6, 4, 9, seed);
    const Rational expected = expected_random_minsum(inst);
    EXPECT_LE(expected,
              Rational(brute_force(inst, Objective::kMinSum).value) * 3 / 2);
  }
}

}  // namespace
}  // namespace scensched
