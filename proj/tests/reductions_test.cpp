#include "scensched/reductions.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "scensched/error.hpp"
#include "scensched/generators.hpp"
#include "scensched/oracle.hpp"
#include "test_util.hpp"

namespace scensched {
namespace {

using testing::from_string;
using testing::make_instance;
using testing::naive_least_load;

const std::vector<Time> kFourUnit = {1, 1, 1, 1};

TEST(NaeBaseWeight, FourUnitJobs) {
  // Balanced 2|2 split: members 2 and 3 on the other side.
  EXPECT_EQ(nae_base_weight(kFourUnit, 0b1100), make_rational(-4, 7));
  EXPECT_EQ(nae_base_weight(kFourUnit, 0b1000), make_rational(3, 7));
  EXPECT_EQ(nae_base_weight(kFourUnit, 0b0000), make_rational(10, 7));
}

TEST(NaeBaseWeight, ZeroTimes) {
  const std::vector<Time> zeros = {0, 0, 0};
  for (std::uint32_t m = 0; m < 4; ++m) {
    EXPECT_EQ(nae_base_weight(zeros, m << 1), 0);
  }
}

TEST(NaeShift, Examples) {
  EXPECT_EQ(nae_shift(kFourUnit), make_rational(6, 7));
  EXPECT_EQ(nae_base_weight(kFourUnit, 0b1100) + nae_shift(kFourUnit),
            make_rational(2, 7));
  const std::vector<Time> pair = {3, 8};
  EXPECT_EQ(nae_shift(pair), 0);
  const std::vector<Time> zeros = {0, 0, 0, 0, 0};
  EXPECT_EQ(nae_shift(zeros), 0);
}

TEST(ToNaeSat, PairScenario) {
  const Instance inst = make_instance({3, 5}, {{2, 1}});
  const ClauseSet cs = to_nae_sat(inst);
  ASSERT_EQ(cs.clauses.size(), 2u);
  // {1,2} | {} then {1} | {2}; lowest job first and positive.
  EXPECT_EQ(cs.clauses[0].literals,
            (std::vector<Literal>{{0, false}, {1, false}}));
  EXPECT_EQ(cs.clauses[1].literals,
            (std::vector<Literal>{{0, false}, {1, true}}));
  EXPECT_EQ(cs.clauses[0].weight, 3);
  EXPECT_EQ(cs.clauses[1].weight, 0);
  testing::for_each_assignment(2, [&](const Assignment& a) {
    const auto sat = nae_satisfied_by_scenario(
        cs, truth_from_assignment(cs, a), false);
    EXPECT_EQ(sat[0], Rational(a[0] != a[1] ? 3 : 0));
  });
}

TEST(ToNaeSat, ClauseCountsAndPadding) {
  const Instance inst = make_instance({2, 1, 1}, {{1, 2, 3}, {2, 3}, {2, 3}});
  const ClauseSet cs = to_nae_sat(inst);
  EXPECT_EQ(cs.clause_length, 3);
  EXPECT_EQ(cs.clauses.size(), 12u);
  EXPECT_EQ(cs.num_vars, 4);  // one shared zero-time padding job
  for (const auto& c : cs.clauses) EXPECT_EQ(c.literals.size(), 3u);
}

TEST(ToNaeSat, AllOnOneMachineSatisfiesNothing) {
  const Instance inst = random_instance(8, 6, 4, 9, 11);
  const ClauseSet cs = to_nae_sat(inst);
  const auto sat = nae_satisfied_by_scenario(
      cs, truth_from_assignment(cs, Assignment(8)), false);
  for (const Rational& s : sat) EXPECT_EQ(s, 0);
}

TEST(ToNaeSat, SizeCap) {
  const Instance inst = random_instance(10, 3, 10, 9, 1);
  if (inst.max_scenario_size() > 6) {
    EXPECT_THROW(to_nae_sat(inst), Error);
  }
  const Instance big(std::vector<Time>(7, 1), {{0, 1, 2, 3, 4, 5, 6}});
  EXPECT_THROW(to_nae_sat(big), Error);
  EXPECT_NO_THROW(to_nae_sat(big, 7));
}

TEST(ToNaeSat, SatisfiedWeightIsLeastLoad) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = random_instance(7, 4, 4, 9, seed);
    const ClauseSet cs = to_nae_sat(inst);
    const int clauses_per = 1 << (cs.clause_length - 1);
    testing::for_each_assignment(7, [&](const Assignment& a) {
      const auto truth = truth_from_assignment(cs, a);
      const auto base = nae_satisfied_by_scenario(cs, truth, false);
      const auto shifted = nae_satisfied_by_scenario(cs, truth, true);
      for (int i = 0; i < inst.num_scenarios(); ++i) {
        const Time least = naive_least_load(inst, inst.scenario(i), a);
        EXPECT_EQ(base[i], Rational(least));
        EXPECT_EQ(shifted[i], least + (clauses_per - 1) * cs.shifts[i]);
      }
      std::vector<int> satisfied(inst.num_scenarios(), 0);
      for (const auto& c : cs.clauses) {
        if (nae_satisfied(c, truth)) ++satisfied[c.scenario];
      }
      for (int count : satisfied) EXPECT_EQ(count, clauses_per - 1);
    });
    for (const auto& c : cs.clauses) EXPECT_GE(c.shifted_weight, 0);
  }
}

TEST(ClauseSetFormat, RoundTrip) {
  const Instance inst = random_instance(9, 5, 4, 9, 5);
  const ClauseSet cs = to_nae_sat(inst);
  const std::string text = serialize_clause_set(cs);
  std::istringstream in(text);
  const ClauseSet back = parse_clause_set(in);
  EXPECT_EQ(back, cs);
  EXPECT_EQ(serialize_clause_set(back), text);
}

TEST(ClauseSetFormat, Layout) {
  const Instance inst = make_instance({1, 2}, {{1, 2}});
  EXPECT_EQ(serialize_clause_set(to_nae_sat(inst)),
            "p nae 2 2 2 2\n"
            "c scenario 1 shift 0/1\n"
            "nae 1/1 1 2 0\n"
            "nae 0/1 1 -2 0\n");
  std::istringstream bad("p nae 2 1 2 2\nnae 1/1 1 2 0\n");
  EXPECT_THROW(parse_clause_set(bad), ParseError);
}

TEST(ToMaxcut3, UnitTriple) {
  const Instance inst = make_instance({1, 1, 1}, {{1, 2, 3}});
  const CutGraph g = to_maxcut3(inst);
  ASSERT_EQ(g.edges.size(), 3u);
  for (const auto& e : g.edges) EXPECT_EQ(e.weight, make_rational(1, 2));
  EXPECT_EQ(cut_weight(g, from_string("112")), 1);
  EXPECT_EQ(cut_weight(g, from_string("111")), 0);
}

TEST(ToMaxcut3, PairUsesSmallerTime) {
  const CutGraph g = to_maxcut3(make_instance({3, 1}, {{1, 2}}));
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(g.edges[0].weight, 1);
}

TEST(ToMaxcut3, UnbalancedTriple) {
  const CutGraph g = to_maxcut3(make_instance({5, 1, 1}, {{1, 2, 3}}));
  ASSERT_EQ(g.triples.size(), 1u);
  EXPECT_EQ(g.triples[0].b, (std::array<Time, 3>{2, 1, 1}));
  // Edges are {1,2}, {2,3}, {3,1}.
  EXPECT_EQ(g.edges[0].weight, 1);
  EXPECT_EQ(g.edges[1].weight, 0);
  EXPECT_EQ(g.edges[2].weight, 1);
}

TEST(ToMaxcut3, RejectsLargeScenarios) {
  EXPECT_THROW(to_maxcut3(make_instance({1, 1, 1, 1}, {{1, 2, 3, 4}})), Error);
  EXPECT_TRUE(to_maxcut3(make_instance({4}, {{1}})).edges.empty());
}

TEST(ToMaxcut3, CutWeightIsSummedLeastLoad) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance inst = random_instance(9, 7, 3, 9, seed);
    const CutGraph g = to_maxcut3(inst);
    for (const auto& e : g.edges) EXPECT_GE(e.weight, 0);
    for (const auto& t : g.triples) {
      auto w = [&](JobId a, JobId b) {
        for (const auto& e : g.edges) {
          if (e.scenario == t.scenario &&
              ((e.u == a && e.v == b) || (e.u == b && e.v == a))) {
            return e.weight;
          }
        }
        return Rational(-1);
      };
      const auto [i, j, k] = t.jobs;
      EXPECT_EQ(w(i, j) + w(i, k), Rational(t.b[0]));
      EXPECT_EQ(w(i, j) + w(j, k), Rational(t.b[1]));
      EXPECT_EQ(w(i, k) + w(j, k), Rational(t.b[2]));
    }
    testing::for_each_assignment(9, [&](const Assignment& a) {
      Time total = 0;
      for (const Scenario& s : inst.scenarios()) {
        total += naive_least_load(inst, s, a);
      }
      EXPECT_EQ(cut_weight(g, a), Rational(total));
    });
  }
}

TEST(CutGraphFormat, RoundTrip) {
  const CutGraph g = to_maxcut3(random_instance(8, 6, 3, 9, 3));
  const std::string text = serialize_cut_graph(g);
  std::istringstream in(text);
  const CutGraph back = parse_cut_graph(in);
  EXPECT_EQ(serialize_cut_graph(back), text);
  EXPECT_EQ(total_weight(back), total_weight(g));
}

TEST(ToVectorScheduling, WorkedExample) {
  const Instance inst = make_instance({2, 1, 1}, {{1, 2, 3}, {2, 3}, {2, 3}});
  const VectorSet vs = to_vector_scheduling(inst);
  EXPECT_EQ(vs.vectors[0], (std::vector<Time>{2, 0, 0}));
  EXPECT_EQ(vs.vectors[1], (std::vector<Time>{1, 1, 1}));
  EXPECT_EQ(vs.vectors[2], (std::vector<Time>{1, 1, 1}));
}

TEST(ToVectorScheduling, AbsentJobAndSingleScenario) {
  const Instance inst = make_instance({4, 7, 3}, {{1, 3}});
  const VectorSet vs = to_vector_scheduling(inst);
  EXPECT_EQ(vs.dimension, 1);
  EXPECT_EQ(vs.vectors[1], (std::vector<Time>{0}));
  EXPECT_EQ(vs.vectors[0], (std::vector<Time>{4}));
  EXPECT_THROW(to_vector_scheduling(inst, 1), Error);
}

TEST(ToVectorScheduling, NormEqualsMinmax) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = random_instance(8, 5, 5, 9, seed);
    const VectorSet vs = to_vector_scheduling(inst);
    testing::for_each_assignment(8, [&](const Assignment& a) {
      std::vector<int> part(8);
      for (int j = 0; j < 8; ++j) part[j] = static_cast<int>(a[j]);
      EXPECT_EQ(vector_makespan(vs, part), eval_minmax(a, inst));
    });
  }
}

TEST(GadgetFromMaxcut, Examples) {
  const SimpleGraph triangle{3, {{0, 1}, {1, 2}, {0, 2}}};
  const Instance k3 = gadget_from_maxcut(triangle);
  EXPECT_EQ(k3.num_jobs(), 3);
  EXPECT_EQ(k3.num_scenarios(), 3);
  EXPECT_EQ(brute_force(k3, Objective::kMinSum).value, 4);

  const Instance edge = gadget_from_maxcut({2, {{0, 1}}});
  EXPECT_EQ(brute_force(edge, Objective::kMinSum).value, 1);

  const Instance c4 = gadget_from_maxcut({4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}});
  EXPECT_EQ(brute_force(c4, Objective::kMinSum).value, 4);
}

TEST(GadgetFromMaxcut, RejectsNonSimpleGraphs) {
  EXPECT_THROW(gadget_from_maxcut({2, {{0, 0}}}), Error);
  EXPECT_THROW(gadget_from_maxcut({2, {{0, 1}, {1, 0}}}), Error);
  EXPECT_THROW(gadget_from_maxcut({2, {{0, 2}}}), Error);
}

TEST(GadgetFromSetSplitting, Examples) {
  const std::vector<std::vector<int>> single = {{0, 1, 2}};
  EXPECT_EQ(brute_force(gadget_from_set_splitting(3, single),
                        Objective::kMinMax).value,
            2);
  const std::vector<std::vector<int>> all_four = {
      {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  EXPECT_EQ(brute_force(gadget_from_set_splitting(4, all_four),
                        Objective::kMinMax).value,
            2);
  EXPECT_EQ(brute_force(gadget_from_set_splitting(4, {}), Objective::kMinMax)
                .value,
            0);
  const std::vector<std::vector<int>> bad = {{0, 1}};
  EXPECT_THROW(gadget_from_set_splitting(3, bad), Error);
}

}  // namespace
}  // namespace scensched
