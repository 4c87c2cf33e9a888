#pragma once

// Plumbing behind the command-line tool: algorithm dispatch, solution files,
// CSV reports and the batch comparison driver.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scensched/core.hpp"
#include "scensched/oracle.hpp"
#include "scensched/reductions.hpp"
#include "scensched/solvers.hpp"

namespace scensched {

enum class Algorithm {
  kBrute, kUnitDp, kPairs, kRandom, kDerand, kCutExact, kCutLocalSearch,
  kNaeExact, kNaeLocalSearch, kVectorList,
};

Algorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm alg);

// The objective an algorithm optimizes when none is requested.
Objective natural_objective(Algorithm alg);
bool supports(Algorithm alg, Objective objective);

struct Caps {
  int brute = kDefaultBruteForceCap;
  int unit_dp_k = kDefaultUnitDpScenarioCap;
  int nae_r = kDefaultNaeSizeCap;
  int cut_n = kDefaultExactVertexCap;  // also bounds exact Max-NAE variables
  int derand_r = kDefaultDerandSizeCap;
};

struct RunConfig {
  std::string command;
  std::string input;
  std::string output;
  std::optional<Objective> objective;
  Algorithm algorithm = Algorithm::kBrute;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;
  Caps caps;
};

// Throws Error(kUsage) on nonpositive caps or zero trials, and when the
// algorithm cannot optimize the requested objective.
void validate(const RunConfig& config);

Objective effective_objective(const RunConfig& config);

struct SolveOutcome {
  Assignment assignment;
  Time value = 0;  // under the effective objective
  Time minmax = 0;
  Time minsum = 0;
};

// Throws Error(kPrecondition) when the instance violates the algorithm's
// preconditions or a cap.
SolveOutcome run_algorithm(const Instance& inst, const RunConfig& config);

// serialize_assignment() plus "minmax <v>" and "minsum <v>" lines.
std::string format_solution(const SolveOutcome& outcome);

struct ReportRow {
  std::string instance;
  int n = 0;
  int k = 0;
  int r = 0;
  std::string algorithm;
  Objective objective = Objective::kMinSum;
  Time value = 0;
  std::optional<Time> optimum;
  std::uint64_t seed = 0;
  double ms = 0;

  // value / optimum, present iff the oracle ran. 0/0 counts as 1.
  std::optional<double> ratio() const;
};

inline constexpr std::string_view kReportHeader =
    "instance,n,k,r,alg,objective,value,opt,ratio,seed,ms";

std::string format_report_row(const ReportRow& row);

// Exact optimum if an oracle fits within the caps: brute force, or the unit
// job enumeration for unit instances with few scenarios.
std::optional<Time> oracle_value(const Instance& inst, Objective objective,
                                 const Caps& caps);

// Expands a shell glob (or a directory) into sorted file paths.
std::vector<std::string> expand_instances(const std::string& pattern);

// CSV report for every (instance, algorithm) pair, rows in path order then
// algorithm order. Parse failures and precondition violations become
// "# failed ..." trailer lines; the run continues.
std::string compare(const std::vector<std::string>& paths,
                    const std::vector<Algorithm>& algorithms,
                    const RunConfig& config);

// Source files for the gadget generators.
//   vertices <n>          objects <n>
//   <u> <v>   (1-based)   <a> <b> <c>   (1-based)
SimpleGraph parse_graph(std::istream& in);
std::vector<std::vector<int>> parse_set_family(std::istream& in,
                                               int& num_objects);

}  // namespace scensched
