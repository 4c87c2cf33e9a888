#pragma once

// Two-machine scheduling over an explicit list of scenarios.
//
// A single assignment of jobs to machines M1/M2 is fixed up front; every
// scenario (a subset of jobs) is then executed under that assignment. The
// MinMax objective takes the worst scenario makespan, MinSum adds them up.
//
// Job ids are 0-based inside the library and 1-based in every text format.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scensched {

using JobId = int;
using Time = std::int64_t;
using Scenario = std::vector<JobId>;

enum class Objective { kMinMax, kMinSum };

std::string_view objective_name(Objective objective);
Objective parse_objective(std::string_view name);

enum class Machine : std::uint8_t { kM1 = 0, kM2 = 1 };

inline Machine other(Machine m) {
  return m == Machine::kM1 ? Machine::kM2 : Machine::kM1;
}

class Instance {
 public:
  Instance() = default;

  // Throws Error(kPrecondition) on an empty scenario, an out-of-range or
  // repeated job id, a negative processing time, or when p(J) * k does not
  // fit in 64 bits.
  Instance(std::vector<Time> proc, std::vector<Scenario> scenarios);

  int num_jobs() const { return static_cast<int>(proc_.size()); }
  int num_scenarios() const { return static_cast<int>(scenarios_.size()); }

  // r: the size of the largest scenario, 0 when there are none.
  int max_scenario_size() const { return max_size_; }

  Time proc(JobId j) const { return proc_[j]; }
  std::span<const Time> proc() const { return proc_; }

  const Scenario& scenario(int i) const { return scenarios_[i]; }
  std::span<const Scenario> scenarios() const { return scenarios_; }

  // p(S_i).
  Time scenario_total(int i) const { return totals_[i]; }

  bool all_unit() const;

 private:
  std::vector<Time> proc_;
  std::vector<Scenario> scenarios_;
  std::vector<Time> totals_;
  int max_size_ = 0;
};

// A two-way partition of the job set; the same partition serves every
// scenario.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int num_jobs, Machine fill = Machine::kM1)
      : side_(num_jobs, fill) {}
  explicit Assignment(std::vector<Machine> side) : side_(std::move(side)) {}

  // Bit j of mask set puts job j on M2.
  static Assignment from_mask(int num_jobs, std::uint64_t mask);

  int size() const { return static_cast<int>(side_.size()); }
  Machine operator[](JobId j) const { return side_[j]; }
  void set(JobId j, Machine m) { side_[j] = m; }

  Assignment swapped() const;

  // One character per job, '1' or '2'. Lexicographic order on these strings
  // is the tie-break order used by the exhaustive solvers.
  std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<Machine> side_;
};

struct LoadPair {
  Time load1 = 0;
  Time load2 = 0;

  Time makespan() const { return load1 > load2 ? load1 : load2; }
  Time least() const { return load1 < load2 ? load1 : load2; }
  friend bool operator==(const LoadPair&, const LoadPair&) = default;
};

LoadPair scenario_loads(const Assignment& a, const Scenario& s,
                        const Instance& inst);

Time eval_minmax(const Assignment& a, const Instance& inst);
Time eval_minsum(const Assignment& a, const Instance& inst);
Time evaluate(const Assignment& a, const Instance& inst, Objective objective);

// Instance text format:
//   jobs <n>
//   p <p_1> ... <p_n>
//   scenarios <k>
//   S <id> <id> ...      (k lines, 1-based ids)
// Lines starting with '#' and blank lines are skipped. Throws ParseError.
Instance parse_instance(std::istream& in);
Instance parse_instance_text(std::string_view text);
Instance load_instance(const std::string& path);

// Canonical form: single spaces, trailing newline, no comments.
std::string serialize_instance(const Instance& inst);

// Solution format written by the CLI:
//   M1 <ids>
//   M2 <ids>
// followed by optional "minmax <v>" / "minsum <v>" lines.
std::string serialize_assignment(const Assignment& a);
Assignment parse_assignment(std::istream& in, int num_jobs);

}  // namespace scensched
