#include "scensched/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "scensched/error.hpp"

namespace scensched {

namespace {

BigInt to_bigint(unsigned __int128 v) {
  BigInt out = static_cast<std::uint64_t>(v >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(v);
  return out;
}

// Scenario indices per job.
std::vector<std::vector<int>> scenarios_of_job(const Instance& inst) {
  std::vector<std::vector<int>> out(inst.num_jobs());
  for (int i = 0; i < inst.num_scenarios(); ++i) {
    for (JobId j : inst.scenario(i)) out[j].push_back(i);
  }
  return out;
}

}  // namespace

Optimum brute_force(const Instance& inst, Objective objective, int cap) {
  const int n = inst.num_jobs();
  if (n > cap) {
    throw_precondition("brute force: n = " + std::to_string(n) +
                       " exceeds cap " + std::to_string(cap));
  }
  if (n > 62) throw_precondition("brute force: n exceeds 62");
  if (n == 0) return {0, Assignment()};

  // Gray-code walk over the free jobs 2..n. Free job j maps to key bit
  // (n - 1 - j), so job 2 is the most significant bit and numeric order on
  // keys equals lexicographic order on assignment strings.
  const int free_jobs = n - 1;
  const int k = inst.num_scenarios();
  const auto job_scenarios = scenarios_of_job(inst);

  std::vector<Time> load2(k, 0);
  auto makespan = [&](int i) {
    const Time other = inst.scenario_total(i) - load2[i];
    return std::max(load2[i], other);
  };
  Time sum = 0;
  for (int i = 0; i < k; ++i) sum += makespan(i);
  auto current = [&]() {
    if (objective == Objective::kMinSum) return sum;
    Time worst = 0;
    for (int i = 0; i < k; ++i) worst = std::max(worst, makespan(i));
    return worst;
  };

  std::uint64_t key = 0;
  Time best = current();
  std::uint64_t best_key = 0;
  const std::uint64_t steps = std::uint64_t{1} << free_jobs;
  for (std::uint64_t c = 1; c < steps; ++c) {
    const int bit = std::countr_zero(c);
    const JobId job = n - 1 - bit;
    const bool to_m2 = ((key >> bit) & 1) == 0;
    key ^= std::uint64_t{1} << bit;
    const Time delta = to_m2 ? inst.proc(job) : -inst.proc(job);
    for (int i : job_scenarios[job]) {
      sum -= makespan(i);
      load2[i] += delta;
      sum += makespan(i);
    }
    const Time value = current();
    if (value < best || (value == best && key < best_key)) {
      best = value;
      best_key = key;
    }
  }

  Assignment witness(n);
  for (JobId j = 1; j < n; ++j) {
    if ((best_key >> (n - 1 - j)) & 1) witness.set(j, Machine::kM2);
  }
  return {best, std::move(witness)};
}

std::vector<JobType> job_types(const Instance& inst) {
  if (inst.num_scenarios() > 32) {
    throw_precondition("job types need at most 32 scenarios");
  }
  std::vector<std::uint32_t> signature(inst.num_jobs(), 0);
  for (int i = 0; i < inst.num_scenarios(); ++i) {
    for (JobId j : inst.scenario(i)) signature[j] |= std::uint32_t{1} << i;
  }
  std::map<std::uint32_t, JobType> by_signature;
  for (JobId j = 0; j < inst.num_jobs(); ++j) {
    JobType& t = by_signature[signature[j]];
    t.signature = signature[j];
    ++t.count;
    t.members.push_back(j);
  }
  std::vector<JobType> out;
  out.reserve(by_signature.size());
  for (auto& [sig, t] : by_signature) out.push_back(std::move(t));
  return out;
}

Optimum unit_dp(const Instance& inst, Objective objective, int scenario_cap) {
  if (!inst.all_unit()) throw_precondition("unit_dp: non-unit processing time");
  const int k = inst.num_scenarios();
  if (k > scenario_cap) {
    throw_precondition("unit_dp: k = " + std::to_string(k) + " exceeds cap " +
                       std::to_string(scenario_cap));
  }
  const auto types = job_types(inst);
  const int num_types = static_cast<int>(types.size());

  std::vector<int> on_m1(num_types, 0);
  std::vector<Time> load1(k, 0);
  auto value = [&]() {
    Time worst = 0, sum = 0;
    for (int i = 0; i < k; ++i) {
      const Time size = inst.scenario_total(i);
      const Time ms = std::max(load1[i], size - load1[i]);
      worst = std::max(worst, ms);
      sum += ms;
    }
    return objective == Objective::kMinMax ? worst : sum;
  };
  auto add = [&](int t, int delta) {
    for (int i = 0; i < k; ++i) {
      if ((types[t].signature >> i) & 1) load1[i] += delta;
    }
  };

  // Odometer over count vectors. Start from "everything on M2".
  Time best = value();
  std::vector<int> best_counts = on_m1;
  while (true) {
    int t = 0;
    while (t < num_types && on_m1[t] == types[t].count) {
      add(t, -on_m1[t]);
      on_m1[t] = 0;
      ++t;
    }
    if (t == num_types) break;
    ++on_m1[t];
    add(t, 1);
    const Time v = value();
    if (v < best) {
      best = v;
      best_counts = on_m1;
    }
  }

  Assignment witness(inst.num_jobs(), Machine::kM2);
  for (int t = 0; t < num_types; ++t) {
    for (int c = 0; c < best_counts[t]; ++c) {
      witness.set(types[t].members[c], Machine::kM1);
    }
  }
  return {best, std::move(witness)};
}

RandomProfile exact_random_profile(const Scenario& s, const Instance& inst,
                                   int cap) {
  const int size = static_cast<int>(s.size());
  if (size > cap || size > 62) {
    throw_precondition("random profile: |S| = " + std::to_string(size) +
                       " exceeds cap " + std::to_string(cap));
  }
  Time total = 0;
  for (JobId j : s) total += inst.proc(j);

  unsigned __int128 sum_min = 0, sum_max = 0;
  Time load2 = 0;
  std::uint64_t mask = 0;
  const std::uint64_t outcomes = std::uint64_t{1} << size;
  for (std::uint64_t c = 0; c < outcomes; ++c) {
    if (c > 0) {
      const int bit = std::countr_zero(c);
      mask ^= std::uint64_t{1} << bit;
      load2 += ((mask >> bit) & 1) ? inst.proc(s[bit]) : -inst.proc(s[bit]);
    }
    const Time load1 = total - load2;
    sum_min += static_cast<unsigned __int128>(std::min(load1, load2));
    sum_max += static_cast<unsigned __int128>(std::max(load1, load2));
  }
  const BigInt denominator = BigInt(1) << size;
  return {Rational(to_bigint(sum_min), denominator),
          Rational(to_bigint(sum_max), denominator)};
}

Rational expected_random_minsum(const Instance& inst, int cap) {
  Rational sum = 0;
  for (const Scenario& s : inst.scenarios()) {
    sum += exact_random_profile(s, inst, cap).expected_max;
  }
  return sum;
}

}  // namespace scensched
