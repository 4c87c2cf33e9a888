#include "scensched/solvers.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "scensched/error.hpp"

namespace scensched {

Assignment random_trial(int num_jobs, std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 gen(seq);
  Assignment a(num_jobs);
  std::uint64_t word = 0;
  for (JobId j = 0; j < num_jobs; ++j) {
    if (j % 64 == 0) word = gen();
    if ((word >> (j % 64)) & 1) a.set(j, Machine::kM2);
  }
  return a;
}

TrialResult random_assign(const Instance& inst, Objective objective,
                          std::uint64_t seed, std::uint64_t trials) {
  if (trials == 0) throw Error(ErrorKind::kUsage, "trials must be positive");
  TrialResult best;
  best.seed = seed;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Assignment a = random_trial(inst.num_jobs(), seed, t);
    const Time minsum = eval_minsum(a, inst);
    const Time minmax = eval_minmax(a, inst);
    const Time value = objective == Objective::kMinSum ? minsum : minmax;
    const Time incumbent =
        objective == Objective::kMinSum ? best.minsum : best.minmax;
    if (t == 0 || value < incumbent) {
      best.trial = t;
      best.assignment = std::move(a);
      best.minsum = minsum;
      best.minmax = minmax;
    }
  }
  return best;
}

namespace {

// Sum over the 2^u completions of the scenario makespan, u = number of jobs
// of s at or beyond `decided`.
struct ScaledExpectation {
  unsigned __int128 sum = 0;
  int undecided = 0;
};

ScaledExpectation scenario_expectation(const Instance& inst, const Scenario& s,
                                       const Assignment& partial, int decided) {
  Time fixed1 = 0, fixed2 = 0;
  std::vector<Time> free_times;
  for (JobId j : s) {
    if (j < decided) {
      (partial[j] == Machine::kM1 ? fixed1 : fixed2) += inst.proc(j);
    } else {
      free_times.push_back(inst.proc(j));
    }
  }
  Time free_total = 0;
  for (Time p : free_times) free_total += p;

  ScaledExpectation out;
  out.undecided = static_cast<int>(free_times.size());
  Time on_m2 = 0;
  std::uint64_t mask = 0;
  const std::uint64_t outcomes = std::uint64_t{1} << out.undecided;
  for (std::uint64_t c = 0; c < outcomes; ++c) {
    if (c > 0) {
      const int bit = std::countr_zero(c);
      mask ^= std::uint64_t{1} << bit;
      on_m2 += ((mask >> bit) & 1) ? free_times[bit] : -free_times[bit];
    }
    const Time l1 = fixed1 + free_total - on_m2;
    const Time l2 = fixed2 + on_m2;
    out.sum += static_cast<unsigned __int128>(std::max(l1, l2));
  }
  return out;
}

BigInt to_bigint(unsigned __int128 v) {
  BigInt out = static_cast<std::uint64_t>(v >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(v);
  return out;
}

}  // namespace

Rational conditional_expected_minsum(const Instance& inst,
                                     const Assignment& partial, int decided) {
  Rational total = 0;
  for (const Scenario& s : inst.scenarios()) {
    const auto e = scenario_expectation(inst, s, partial, decided);
    total += Rational(to_bigint(e.sum), BigInt(1) << e.undecided);
  }
  return total;
}

Assignment derandomized_assign(const Instance& inst, int size_cap) {
  const int r = inst.max_scenario_size();
  if (r > size_cap) {
    throw_precondition("derand: scenario size r = " + std::to_string(r) +
                       " exceeds cap " + std::to_string(size_cap));
  }
  if (r > 62) throw_precondition("derand: scenario size exceeds 62");

  std::vector<std::vector<int>> job_scenarios(inst.num_jobs());
  for (int i = 0; i < inst.num_scenarios(); ++i) {
    for (JobId j : inst.scenario(i)) job_scenarios[j].push_back(i);
  }

  // Only scenarios containing job j change with its placement. Both options
  // leave the same jobs undecided per scenario, so every scenario's sum is
  // scaled to the common denominator 2^r and compared as integers.
  Assignment a(inst.num_jobs());
  for (JobId j = 0; j < inst.num_jobs(); ++j) {
    unsigned __int128 cost[2] = {0, 0};
    for (Machine m : {Machine::kM1, Machine::kM2}) {
      a.set(j, m);
      for (int i : job_scenarios[j]) {
        const auto e = scenario_expectation(inst, inst.scenario(i), a, j + 1);
        cost[static_cast<int>(m)] += e.sum << (r - e.undecided);
      }
    }
    a.set(j, cost[1] < cost[0] ? Machine::kM2 : Machine::kM1);
  }
  return a;
}

namespace {

// Integer image of nonnegative rational weights: every weight times the
// common denominator.
std::vector<std::int64_t> scale_to_integers(const std::vector<Rational>& w,
                                            BigInt& scale) {
  scale = 1;
  for (const Rational& q : w) {
    scale = boost::multiprecision::lcm(scale,
                                       boost::multiprecision::denominator(q));
  }
  std::vector<std::int64_t> out;
  out.reserve(w.size());
  BigInt total = 0;
  for (const Rational& q : w) {
    BigInt v = boost::multiprecision::numerator(q) * (scale /
               boost::multiprecision::denominator(q));
    total += abs(v);
    out.push_back(0);
    if (total > BigInt(std::numeric_limits<std::int64_t>::max() / 2)) {
      throw_precondition("weights too large for exact integer search");
    }
    out.back() = v.convert_to<std::int64_t>();
  }
  return out;
}

struct Incidence {
  int other;
  std::int64_t weight;
};

std::vector<std::vector<Incidence>> cut_adjacency(
    const CutGraph& g, const std::vector<std::int64_t>& w) {
  std::vector<std::vector<Incidence>> adj(g.num_vertices);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    if (edge.u == edge.v) continue;
    adj[edge.u].push_back({edge.v, w[e]});
    adj[edge.v].push_back({edge.u, w[e]});
  }
  return adj;
}

std::vector<Rational> edge_weights(const CutGraph& g) {
  std::vector<Rational> w;
  w.reserve(g.edges.size());
  for (const auto& e : g.edges) w.push_back(e.weight);
  return w;
}

}  // namespace

Cut exact_maxcut(const CutGraph& g, int vertex_cap) {
  const int n = g.num_vertices;
  if (n > vertex_cap || n > 62) {
    throw_precondition("exact max cut: " + std::to_string(n) +
                       " vertices exceed cap " + std::to_string(vertex_cap));
  }
  if (n == 0) return {Assignment(), Rational(0)};
  BigInt scale;
  const auto w = scale_to_integers(edge_weights(g), scale);
  const auto adj = cut_adjacency(g, w);

  // Same Gray-code walk and key order as brute_force.
  std::vector<char> right(n, 0);
  std::int64_t weight = 0, best = 0;
  std::uint64_t key = 0, best_key = 0;
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t c = 1; c < steps; ++c) {
    const int bit = std::countr_zero(c);
    const int v = n - 1 - bit;
    for (const Incidence& inc : adj[v]) {
      weight += right[inc.other] == right[v] ? inc.weight : -inc.weight;
    }
    right[v] ^= 1;
    key ^= std::uint64_t{1} << bit;
    if (weight > best || (weight == best && key < best_key)) {
      best = weight;
      best_key = key;
    }
  }
  Assignment side(n);
  for (int v = 1; v < n; ++v) {
    if ((best_key >> (n - 1 - v)) & 1) side.set(v, Machine::kM2);
  }
  return {std::move(side), Rational(BigInt(best), scale)};
}

Cut local_search_cut(const CutGraph& g, std::uint64_t seed) {
  const int n = g.num_vertices;
  BigInt scale;
  const auto w = scale_to_integers(edge_weights(g), scale);
  const auto adj = cut_adjacency(g, w);

  Assignment side = random_trial(n, seed, 0);
  bool improved = true;
  while (improved) {
    improved = false;
    for (int v = 0; v < n; ++v) {
      std::int64_t gain = 0;
      for (const Incidence& inc : adj[v]) {
        gain += side[inc.other] == side[v] ? inc.weight : -inc.weight;
      }
      if (gain > 0) {
        side.set(v, other(side[v]));
        improved = true;
      }
    }
  }
  Rational weight = cut_weight(g, side);
  return {std::move(side), std::move(weight)};
}

namespace {

struct NaeIndex {
  std::vector<std::int64_t> weight;
  std::vector<int> length;
  // Per variable: (clause, negated) occurrences.
  std::vector<std::vector<std::pair<int, bool>>> occurs;
};

NaeIndex index_clauses(const ClauseSet& cs) {
  NaeIndex idx;
  std::vector<Rational> w;
  w.reserve(cs.clauses.size());
  for (const auto& c : cs.clauses) w.push_back(c.shifted_weight);
  BigInt scale;
  idx.weight = scale_to_integers(w, scale);
  idx.occurs.resize(cs.num_vars);
  for (std::size_t c = 0; c < cs.clauses.size(); ++c) {
    idx.length.push_back(static_cast<int>(cs.clauses[c].literals.size()));
    for (const Literal& lit : cs.clauses[c].literals) {
      idx.occurs[lit.var].push_back({static_cast<int>(c), lit.negated});
    }
  }
  return idx;
}

bool clause_sat(int true_literals, int length) {
  return true_literals > 0 && true_literals < length;
}

Rational satisfied_weight(const ClauseSet& cs, std::span<const char> truth) {
  Rational sum = 0;
  for (const auto& c : cs.clauses) {
    if (nae_satisfied(c, truth)) sum += c.shifted_weight;
  }
  return sum;
}

}  // namespace

NaeSolution exact_max_nae(const ClauseSet& cs, int var_cap) {
  const int n = cs.num_vars;
  if (n > var_cap || n > 62) {
    throw_precondition("exact max-nae: " + std::to_string(n) +
                       " variables exceed cap " + std::to_string(var_cap));
  }
  if (n == 0) return {{}, Rational(0)};
  const NaeIndex idx = index_clauses(cs);

  // All variables true to start; key bit (n - 1 - v) set means v is false.
  std::vector<char> truth(n, 1);
  std::vector<int> true_count(cs.clauses.size(), 0);
  for (std::size_t c = 0; c < cs.clauses.size(); ++c) {
    for (const Literal& lit : cs.clauses[c].literals) {
      if (!lit.negated) ++true_count[c];
    }
  }
  std::int64_t weight = 0;
  for (std::size_t c = 0; c < cs.clauses.size(); ++c) {
    if (clause_sat(true_count[c], idx.length[c])) weight += idx.weight[c];
  }
  std::int64_t best = weight;
  std::uint64_t key = 0, best_key = 0;
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t step = 1; step < steps; ++step) {
    const int bit = std::countr_zero(step);
    const int v = n - 1 - bit;
    const bool now_true = !truth[v];
    truth[v] = now_true ? 1 : 0;
    key ^= std::uint64_t{1} << bit;
    for (auto [c, negated] : idx.occurs[v]) {
      const bool was_sat = clause_sat(true_count[c], idx.length[c]);
      true_count[c] += (now_true != negated) ? 1 : -1;
      const bool is_sat = clause_sat(true_count[c], idx.length[c]);
      if (was_sat != is_sat) weight += is_sat ? idx.weight[c] : -idx.weight[c];
    }
    if (weight > best || (weight == best && key < best_key)) {
      best = weight;
      best_key = key;
    }
  }
  NaeSolution out;
  out.truth.assign(n, 1);
  for (int v = 1; v < n; ++v) {
    if ((best_key >> (n - 1 - v)) & 1) out.truth[v] = 0;
  }
  out.satisfied = satisfied_weight(cs, out.truth);
  return out;
}

NaeSolution local_search_nae(const ClauseSet& cs, std::uint64_t seed) {
  const int n = cs.num_vars;
  const NaeIndex idx = index_clauses(cs);
  const Assignment start = random_trial(n, seed, 0);
  std::vector<char> truth(n);
  for (int v = 0; v < n; ++v) truth[v] = start[v] == Machine::kM1 ? 1 : 0;

  std::vector<int> true_count(cs.clauses.size(), 0);
  for (std::size_t c = 0; c < cs.clauses.size(); ++c) {
    for (const Literal& lit : cs.clauses[c].literals) {
      if ((truth[lit.var] != 0) != lit.negated) ++true_count[c];
    }
  }
  bool improved = true;
  while (improved) {
    improved = false;
    for (int v = 0; v < n; ++v) {
      std::int64_t gain = 0;
      const bool now_true = !truth[v];
      for (auto [c, negated] : idx.occurs[v]) {
        const int after = true_count[c] + ((now_true != negated) ? 1 : -1);
        const bool was_sat = clause_sat(true_count[c], idx.length[c]);
        const bool is_sat = clause_sat(after, idx.length[c]);
        if (was_sat != is_sat) gain += is_sat ? idx.weight[c] : -idx.weight[c];
      }
      if (gain > 0) {
        truth[v] = now_true ? 1 : 0;
        for (auto [c, negated] : idx.occurs[v]) {
          true_count[c] += (now_true != negated) ? 1 : -1;
        }
        improved = true;
      }
    }
  }
  NaeSolution out;
  out.satisfied = satisfied_weight(cs, truth);
  out.truth = std::move(truth);
  return out;
}

Assignment solve_sm2_via_cut(const Instance& inst, Backend backend,
                             std::uint64_t seed, const SolverCaps& caps) {
  const CutGraph g = to_maxcut3(inst);
  Cut cut = backend == Backend::kExact ? exact_maxcut(g, caps.exact_vertices)
                                       : local_search_cut(g, seed);
  return std::move(cut.side);
}

Assignment solve_sm2_via_nae(const Instance& inst, Backend backend,
                             std::uint64_t seed, const SolverCaps& caps) {
  const ClauseSet cs = to_nae_sat(inst, caps.nae_size);
  const NaeSolution sol = backend == Backend::kExact
                              ? exact_max_nae(cs, caps.exact_vertices)
                              : local_search_nae(cs, seed);
  return assignment_from_truth(cs, sol.truth);
}

std::vector<int> vector_list_schedule(const VectorSet& vs) {
  if (vs.machines < 2) throw_precondition("vector scheduling needs m >= 2");
  const int n = static_cast<int>(vs.vectors.size());
  auto norm = [](const std::vector<Time>& v) {
    Time m = 0;
    for (Time x : v) m = std::max(m, x);
    return m;
  };
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return norm(vs.vectors[a]) > norm(vs.vectors[b]);
  });

  std::vector<std::vector<Time>> load(vs.machines,
                                      std::vector<Time>(vs.dimension, 0));
  std::vector<Time> machine_norm(vs.machines, 0);
  std::vector<int> part(n, 0);
  for (int j : order) {
    int best_machine = 0;
    Time best_overall = 0, best_own = 0;
    for (int m = 0; m < vs.machines; ++m) {
      Time own = 0;
      for (int d = 0; d < vs.dimension; ++d) {
        own = std::max(own, load[m][d] + vs.vectors[j][d]);
      }
      Time overall = own;
      for (int o = 0; o < vs.machines; ++o) {
        if (o != m) overall = std::max(overall, machine_norm[o]);
      }
      if (m == 0 || overall < best_overall ||
          (overall == best_overall && own < best_own)) {
        best_machine = m;
        best_overall = overall;
        best_own = own;
      }
    }
    part[j] = best_machine;
    for (int d = 0; d < vs.dimension; ++d) {
      load[best_machine][d] += vs.vectors[j][d];
    }
    machine_norm[best_machine] = best_own;
  }
  return part;
}

}  // namespace scensched
