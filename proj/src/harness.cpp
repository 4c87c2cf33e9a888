#include "scensched/harness.hpp"

#include <glob.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <istream>
#include <map>
#include <sstream>

#include "scensched/error.hpp"
#include "scensched/pairs.hpp"

namespace scensched {

namespace {

struct AlgorithmInfo {
  Algorithm alg;
  std::string_view name;
  Objective natural;
  bool both_objectives;
};

constexpr AlgorithmInfo kAlgorithms[] = {
    {Algorithm::kBrute, "brute", Objective::kMinSum, true},
    {Algorithm::kUnitDp, "unit_dp", Objective::kMinSum, true},
    {Algorithm::kPairs, "pairs", Objective::kMinMax, false},
    {Algorithm::kRandom, "random", Objective::kMinSum, true},
    {Algorithm::kDerand, "derand", Objective::kMinSum, false},
    {Algorithm::kCutExact, "cut_exact", Objective::kMinSum, false},
    {Algorithm::kCutLocalSearch, "cut_ls", Objective::kMinSum, false},
    {Algorithm::kNaeExact, "nae_exact", Objective::kMinSum, false},
    {Algorithm::kNaeLocalSearch, "nae_ls", Objective::kMinSum, false},
    {Algorithm::kVectorList, "vector_list", Objective::kMinMax, false},
};

const AlgorithmInfo& info(Algorithm alg) {
  return kAlgorithms[static_cast<int>(alg)];
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

}  // namespace

Algorithm parse_algorithm(std::string_view name) {
  for (const auto& a : kAlgorithms) {
    if (a.name == name) return a.alg;
  }
  throw Error(ErrorKind::kUsage, "unknown algorithm '" + std::string(name) +
                                     "'");
}

std::string_view algorithm_name(Algorithm alg) { return info(alg).name; }

Objective natural_objective(Algorithm alg) { return info(alg).natural; }

bool supports(Algorithm alg, Objective objective) {
  return info(alg).both_objectives || info(alg).natural == objective;
}

void validate(const RunConfig& config) {
  const Caps& c = config.caps;
  if (c.brute <= 0 || c.unit_dp_k <= 0 || c.nae_r <= 0 || c.cut_n <= 0 ||
      c.derand_r <= 0) {
    throw Error(ErrorKind::kUsage, "caps must be positive");
  }
  if (config.trials == 0) {
    throw Error(ErrorKind::kUsage, "trials must be positive");
  }
  if (config.objective && !supports(config.algorithm, *config.objective)) {
    throw Error(ErrorKind::kUsage,
                std::string(algorithm_name(config.algorithm)) +
                    " does not optimize " +
                    std::string(objective_name(*config.objective)));
  }
}

Objective effective_objective(const RunConfig& config) {
  return config.objective.value_or(natural_objective(config.algorithm));
}

SolveOutcome run_algorithm(const Instance& inst, const RunConfig& config) {
  const Objective objective = effective_objective(config);
  const Caps& caps = config.caps;
  const SolverCaps solver_caps{caps.cut_n, caps.nae_r};
  Assignment a;
  switch (config.algorithm) {
    case Algorithm::kBrute:
      a = brute_force(inst, objective, caps.brute).witness;
      break;
    case Algorithm::kUnitDp:
      a = unit_dp(inst, objective, caps.unit_dp_k).witness;
      break;
    case Algorithm::kPairs:
      a = solve_pairs(inst).witness;
      break;
    case Algorithm::kRandom:
      a = random_assign(inst, objective, config.seed, config.trials).assignment;
      break;
    case Algorithm::kDerand:
      a = derandomized_assign(inst, caps.derand_r);
      break;
    case Algorithm::kCutExact:
      a = solve_sm2_via_cut(inst, Backend::kExact, config.seed, solver_caps);
      break;
    case Algorithm::kCutLocalSearch:
      a = solve_sm2_via_cut(inst, Backend::kLocalSearch, config.seed,
                            solver_caps);
      break;
    case Algorithm::kNaeExact:
      a = solve_sm2_via_nae(inst, Backend::kExact, config.seed, solver_caps);
      break;
    case Algorithm::kNaeLocalSearch:
      a = solve_sm2_via_nae(inst, Backend::kLocalSearch, config.seed,
                            solver_caps);
      break;
    case Algorithm::kVectorList: {
      const auto part = vector_list_schedule(to_vector_scheduling(inst, 2));
      a = Assignment(inst.num_jobs());
      for (JobId j = 0; j < inst.num_jobs(); ++j) {
        if (part[j] == 1) a.set(j, Machine::kM2);
      }
      break;
    }
  }
  SolveOutcome out;
  out.minmax = eval_minmax(a, inst);
  out.minsum = eval_minsum(a, inst);
  out.value = objective == Objective::kMinMax ? out.minmax : out.minsum;
  out.assignment = std::move(a);
  return out;
}

std::string format_solution(const SolveOutcome& outcome) {
  return serialize_assignment(outcome.assignment) + "minmax " +
         std::to_string(outcome.minmax) + "\nminsum " +
         std::to_string(outcome.minsum) + "\n";
}

std::optional<double> ReportRow::ratio() const {
  if (!optimum) return std::nullopt;
  if (*optimum == 0) return value == 0 ? 1.0 : HUGE_VAL;
  return static_cast<double>(value) / static_cast<double>(*optimum);
}

std::string format_report_row(const ReportRow& row) {
  std::ostringstream out;
  out << csv_field(row.instance) << ',' << row.n << ',' << row.k << ','
      << row.r << ',' << row.algorithm << ',' << objective_name(row.objective)
      << ',' << row.value << ',';
  if (row.optimum) out << *row.optimum;
  out << ',';
  if (auto q = row.ratio()) out << fixed(*q, 6);
  out << ',' << row.seed << ',' << fixed(row.ms, 3);
  return out.str();
}

std::optional<Time> oracle_value(const Instance& inst, Objective objective,
                                 const Caps& caps) {
  if (inst.num_jobs() <= caps.brute) {
    return brute_force(inst, objective, caps.brute).value;
  }
  if (inst.all_unit() && inst.num_scenarios() <= caps.unit_dp_k) {
    return unit_dp(inst, objective, caps.unit_dp_k).value;
  }
  return std::nullopt;
}

std::vector<std::string> expand_instances(const std::string& pattern) {
  std::vector<std::string> out;
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_directory(pattern, ec)) {
    for (const auto& entry : fs::directory_iterator(pattern)) {
      if (entry.is_regular_file()) out.push_back(entry.path().string());
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  glob_t matches{};
  if (::glob(pattern.c_str(), 0, nullptr, &matches) == 0) {
    for (std::size_t i = 0; i < matches.gl_pathc; ++i) {
      out.emplace_back(matches.gl_pathv[i]);
    }
  }
  ::globfree(&matches);
  std::sort(out.begin(), out.end());
  return out;
}

std::string compare(const std::vector<std::string>& paths,
                    const std::vector<Algorithm>& algorithms,
                    const RunConfig& config) {
  std::string csv = std::string(kReportHeader) + "\n";
  std::vector<std::string> failures;
  for (const std::string& path : paths) {
    Instance inst;
    try {
      inst = load_instance(path);
    } catch (const Error& e) {
      failures.push_back(path + ": " + e.what());
      continue;
    }
    std::map<Objective, std::optional<Time>> optimum;
    for (Algorithm alg : algorithms) {
      RunConfig run = config;
      run.algorithm = alg;
      const Objective objective = effective_objective(run);
      if (!supports(alg, objective)) {
        failures.push_back(path + ": " + std::string(algorithm_name(alg)) +
                           " does not optimize " +
                           std::string(objective_name(objective)));
        continue;
      }
      ReportRow row;
      row.instance = path;
      row.n = inst.num_jobs();
      row.k = inst.num_scenarios();
      row.r = inst.max_scenario_size();
      row.algorithm = algorithm_name(alg);
      row.objective = objective;
      row.seed = config.seed;
      try {
        const auto start = std::chrono::steady_clock::now();
        const SolveOutcome outcome = run_algorithm(inst, run);
        const auto stop = std::chrono::steady_clock::now();
        row.value = outcome.value;
        row.ms = std::chrono::duration<double, std::milli>(stop - start).count();
        if (!optimum.contains(objective)) {
          optimum[objective] = oracle_value(inst, objective, config.caps);
        }
        row.optimum = optimum[objective];
      } catch (const Error& e) {
        failures.push_back(path + ": " + std::string(algorithm_name(alg)) +
                           ": " + e.what());
        continue;
      }
      csv += format_report_row(row) + "\n";
    }
  }
  for (const std::string& f : failures) csv += "# failed " + f + "\n";
  return csv;
}

namespace {

bool next_content_line(std::istream& in, std::vector<long long>& values,
                       std::string& head, int& line) {
  std::string buffer;
  while (std::getline(in, buffer)) {
    ++line;
    const auto first = buffer.find_first_not_of(" \t\r");
    if (first == std::string::npos || buffer[first] == '#') continue;
    std::istringstream words(buffer);
    values.clear();
    head.clear();
    std::string w;
    while (words >> w) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(w, &used);
        if (used != w.size()) throw std::invalid_argument(w);
        values.push_back(v);
      } catch (const std::exception&) {
        if (!head.empty() || !values.empty()) {
          throw ParseError(line, "unexpected token '" + w + "'");
        }
        head = w;
      }
    }
    return true;
  }
  return false;
}

}  // namespace

SimpleGraph parse_graph(std::istream& in) {
  std::vector<long long> values;
  std::string head;
  int line = 0;
  if (!next_content_line(in, values, head, line) || head != "vertices" ||
      values.size() != 1 || values[0] < 0) {
    throw ParseError(line, "expected 'vertices <n>'");
  }
  SimpleGraph g;
  g.num_vertices = static_cast<int>(values[0]);
  while (next_content_line(in, values, head, line)) {
    if (!head.empty() || values.size() != 2) {
      throw ParseError(line, "expected '<u> <v>'");
    }
    g.edges.emplace_back(static_cast<int>(values[0] - 1),
                         static_cast<int>(values[1] - 1));
  }
  return g;
}

std::vector<std::vector<int>> parse_set_family(std::istream& in,
                                               int& num_objects) {
  std::vector<long long> values;
  std::string head;
  int line = 0;
  if (!next_content_line(in, values, head, line) || head != "objects" ||
      values.size() != 1 || values[0] < 0) {
    throw ParseError(line, "expected 'objects <n>'");
  }
  num_objects = static_cast<int>(values[0]);
  std::vector<std::vector<int>> family;
  while (next_content_line(in, values, head, line)) {
    if (!head.empty()) throw ParseError(line, "expected object ids");
    std::vector<int> set;
    for (long long v : values) {
      if (v < 1 || v > num_objects) {
        throw ParseError(line, "object id out of range");
      }
      set.push_back(static_cast<int>(v - 1));
    }
    family.push_back(std::move(set));
  }
  return family;
}

}  // namespace scensched
