// scensched: generate, solve, evaluate, reduce and compare two-machine
// scheduling-over-scenarios instances.
//
// Exit codes: 0 success, 2 usage/config error, 3 precondition or cap
// violation, 4 parse error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scensched/core.hpp"
#include "scensched/error.hpp"
#include "scensched/generators.hpp"
#include "scensched/harness.hpp"
#include "scensched/reductions.hpp"

namespace {

using namespace scensched;

constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitParse = 4;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kUsage, "cannot write " + path);
  out << text;
}

struct Flags {
  std::string alg = "brute";
  std::string objective;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;
  Caps caps;
  std::string out;
  std::string format = "text";
};

void add_solver_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--objective", f.objective, "minmax or minsum")
      ->check(CLI::IsMember({"minmax", "minsum"}));
  cmd->add_option("--seed", f.seed, "random seed")->envname("SCHED_SEED");
  cmd->add_option("--trials", f.trials, "trials for --alg random");
  cmd->add_option("--cap-brute", f.caps.brute, "max jobs for brute force");
  cmd->add_option("--cap-unit-k", f.caps.unit_dp_k,
                  "max scenarios for unit_dp");
  cmd->add_option("--cap-nae-r", f.caps.nae_r,
                  "max scenario size for the NAE reduction");
  cmd->add_option("--cap-cut-n", f.caps.cut_n,
                  "max vertices/variables for exact max cut and max-nae");
  cmd->add_option("--cap-derand-r", f.caps.derand_r,
                  "max scenario size for derand");
  cmd->add_option("--out", f.out, "output file (default stdout)");
}

RunConfig make_config(const std::string& command, const Flags& f) {
  RunConfig config;
  config.command = command;
  config.output = f.out;
  if (!f.objective.empty()) config.objective = parse_objective(f.objective);
  config.algorithm = parse_algorithm(f.alg);
  config.seed = f.seed;
  config.trials = f.trials;
  config.caps = f.caps;
  validate(config);
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-machine scheduling over scenarios"};
  app.require_subcommand(1);

  Flags flags;

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance");
  std::string kind;
  GenParams params;
  std::string graph_file, sets_file;
  gen->add_option("kind", kind,
                  "random|pairs|triples|unit|maxcut_gadget|setsplit_gadget")
      ->required();
  gen->add_option("--n", params.n, "jobs (vertices/objects for gadgets)");
  gen->add_option("--k", params.k, "scenarios (edges/sets for gadgets)");
  gen->add_option("--r", params.r, "largest scenario size");
  gen->add_option("--pmax", params.pmax, "largest processing time");
  gen->add_option("--seed", flags.seed, "random seed")->envname("SCHED_SEED");
  gen->add_option("--graph", graph_file, "source graph for maxcut_gadget");
  gen->add_option("--sets", sets_file, "source 3-sets for setsplit_gadget");
  gen->add_option("--out", flags.out, "output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "solve an instance");
  std::string instance_path;
  solve->add_option("instance", instance_path)->required();
  solve->add_option("--alg", flags.alg,
                    "brute|unit_dp|pairs|random|derand|cut_exact|cut_ls|"
                    "nae_exact|nae_ls|vector_list");
  solve->add_option("--format", flags.format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));
  add_solver_flags(solve, flags);

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a solution file");
  std::string solution_path;
  eval->add_option("instance", instance_path)->required();
  eval->add_option("solution", solution_path)->required();

  // reduce
  auto* reduce = app.add_subcommand("reduce", "emit a reduced instance");
  std::string target = "nae";
  reduce->add_option("instance", instance_path)->required();
  reduce->add_option("--to", target, "nae|cut|vector")
      ->check(CLI::IsMember({"nae", "cut", "vector"}));
  reduce->add_option("--cap-nae-r", flags.caps.nae_r);
  reduce->add_option("--out", flags.out, "output file (default stdout)");

  // compare
  auto* cmp = app.add_subcommand("compare", "CSV report over many instances");
  std::string pattern;
  std::vector<std::string> algs;
  cmp->add_option("instances", pattern, "glob or directory")->required();
  cmp->add_option("--algs", algs, "algorithms, in column order")
      ->delimiter(',')
      ->required();
  add_solver_flags(cmp, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      const GenKind k = parse_gen_kind(kind);
      Instance inst;
      if (k == GenKind::kMaxcutGadget && !graph_file.empty()) {
        std::ifstream in(graph_file);
        if (!in) throw Error(ErrorKind::kParse, "cannot open " + graph_file);
        inst = gadget_from_maxcut(parse_graph(in));
      } else if (k == GenKind::kSetsplitGadget && !sets_file.empty()) {
        std::ifstream in(sets_file);
        if (!in) throw Error(ErrorKind::kParse, "cannot open " + sets_file);
        int objects = 0;
        const auto family = parse_set_family(in, objects);
        inst = gadget_from_set_splitting(objects, family);
      } else {
        inst = generate(k, params, flags.seed);
      }
      write_output(flags.out, serialize_instance(inst));
    } else if (*solve) {
      const RunConfig config = make_config("solve", flags);
      const Instance inst = load_instance(instance_path);
      const SolveOutcome outcome = run_algorithm(inst, config);
      if (flags.format == "csv") {
        ReportRow row;
        row.instance = instance_path;
        row.n = inst.num_jobs();
        row.k = inst.num_scenarios();
        row.r = inst.max_scenario_size();
        row.algorithm = algorithm_name(config.algorithm);
        row.objective = effective_objective(config);
        row.value = outcome.value;
        row.optimum = oracle_value(inst, row.objective, config.caps);
        row.seed = config.seed;
        if (!flags.out.empty()) write_output(flags.out, format_solution(outcome));
        std::cout << kReportHeader << "\n" << format_report_row(row) << "\n";
      } else {
        write_output(flags.out, format_solution(outcome));
      }
    } else if (*eval) {
      const Instance inst = load_instance(instance_path);
      std::ifstream in(solution_path);
      if (!in) throw Error(ErrorKind::kParse, "cannot open " + solution_path);
      const Assignment a = parse_assignment(in, inst.num_jobs());
      std::cout << "minmax " << eval_minmax(a, inst) << "\nminsum "
                << eval_minsum(a, inst) << "\n";
    } else if (*reduce) {
      const Instance inst = load_instance(instance_path);
      std::string text;
      if (target == "nae") {
        text = serialize_clause_set(to_nae_sat(inst, flags.caps.nae_r));
      } else if (target == "cut") {
        text = serialize_cut_graph(to_maxcut3(inst));
      } else {
        const VectorSet vs = to_vector_scheduling(inst, 2);
        std::ostringstream out;
        out << "vectors " << vs.vectors.size() << " " << vs.dimension << "\n";
        for (const auto& v : vs.vectors) {
          out << "v";
          for (Time x : v) out << " " << x;
          out << "\n";
        }
        text = out.str();
      }
      write_output(flags.out, text);
    } else if (*cmp) {
      RunConfig config = make_config("compare", flags);
      std::vector<Algorithm> list;
      for (const auto& name : algs) list.push_back(parse_algorithm(name));
      write_output(flags.out,
                   compare(expand_instances(pattern), list, config));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::kUsage: return kExitUsage;
      case ErrorKind::kPrecondition: return kExitPrecondition;
      case ErrorKind::kParse: return kExitParse;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
