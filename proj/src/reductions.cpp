#include "scensched/reductions.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

#include "scensched/error.hpp"

namespace scensched {

namespace {

Time partition_min(std::span<const Time> times, std::uint32_t b_mask) {
  Time a = 0, b = 0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    ((b_mask >> i) & 1 ? b : a) += times[i];
  }
  return std::min(a, b);
}

// Sum of min{p(B), p(B')} over the 2^(r-1) unordered partitions.
Time sum_partition_mins(std::span<const Time> times) {
  if (times.empty()) return 0;
  const std::uint32_t count = std::uint32_t{1} << (times.size() - 1);
  Time sum = 0;
  for (std::uint32_t m = 0; m < count; ++m) sum += partition_min(times, m << 1);
  return sum;
}

Rational base_weight(Time sum_mins, std::size_t r, Time own_min) {
  const std::int64_t clauses = std::int64_t{1} << (r - 1);
  if (clauses == 1) return Rational(0);
  return Rational(BigInt(sum_mins), BigInt(clauses - 1)) - Rational(own_min);
}

void rational_or_throw(std::string_view token, int line, Rational& out) {
  try {
    out = parse_rational(token);
  } catch (const std::exception& e) {
    throw ParseError(line, e.what());
  }
}

int parse_small_int(std::string_view token, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(std::string(token), &used);
    if (used != token.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) +
                               "'");
  }
}

// Splits non-comment content lines into whitespace tokens.
bool next_tokens(std::istream& in, std::vector<std::string>& tok, int& line) {
  std::string buffer;
  while (std::getline(in, buffer)) {
    ++line;
    std::istringstream words(buffer);
    tok.clear();
    for (std::string w; words >> w;) tok.push_back(w);
    if (!tok.empty()) return true;
  }
  return false;
}

}  // namespace

Rational nae_base_weight(std::span<const Time> times, std::uint32_t b_mask) {
  if (times.empty()) return Rational(0);
  return base_weight(sum_partition_mins(times), times.size(),
                     partition_min(times, b_mask));
}

Rational nae_shift(std::span<const Time> times) {
  const std::int64_t clauses =
      times.empty() ? 1 : std::int64_t{1} << (times.size() - 1);
  if (clauses <= 2) return Rational(0);
  Time total = 0;
  for (Time p : times) total += p;
  return Rational(BigInt(clauses - 2) * total, BigInt(4 * (clauses - 1)));
}

bool nae_satisfied(const NaeClause& clause, std::span<const char> truth) {
  bool any_true = false, any_false = false;
  for (const Literal& lit : clause.literals) {
    const bool value = (truth[lit.var] != 0) != lit.negated;
    (value ? any_true : any_false) = true;
  }
  return any_true && any_false;
}

std::vector<Rational> nae_satisfied_by_scenario(const ClauseSet& cs,
                                                std::span<const char> truth,
                                                bool shifted) {
  std::vector<Rational> out(cs.shifts.size());
  for (const NaeClause& c : cs.clauses) {
    if (nae_satisfied(c, truth)) {
      out[c.scenario] += shifted ? c.shifted_weight : c.weight;
    }
  }
  return out;
}

ClauseSet to_nae_sat(const Instance& inst, int size_cap) {
  const int r = inst.max_scenario_size();
  if (r > size_cap) {
    throw_precondition("nae: scenario size r = " + std::to_string(r) +
                       " exceeds cap " + std::to_string(size_cap));
  }
  if (r > 30) throw_precondition("nae: scenario size exceeds 30");

  int smallest = r;
  for (const Scenario& s : inst.scenarios()) {
    smallest = std::min(smallest, static_cast<int>(s.size()));
  }

  ClauseSet cs;
  cs.num_real_jobs = inst.num_jobs();
  cs.num_vars = inst.num_jobs() + (r - smallest);
  cs.clause_length = r;
  if (r == 0) return cs;

  const std::uint32_t per_scenario = std::uint32_t{1} << (r - 1);
  cs.clauses.reserve(static_cast<std::size_t>(per_scenario) *
                     inst.num_scenarios());
  for (int i = 0; i < inst.num_scenarios(); ++i) {
    std::vector<int> vars(inst.scenario(i).begin(), inst.scenario(i).end());
    std::sort(vars.begin(), vars.end());
    const int padding = r - static_cast<int>(vars.size());
    for (int d = 0; d < padding; ++d) vars.push_back(inst.num_jobs() + d);

    std::vector<Time> times;
    times.reserve(r);
    for (int v : vars) times.push_back(v < inst.num_jobs() ? inst.proc(v) : 0);

    const Time sum_mins = sum_partition_mins(times);
    const Rational shift = nae_shift(times);
    cs.shifts.push_back(shift);
    for (std::uint32_t m = 0; m < per_scenario; ++m) {
      const std::uint32_t b_mask = m << 1;
      NaeClause clause;
      clause.scenario = i;
      for (int pos = 0; pos < r; ++pos) {
        if (!((b_mask >> pos) & 1)) clause.literals.push_back({vars[pos], false});
      }
      for (int pos = 0; pos < r; ++pos) {
        if ((b_mask >> pos) & 1) clause.literals.push_back({vars[pos], true});
      }
      clause.weight = base_weight(sum_mins, times.size(),
                                  partition_min(times, b_mask));
      clause.shifted_weight = clause.weight + shift;
      cs.clauses.push_back(std::move(clause));
    }
  }
  return cs;
}

std::vector<char> truth_from_assignment(const ClauseSet& cs,
                                        const Assignment& a) {
  std::vector<char> truth(cs.num_vars, 0);
  for (JobId j = 0; j < cs.num_real_jobs; ++j) {
    truth[j] = a[j] == Machine::kM1 ? 1 : 0;
  }
  return truth;
}

Assignment assignment_from_truth(const ClauseSet& cs,
                                 std::span<const char> truth) {
  Assignment a(cs.num_real_jobs);
  for (JobId j = 0; j < cs.num_real_jobs; ++j) {
    a.set(j, truth[j] ? Machine::kM1 : Machine::kM2);
  }
  return a;
}

std::string serialize_clause_set(const ClauseSet& cs) {
  std::ostringstream out;
  out << "p nae " << cs.num_vars << " " << cs.clauses.size() << " "
      << cs.clause_length << " " << cs.num_real_jobs << "\n";
  int current = -1;
  for (const NaeClause& c : cs.clauses) {
    if (c.scenario != current) {
      current = c.scenario;
      out << "c scenario " << current + 1 << " shift "
          << format_rational(cs.shifts[current]) << "\n";
    }
    out << "nae " << format_rational(c.shifted_weight);
    for (const Literal& lit : c.literals) {
      out << " " << (lit.negated ? "-" : "") << lit.var + 1;
    }
    out << " 0\n";
  }
  return out.str();
}

ClauseSet parse_clause_set(std::istream& in) {
  std::vector<std::string> tok;
  int line = 0;
  if (!next_tokens(in, tok, line) || tok.size() != 6 || tok[0] != "p" ||
      tok[1] != "nae") {
    throw ParseError(line, "expected 'p nae <vars> <clauses> <r> <jobs>'");
  }
  ClauseSet cs;
  cs.num_vars = parse_small_int(tok[2], line);
  const int num_clauses = parse_small_int(tok[3], line);
  cs.clause_length = parse_small_int(tok[4], line);
  cs.num_real_jobs = parse_small_int(tok[5], line);

  int current = -1;
  while (next_tokens(in, tok, line)) {
    if (tok[0] == "c") {
      if (tok.size() == 5 && tok[1] == "scenario" && tok[3] == "shift") {
        current = parse_small_int(tok[2], line) - 1;
        if (current != static_cast<int>(cs.shifts.size())) {
          throw ParseError(line, "scenarios out of order");
        }
        Rational shift;
        rational_or_throw(tok[4], line, shift);
        cs.shifts.push_back(shift);
      }
      continue;
    }
    if (tok[0] != "nae" || tok.size() < 3 || tok.back() != "0") {
      throw ParseError(line, "expected 'nae <weight> <literals> 0'");
    }
    if (current < 0) throw ParseError(line, "clause before scenario header");
    NaeClause c;
    c.scenario = current;
    rational_or_throw(tok[1], line, c.shifted_weight);
    c.weight = c.shifted_weight - cs.shifts[current];
    for (std::size_t t = 2; t + 1 < tok.size(); ++t) {
      const int lit = parse_small_int(tok[t], line);
      const int var = std::abs(lit);
      if (lit == 0 || var > cs.num_vars) {
        throw ParseError(line, "variable out of range");
      }
      c.literals.push_back({var - 1, lit < 0});
    }
    cs.clauses.push_back(std::move(c));
  }
  if (static_cast<int>(cs.clauses.size()) != num_clauses) {
    throw ParseError(line, "clause count does not match header");
  }
  return cs;
}

CutGraph to_maxcut3(const Instance& inst) {
  CutGraph g;
  g.num_vertices = inst.num_jobs();
  for (int i = 0; i < inst.num_scenarios(); ++i) {
    const Scenario& s = inst.scenario(i);
    if (s.size() > 3) {
      throw_precondition("maxcut: scenario " + std::to_string(i + 1) +
                         " has more than 3 jobs");
    }
    if (s.size() == 2) {
      g.edges.push_back({s[0], s[1],
                         Rational(std::min(inst.proc(s[0]), inst.proc(s[1]))),
                         i});
    } else if (s.size() == 3) {
      const Time total = inst.scenario_total(i);
      TripleRecord t{i, {s[0], s[1], s[2]}, {}};
      for (int x = 0; x < 3; ++x) {
        t.b[x] = std::min(inst.proc(s[x]), total - inst.proc(s[x]));
      }
      const Rational half_sum(BigInt(t.b[0] + t.b[1] + t.b[2]), BigInt(2));
      // Edge {x, y} is opposite the third vertex.
      g.edges.push_back({s[0], s[1], half_sum - t.b[2], i});
      g.edges.push_back({s[1], s[2], half_sum - t.b[0], i});
      g.edges.push_back({s[2], s[0], half_sum - t.b[1], i});
      g.triples.push_back(t);
    }
  }
  return g;
}

Rational total_weight(const CutGraph& g) {
  Rational sum = 0;
  for (const CutEdge& e : g.edges) sum += e.weight;
  return sum;
}

Rational cut_weight(const CutGraph& g, const Assignment& sides) {
  Rational sum = 0;
  for (const CutEdge& e : g.edges) {
    if (sides[e.u] != sides[e.v]) sum += e.weight;
  }
  return sum;
}

std::string serialize_cut_graph(const CutGraph& g) {
  std::ostringstream out;
  out << "p cut " << g.num_vertices << " " << g.edges.size() << "\n";
  for (const CutEdge& e : g.edges) {
    out << "e " << e.u + 1 << " " << e.v + 1 << " "
        << format_rational(e.weight) << "\n";
  }
  return out.str();
}

CutGraph parse_cut_graph(std::istream& in) {
  std::vector<std::string> tok;
  int line = 0;
  if (!next_tokens(in, tok, line) || tok.size() != 4 || tok[0] != "p" ||
      tok[1] != "cut") {
    throw ParseError(line, "expected 'p cut <vertices> <edges>'");
  }
  CutGraph g;
  g.num_vertices = parse_small_int(tok[2], line);
  const int num_edges = parse_small_int(tok[3], line);
  while (next_tokens(in, tok, line)) {
    if (tok[0] == "c") continue;
    if (tok[0] != "e" || tok.size() != 4) {
      throw ParseError(line, "expected 'e <u> <v> <weight>'");
    }
    CutEdge e;
    e.u = parse_small_int(tok[1], line) - 1;
    e.v = parse_small_int(tok[2], line) - 1;
    if (e.u < 0 || e.v < 0 || e.u >= g.num_vertices ||
        e.v >= g.num_vertices) {
      throw ParseError(line, "vertex out of range");
    }
    rational_or_throw(tok[3], line, e.weight);
    e.scenario = static_cast<int>(g.edges.size());
    g.edges.push_back(std::move(e));
  }
  if (static_cast<int>(g.edges.size()) != num_edges) {
    throw ParseError(line, "edge count does not match header");
  }
  return g;
}

VectorSet to_vector_scheduling(const Instance& inst, int machines) {
  if (machines < 2) throw_precondition("vector scheduling needs m >= 2");
  VectorSet vs;
  vs.dimension = inst.num_scenarios();
  vs.machines = machines;
  vs.vectors.assign(inst.num_jobs(), std::vector<Time>(vs.dimension, 0));
  for (int i = 0; i < inst.num_scenarios(); ++i) {
    for (JobId j : inst.scenario(i)) vs.vectors[j][i] = inst.proc(j);
  }
  return vs;
}

Time vector_makespan(const VectorSet& vs, std::span<const int> part) {
  std::vector<std::vector<Time>> sums(vs.machines,
                                      std::vector<Time>(vs.dimension, 0));
  for (std::size_t j = 0; j < vs.vectors.size(); ++j) {
    for (int d = 0; d < vs.dimension; ++d) sums[part[j]][d] += vs.vectors[j][d];
  }
  Time worst = 0;
  for (const auto& machine : sums) {
    for (Time x : machine) worst = std::max(worst, x);
  }
  return worst;
}

Instance gadget_from_maxcut(const SimpleGraph& graph) {
  std::set<std::pair<int, int>> seen;
  std::vector<Scenario> scenarios;
  for (auto [u, v] : graph.edges) {
    if (u < 0 || v < 0 || u >= graph.num_vertices || v >= graph.num_vertices) {
      throw_precondition("maxcut gadget: vertex out of range");
    }
    if (u == v) throw_precondition("maxcut gadget: self-loop");
    if (!seen.insert(std::minmax(u, v)).second) {
      throw_precondition("maxcut gadget: repeated edge");
    }
    scenarios.push_back({u, v});
  }
  return Instance(std::vector<Time>(graph.num_vertices, 1),
                  std::move(scenarios));
}

Instance gadget_from_set_splitting(int num_objects,
                                   std::span<const std::vector<int>> sets) {
  std::vector<Scenario> scenarios;
  for (const auto& set : sets) {
    if (set.size() != 3) {
      throw_precondition("set splitting gadget: set of size " +
                         std::to_string(set.size()) + ", expected 3");
    }
    scenarios.emplace_back(set.begin(), set.end());
  }
  return Instance(std::vector<Time>(num_objects, 1), std::move(scenarios));
}

}  // namespace scensched
