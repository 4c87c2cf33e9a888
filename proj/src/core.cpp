#include "scensched/core.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "scensched/error.hpp"
#include "scensched/rational.hpp"

namespace scensched {

std::string_view objective_name(Objective objective) {
  return objective == Objective::kMinMax ? "minmax" : "minsum";
}

Objective parse_objective(std::string_view name) {
  if (name == "minmax") return Objective::kMinMax;
  if (name == "minsum") return Objective::kMinSum;
  throw Error(ErrorKind::kUsage, "unknown objective '" + std::string(name) +
                                     "' (expected minmax or minsum)");
}

std::string format_rational(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view digits) {
    std::size_t start = (!digits.empty() && digits[0] == '-') ? 1 : 0;
    if (digits.size() == start) throw std::invalid_argument("empty integer");
    for (std::size_t i = start; i < digits.size(); ++i) {
      if (digits[i] < '0' || digits[i] > '9') {
        throw std::invalid_argument("bad rational '" + std::string(digits) +
                                    "'");
      }
    }
    return BigInt(std::string(digits));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("nonpositive denominator");
  return Rational(num, den);
}

Instance::Instance(std::vector<Time> proc, std::vector<Scenario> scenarios)
    : proc_(std::move(proc)), scenarios_(std::move(scenarios)) {
  const int n = num_jobs();
  Time total_proc = 0;
  for (JobId j = 0; j < n; ++j) {
    if (proc_[j] < 0) {
      throw_precondition("negative processing time for job " +
                         std::to_string(j + 1));
    }
    if (__builtin_add_overflow(total_proc, proc_[j], &total_proc)) {
      throw_precondition("total processing time overflows 64 bits");
    }
  }
  Time bound = 0;
  if (__builtin_mul_overflow(total_proc,
                             static_cast<Time>(scenarios_.size()), &bound)) {
    throw_precondition("p(J) * k overflows 64 bits");
  }

  std::vector<char> seen(n, 0);
  totals_.reserve(scenarios_.size());
  for (std::size_t i = 0; i < scenarios_.size(); ++i) {
    const Scenario& s = scenarios_[i];
    if (s.empty()) {
      throw_precondition("scenario " + std::to_string(i + 1) + " is empty");
    }
    Time total = 0;
    for (JobId j : s) {
      if (j < 0 || j >= n) {
        throw_precondition("job id out of range in scenario " +
                           std::to_string(i + 1));
      }
      if (seen[j]) {
        throw_precondition("duplicate job id " + std::to_string(j + 1) +
                           " in scenario " + std::to_string(i + 1));
      }
      seen[j] = 1;
      total += proc_[j];
    }
    for (JobId j : s) seen[j] = 0;
    totals_.push_back(total);
    max_size_ = std::max(max_size_, static_cast<int>(s.size()));
  }
}

bool Instance::all_unit() const {
  return std::all_of(proc_.begin(), proc_.end(),
                     [](Time p) { return p == 1; });
}

Assignment Assignment::from_mask(int num_jobs, std::uint64_t mask) {
  Assignment a(num_jobs);
  for (JobId j = 0; j < num_jobs; ++j) {
    if ((mask >> j) & 1) a.side_[j] = Machine::kM2;
  }
  return a;
}

Assignment Assignment::swapped() const {
  Assignment out = *this;
  for (auto& m : out.side_) m = other(m);
  return out;
}

std::string Assignment::to_string() const {
  std::string out;
  out.reserve(side_.size());
  for (Machine m : side_) out.push_back(m == Machine::kM1 ? '1' : '2');
  return out;
}

LoadPair scenario_loads(const Assignment& a, const Scenario& s,
                        const Instance& inst) {
  LoadPair loads;
  for (JobId j : s) {
    (a[j] == Machine::kM1 ? loads.load1 : loads.load2) += inst.proc(j);
  }
  return loads;
}

Time eval_minmax(const Assignment& a, const Instance& inst) {
  Time worst = 0;
  for (const Scenario& s : inst.scenarios()) {
    worst = std::max(worst, scenario_loads(a, s, inst).makespan());
  }
  return worst;
}

Time eval_minsum(const Assignment& a, const Instance& inst) {
  Time sum = 0;
  for (const Scenario& s : inst.scenarios()) {
    sum += scenario_loads(a, s, inst).makespan();
  }
  return sum;
}

Time evaluate(const Assignment& a, const Instance& inst, Objective objective) {
  return objective == Objective::kMinMax ? eval_minmax(a, inst)
                                         : eval_minsum(a, inst);
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r') {
      ++i;
    }
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::int64_t parse_int(std::string_view token, int line) {
  std::int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) +
                               "'");
  }
  return value;
}

// Yields non-blank, non-comment lines together with their line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string_view>& tokens, int& line_no) {
    while (std::getline(in_, buffer_)) {
      ++line_;
      std::string_view view(buffer_);
      auto first = view.find_first_not_of(" \t\r");
      if (first == std::string_view::npos || view[first] == '#') continue;
      tokens = split_tokens(view);
      line_no = line_;
      return true;
    }
    line_no = line_ + 1;
    return false;
  }

 private:
  std::istream& in_;
  std::string buffer_;
  int line_ = 0;
};

}  // namespace

Instance parse_instance(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string_view> tok;
  int line = 0;

  if (!reader.next(tok, line) || tok.size() != 2 || tok[0] != "jobs") {
    throw ParseError(line, "malformed header, expected 'jobs <n>'");
  }
  const std::int64_t n = parse_int(tok[1], line);
  if (n < 0) throw ParseError(line, "negative job count");

  if (!reader.next(tok, line) || tok.empty() || tok[0] != "p") {
    throw ParseError(line, "malformed header, expected 'p <p_1> ... <p_n>'");
  }
  if (static_cast<std::int64_t>(tok.size()) - 1 != n) {
    throw ParseError(line, "expected " + std::to_string(n) +
                               " processing times, got " +
                               std::to_string(tok.size() - 1));
  }
  std::vector<Time> proc;
  proc.reserve(n);
  for (std::size_t i = 1; i < tok.size(); ++i) {
    Time p = parse_int(tok[i], line);
    if (p < 0) throw ParseError(line, "negative time for job " + std::to_string(i));
    proc.push_back(p);
  }

  if (!reader.next(tok, line) || tok.size() != 2 || tok[0] != "scenarios") {
    throw ParseError(line, "malformed header, expected 'scenarios <k>'");
  }
  const std::int64_t k = parse_int(tok[1], line);
  if (k < 0) throw ParseError(line, "negative scenario count");

  std::vector<Scenario> scenarios;
  scenarios.reserve(k);
  std::vector<char> seen(n, 0);
  for (std::int64_t i = 0; i < k; ++i) {
    if (!reader.next(tok, line)) {
      throw ParseError(line, "expected " + std::to_string(k) +
                                 " scenarios, found " + std::to_string(i));
    }
    if (tok.empty() || tok[0] != "S") {
      throw ParseError(line, "malformed scenario line, expected 'S <id> ...'");
    }
    if (tok.size() == 1) throw ParseError(line, "empty scenario");
    Scenario s;
    s.reserve(tok.size() - 1);
    for (std::size_t t = 1; t < tok.size(); ++t) {
      std::int64_t id = parse_int(tok[t], line);
      if (id < 1 || id > n) throw ParseError(line, "job id out of range");
      if (seen[id - 1]) {
        throw ParseError(line, "duplicate job id " + std::to_string(id));
      }
      seen[id - 1] = 1;
      s.push_back(static_cast<JobId>(id - 1));
    }
    for (JobId j : s) seen[j] = 0;
    scenarios.push_back(std::move(s));
  }
  if (reader.next(tok, line)) {
    throw ParseError(line, "unexpected content after the last scenario");
  }

  try {
    return Instance(std::move(proc), std::move(scenarios));
  } catch (const Error& e) {
    // Only the global overflow check can still fail here.
    throw ParseError(3, e.what());
  }
}

Instance parse_instance_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open " + path);
  return parse_instance(in);
}

std::string serialize_instance(const Instance& inst) {
  std::string out = "jobs " + std::to_string(inst.num_jobs()) + "\np";
  for (Time p : inst.proc()) out += " " + std::to_string(p);
  out += "\nscenarios " + std::to_string(inst.num_scenarios()) + "\n";
  for (const Scenario& s : inst.scenarios()) {
    out += "S";
    for (JobId j : s) out += " " + std::to_string(j + 1);
    out += "\n";
  }
  return out;
}

std::string serialize_assignment(const Assignment& a) {
  std::string m1 = "M1", m2 = "M2";
  for (JobId j = 0; j < a.size(); ++j) {
    (a[j] == Machine::kM1 ? m1 : m2) += " " + std::to_string(j + 1);
  }
  return m1 + "\n" + m2 + "\n";
}

Assignment parse_assignment(std::istream& in, int num_jobs) {
  LineReader reader(in);
  std::vector<std::string_view> tok;
  int line = 0;
  std::vector<int> label(num_jobs, -1);
  while (reader.next(tok, line)) {
    if (tok[0] != "M1" && tok[0] != "M2") continue;
    const Machine m = tok[0] == "M1" ? Machine::kM1 : Machine::kM2;
    for (std::size_t t = 1; t < tok.size(); ++t) {
      std::int64_t id = parse_int(tok[t], line);
      if (id < 1 || id > num_jobs) throw ParseError(line, "job id out of range");
      if (label[id - 1] != -1) {
        throw ParseError(line, "job " + std::to_string(id) + " assigned twice");
      }
      label[id - 1] = static_cast<int>(m);
    }
  }
  Assignment a(num_jobs);
  for (JobId j = 0; j < num_jobs; ++j) {
    if (label[j] == -1) {
      throw ParseError(line, "job " + std::to_string(j + 1) + " is unassigned");
    }
    a.set(j, static_cast<Machine>(label[j]));
  }
  return a;
}

}  // namespace scensched
