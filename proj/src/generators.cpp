#include "scensched/generators.hpp"

#include <algorithm>
#include <numeric>

#include "scensched/error.hpp"

namespace scensched {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Reject the top sliver so every residue is equally likely.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::vector<int> Rng::sample(int n, int count) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < count; ++i) {
    const int pick = i + static_cast<int>(below(n - i));
    std::swap(pool[i], pool[pick]);
  }
  pool.resize(count);
  return pool;
}

namespace {

constexpr std::string_view kKindNames[] = {
    "random", "pairs", "triples", "unit", "maxcut_gadget", "setsplit_gadget"};

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::kUsage, what);
}

std::vector<Time> draw_times(Rng& rng, int n, Time pmax) {
  std::vector<Time> proc(n);
  for (Time& p : proc) p = rng.between(0, pmax);
  return proc;
}

}  // namespace

GenKind parse_gen_kind(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kKindNames); ++i) {
    if (kKindNames[i] == name) return static_cast<GenKind>(i);
  }
  throw Error(ErrorKind::kUsage, "unknown generator kind '" +
                                     std::string(name) + "'");
}

std::string_view gen_kind_name(GenKind kind) {
  return kKindNames[static_cast<int>(kind)];
}

Instance random_instance(int n, int k, int r, Time pmax, std::uint64_t seed) {
  require(n >= 1 && k >= 0 && r >= 1 && pmax >= 0,
          "random: need n >= 1, k >= 0, r >= 1, pmax >= 0");
  Rng rng(seed);
  std::vector<Time> proc = draw_times(rng, n, pmax);
  const int largest = std::min(r, n);
  std::vector<Scenario> scenarios;
  scenarios.reserve(k);
  for (int i = 0; i < k; ++i) {
    const int size = static_cast<int>(rng.between(1, largest));
    scenarios.push_back(rng.sample(n, size));
  }
  return Instance(std::move(proc), std::move(scenarios));
}

Instance fixed_size_instance(int n, int k, int size, Time pmax,
                             std::uint64_t seed) {
  require(size >= 1 && n >= size && k >= 0 && pmax >= 0,
          "fixed-size scenarios need n >= size >= 1, k >= 0, pmax >= 0");
  Rng rng(seed);
  std::vector<Time> proc = draw_times(rng, n, pmax);
  std::vector<Scenario> scenarios;
  scenarios.reserve(k);
  for (int i = 0; i < k; ++i) scenarios.push_back(rng.sample(n, size));
  return Instance(std::move(proc), std::move(scenarios));
}

Instance unit_instance(int n, int k, int r, std::uint64_t seed) {
  require(n >= 1 && k >= 0 && r >= 1, "unit: need n >= 1, k >= 0, r >= 1");
  Rng rng(seed);
  const int largest = std::min(r, n);
  std::vector<Scenario> scenarios;
  scenarios.reserve(k);
  for (int i = 0; i < k; ++i) {
    const int size = static_cast<int>(rng.between(1, largest));
    scenarios.push_back(rng.sample(n, size));
  }
  return Instance(std::vector<Time>(n, 1), std::move(scenarios));
}

SimpleGraph random_graph(int vertices, int edges, std::uint64_t seed) {
  const long long possible =
      static_cast<long long>(vertices) * (vertices - 1) / 2;
  require(vertices >= 0 && edges >= 0 && edges <= possible,
          "graph: edge count exceeds n(n-1)/2");
  Rng rng(seed);
  std::vector<std::pair<int, int>> all;
  all.reserve(possible);
  for (int u = 0; u < vertices; ++u) {
    for (int v = u + 1; v < vertices; ++v) all.emplace_back(u, v);
  }
  SimpleGraph g;
  g.num_vertices = vertices;
  for (int idx : rng.sample(static_cast<int>(all.size()), edges)) {
    g.edges.push_back(all[idx]);
  }
  return g;
}

std::vector<std::vector<int>> random_triple_family(int objects, int sets,
                                                   std::uint64_t seed) {
  require(objects >= 3 && sets >= 0, "set family: need at least 3 objects");
  Rng rng(seed);
  std::vector<std::vector<int>> family;
  family.reserve(sets);
  for (int i = 0; i < sets; ++i) {
    auto s = rng.sample(objects, 3);
    std::sort(s.begin(), s.end());
    family.push_back(std::move(s));
  }
  return family;
}

Instance generate(GenKind kind, const GenParams& params, std::uint64_t seed) {
  switch (kind) {
    case GenKind::kRandom:
      return random_instance(params.n, params.k, params.r, params.pmax, seed);
    case GenKind::kPairs:
      return fixed_size_instance(params.n, params.k, 2, params.pmax, seed);
    case GenKind::kTriples:
      return fixed_size_instance(params.n, params.k, 3, params.pmax, seed);
    case GenKind::kUnit:
      return unit_instance(params.n, params.k, params.r, seed);
    case GenKind::kMaxcutGadget:
      return gadget_from_maxcut(random_graph(params.n, params.k, seed));
    case GenKind::kSetsplitGadget: {
      const auto family = random_triple_family(params.n, params.k, seed);
      return gadget_from_set_splitting(params.n, family);
    }
  }
  throw Error(ErrorKind::kUsage, "unknown generator kind");
}

}  // namespace scensched
