#include "scensched/pairs.hpp"

#include <algorithm>

#include "scensched/error.hpp"

namespace scensched {

std::vector<ConflictEdge> conflict_graph(const Instance& inst) {
  std::vector<ConflictEdge> edges;
  edges.reserve(inst.num_scenarios());
  for (int i = 0; i < inst.num_scenarios(); ++i) {
    const Scenario& s = inst.scenario(i);
    if (s.size() != 2) {
      throw_precondition("pairs: scenario " + std::to_string(i + 1) + " has " +
                         std::to_string(s.size()) + " jobs, expected 2");
    }
    edges.push_back({s[0], s[1], inst.proc(s[0]) + inst.proc(s[1]), i});
  }
  std::stable_sort(edges.begin(), edges.end(),
                   [](const ConflictEdge& a, const ConflictEdge& b) {
                     return a.weight > b.weight;
                   });
  return edges;
}

ColoredComponents::ColoredComponents(int num_vertices)
    : label_(num_vertices),
      color_(num_vertices, Machine::kM1),
      members_(num_vertices),
      min_vertex_(num_vertices),
      relabels_(num_vertices, 0) {
  for (JobId v = 0; v < num_vertices; ++v) {
    label_[v] = v;
    members_[v] = {v};
    min_vertex_[v] = v;
  }
}

void ColoredComponents::merge_apart(JobId u, JobId v) {
  int keep = label_[u], drop = label_[v];
  const auto keep_size = members_[keep].size();
  const auto drop_size = members_[drop].size();
  if (drop_size > keep_size ||
      (drop_size == keep_size && min_vertex_[drop] < min_vertex_[keep])) {
    std::swap(keep, drop);
  }
  const bool invert = color_[u] == color_[v];
  for (JobId w : members_[drop]) {
    label_[w] = keep;
    if (invert) color_[w] = other(color_[w]);
    ++relabels_[w];
  }
  auto& kept = members_[keep];
  kept.insert(kept.end(), members_[drop].begin(), members_[drop].end());
  members_[drop].clear();
  min_vertex_[keep] = std::min(min_vertex_[keep], min_vertex_[drop]);
}

Optimum solve_pairs(const Instance& inst, PairsTrace* trace) {
  const int n = inst.num_jobs();
  std::vector<ConflictEdge> edges = conflict_graph(inst);

  Time p_max = 0;
  for (const ConflictEdge& e : edges) {
    p_max = std::max({p_max, inst.proc(e.u), inst.proc(e.v)});
  }

  ColoredComponents comps(n);
  std::optional<int> odd_edge;
  int processed = 0;
  for (; processed < static_cast<int>(edges.size()); ++processed) {
    const ConflictEdge& e = edges[processed];
    const bool same_component = comps.label(e.u) == comps.label(e.v);
    const bool same_color = comps.color(e.u) == comps.color(e.v);
    if (same_component && same_color) {
      // Case 1: odd cycle; e is its lightest edge.
      odd_edge = processed;
      break;
    }
    // Case 2 (different colors) and Case 3 (same color, inversion).
    if (!same_component) comps.merge_apart(e.u, e.v);
  }

  Optimum result;
  result.value = odd_edge ? std::max(p_max, edges[*odd_edge].weight) : p_max;
  result.witness = Assignment(n);
  for (JobId v = 0; v < n; ++v) result.witness.set(v, comps.color(v));

  if (trace != nullptr) {
    trace->processed = processed;
    trace->odd_cycle_edge = odd_edge;
    trace->relabel_counts.assign(n, 0);
    trace->final_labels.assign(n, 0);
    for (JobId v = 0; v < n; ++v) {
      trace->relabel_counts[v] = comps.relabel_count(v);
      trace->final_labels[v] = comps.label(v);
    }
    trace->edges = std::move(edges);
  }
  return result;
}

}  // namespace scensched
