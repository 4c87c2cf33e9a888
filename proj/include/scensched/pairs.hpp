#pragma once

// Exact MinMax when every scenario holds exactly two jobs.
//
// Each scenario {j, k} is an edge of weight p_j + p_k. Edges are processed by
// descending weight while vertices are grown into 2-colored components; the
// first edge whose endpoints already share both component and color closes an
// odd cycle and fixes the optimum.

#include <optional>
#include <vector>

#include "scensched/core.hpp"
#include "scensched/oracle.hpp"

namespace scensched {

struct ConflictEdge {
  JobId u = 0;
  JobId v = 0;
  Time weight = 0;  // p_u + p_v
  int scenario = 0;
};

// One edge per scenario, stable-sorted by descending weight so equal weights
// keep input order. Throws Error(kPrecondition) unless every scenario has
// exactly two jobs.
std::vector<ConflictEdge> conflict_graph(const Instance& inst);

// Component labels with explicit member lists. Merging relabels (and, if
// needed, recolors) every member of the smaller component.
class ColoredComponents {
 public:
  explicit ColoredComponents(int num_vertices);

  int label(JobId v) const { return label_[v]; }
  Machine color(JobId v) const { return color_[v]; }
  const std::vector<JobId>& members(int label) const { return members_[label]; }

  // Number of times v was moved into another component.
  int relabel_count(JobId v) const { return relabels_[v]; }

  // Joins the components of u and v (which must differ) so that u and v end
  // up with different colors. The smaller component is absorbed; equal sizes
  // keep the one with the smaller minimum vertex id.
  void merge_apart(JobId u, JobId v);

 private:
  std::vector<int> label_;
  std::vector<Machine> color_;
  std::vector<std::vector<JobId>> members_;
  std::vector<JobId> min_vertex_;
  std::vector<int> relabels_;
};

struct PairsTrace {
  std::vector<ConflictEdge> edges;  // in processing order
  int processed = 0;                // edges handled before stopping
  std::optional<int> odd_cycle_edge;  // index into edges of the Case 1 edge
  std::vector<int> relabel_counts;
  std::vector<int> final_labels;
};

// O(k log k) exact MinMax for pair scenarios. The value is
// max(p_max, weight of the edge that closes an odd cycle), where p_max ranges
// over jobs that occur in some scenario.
Optimum solve_pairs(const Instance& inst, PairsTrace* trace = nullptr);

}  // namespace scensched
