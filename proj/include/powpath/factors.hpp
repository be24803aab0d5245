// Connected clique-factor builders. Each builder verifies the structural
// hypotheses of its guarantee before running (throwing hypothesis_violation
// naming the failed clause), runs a deterministic greedy schedule, and
// returns a factor meeting the guaranteed size bound; falling short of the
// bound after the hypotheses passed raises extension_failure. A Hall-type
// variant extends a seed matching through independent sets by repeated
// bipartite matching, where shrinking is permitted and logged step by step.
#pragma once

#include <vector>

#include "powpath/components.hpp"
#include "powpath/graphs.hpp"

namespace powpath {

// Vertex classes U_1, U_2, X_1..X_{k-1}, A partitioning the graph;
// k = x.size() + 1. Seeds grow inside u1, extension vertices come from the
// x classes, u2 sees no edge to u1, and a collects the avoided vertices.
struct FactorPartition {
  VertexSet u1;
  VertexSet u2;
  std::vector<VertexSet> x;
  VertexSet a;
};

// Grows each seed K_b inside u1 while possible, then walks the stalled
// cliques through x[0]..x[k-3] in ascending size order and finishes with a
// vertex outside u1 and those classes. Guarantee: exactly
// min{|seed|, floor(|u2|/2), floor(s1)} cliques with
// s1 = (k*delta - (k-1)*n + (b-1)|u2| - |a|) / (2b-1), delta the minimum
// degree of g. `seed` holds vertex-disjoint K_b's inside u1, 2 <= b <= k.
ConnectedCliqueFactor greedy_factor_two_stage(const Graph& g, const FactorPartition& part,
                                              const std::vector<std::vector<int>>& seed);

// Two interleaved copies of the two-stage schedule over overlapping
// partitions: U_1,U_2,X_1..X_{k-1},A and V_1,V_2,X_1..X_{k-2},X',A' share
// the classes X_1..X_{k-2}. seed_u holds K_b's in U_1, seed_v K_c's in V_1
// with 2 <= b <= c <= k; d1, d2 cap the two processes and must satisfy
// |V_2| >= 2*d2 + d1.
struct ParallelFactorInput {
  FactorPartition u;                     // U_1, U_2, X_1..X_{k-1}, A
  VertexSet v1;
  VertexSet v2;
  VertexSet x_prime;
  VertexSet a_prime;
  std::vector<std::vector<int>> seed_u;  // disjoint K_b copies in u.u1
  std::vector<std::vector<int>> seed_v;  // disjoint K_c copies in v1
  int d1 = 0;
  int d2 = 0;
};

// Guarantee: exactly min{|seed_u|, floor(|U_2|/2), d1, floor(s1), floor(s2)}
// + min{|seed_v|, d2, floor(t1), floor(t2)} cliques, the four thresholds
// being the degree-surplus expressions of the two processes.
ConnectedCliqueFactor greedy_factor_parallel(const Graph& g, const ParallelFactorInput& in);

// Single-pass variant seeded by a matching in u1: every kept edge walks
// through x[0]..x[k-2], one vertex per class, with no failures permitted.
// Guarantee: exactly min{|f|, q} cliques with
// q = k*delta - (k-1)*n + |u2| - |u1| - |a|.
ConnectedCliqueFactor greedy_factor_matching(const Graph& g, const FactorPartition& part,
                                             const Matching& f);

// One extension round of the Hall-type builder: the surviving cliques were
// matched into independent set number `step` by a maximum bipartite
// matching; `guaranteed` = max(0, min{min_left_degree + min_right_degree,
// factor_before, set_size}) is the size the matching cannot fall below.
struct HallStepAudit {
  int step = 0;              // 1-based independent-set index
  int min_left_degree = 0;   // fewest extension candidates over cliques
  int min_right_degree = 0;  // fewest adjacent cliques over set vertices
  int factor_before = 0;
  int set_size = 0;
  int guaranteed = 0;
  int achieved = 0;
};

struct HallExtensionResult {
  std::vector<std::vector<int>> cliques;  // each of order 2 + #steps, sorted
  int component_id = -1;                  // shared component, -1 when not set
  bool complete = false;                  // false iff no independent sets given
  bool connected = false;                 // all K_k subsets share one component
  std::vector<HallStepAudit> audit;

  int count() const { return static_cast<int>(cliques.size()); }
  int size() const;
};

// Extends each seed edge through independent_sets[0], [1], ... by repeated
// maximum bipartite matching between current cliques and the next set.
// Cliques left unmatched in a round are dropped (the audit records every
// round). Seed edges must lie inside `exterior`; the sets must be pairwise
// disjoint, independent, and disjoint from `exterior`.
HallExtensionResult hall_extension_factor(const Graph& g, const VertexSet& exterior,
                                          const std::vector<VertexSet>& independent_sets,
                                          const Matching& seed);

// Independent validator: cliques pairwise disjoint, each induces a K_{d.k+1},
// and every K_{d.k} subset of every clique lies in factor.component_id.
// The empty factor is valid with component_id == -1.
bool validate_connected_factor(const Graph& g, const CliqueComponentDecomposition& d,
                               const ConnectedCliqueFactor& factor);

}  // namespace powpath
