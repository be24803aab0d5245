// Neighborhood, matching, coloring, and clique primitives used by the
// higher-level builders: common neighborhoods with their counting bound,
// greedy clique extension, maximum matchings (general and bipartite),
// equitable coloring, disjoint clique packing via complement coloring, and
// a multipartiteness certificate search.
#pragma once

#include <optional>
#include <vector>

#include "powpath/graphs.hpp"

namespace powpath {

// Intersection of the neighborhoods of all vertices of `s`, restricted to
// `within`. Throws on empty `s`. In debug builds asserts the counting lower
// bound |result| >= sum_i deg(v_i; within) - (|s|-1)|within|.
VertexSet common_neighborhood(const Graph& g, const VertexSet& s, const VertexSet& within);

// Extends a clique to `target` vertices by repeatedly adding the lowest-index
// common neighbor. Throws extension_failure when stuck short of `target`;
// under min degree > (k-1)n/k and target <= k+1 success is guaranteed.
VertexSet extend_clique(const Graph& g, const VertexSet& clique, int target);

// Maximum matching of a general graph (blossom contraction), postcondition
// checked: size >= min{min_degree, floor(n/2)}.
Matching min_degree_matching(const Graph& g);

// Maximum matching between disjoint classes `left` and `right`, considering
// only left-right edges. `left_min_deg`/`right_min_deg` are the claimed
// minimum degrees into the other class; they are verified and the returned
// matching is checked against the bound min{left_min_deg + right_min_deg,
// |left|, |right|}.
Matching bipartite_min_degree_matching(const Graph& g, const VertexSet& left,
                                       const VertexSet& right, int left_min_deg,
                                       int right_min_deg);

// Proper r-coloring with class sizes ceil(n/r) or floor(n/r). Requires
// r > max_degree(g). Classes are returned largest-first-stable: index order
// is deterministic for fixed input.
std::vector<VertexSet> equitable_coloring(const Graph& g, int r);

// At least min{k*delta - (k-1)*n, floor(n/(k+1))} vertex-disjoint (k+1)-
// cliques, obtained by equitably coloring the complement. Requires
// n >= k(k+1) and min degree >= (k-1)n/k.
std::vector<VertexSet> disjoint_cliques(const Graph& g, int k);

// Partition of the vertices into `parts` independent sets if one exists
// (backtracking with bitset pruning); std::nullopt otherwise.
std::optional<std::vector<VertexSet>> partiteness_certificate(const Graph& g, int parts);

// True when g has a clique on `size` vertices (small exact search; used by
// partiteness callers to check K_k-freeness).
bool has_clique_of_size(const Graph& g, int size);

} // namespace powpath
