#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "powpath/graphs.hpp"
#include "powpath/powersearch.hpp"
#include "powpath/thresholds.hpp"

namespace powpath {

// Vertex layout of the extremal graphs: k-1 independent sets I_1..I_{k-1} of
// size n-delta each, followed by r near-equal cliques X_1..X_r covering the
// remaining (k-1)*delta - (k-2)*n vertices, with |X_1| >= ... >= |X_r| >=
// |X_1| - 1.  Vertices are numbered I_1, ..., I_{k-1}, X_1, ..., X_r; the
// cycle-variant apex, when present, is the last vertex of X_1.
struct ExtremalLayout {
    PowerParams params;
    std::vector<VertexSet> independent_sets;
    std::vector<VertexSet> cliques;
    std::optional<int> apex;
};

// The path-extremal graph: complete between distinct independent sets,
// complete between every independent set and every clique, each clique
// internally complete, no edges between distinct cliques.  Uses r = r_p.
// Every I-vertex has degree exactly delta and the minimum degree is delta.
std::pair<Graph, ExtremalLayout> build_G_p(const PowerParams& params);

// The cycle-extremal graph: same construction with r = r_c cliques, plus an
// apex vertex v in X_1 additionally joined to every clique X_i with
// |X_i| != |X_1|.
std::pair<Graph, ExtremalLayout> build_G_c(const PowerParams& params);

// Complete (k+1)-partite graph with k parts of size n-delta and one part of
// size n - k*(n-delta) = k*delta - (k-1)*n.  Requires that last part to be
// nonempty.  Every vertex misses exactly its own part, so the minimum degree
// is delta.
Graph build_balanced_multipartite(int k, int n, int delta);

// The explicit longest k-th power of a path in a path-extremal graph:
// repeatedly take one unused vertex from each I_i and two unused vertices
// from X_1 in turn, skipping independent sets that run out early, until X_1
// is exhausted.  Always achieves exactly pp_k(n, delta) vertices (the cap at
// n included); if the pattern ever failed validation the routine would fall
// back to the exact search and throw extension_failure on a genuine shortfall.
PowerPathWitness construct_longest_power_path(const Graph& g, const ExtremalLayout& layout, int k);

// Re-derives the counting argument that bounds any k-th power of a path in a
// path-extremal graph: the witness meets at most one clique X_i, its length
// satisfies len - (k-1)*ceil(len/(k+1)) <= |X_1|, and hence len <= pp.
// Returns false if any of those checks — or witness validity — fails.
bool certify_upper_bound(const Graph& g, const ExtremalLayout& layout, int k,
                         const PowerPathWitness& witness);

}  // namespace powpath
