#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "powpath/errors.hpp"
#include "powpath/graphs.hpp"

namespace powpath {

// A k-th power of a path: an ordered list of distinct vertices in which every
// pair at sequence-distance at most k is an edge of the host graph.  The
// "length" of the witness is its vertex count.
struct PowerPathWitness {
    int k = 1;
    std::vector<int> sequence;

    int length() const { return static_cast<int>(sequence.size()); }
};

// A k-th power of a cycle: an ordered cyclic list of distinct vertices in
// which every pair at cyclic distance at most k is an edge.  Requires at
// least k+1 vertices, so every vertex has 2k distinct cyclic neighbours
// (fewer only when the cycle is so short it is a clique).
struct PowerCycleWitness {
    int k = 1;
    std::vector<int> cycle;

    int length() const { return static_cast<int>(cycle.size()); }
};

// Validation against the raw adjacency definition, independent of any search
// state.  An empty or single-vertex sequence is a valid path power; cycles
// must have at least k+1 vertices.
bool validate_power_path(const Graph& g, const PowerPathWitness& w);
bool validate_power_cycle(const Graph& g, const PowerCycleWitness& w);

// Thrown when a search exhausts its node budget.  For longest-path searches
// `best` carries the longest witness actually walked before the interrupt;
// it is a valid power path but not certified maximal.
struct search_budget_exceeded : resource_exhausted {
    PowerPathWitness best;
    std::uint64_t nodes = 0;

    search_budget_exceeded(PowerPathWitness best_so_far, std::uint64_t node_count);
};

inline constexpr std::uint64_t kUnlimitedBudget = UINT64_MAX;

// Exact maximum-length k-th power of a path in g, found by depth-first search
// over partial sequences (the next vertex must be adjacent to the last
// min(k, len) chosen).  States that have been fully explored are memoised by
// (used-set, ordered last-k window) when the graph is small enough to pack
// the state into two machine words; since the used-set determines the prefix
// length, a revisited state can never improve on its first exploration.
//
// If `independent_sets` is supplied (sets known to be independent in g), the
// search additionally prunes branches whose remaining supply cannot beat the
// current best: a path power on l vertices contains at most ceil(l/(k+1))
// vertices of any independent set.  The result is still an exact maximum.
//
// Throws search_budget_exceeded if more than `budget` nodes are expanded.
PowerPathWitness longest_power_path_exact(
    const Graph& g, int k, std::uint64_t budget = kUnlimitedBudget,
    const std::vector<VertexSet>* independent_sets = nullptr);

// Decides whether g contains a k-th power of a cycle on exactly len vertices
// (len >= k+1) and returns a witness if so; std::nullopt certifies absence.
// Symmetry reduction: the witness is canonical, i.e. its smallest vertex
// first and its second vertex smaller than its last.  Throws
// search_budget_exceeded when the budget runs out before the question is
// decided.
std::optional<PowerCycleWitness> find_power_cycle(const Graph& g, int k, int len,
                                                  std::uint64_t budget = kUnlimitedBudget);

// The k-th power of a path / cycle on len vertices as an explicit graph
// (vertices 0..len-1 in path/cycle order).
Graph path_power_graph(int k, int len);
Graph cycle_power_graph(int k, int len);

// Chromatic number of C^k_len via the closed form ceil(len / floor(len/(k+1))),
// len >= k+1.  Validated in the test suite against an exact colouring search.
int power_cycle_chromatic(int k, int len);

// Exact chromatic number by branch-and-bound over colour classes.  Intended
// for small validation instances (n <= ~20).
int chromatic_number_exact(const Graph& g);

// Raises an h-th power witness one power: inserts into each block Q_i of the
// base a distinct vertex of w that is adjacent to all of Q_i.  Blocks follow
// the overlapping-window pattern: for a path t_1..t_L with L = (h+1)*l + h' - 1
// and h' in [1, h+1],
//     Q_1     = t_1..t_{h+1},
//     Q_i     = t_{(h+1)(i-2)+1} .. t_{(h+1)i}        for 1 < i <= l,
//     Q_{l+1} = t_{(h+1)l-h} .. t_L,
// and the i-th inserted vertex lands immediately before t_{(h+1)(i-1)+1}.
// For a cycle the base length must be divisible by h+1, the first block wraps
// around the seam, and the result is a cycle power on (h+2)/(h+1) times the
// base length.
//
// Insertion order processes blocks by ascending count of available common
// neighbours (ties by block index) and assigns each block its lowest-index
// unused candidate; this greedy succeeds whenever any assignment does.
// Throws insertion_failure naming the starved block otherwise.  w must be
// disjoint from the base witness.
PowerPathWitness power_step_up(const Graph& g, const PowerPathWitness& base, const VertexSet& w);
PowerCycleWitness power_step_up(const Graph& g, const PowerCycleWitness& base, const VertexSet& w);

// Hamilton cycle in a Dirac graph (n >= 3, min degree >= n/2) by rotation-
// extension: grow a path greedily, rotate to expose extendable endpoints,
// close through a crossing chord, and splice in uncovered vertices.  Throws
// domain_error if the degree bound fails.
std::vector<int> dirac_hamilton_cycle(const Graph& g);

// Cycle on exactly len vertices (3 <= len <= n) such that no four consecutive
// cycle vertices contain more than one vertex of `bad`.  Hypotheses are
// machine-checked: n >= 10, 100*|bad| <= n, vertices of `bad` have degree
// >= 4|bad|+2, all other degrees >= n/2 + 5|bad| + 5 (checked exactly via
// 2*deg >= n + 10|bad| + 10).  Throws hypothesis_violation if they fail;
// extension_failure if construction fails despite them (a bug, not a caller
// error).
std::vector<int> cycle_avoiding_bad(const Graph& g, const VertexSet& bad, int len);

// Path analogue: an x-y path on exactly len vertices (5 <= len <= n) with
// x, y not in `bad`, such that no four consecutive path vertices contain more
// than one vertex of bad ∪ {x, y}.  Same hypothesis checks as the cycle form.
std::vector<int> path_avoiding_bad(const Graph& g, const VertexSet& bad, int len, int x, int y);

}  // namespace powpath
