// Dense undirected graphs over vertex indices 0..n-1 with bitset adjacency
// rows, plus the small vertex-set and matching value types used throughout.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "powpath/errors.hpp"

namespace powpath {

// Bitset over a fixed universe 0..n-1. Word-parallel set algebra plus
// first/next iteration; all operands of a binary operation must share the
// same universe size.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    static VertexSet of(int universe, std::initializer_list<int> members);

    int universe() const { return n_; }
    bool test(int v) const;
    void set(int v);
    void reset(int v);
    void clear();
    int count() const;
    bool empty() const { return count() == 0; }

    // First member, or -1 when empty.
    int first() const;
    // First member strictly greater than v, or -1. `for (int u = s.first();
    // u >= 0; u = s.next(u))` iterates in increasing order.
    int next(int v) const;

    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o); // set difference

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const = default;

    bool intersects(const VertexSet& o) const;
    bool is_subset_of(const VertexSet& o) const;
    std::vector<int> to_vector() const;
    std::string to_string() const; // "{0, 3, 7}" for diagnostics

    const std::vector<std::uint64_t>& words() const { return w_; }

  private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Simple undirected graph, no loops, no multi-edges. Construct, add edges,
// then treat as immutable: every algorithm in the library takes the graph by
// const reference and allocates its own outputs.
class Graph {
  public:
    static constexpr int kMaxVertices = 64 * 1024;

    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const;
    const VertexSet& neighbors(int v) const;

    int degree(int v) const { return neighbors(v).count(); }
    int degree_in(int v, const VertexSet& within) const;
    int min_degree() const;
    int max_degree() const;
    long long edge_count() const;

    VertexSet all_vertices() const;
    Graph complement() const;
    // Subgraph induced by `within`, relabelled 0..|within|-1 in increasing
    // vertex order; if `back_map` is given it receives new-index -> old-index.
    Graph induced(const VertexSet& within, std::vector<int>* back_map = nullptr) const;

    bool is_clique(const VertexSet& s) const;
    bool is_independent(const VertexSet& s) const;

    bool operator==(const Graph& o) const = default;

  private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// Pairwise vertex-disjoint edges of a host graph.
struct Matching {
    std::vector<std::pair<int, int>> pairs;
    int size() const { return static_cast<int>(pairs.size()); }
    bool valid_in(const Graph& g) const; // disjoint and every pair an edge
    VertexSet vertices(int universe) const;
};

// graph6 encoding (bit-exact, supporting the 1-byte header for n <= 62 and
// the 4-byte header up to the library's vertex cap; no 8-byte long form).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& text);

// Fallback text format: one "u v" edge per line, vertex count inferred from
// the largest index unless a leading "n <count>" line is present.
std::string to_adjacency_list(const Graph& g);
Graph from_adjacency_list(const std::string& text);

} // namespace powpath
