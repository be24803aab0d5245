#include "powpath/extremal.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "powpath/errors.hpp"

namespace powpath {
namespace {

// Shared skeleton of both extremal graphs: k-1 independent sets of size
// n-delta, then r near-equal cliques over the remaining vertices, larger
// cliques first.  Only the number of cliques differs between the variants.
std::pair<Graph, ExtremalLayout> build_layered(const PowerParams& params, long long r) {
    const int k = params.k;
    const int n = static_cast<int>(params.n);
    const int ind_size = static_cast<int>(params.n - params.delta);
    const long long a = clique_part_size(params);

    ExtremalLayout layout;
    layout.params = params;
    Graph g(n);

    int next = 0;
    for (int j = 0; j + 1 < k; ++j) {
        VertexSet s(n);
        for (int c = 0; c < ind_size; ++c) s.set(next++);
        layout.independent_sets.push_back(std::move(s));
    }
    const long long base = a / r;
    const long long extra = a % r;  // first `extra` cliques get one more vertex
    for (long long i = 0; i < r; ++i) {
        const long long size = base + (i < extra ? 1 : 0);
        VertexSet s(n);
        for (long long c = 0; c < size; ++c) s.set(next++);
        layout.cliques.push_back(std::move(s));
    }
    assert(next == n);

    // Independent sets are pairwise complete to each other and to every
    // clique; cliques are internally complete and pairwise non-adjacent.
    const int ind_total = (k - 1) * ind_size;
    for (int u = 0; u < ind_total; ++u)
        for (int v = u + 1; v < n; ++v)
            if (v >= ind_total || v / ind_size != u / ind_size) g.add_edge(u, v);
    for (const VertexSet& clique : layout.cliques)
        for (int u = clique.first(); u != -1; u = clique.next(u))
            for (int v = clique.next(u); v != -1; v = clique.next(v)) g.add_edge(u, v);

    return {std::move(g), std::move(layout)};
}

#ifndef NDEBUG
void audit_degrees(const Graph& g, const ExtremalLayout& layout) {
    const long long delta = layout.params.delta;
    assert(g.min_degree() >= delta);
    for (const VertexSet& ind : layout.independent_sets)
        for (int v = ind.first(); v != -1; v = ind.next(v))
            assert(g.degree(v) == delta);
}
#endif

}  // namespace

std::pair<Graph, ExtremalLayout> build_G_p(const PowerParams& params) {
    validate_params(params);
    auto built = build_layered(params, compute_r(params, Variant::path));
#ifndef NDEBUG
    audit_degrees(built.first, built.second);
#endif
    return built;
}

std::pair<Graph, ExtremalLayout> build_G_c(const PowerParams& params) {
    validate_params(params);
    auto built = build_layered(params, compute_r(params, Variant::cycle));
    Graph& g = built.first;
    ExtremalLayout& layout = built.second;

    // Apex: a vertex of X_1, additionally joined to every clique of a
    // different size.  With near-equal sizes those are exactly the cliques
    // one vertex smaller than X_1, if any.
    const VertexSet& x1 = layout.cliques.front();
    int apex = -1;
    for (int v = x1.first(); v != -1; v = x1.next(v)) apex = v;
    layout.apex = apex;
    const long long x1_size = static_cast<long long>(x1.count());
    for (const VertexSet& clique : layout.cliques) {
        if (static_cast<long long>(clique.count()) == x1_size) continue;
        for (int v = clique.first(); v != -1; v = clique.next(v)) g.add_edge(apex, v);
    }
#ifndef NDEBUG
    audit_degrees(g, layout);
#endif
    return built;
}

Graph build_balanced_multipartite(int k, int n, int delta) {
    if (k < 1 || n < 1 || delta < 0 || delta > n)
        throw domain_error("balanced multipartite: need 1 <= k, 0 <= delta <= n");
    const long long small = static_cast<long long>(n) - delta;
    const long long last = static_cast<long long>(n) - k * small;
    if (last < 1)
        throw domain_error("balanced multipartite: k*delta - (k-1)*n = " + std::to_string(last) +
                           " must be positive");
    // Parts: k of size n-delta, one of size k*delta-(k-1)*n; a vertex is
    // adjacent to everything outside its own part.
    std::vector<int> part_of(n);
    int next = 0;
    for (int p = 0; p < k; ++p)
        for (long long c = 0; c < small; ++c) part_of[next++] = p;
    while (next < n) part_of[next++] = k;
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) g.add_edge(u, v);
    return g;
}

PowerPathWitness construct_longest_power_path(const Graph& g, const ExtremalLayout& layout,
                                              int k) {
    const ThresholdProfile profile = compute_profile(layout.params);
    const long long target = profile.pp;

    // Round-robin: one unused vertex from each I_i (skipping exhausted sets),
    // then two unused vertices from X_1, until X_1 runs out.  A pair that
    // empties X_1 is followed by one final I-group; a leftover single vertex
    // of X_1 ends the sequence on the spot (a trailing I-group there would
    // put same-set vertices at distance k).
    std::vector<int> cursor(layout.independent_sets.size(), -1);
    for (std::size_t j = 0; j < cursor.size(); ++j) cursor[j] = layout.independent_sets[j].first();
    const VertexSet& x1 = layout.cliques.front();
    int x_cursor = x1.first();

    std::vector<int> seq;
    while (true) {
        for (std::size_t j = 0; j < cursor.size(); ++j) {
            if (cursor[j] == -1) continue;
            seq.push_back(cursor[j]);
            cursor[j] = layout.independent_sets[j].next(cursor[j]);
        }
        if (x_cursor == -1) break;
        seq.push_back(x_cursor);
        x_cursor = x1.next(x_cursor);
        if (x_cursor == -1) break;
        seq.push_back(x_cursor);
        x_cursor = x1.next(x_cursor);
    }

    PowerPathWitness witness{k, std::move(seq)};
    if (witness.length() == target && validate_power_path(g, witness)) return witness;

    // The pattern provably spans every in-domain instance, so this path is
    // defensive only: fall back to the exact search before giving up.
    PowerPathWitness exact = longest_power_path_exact(g, k, kUnlimitedBudget,
                                                      &layout.independent_sets);
    if (exact.length() != target)
        throw extension_failure("longest-power construction fell short: got " +
                                std::to_string(exact.length()) + " of " + std::to_string(target));
    return exact;
}

bool certify_upper_bound(const Graph& g, const ExtremalLayout& layout, int k,
                         const PowerPathWitness& witness) {
    if (!validate_power_path(g, witness)) return false;
    const long long len = witness.length();

    // A valid power path meets at most one clique: any k+1 consecutive
    // vertices form a clique of g and distinct X_i are non-adjacent.
    int cliques_met = 0;
    for (const VertexSet& clique : layout.cliques) {
        bool met = false;
        for (int v : witness.sequence)
            if (clique.test(v)) { met = true; break; }
        cliques_met += met ? 1 : 0;
    }
    if (cliques_met > 1) return false;

    // Counting bound: each independent set contributes at most ceil(len/(k+1))
    // vertices (the independence number of the path power), so the single
    // clique must supply the rest — at most |X_1| vertices.
    const ThresholdProfile profile = compute_profile(layout.params);
    const long long ind_cap = (len + k) / (k + 1);
    if (len - (k - 1) * ind_cap > profile.s_p) return false;
    return len <= profile.pp;
}

}  // namespace powpath
