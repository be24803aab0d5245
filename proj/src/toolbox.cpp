#include "powpath/toolbox.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <queue>
#include <random>

namespace powpath {

VertexSet common_neighborhood(const Graph& g, const VertexSet& s, const VertexSet& within) {
    if (s.empty()) throw domain_error("common_neighborhood: empty vertex set");
    VertexSet result = within;
    for (int v = s.first(); v >= 0; v = s.next(v)) result &= g.neighbors(v);
#ifndef NDEBUG
    // Counting bound: deg(S; U) >= sum_i deg(v_i; U) - (|S|-1)|U|.
    long long bound = -static_cast<long long>(s.count() - 1) * within.count();
    for (int v = s.first(); v >= 0; v = s.next(v)) bound += g.degree_in(v, within);
    assert(result.count() >= bound);
#endif
    return result;
}

VertexSet extend_clique(const Graph& g, const VertexSet& clique, int target) {
    assert(g.is_clique(clique));
    VertexSet current = clique;
    if (current.count() >= target) return current;
    VertexSet candidates = current.empty() ? g.all_vertices()
                                           : common_neighborhood(g, current, g.all_vertices());
    candidates -= current;
    while (current.count() < target) {
        int v = candidates.first();
        if (v < 0) {
            throw extension_failure("extend_clique: no common neighbor at size " +
                                    std::to_string(current.count()) + ", target " +
                                    std::to_string(target));
        }
        current.set(v);
        candidates &= g.neighbors(v);
    }
    return current;
}

namespace {

// Maximum matching in a general graph by blossom contraction. Each phase
// searches for an augmenting path from one free vertex, shrinking odd cycles
// onto their base as they are discovered.
class BlossomMatcher {
  public:
    explicit BlossomMatcher(const Graph& g)
        : g_(g), n_(g.order()), match_(n_, -1), parent_(n_, -1), base_(n_), used_(n_, false) {}

    std::vector<int> solve() {
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            int u = find_augmenting_path(v);
            if (u != -1) augment(u);
        }
        return match_;
    }

  private:
    int lowest_common_base(int a, int b) {
        std::vector<bool> on_path(n_, false);
        while (true) {
            a = base_[a];
            on_path[a] = true;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (on_path[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_blossom_path(int v, int stem, int child, std::vector<bool>& in_blossom) {
        while (base_[v] != stem) {
            in_blossom[base_[v]] = true;
            in_blossom[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_augmenting_path(int root) {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            const VertexSet& nb = g_.neighbors(v);
            for (int u = nb.first(); u >= 0; u = nb.next(u)) {
                if (base_[v] == base_[u] || match_[v] == u) continue;
                if (u == root || (match_[u] != -1 && parent_[match_[u]] != -1)) {
                    // Odd cycle: contract the blossom onto its base.
                    int stem = lowest_common_base(v, u);
                    std::vector<bool> in_blossom(n_, false);
                    mark_blossom_path(v, stem, u, in_blossom);
                    mark_blossom_path(u, stem, v, in_blossom);
                    for (int i = 0; i < n_; ++i) {
                        if (in_blossom[base_[i]]) {
                            base_[i] = stem;
                            if (!used_[i]) {
                                used_[i] = true;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[u] == -1) {
                    parent_[u] = v;
                    if (match_[u] == -1) return u; // augmenting path reached a free vertex
                    used_[match_[u]] = true;
                    q.push(match_[u]);
                }
            }
        }
        return -1;
    }

    void augment(int u) {
        while (u != -1) {
            int pv = parent_[u];
            int next = match_[pv];
            match_[u] = pv;
            match_[pv] = u;
            u = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<bool> used_;
};

} // namespace

Matching min_degree_matching(const Graph& g) {
    std::vector<int> match = BlossomMatcher(g).solve();
    Matching m;
    for (int v = 0; v < g.order(); ++v) {
        if (match[v] > v) m.pairs.emplace_back(v, match[v]);
    }
    assert(m.valid_in(g));
    if (g.order() > 0) {
        int bound = std::min(g.min_degree(), g.order() / 2);
        if (m.size() < bound) {
            throw extension_failure("matching smaller than the minimum-degree bound");
        }
    }
    return m;
}

Matching bipartite_min_degree_matching(const Graph& g, const VertexSet& left,
                                       const VertexSet& right, int left_min_deg,
                                       int right_min_deg) {
    if (left.intersects(right)) {
        throw hypothesis_violation("disjoint classes", "left and right overlap");
    }
    for (int v = left.first(); v >= 0; v = left.next(v)) {
        if (g.degree_in(v, right) < left_min_deg) {
            throw hypothesis_violation("left degree bound",
                                       "vertex " + std::to_string(v) + " has " +
                                           std::to_string(g.degree_in(v, right)) +
                                           " neighbors, needs " + std::to_string(left_min_deg));
        }
    }
    for (int v = right.first(); v >= 0; v = right.next(v)) {
        if (g.degree_in(v, left) < right_min_deg) {
            throw hypothesis_violation("right degree bound",
                                       "vertex " + std::to_string(v) + " has " +
                                           std::to_string(g.degree_in(v, left)) +
                                           " neighbors, needs " + std::to_string(right_min_deg));
        }
    }

    // Hopcroft-Karp on the left-right subgraph.
    std::vector<int> ls = left.to_vector();
    std::vector<int> rs = right.to_vector();
    const int L = static_cast<int>(ls.size());
    const int R = static_cast<int>(rs.size());
    std::vector<int> rindex(g.order(), -1);
    for (int i = 0; i < R; ++i) rindex[rs[i]] = i;
    std::vector<std::vector<int>> adj(L);
    for (int i = 0; i < L; ++i) {
        VertexSet nb = g.neighbors(ls[i]) & right;
        for (int v = nb.first(); v >= 0; v = nb.next(v)) adj[i].push_back(rindex[v]);
    }

    constexpr int kInf = 1 << 30;
    std::vector<int> match_l(L, -1), match_r(R, -1), dist(L);
    auto bfs = [&]() {
        std::queue<int> q;
        for (int i = 0; i < L; ++i) {
            dist[i] = match_l[i] == -1 ? 0 : kInf;
            if (dist[i] == 0) q.push(i);
        }
        bool reached_free = false;
        while (!q.empty()) {
            int i = q.front();
            q.pop();
            for (int j : adj[i]) {
                int i2 = match_r[j];
                if (i2 == -1) {
                    reached_free = true;
                } else if (dist[i2] == kInf) {
                    dist[i2] = dist[i] + 1;
                    q.push(i2);
                }
            }
        }
        return reached_free;
    };
    std::function<bool(int)> dfs = [&](int i) {
        for (int j : adj[i]) {
            int i2 = match_r[j];
            if (i2 == -1 || (dist[i2] == dist[i] + 1 && dfs(i2))) {
                match_l[i] = j;
                match_r[j] = i;
                return true;
            }
        }
        dist[i] = kInf;
        return false;
    };
    while (bfs()) {
        for (int i = 0; i < L; ++i) {
            if (match_l[i] == -1) dfs(i);
        }
    }

    Matching m;
    for (int i = 0; i < L; ++i) {
        if (match_l[i] != -1) m.pairs.emplace_back(ls[i], rs[match_l[i]]);
    }
    assert(m.valid_in(g));
    int bound = std::min({left_min_deg + right_min_deg, L, R});
    if (m.size() < bound) {
        throw extension_failure("bipartite matching smaller than the degree-sum bound");
    }
    return m;
}

namespace {

// Exact equitable coloring by backtracking, used as a fallback at small n.
bool equitable_backtrack(const Graph& g, int r, int hi_quota, int lo_size,
                         std::vector<int>& color, std::vector<int>& class_size, int v) {
    const int n = g.order();
    if (v == n) return true;
    int hi_size = lo_size + 1;
    int used_hi = 0;
    for (int c = 0; c < r; ++c) {
        if (class_size[c] == hi_size) used_hi += 1;
    }
    for (int c = 0; c < r; ++c) {
        int cap = class_size[c] < lo_size ? hi_size : (used_hi < hi_quota ? hi_size : lo_size);
        if (class_size[c] >= cap) continue;
        bool conflict = false;
        const VertexSet& nb = g.neighbors(v);
        for (int u = nb.first(); u >= 0 && u < v; u = nb.next(u)) {
            if (color[u] == c) {
                conflict = true;
                break;
            }
        }
        if (conflict) continue;
        color[v] = c;
        class_size[c] += 1;
        if (equitable_backtrack(g, r, hi_quota, lo_size, color, class_size, v + 1)) return true;
        color[v] = -1;
        class_size[c] -= 1;
        if (class_size[c] == 0) break; // classes are interchangeable; try only the first empty one
    }
    return false;
}

// One rebalancing attempt from a given initial vertex order. Returns colors
// on success.
std::optional<std::vector<int>> try_equitable(const Graph& g, int r,
                                              const std::vector<int>& order) {
    const int n = g.order();
    std::vector<int> color(n, -1);
    std::vector<VertexSet> members(r, VertexSet(n));
    std::vector<int> size(r, 0);
    for (int v : order) {
        for (int c = 0; c < r; ++c) {
            if (!members[c].intersects(g.neighbors(v))) {
                color[v] = c;
                members[c].set(v);
                size[c] += 1;
                break;
            }
        }
        assert(color[v] != -1); // r > max degree guarantees a free class
    }

    auto spread = [&]() {
        auto [lo, hi] = std::minmax_element(size.begin(), size.end());
        return std::pair<int, int>(*lo, *hi);
    };

    while (true) {
        auto [lo, hi] = spread();
        if (hi - lo <= 1) return color;

        // Augmenting search over classes: an arc A -> B means some vertex of A
        // has no neighbor in B and can migrate. A path from an over-full class
        // to an under-full one shifts one unit of size along the chain.
        std::vector<int> via_vertex(r, -1), via_class(r, -1);
        std::vector<bool> seen(r, false);
        std::queue<int> q;
        for (int c = 0; c < r; ++c) {
            if (size[c] == hi) {
                seen[c] = true;
                q.push(c);
            }
        }
        int goal = -1;
        while (!q.empty() && goal == -1) {
            int a = q.front();
            q.pop();
            for (int v = members[a].first(); v >= 0 && goal == -1; v = members[a].next(v)) {
                for (int b = 0; b < r; ++b) {
                    if (seen[b] || members[b].intersects(g.neighbors(v))) continue;
                    seen[b] = true;
                    via_vertex[b] = v;
                    via_class[b] = a;
                    if (size[b] == lo) {
                        goal = b;
                        break;
                    }
                    q.push(b);
                }
            }
        }
        if (goal == -1) return std::nullopt; // stuck; caller retries or falls back
        // Walk the chain from the under-full class back to an over-full one,
        // shifting one vertex at each link. Each migrating vertex was checked
        // against the original content of its destination, and destinations
        // only lose vertices before they gain one, so the coloring stays
        // proper throughout.
        for (int b = goal; via_class[b] != -1; b = via_class[b]) {
            int v = via_vertex[b];
            int a = via_class[b];
            members[a].reset(v);
            size[a] -= 1;
            members[b].set(v);
            size[b] += 1;
            color[v] = b;
        }
    }
}

} // namespace

std::vector<VertexSet> equitable_coloring(const Graph& g, int r) {
    const int n = g.order();
    if (r <= 0) throw domain_error("equitable_coloring: r must be positive");
    if (n > 0 && r <= g.max_degree()) {
        throw domain_error("equitable_coloring: requires r > max degree (r=" + std::to_string(r) +
                           ", max degree=" + std::to_string(g.max_degree()) + ")");
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::optional<std::vector<int>> color = try_equitable(g, r, order);
    if (!color) {
        // Deterministic randomized restarts before the exact fallback.
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (static_cast<std::uint64_t>(n) << 16) ^
                            static_cast<std::uint64_t>(r));
        for (int attempt = 0; attempt < 64 && !color; ++attempt) {
            std::shuffle(order.begin(), order.end(), rng);
            color = try_equitable(g, r, order);
        }
    }
    if (!color) {
        std::vector<int> c(n, -1), size(r, 0);
        if (!equitable_backtrack(g, r, n % r, n / r, c, size, 0)) {
            throw extension_failure("equitable_coloring: no balanced coloring found");
        }
        color = c;
    }

    std::vector<VertexSet> classes(r, VertexSet(n));
    for (int v = 0; v < n; ++v) classes[(*color)[v]].set(v);
    // Deterministic output order: larger classes first, then by first member.
    std::stable_sort(classes.begin(), classes.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.count() != b.count()) return a.count() > b.count();
        return a.first() < b.first();
    });
#ifndef NDEBUG
    for (const VertexSet& cls : classes) {
        assert(g.is_independent(cls));
        assert(cls.count() == n / r || cls.count() == (n + r - 1) / r);
    }
#endif
    return classes;
}

std::vector<VertexSet> disjoint_cliques(const Graph& g, int k) {
    const long long n = g.order();
    if (k < 1) throw domain_error("disjoint_cliques: k must be >= 1");
    if (n < static_cast<long long>(k) * (k + 1)) {
        throw domain_error("disjoint_cliques: requires n >= k(k+1)");
    }
    const long long delta = g.min_degree();
    if (k * delta < (k - 1) * n) {
        throw domain_error("disjoint_cliques: requires min degree >= (k-1)n/k");
    }

    const long long guarantee = std::min(k * delta - (k - 1) * n, n / (k + 1));
    Graph co = g.complement();
    // Color the complement equitably; classes of size >= k+1 are cliques of G.
    // r is chosen by the degree regime: n - delta while delta <= kn/(k+1),
    // floor(n/(k+1)) beyond (there n - delta would make classes oversized).
    long long r = ((k + 1) * delta <= k * n) ? (n - delta) : (n / (k + 1));
    std::vector<VertexSet> classes = equitable_coloring(co, static_cast<int>(r));

    std::vector<VertexSet> cliques;
    for (const VertexSet& cls : classes) {
        if (cls.count() < k + 1) continue;
        VertexSet q(g.order());
        int taken = 0;
        for (int v = cls.first(); v >= 0 && taken < k + 1; v = cls.next(v)) {
            q.set(v);
            taken += 1;
        }
        assert(g.is_clique(q));
        cliques.push_back(q);
    }
    if (static_cast<long long>(cliques.size()) < guarantee) {
        throw extension_failure("disjoint_cliques: packing fell short of the guarantee");
    }
    return cliques;
}

namespace {

bool partite_backtrack(const Graph& g, const std::vector<int>& order, int parts,
                       std::vector<VertexSet>& classes, std::size_t pos, int used) {
    if (pos == order.size()) return true;
    int v = order[pos];
    int limit = std::min(used + 1, parts); // first use of a new class breaks symmetry
    for (int c = 0; c < limit; ++c) {
        if (classes[c].intersects(g.neighbors(v))) continue;
        classes[c].set(v);
        if (partite_backtrack(g, order, parts, classes, pos + 1, std::max(used, c + 1))) {
            return true;
        }
        classes[c].reset(v);
    }
    return false;
}

} // namespace

std::optional<std::vector<VertexSet>> partiteness_certificate(const Graph& g, int parts) {
    const int n = g.order();
    if (parts < 0) throw domain_error("partiteness_certificate: negative part count");
    if (n == 0) return std::vector<VertexSet>(parts, VertexSet(0));
    if (parts == 0) return std::nullopt;

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<VertexSet> classes(parts, VertexSet(n));
    if (!partite_backtrack(g, order, parts, classes, 0, 0)) return std::nullopt;
    return classes;
}

namespace {

bool clique_search(const Graph& g, const VertexSet& candidates, int need) {
    if (need == 0) return true;
    if (candidates.count() < need) return false;
    for (int v = candidates.first(); v >= 0; v = candidates.next(v)) {
        VertexSet rest = candidates & g.neighbors(v);
        // only consider extensions with higher indices to avoid revisiting
        VertexSet higher(rest.universe());
        for (int u = rest.next(v); u >= 0; u = rest.next(u)) higher.set(u);
        if (clique_search(g, higher, need - 1)) return true;
    }
    return false;
}

} // namespace

bool has_clique_of_size(const Graph& g, int size) {
    if (size <= 0) return true;
    if (size == 1) return g.order() > 0;
    return clique_search(g, g.all_vertices(), size);
}

} // namespace powpath
