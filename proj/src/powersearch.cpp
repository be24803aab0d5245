#include "powpath/powersearch.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "powpath/toolbox.hpp"

namespace powpath {

bool validate_power_path(const Graph& g, const PowerPathWitness& w) {
    if (w.k < 1) return false;
    const int len = w.length();
    VertexSet seen(g.order());
    for (int v : w.sequence) {
        if (v < 0 || v >= g.order() || seen.test(v)) return false;
        seen.set(v);
    }
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j <= i + w.k && j < len; ++j)
            if (!g.has_edge(w.sequence[i], w.sequence[j])) return false;
    return true;
}

bool validate_power_cycle(const Graph& g, const PowerCycleWitness& w) {
    if (w.k < 1) return false;
    const int len = w.length();
    if (len < w.k + 1) return false;
    VertexSet seen(g.order());
    for (int v : w.cycle) {
        if (v < 0 || v >= g.order() || seen.test(v)) return false;
        seen.set(v);
    }
    for (int i = 0; i < len; ++i)
        for (int d = 1; d <= w.k; ++d)
            if (!g.has_edge(w.cycle[i], w.cycle[(i + d) % len])) return false;
    return true;
}

search_budget_exceeded::search_budget_exceeded(PowerPathWitness best_so_far,
                                               std::uint64_t node_count)
    : resource_exhausted("search exceeded its node budget after " +
                         std::to_string(node_count) + " expansions"),
      best(std::move(best_so_far)),
      nodes(node_count) {}

namespace {

// ---------------------------------------------------------------------------
// Longest power path

struct StateKey {
    std::uint64_t used;
    std::uint64_t window;
    bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const {
        std::uint64_t h = k.used * 0x9E3779B97F4A7C15ULL;
        h ^= k.window + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

constexpr std::size_t kMemoCap = std::size_t{1} << 22;

class PathSearcher {
  public:
    PathSearcher(const Graph& g, int k, std::uint64_t budget,
                 const std::vector<VertexSet>* independent_sets)
        : g_(g),
          k_(k),
          budget_(budget),
          sets_(independent_sets),
          used_(g.order()),
          // The used-set determines the prefix length, so a state fully
          // explored once can never be improved on a revisit; memoisation
          // only needs a "done" marker.  Packing requires the used-set in
          // one word and the ordered window in another (6 bits per slot).
          memo_enabled_(g.order() <= 62 && k <= 10) {}

    PowerPathWitness run() {
        if (g_.order() == 0) return PowerPathWitness{k_, {}};
        for (int v = 0; v < g_.order() && !saturated_; ++v) {
            cur_.assign(1, v);
            used_.set(v);
            dfs();
            used_.reset(v);
        }
        PowerPathWitness out{k_, best_};
        assert(validate_power_path(g_, out));
        return out;
    }

  private:
    std::uint64_t pack_window() const {
        const int m = std::min<int>(k_, static_cast<int>(cur_.size()));
        std::uint64_t w = 0;
        for (int i = 0; i < m; ++i)
            w |= static_cast<std::uint64_t>(cur_[cur_.size() - 1 - i] + 1) << (6 * i);
        return w;
    }

    // True when no completion from the current prefix can beat the best
    // length found so far: a power path on L vertices uses at most
    // ceil(L/(k+1)) vertices of any independent set, which caps the usable
    // supply.  Only consulted when the caller supplied known independent
    // sets; the check is monotone in the best length, so pruned states stay
    // prunable and may be marked done.
    bool supply_prune() const {
        const long long n = g_.order();
        const long long len = static_cast<long long>(cur_.size());
        long long in_sets_used = 0, in_sets_total = 0;
        std::vector<long long> used_in, size_of;
        used_in.reserve(sets_->size());
        size_of.reserve(sets_->size());
        for (const VertexSet& s : *sets_) {
            const long long u = static_cast<long long>((s & used_).count());
            const long long t = static_cast<long long>(s.count());
            used_in.push_back(u);
            size_of.push_back(t);
            in_sets_used += u;
            in_sets_total += t;
        }
        const long long out_supply = (n - in_sets_total) - (len - in_sets_used);
        for (long long target = static_cast<long long>(best_.size()) + 1; target <= n; ++target) {
            const long long cap = (target + k_) / (k_ + 1);
            long long reachable = (len - in_sets_used) + out_supply;
            bool committed_ok = true;
            for (std::size_t i = 0; i < used_in.size(); ++i) {
                if (used_in[i] > cap) { committed_ok = false; break; }
                reachable += std::min(size_of[i], cap);
            }
            if (committed_ok && reachable >= target) return false;
        }
        return true;
    }

    void dfs() {
        if (++nodes_ > budget_) throw search_budget_exceeded(PowerPathWitness{k_, best_}, nodes_);
        if (cur_.size() > best_.size()) {
            best_ = cur_;
            // A path through every vertex cannot be beaten; abandon the search.
            if (static_cast<int>(best_.size()) == g_.order()) {
                saturated_ = true;
                return;
            }
        }

        StateKey key{0, 0};
        if (memo_enabled_) {
            key = StateKey{used_.words()[0], pack_window()};
            if (done_.contains(key)) return;
        }
        if (sets_ != nullptr && supply_prune()) {
            if (memo_enabled_ && done_.size() < kMemoCap) done_.insert(key);
            return;
        }

        const int m = std::min<int>(k_, static_cast<int>(cur_.size()));
        VertexSet cand = g_.neighbors(cur_.back());
        for (int i = 2; i <= m; ++i) cand &= g_.neighbors(cur_[cur_.size() - i]);
        cand -= used_;
        for (int v = cand.first(); v != -1; v = cand.next(v)) {
            cur_.push_back(v);
            used_.set(v);
            dfs();
            used_.reset(v);
            cur_.pop_back();
            if (saturated_) return;
        }
        if (memo_enabled_ && done_.size() < kMemoCap) done_.insert(key);
    }

    const Graph& g_;
    const int k_;
    const std::uint64_t budget_;
    const std::vector<VertexSet>* sets_;
    VertexSet used_;
    std::vector<int> cur_;
    std::vector<int> best_;
    std::uint64_t nodes_ = 0;
    bool memo_enabled_;
    bool saturated_ = false;
    std::unordered_set<StateKey, StateKeyHash> done_;
};

// ---------------------------------------------------------------------------
// Fixed-length power cycle

class CycleSearcher {
  public:
    CycleSearcher(const Graph& g, int k, int len, std::uint64_t budget)
        : g_(g), k_(k), len_(len), budget_(budget), used_(g.order()) {}

    std::optional<PowerCycleWitness> run() {
        // Canonical form: the smallest vertex of the cycle sits first, so
        // every other vertex exceeds the start; the reflection is fixed by
        // requiring the second vertex to be smaller than the last.  A start
        // needs len-1 larger vertices above it.
        for (int v = 0; v + len_ <= g_.order(); ++v) {
            cur_.assign(1, v);
            used_.set(v);
            const bool found = dfs();
            used_.reset(v);
            if (found) {
                PowerCycleWitness out{k_, cur_};
                assert(validate_power_cycle(g_, out));
                return out;
            }
        }
        return std::nullopt;
    }

  private:
    bool dfs() {
        if (++nodes_ > budget_) throw search_budget_exceeded(PowerPathWitness{k_, {}}, nodes_);
        const int p = static_cast<int>(cur_.size());
        if (p == len_) return true;

        VertexSet cand = g_.neighbors(cur_.back());
        for (int i = 2; i <= std::min(k_, p); ++i) cand &= g_.neighbors(cur_[p - i]);
        // Wrap constraints: position p is within distance k of positions
        // 0..p+k-len (cyclically), so those adjacencies bind now.
        for (int q = 0; q <= p + k_ - len_; ++q) cand &= g_.neighbors(cur_[q]);
        cand -= used_;
        for (int v = cand.first(); v != -1; v = cand.next(v)) {
            if (v < cur_[0]) continue;  // canonical: start vertex is smallest
            if (p == len_ - 1 && v < cur_[1]) continue;  // canonical reflection
            cur_.push_back(v);
            used_.set(v);
            if (dfs()) return true;
            used_.reset(v);
            cur_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    const int k_;
    const int len_;
    const std::uint64_t budget_;
    VertexSet used_;
    std::vector<int> cur_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

PowerPathWitness longest_power_path_exact(const Graph& g, int k, std::uint64_t budget,
                                          const std::vector<VertexSet>* independent_sets) {
    if (k < 1) throw domain_error("power path search requires k >= 1");
    return PathSearcher(g, k, budget, independent_sets).run();
}

std::optional<PowerCycleWitness> find_power_cycle(const Graph& g, int k, int len,
                                                  std::uint64_t budget) {
    if (k < 1) throw domain_error("power cycle search requires k >= 1");
    if (len < k + 1 || len < 3)
        throw domain_error("a k-th power of a cycle has at least max(k+1, 3) vertices; asked for " +
                           std::to_string(len));
    if (len > g.order()) return std::nullopt;
    return CycleSearcher(g, k, len, budget).run();
}

Graph path_power_graph(int k, int len) {
    if (k < 1 || len < 0) throw domain_error("path power graph requires k >= 1, len >= 0");
    Graph g(len);
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j <= i + k && j < len; ++j) g.add_edge(i, j);
    return g;
}

Graph cycle_power_graph(int k, int len) {
    if (k < 1 || len < k + 1)
        throw domain_error("cycle power graph requires k >= 1 and len >= k+1");
    Graph g(len);
    for (int i = 0; i < len; ++i)
        for (int d = 1; d <= k; ++d) {
            const int j = (i + d) % len;
            if (i != j) g.add_edge(i, j);
        }
    return g;
}

int power_cycle_chromatic(int k, int len) {
    if (k < 1 || len < k + 1)
        throw domain_error("chromatic formula applies to cycle powers with len >= k+1");
    const int classes = len / (k + 1);
    return (len + classes - 1) / classes;
}

namespace {

bool colorable_with(const Graph& g, const std::vector<int>& order, std::vector<int>& color,
                    std::size_t pos, int used, int limit) {
    if (pos == order.size()) return true;
    const int v = order[pos];
    const int tryable = std::min(used + 1, limit);
    for (int c = 0; c < tryable; ++c) {
        bool ok = true;
        for (std::size_t i = 0; i < pos; ++i)
            if (color[order[i]] == c && g.has_edge(order[i], v)) { ok = false; break; }
        if (!ok) continue;
        color[v] = c;
        if (colorable_with(g, order, color, pos + 1, std::max(used, c + 1), limit)) return true;
    }
    color[v] = -1;
    return false;
}

}  // namespace

int chromatic_number_exact(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b) || (g.degree(a) == g.degree(b) && a < b); });
    // Greedy clique on the degree order gives a lower bound and skips
    // hopeless colour counts.
    VertexSet clique(n);
    int lower = 0;
    for (int v : order) {
        if (clique.is_subset_of(g.neighbors(v))) {
            clique.set(v);
            ++lower;
        }
    }
    for (int c = std::max(lower, 1); c <= n; ++c) {
        std::vector<int> color(n, -1);
        if (colorable_with(g, order, color, 0, 0, c)) return c;
    }
    return n;  // unreachable: n colours always suffice
}

namespace {

// ---------------------------------------------------------------------------
// Power step-up (insert one new vertex per overlapping block)

// Assigns one distinct w-vertex to each block, each adjacent to the whole
// block.  Greedy over blocks by ascending candidate count realises the
// required permutation whenever one exists; if it starves we still look for
// an arbitrary system of distinct representatives by augmenting-path
// matching before reporting failure, since any such system yields a valid
// insertion.
std::vector<int> assign_block_vertices(const Graph& g, const std::vector<VertexSet>& blocks,
                                       const VertexSet& w) {
    const std::size_t m = blocks.size();
    std::vector<VertexSet> cand;
    cand.reserve(m);
    for (const VertexSet& b : blocks) cand.push_back(common_neighborhood(g, b, w));

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto ca = cand[a].count(), cb = cand[b].count();
        return ca < cb || (ca == cb && a < b);
    });

    std::vector<int> pick(m, -1);
    VertexSet used(g.order());
    bool starved = false;
    std::size_t starved_block = 0;
    for (std::size_t i : order) {
        const VertexSet avail = cand[i] - used;
        if (avail.empty()) {
            starved = true;
            starved_block = i;
            break;
        }
        pick[i] = avail.first();
        used.set(pick[i]);
    }
    if (!starved) return pick;

    // Hall fallback: Kuhn's augmenting-path matching over blocks x W.
    std::vector<int> owner(g.order(), -1);  // w-vertex -> block
    std::fill(pick.begin(), pick.end(), -1);
    std::vector<char> visited;
    auto augment = [&](auto&& self, std::size_t block) -> bool {
        for (int v = cand[block].first(); v != -1; v = cand[block].next(v)) {
            if (visited[v]) continue;
            visited[v] = 1;
            if (owner[v] == -1 || self(self, static_cast<std::size_t>(owner[v]))) {
                owner[v] = static_cast<int>(block);
                pick[block] = v;
                return true;
            }
        }
        return false;
    };
    for (std::size_t b = 0; b < m; ++b) {
        visited.assign(g.order(), 0);
        if (!augment(augment, b)) {
            throw insertion_failure(
                static_cast<int>(starved_block) + 1,
                "power step-up: block " + std::to_string(starved_block + 1) + " of " +
                    std::to_string(m) + " has no unused common neighbour (and no full "
                    "assignment exists)");
        }
    }
    return pick;
}

void check_step_up_inputs(const Graph& g, int h, const std::vector<int>& base,
                          const VertexSet& w) {
    for (int v : base)
        if (w.test(v))
            throw hypothesis_violation("w disjoint from base",
                                       "vertex " + std::to_string(v) + " lies in both");
    if (h < 1) throw domain_error("power step-up requires a base power h >= 1");
    (void)g;
}

}  // namespace

PowerPathWitness power_step_up(const Graph& g, const PowerPathWitness& base, const VertexSet& w) {
    const int h = base.k;
    check_step_up_inputs(g, h, base.sequence, w);
    if (!validate_power_path(g, base))
        throw hypothesis_violation("base is a valid power path");
    const int hp1 = h + 1;
    const int len = base.length();
    if (len < hp1)
        throw domain_error("power step-up needs a base on at least h+1 vertices");
    const int l = (len + 1 + hp1 - 1) / hp1 - 1;  // ceil((len+1)/(h+1)) - 1
    const int hprime = len + 1 - hp1 * l;
    assert(1 <= hprime && hprime <= hp1);

    // Overlapping blocks over the base t_0..t_{len-1}: the first h+1
    // vertices; then the 2(h+1)-windows ending at positions (h+1)i-1; then
    // the final h+h' vertices.
    std::vector<VertexSet> blocks;
    blocks.reserve(l + 1);
    auto block_of = [&](int from, int to) {
        VertexSet b(g.order());
        for (int i = from; i <= to; ++i) b.set(base.sequence[i]);
        return b;
    };
    blocks.push_back(block_of(0, hp1 - 1));
    for (int i = 2; i <= l; ++i) blocks.push_back(block_of(hp1 * (i - 2), hp1 * i - 1));
    blocks.push_back(block_of(hp1 * (l - 1), len - 1));

    const std::vector<int> q = assign_block_vertices(g, blocks, w);

    std::vector<int> seq;
    seq.reserve(len + l + 1);
    for (int i = 0; i <= l; ++i) {
        seq.push_back(q[i]);
        const int from = hp1 * i;
        const int to = std::min(hp1 * (i + 1), len) - 1;
        for (int p = from; p <= to; ++p) seq.push_back(base.sequence[p]);
    }
    PowerPathWitness out{h + 1, std::move(seq)};
    if (!validate_power_path(g, out))
        throw extension_failure("power step-up produced an invalid path witness");
    return out;
}

PowerCycleWitness power_step_up(const Graph& g, const PowerCycleWitness& base,
                                const VertexSet& w) {
    const int h = base.k;
    check_step_up_inputs(g, h, base.cycle, w);
    if (!validate_power_cycle(g, base))
        throw hypothesis_violation("base is a valid power cycle");
    const int hp1 = h + 1;
    const int len = base.length();
    if (len % hp1 != 0)
        throw domain_error("power step-up on a cycle needs length divisible by h+1");
    const int l = len / hp1;

    // Block 1 wraps the seam (last h+1 and first h+1 base vertices); the rest
    // are the same 2(h+1)-windows as in the path case.
    std::vector<VertexSet> blocks;
    blocks.reserve(l);
    {
        VertexSet b(g.order());
        for (int i = len - hp1; i < len; ++i) b.set(base.cycle[i]);
        for (int i = 0; i < hp1; ++i) b.set(base.cycle[i]);
        blocks.push_back(std::move(b));
    }
    for (int i = 2; i <= l; ++i) {
        VertexSet b(g.order());
        for (int p = hp1 * (i - 2); p <= hp1 * i - 1; ++p) b.set(base.cycle[p]);
        blocks.push_back(std::move(b));
    }

    const std::vector<int> q = assign_block_vertices(g, blocks, w);

    std::vector<int> seq;
    seq.reserve(len + l);
    for (int i = 0; i < l; ++i) {
        seq.push_back(q[i]);
        for (int p = hp1 * i; p < hp1 * (i + 1); ++p) seq.push_back(base.cycle[p]);
    }
    PowerCycleWitness out{h + 1, std::move(seq)};
    if (!validate_power_cycle(g, out))
        throw extension_failure("power step-up produced an invalid cycle witness");
    return out;
}

// ---------------------------------------------------------------------------
// Dirac Hamilton cycle by rotation-extension

namespace {

// Close a path whose endpoints have all their neighbours on the path into a
// cycle through a crossing chord; the degree-sum pigeonhole of Dirac graphs
// guarantees one exists.
std::vector<int> close_path_into_cycle(const Graph& g, std::vector<int> path) {
    const int len = static_cast<int>(path.size());
    const int f = path.front(), l = path.back();
    if (g.has_edge(f, l)) return path;
    for (int i = 0; i + 1 < len; ++i) {
        if (g.has_edge(path[i], l) && g.has_edge(path[i + 1], f)) {
            std::reverse(path.begin() + i + 1, path.end());
            return path;
        }
    }
    throw extension_failure("no crossing chord despite the Dirac degree bound");
}

}  // namespace

std::vector<int> dirac_hamilton_cycle(const Graph& g) {
    const int n = g.order();
    if (n < 3) throw domain_error("Hamilton cycle needs at least 3 vertices");
    if (2 * g.min_degree() < n)
        throw domain_error("Dirac bound fails: minimum degree " +
                           std::to_string(g.min_degree()) + " < " + std::to_string(n) + "/2");

    std::vector<int> path{0};
    VertexSet on_path(n);
    on_path.set(0);

    while (static_cast<int>(path.size()) < n) {
        // Greedy extension at both ends.
        bool extended = true;
        while (extended) {
            extended = false;
            for (int side = 0; side < 2; ++side) {
                const int end = side == 0 ? path.back() : path.front();
                const VertexSet free = g.neighbors(end) - on_path;
                if (free.empty()) continue;
                const int v = free.first();
                if (side == 0) path.push_back(v);
                else path.insert(path.begin(), v);
                on_path.set(v);
                extended = true;
            }
        }
        if (static_cast<int>(path.size()) == n) break;

        // Maximal non-spanning path: close it into a cycle, then splice back
        // open at a vertex adjacent to something outside.  The path grows by
        // one vertex per pass, so this terminates.
        std::vector<int> cycle = close_path_into_cycle(g, std::move(path));
        int outside = -1, attach_pos = -1;
        for (int u = 0; u < n && outside == -1; ++u) {
            if (on_path.test(u)) continue;
            for (int i = 0; i < static_cast<int>(cycle.size()); ++i) {
                if (g.has_edge(u, cycle[i])) {
                    outside = u;
                    attach_pos = i;
                    break;
                }
            }
        }
        if (outside == -1)
            throw extension_failure("Dirac graph split into a shorter component");
        std::vector<int> reopened;
        reopened.reserve(cycle.size() + 1);
        for (std::size_t step = 1; step <= cycle.size(); ++step)
            reopened.push_back(cycle[(attach_pos + step) % cycle.size()]);
        reopened.push_back(outside);
        on_path.set(outside);
        path = std::move(reopened);
    }

    std::vector<int> cycle = close_path_into_cycle(g, std::move(path));
    assert(static_cast<int>(cycle.size()) == n);
    return cycle;
}

// ---------------------------------------------------------------------------
// Cycles and paths keeping bad vertices far apart

namespace {

void check_avoiding_hypotheses(const Graph& g, const VertexSet& bad) {
    const long long n = g.order();
    const long long b = static_cast<long long>(bad.count());
    if (n < 10) throw hypothesis_violation("host has at least 10 vertices");
    if (100 * b > n)
        throw hypothesis_violation("bad set no larger than n/100",
                                   std::to_string(b) + " bad vertices in an n=" +
                                       std::to_string(n) + " host");
    for (int v = bad.first(); v != -1; v = bad.next(v))
        if (g.degree(v) < 4 * b + 2)
            throw hypothesis_violation("bad-vertex degree at least 4|B|+2",
                                       "vertex " + std::to_string(v));
    for (int v = 0; v < g.order(); ++v)
        if (!bad.test(v) && 2 * g.degree(v) < n + 10 * b + 10)
            throw hypothesis_violation("outside-vertex degree at least n/2+5|B|+5",
                                       "vertex " + std::to_string(v));
}

// The covering path P = x y u_0 w_0 v_0 b_1 u_1 w_1 v_1 ... b_m u_m w_m v_m:
// every bad vertex is buffered by fresh outside vertices, so later windows of
// four consecutive cycle vertices can contain at most one bad vertex and the
// windows around x, y stay clean.  The pair (x, y) is consecutive here; in
// path mode that adjacency is conceptual (the seam the final cycle is cut at)
// and never required of the host.
std::vector<int> build_covering_path(const Graph& g, const VertexSet& bad, int x, int y) {
    const int n = g.order();
    VertexSet taken(n);
    taken.set(x);
    taken.set(y);
    for (int v = bad.first(); v != -1; v = bad.next(v)) taken.set(v);

    std::vector<int> b_list = bad.to_vector();
    const int m = static_cast<int>(b_list.size());
    auto fresh_neighbor = [&](int of) {
        const VertexSet avail = g.neighbors(of) - taken;
        if (avail.empty())
            throw extension_failure("covering path ran out of fresh neighbours");
        const int v = avail.first();
        taken.set(v);
        return v;
    };

    // u_i and v_{i-1} flank b_i; u_0 hangs off y; v_m is any fresh vertex.
    std::vector<int> u(m + 1), v(m + 1), w(m + 1);
    for (int i = 1; i <= m; ++i) {
        u[i] = fresh_neighbor(b_list[i - 1]);
        v[i - 1] = fresh_neighbor(b_list[i - 1]);
    }
    u[0] = fresh_neighbor(y);
    {
        VertexSet avail = g.all_vertices() - taken;
        if (avail.empty()) throw extension_failure("covering path ran out of vertices");
        v[m] = avail.first();
        taken.set(v[m]);
    }
    for (int i = 0; i <= m; ++i) {
        VertexSet pairset(n);
        pairset.set(u[i]);
        pairset.set(v[i]);
        const VertexSet avail = common_neighborhood(g, pairset, g.all_vertices()) - taken;
        if (avail.empty())
            throw extension_failure("covering path found no joint neighbour for a buffer pair");
        w[i] = avail.first();
        taken.set(w[i]);
    }

    std::vector<int> p;
    p.reserve(4 * m + 5);
    p.push_back(x);
    p.push_back(y);
    p.push_back(u[0]);
    p.push_back(w[0]);
    p.push_back(v[0]);
    for (int i = 1; i <= m; ++i) {
        p.push_back(b_list[i - 1]);
        p.push_back(u[i]);
        p.push_back(w[i]);
        p.push_back(v[i]);
    }
    return p;
}

// Shared core: a cycle on exactly len vertices through the consecutive pair
// (x, y), with the 4-window properties.  The x-y adjacency itself is only
// demanded when require_xy_edge is set (cycle mode).
std::vector<int> cycle_through_pair(const Graph& g, const VertexSet& bad, int len, int x, int y) {
    const int n = g.order();
    const int m = static_cast<int>(bad.count());
    const std::vector<int> p = build_covering_path(g, bad, x, y);
    const int p_size = static_cast<int>(p.size());  // 4m+5

    if (len >= n - m - 2) {
        // Long cycles: Hamilton cycle on the host minus the covering path,
        // then choose the chord pair that completes P to exactly len.
        VertexSet rest = g.all_vertices();
        for (int q : p) rest.reset(q);
        std::vector<int> back;
        const Graph h = g.induced(rest, &back);
        const std::vector<int> ham = dirac_hamilton_cycle(h);
        const int c_len = static_cast<int>(ham.size());
        const int arc = len - p_size;  // vertices drawn from the cycle, >= 1
        for (int i = 0; i < c_len; ++i) {
            const int qi = back[ham[i]];
            const int qj = back[ham[(i + arc - 1) % c_len]];
            if (g.has_edge(qi, x) && g.has_edge(qj, p.back())) {
                std::vector<int> out = p;
                for (int s = arc - 1; s >= 0; --s) out.push_back(back[ham[(i + s) % c_len]]);
                return out;
            }
        }
        throw extension_failure("no chord pair closed the long cycle");
    }

    // Short cycles avoid the bad set altogether: Hamilton cycle on the host
    // minus bad and {x, y}, then an arc of len-2 vertices whose ends see x
    // and y.
    VertexSet rest = g.all_vertices() - bad;
    rest.reset(x);
    rest.reset(y);
    std::vector<int> back;
    const Graph h = g.induced(rest, &back);
    const std::vector<int> ham = dirac_hamilton_cycle(h);
    const int c_len = static_cast<int>(ham.size());
    const int arc = len - 2;
    for (int i = 0; i < c_len; ++i) {
        const int si = back[ham[i]];
        const int sj = back[ham[(i + arc - 1) % c_len]];
        if (g.has_edge(si, x) && g.has_edge(sj, y)) {
            std::vector<int> out;
            out.reserve(len);
            out.push_back(x);
            for (int s = 0; s < arc; ++s) out.push_back(back[ham[(i + s) % c_len]]);
            out.push_back(y);
            return out;
        }
    }
    throw extension_failure("no chord pair closed the short cycle");
}

}  // namespace

std::vector<int> cycle_avoiding_bad(const Graph& g, const VertexSet& bad, int len) {
    check_avoiding_hypotheses(g, bad);
    const int n = g.order();
    if (len < 3 || len > n)
        throw domain_error("cycle length must lie in [3, n]");

    // Any host edge with both ends outside the bad set seeds the cycle.
    int x = -1, y = -1;
    for (int u = 0; u < n && x == -1; ++u) {
        if (bad.test(u)) continue;
        const VertexSet out = g.neighbors(u) - bad;
        if (!out.empty()) {
            x = u;
            y = out.first();
        }
    }
    if (x == -1) throw extension_failure("no edge avoiding the bad set");
    return cycle_through_pair(g, bad, len, x, y);
}

std::vector<int> path_avoiding_bad(const Graph& g, const VertexSet& bad, int len, int x, int y) {
    check_avoiding_hypotheses(g, bad);
    const int n = g.order();
    if (x < 0 || x >= n || y < 0 || y >= n || x == y)
        throw domain_error("path endpoints must be distinct host vertices");
    if (bad.test(x) || bad.test(y))
        throw hypothesis_violation("path endpoints lie outside the bad set");
    if (len < 5 || len > n)
        throw domain_error("path length must lie in [5, n]");

    // The cycle construction uses x-y adjacency only as the seam position,
    // so cutting the seam yields the endpoint path whether or not the host
    // has that edge (the proof's dummy edge).
    const std::vector<int> cyc = cycle_through_pair(g, bad, len, x, y);
    assert(cyc.front() == x && cyc[1] == y);
    std::vector<int> path;
    path.reserve(len);
    path.push_back(x);
    for (int i = len - 1; i >= 1; --i) path.push_back(cyc[i]);
    return path;
}

}  // namespace powpath
