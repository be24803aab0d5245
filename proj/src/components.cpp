#include "powpath/components.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "powpath/errors.hpp"
#include "powpath/toolbox.hpp"

namespace powpath {

namespace {

// Emits every clique with exactly `size` members of `cand` in lexicographic
// order of the sorted vertex tuple. The sink returns false to stop the
// enumeration; the return value reports whether it ran to completion.
template <typename Sink>
bool emit_cliques(const Graph& g, int size, const VertexSet& cand, std::vector<int>& cur,
                  Sink&& sink) {
  if (static_cast<int>(cur.size()) == size) return sink(cur);
  if (cand.count() < size - static_cast<int>(cur.size())) return true;
  VertexSet rest = cand;
  for (int v = cand.first(); v >= 0; v = cand.next(v)) {
    rest.reset(v);
    cur.push_back(v);
    bool go = emit_cliques(g, size, rest & g.neighbors(v), cur, sink);
    cur.pop_back();
    if (!go) return false;
  }
  return true;
}

VertexSet to_set(int universe, const std::vector<int>& vs) {
  VertexSet s(universe);
  for (int v : vs) s.set(v);
  return s;
}

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
};

}  // namespace

VertexSet CliqueComponentDecomposition::interior() const {
  VertexSet out(order);
  for (const Component& c : components) out |= c.interior;
  return out;
}

int CliqueComponentDecomposition::find_clique(const std::vector<int>& sorted_clique) const {
  auto it = std::lower_bound(kcliques.begin(), kcliques.end(), sorted_clique);
  if (it == kcliques.end() || *it != sorted_clique) return -1;
  return static_cast<int>(it - kcliques.begin());
}

int CliqueComponentDecomposition::component_of_clique(
    const std::vector<int>& sorted_clique) const {
  int idx = find_clique(sorted_clique);
  return idx < 0 ? -1 : component_of[idx];
}

int ConnectedCliqueFactor::size() const {
  int total = 0;
  for (const auto& c : cliques) total += static_cast<int>(c.size());
  return total;
}

CliqueComponentDecomposition decompose(const Graph& g, int k, std::size_t max_cliques) {
  if (k < 1) throw domain_error("clique order must be at least 1");
  CliqueComponentDecomposition d;
  d.k = k;
  d.order = g.order();

  std::vector<int> cur;
  bool complete = emit_cliques(g, k, g.all_vertices(), cur, [&](const std::vector<int>& c) {
    if (d.kcliques.size() >= max_cliques) return false;
    d.kcliques.push_back(c);
    return true;
  });
  if (!complete)
    throw resource_exhausted("clique enumeration exceeded the limit of " +
                             std::to_string(max_cliques));

  UnionFind uf(d.kcliques.size());
  std::size_t extensions = 0;
  std::vector<int> facet(static_cast<std::size_t>(k));
  complete = emit_cliques(g, k + 1, g.all_vertices(), cur, [&](const std::vector<int>& c) {
    if (++extensions > max_cliques) return false;
    int base = -1;
    for (int drop = 0; drop <= k; ++drop) {
      facet.clear();
      for (int i = 0; i <= k; ++i)
        if (i != drop) facet.push_back(c[i]);
      int idx = d.find_clique(facet);
      assert(idx >= 0);
      if (base < 0)
        base = idx;
      else
        uf.unite(base, idx);
    }
    return true;
  });
  if (!complete)
    throw resource_exhausted("clique extension enumeration exceeded the limit of " +
                             std::to_string(max_cliques));

  d.component_of.assign(d.kcliques.size(), -1);
  std::vector<int> id_of_root(d.kcliques.size(), -1);
  int next_id = 0;
  for (std::size_t i = 0; i < d.kcliques.size(); ++i) {
    int root = uf.find(static_cast<int>(i));
    if (id_of_root[root] < 0) id_of_root[root] = next_id++;
    d.component_of[i] = id_of_root[root];
  }

  d.components.assign(static_cast<std::size_t>(next_id), {});
  for (auto& comp : d.components) {
    comp.vertices = VertexSet(g.order());
    comp.interior = VertexSet(g.order());
    comp.exterior = VertexSet(g.order());
  }
  for (std::size_t i = 0; i < d.kcliques.size(); ++i)
    for (int v : d.kcliques[i]) d.components[d.component_of[i]].vertices.set(v);

  std::vector<int> cover(static_cast<std::size_t>(g.order()), 0);
  for (const auto& comp : d.components)
    for (int v = comp.vertices.first(); v >= 0; v = comp.vertices.next(v)) ++cover[v];
  for (auto& comp : d.components)
    for (int v = comp.vertices.first(); v >= 0; v = comp.vertices.next(v)) {
      if (cover[v] >= 2)
        comp.interior.set(v);
      else
        comp.exterior.set(v);
    }
  return d;
}

namespace {

// Candidate (k+1)-cliques of one component: every vertex of such a clique
// is covered by the component, and membership is settled by any one facet.
void component_candidates(const Graph& g, const CliqueComponentDecomposition& d,
                          int component_id, std::vector<std::vector<int>>& cands,
                          std::vector<VertexSet>& cand_bits) {
  if (component_id < 0 || component_id >= d.count())
    throw domain_error("unknown component id " + std::to_string(component_id));
  const VertexSet& comp = d.components[component_id].vertices;
  std::vector<int> cur;
  emit_cliques(g, d.k + 1, comp, cur, [&](const std::vector<int>& c) {
    std::vector<int> facet(c.begin() + 1, c.end());
    if (d.component_of_clique(facet) == component_id) {
      cands.push_back(c);
      cand_bits.push_back(to_set(g.order(), c));
    }
    return true;
  });
}

}  // namespace

ConnectedCliqueFactor ck_factor_greedy(const Graph& g, const CliqueComponentDecomposition& d,
                                       int component_id) {
  std::vector<std::vector<int>> cands;
  std::vector<VertexSet> cand_bits;
  component_candidates(g, d, component_id, cands, cand_bits);
  VertexSet used(g.order());
  ConnectedCliqueFactor f;
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (!cand_bits[i].intersects(used)) {
      f.cliques.push_back(cands[i]);
      used |= cand_bits[i];
    }
  f.component_id = f.cliques.empty() ? -1 : component_id;
  return f;
}

ConnectedCliqueFactor ck_factor_exact(const Graph& g, const CliqueComponentDecomposition& d,
                                      int component_id, std::uint64_t budget) {
  const int k = d.k;

  std::vector<std::vector<int>> cands;
  std::vector<VertexSet> cand_bits;
  component_candidates(g, d, component_id, cands, cand_bits);
  const VertexSet& comp = d.components[component_id].vertices;

  std::vector<std::vector<int>> at(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (int v : cands[i]) at[v].push_back(static_cast<int>(i));

  // Independent slices of the component (peeled greedy maximal independent
  // sets) power the counting bound: a packing of t cliques takes at most t
  // vertices from each slice and exactly t*(k+1) vertices in total.
  std::vector<VertexSet> slices;
  for (VertexSet rem = comp; !rem.empty();) {
    VertexSet slice(g.order());
    for (VertexSet avail = rem; !avail.empty();) {
      int v = avail.first();
      slice.set(v);
      avail -= g.neighbors(v);
      avail.reset(v);
    }
    slices.push_back(slice);
    rem -= slice;
  }
  auto counting_bound = [&](const VertexSet& avail) {
    std::vector<int> cnt;
    cnt.reserve(slices.size());
    for (const VertexSet& s : slices) {
      int c = (s & avail).count();
      if (c > 0) cnt.push_back(c);
    }
    int t = 0;
    for (;;) {
      long long sum = 0;
      for (int c : cnt) sum += std::min(c, t + 1);
      if (sum < static_cast<long long>(t + 1) * (k + 1)) break;
      ++t;
    }
    return t;
  };

  // Greedy packing seeds the branch-and-bound.
  std::vector<std::vector<int>> best = ck_factor_greedy(g, d, component_id).cliques;

  std::uint64_t nodes = 0;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, const VertexSet& avail, int low) -> void {
    if (++nodes > budget) throw resource_exhausted("factor search budget exceeded");
    if (chosen.size() > best.size()) {
      best.clear();
      for (int i : chosen) best.push_back(cands[i]);
    }
    if (static_cast<int>(chosen.size()) + counting_bound(avail) <=
        static_cast<int>(best.size()))
      return;
    // Lowest available vertex still covered by a fully available candidate;
    // vertices below `low` were settled higher up the tree.
    int v = low > 0 ? avail.next(low - 1) : avail.first();
    for (; v >= 0; v = avail.next(v)) {
      bool coverable = false;
      for (int i : at[v])
        if (cand_bits[i].is_subset_of(avail)) {
          coverable = true;
          break;
        }
      if (coverable) break;
    }
    if (v < 0) return;  // maximal packing reached
    for (int i : at[v]) {
      if (!cand_bits[i].is_subset_of(avail)) continue;
      chosen.push_back(i);
      self(self, avail - cand_bits[i], v + 1);
      chosen.pop_back();
    }
    VertexSet skipped = avail;
    skipped.reset(v);
    self(self, skipped, v + 1);
  };
  rec(rec, comp, 0);

  ConnectedCliqueFactor f;
  f.cliques = std::move(best);
  std::sort(f.cliques.begin(), f.cliques.end());
  f.component_id = f.cliques.empty() ? -1 : component_id;
  return f;
}

namespace {

// True when `tuple` (arbitrary order) is a set of k distinct pairwise
// adjacent vertices; writes the sorted copy to `sorted`.
bool normalize_clique(const Graph& g, const std::vector<int>& tuple, std::vector<int>& sorted) {
  sorted = tuple;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int v : sorted)
    if (v < 0 || v >= g.order()) return false;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t l = i + 1; l < sorted.size(); ++l)
      if (!g.has_edge(sorted[i], sorted[l])) return false;
  return true;
}

}  // namespace

bool verify_configuration(const Graph& g, const CliqueComponentDecomposition& d,
                          const ConfigurationWitness& w) {
  const int k = w.k;
  if (k != d.k || w.j < 1 || w.j >= w.ell || w.ell > k) return false;
  const int rep = w.ell - w.j;
  if (static_cast<int>(w.u.size()) != k || static_cast<int>(w.v.size()) != rep ||
      static_cast<int>(w.w.size()) != rep)
    return false;
  for (const auto& row : w.w)
    if (static_cast<int>(row.size()) != w.ell - 1) return false;

  std::vector<int> sorted;
  if (!normalize_clique(g, w.u, sorted)) return false;
  if (d.component_of_clique(sorted) != w.component_id || w.component_id < 0) return false;

  // Replacement clique: u_1..u_j v_{j+1}..v_ell u_{ell+1}..u_k outside the
  // central component.
  std::vector<int> tuple(w.u.begin(), w.u.begin() + w.j);
  tuple.insert(tuple.end(), w.v.begin(), w.v.end());
  tuple.insert(tuple.end(), w.u.begin() + w.ell, w.u.end());
  if (!normalize_clique(g, tuple, sorted)) return false;
  if (d.component_of_clique(sorted) == w.component_id) return false;

  // Dangling cliques: u_p w_{p,1}..w_{p,ell-1} u_{ell+1}..u_k, one per
  // replaced position, each outside the central component.
  for (int r = 0; r < rep; ++r) {
    tuple.assign(1, w.u[w.j + r]);
    tuple.insert(tuple.end(), w.w[r].begin(), w.w[r].end());
    tuple.insert(tuple.end(), w.u.begin() + w.ell, w.u.end());
    if (!normalize_clique(g, tuple, sorted)) return false;
    if (d.component_of_clique(sorted) == w.component_id) return false;
  }
  return true;
}

std::optional<ConfigurationWitness> detect_configuration(const Graph& g,
                                                         const CliqueComponentDecomposition& d,
                                                         int j, int ell, std::uint64_t budget) {
  const int k = d.k;
  if (j < 1 || j >= ell || ell > k)
    throw domain_error("configuration parameters must satisfy 1 <= j < ell <= k");
  if (d.count() <= 1) return std::nullopt;  // a replacement clique needs a second component

  const int rep = ell - j;
  const int tail = k - ell;
  std::uint64_t nodes = 0;
  auto tick = [&] {
    if (++nodes > budget) throw resource_exhausted("configuration search budget exceeded");
  };

  const VertexSet everything = g.all_vertices();
  std::vector<int> scratch;
  std::vector<int> sorted;

  // Searches for `want` extra vertices in the common neighborhood of `fixed`
  // forming, together with `fixed`, a K_k outside component `avoid`. The
  // extra vertices land in `found`.
  auto complete_outside = [&](const std::vector<int>& fixed, int want, int avoid,
                              std::vector<int>& found) {
    VertexSet pool = common_neighborhood(g, to_set(g.order(), fixed), everything);
    bool hit = false;
    std::vector<int> partial;
    emit_cliques(g, want, pool, partial, [&](const std::vector<int>& extra) {
      tick();
      scratch = fixed;
      scratch.insert(scratch.end(), extra.begin(), extra.end());
      std::sort(scratch.begin(), scratch.end());
      if (d.component_of_clique(scratch) != avoid) {
        found = extra;
        hit = true;
        return false;
      }
      return true;
    });
    return hit;
  };

  for (std::size_t ci = 0; ci < d.kcliques.size(); ++ci) {
    const std::vector<int>& central = d.kcliques[ci];
    const int comp = d.component_of[ci];
    const unsigned full = (1u << k) - 1;
    for (unsigned rmask = 0; rmask <= full; ++rmask) {
      if (std::popcount(rmask) != rep) continue;
      const unsigned others = full & ~rmask;
      for (unsigned tmask = others;; tmask = (tmask - 1) & others) {
        if (std::popcount(tmask) == tail) {
          tick();
          std::vector<int> keep_head, replaced, keep_tail;
          for (int i = 0; i < k; ++i) {
            if (rmask & (1u << i))
              replaced.push_back(central[i]);
            else if (tmask & (1u << i))
              keep_tail.push_back(central[i]);
            else
              keep_head.push_back(central[i]);
          }

          std::vector<int> fixed = keep_head;
          fixed.insert(fixed.end(), keep_tail.begin(), keep_tail.end());
          std::vector<int> replacement;
          if (complete_outside(fixed, rep, comp, replacement)) {
            ConfigurationWitness w;
            w.j = j;
            w.ell = ell;
            w.k = k;
            w.component_id = comp;
            w.u = keep_head;
            w.u.insert(w.u.end(), replaced.begin(), replaced.end());
            w.u.insert(w.u.end(), keep_tail.begin(), keep_tail.end());
            w.v = replacement;
            bool all_dangling = true;
            for (int r = 0; r < rep && all_dangling; ++r) {
              std::vector<int> anchor(1, replaced[r]);
              anchor.insert(anchor.end(), keep_tail.begin(), keep_tail.end());
              std::vector<int> dangle;
              if (complete_outside(anchor, ell - 1, comp, dangle))
                w.w.push_back(dangle);
              else
                all_dangling = false;
            }
            if (all_dangling) {
              assert(verify_configuration(g, d, w));
              if (verify_configuration(g, d, w)) return w;
            }
          }
        }
        if (tmask == 0) break;
      }
    }
  }
  return std::nullopt;
}

ComponentFactsReport check_component_facts(const Graph& g,
                                           const CliqueComponentDecomposition& d,
                                           int min_degree) {
  const int n = g.order();
  const int k = d.k;
  if (static_cast<long long>(k) * min_degree <= static_cast<long long>(k - 1) * n)
    throw domain_error("minimum degree must exceed (k-1)n/k");
  if (min_degree > g.min_degree())
    throw domain_error("claimed minimum degree exceeds the graph's minimum degree");

  ComponentFactsReport r;
  auto fail = [&r](bool& flag, const std::string& why) {
    flag = false;
    if (r.detail.empty()) r.detail = why;
  };
  const long long surplus =
      static_cast<long long>(k) * min_degree - static_cast<long long>(k - 1) * n;

  for (int c = 0; c < d.count(); ++c)
    if (d.components[c].vertices.count() <= min_degree)
      fail(r.component_size_ok,
           "component " + std::to_string(c) + " has only " +
               std::to_string(d.components[c].vertices.count()) + " vertices");

  for (int c1 = 0; c1 < d.count(); ++c1)
    for (int c2 = c1 + 1; c2 < d.count(); ++c2) {
      const VertexSet& e2 = d.components[c2].exterior;
      const VertexSet& e1 = d.components[c1].exterior;
      for (int v = e1.first(); v >= 0; v = e1.next(v))
        if (g.neighbors(v).intersects(e2)) {
          fail(r.exterior_edges_ok, "edge between exteriors of components " +
                                        std::to_string(c1) + " and " + std::to_string(c2));
          break;
        }
      if (!r.exterior_edges_ok) break;
    }

  // Completion sets: for each K_{k-1} inside a component, the vertices
  // extending it to a K_k of that component.
  std::map<std::pair<int, std::vector<int>>, VertexSet> completions;
  std::vector<int> facet;
  for (std::size_t i = 0; i < d.kcliques.size(); ++i) {
    const std::vector<int>& clique = d.kcliques[i];
    for (int drop = 0; drop < k; ++drop) {
      facet.clear();
      for (int l = 0; l < k; ++l)
        if (l != drop) facet.push_back(clique[l]);
      auto key = std::make_pair(d.component_of[i], facet);
      auto [it, fresh] = completions.try_emplace(key, VertexSet(n));
      it->second.set(clique[drop]);
    }
  }
  for (const auto& [key, completer] : completions) {
    if (completer.count() < surplus + 1) {
      fail(r.extension_degree_ok,
           "completion set of a (k-1)-clique in component " + std::to_string(key.first) +
               " has only " + std::to_string(completer.count()) + " vertices");
      break;
    }
    bool ok = true;
    for (int v = completer.first(); v >= 0 && ok; v = completer.next(v))
      if (g.degree_in(v, completer) < surplus) {
        fail(r.extension_degree_ok,
             "completion set of a (k-1)-clique in component " + std::to_string(key.first) +
                 " induces degree " + std::to_string(g.degree_in(v, completer)) +
                 " at vertex " + std::to_string(v));
        ok = false;
      }
    if (!ok) break;
  }

  if (d.count() > 1) {
    r.interior_size_applicable = true;
    const long long intr_bound = 2LL * min_degree - n + 2;
    if (d.interior().count() < intr_bound)
      fail(r.interior_size_ok, "interior has " + std::to_string(d.interior().count()) +
                                   " < " + std::to_string(intr_bound) + " vertices");
    for (int c = 0; c < d.count(); ++c)
      if (d.components[c].exterior.count() > n - min_degree - 1) {
        fail(r.exterior_size_ok,
             "exterior of component " + std::to_string(c) + " has " +
                 std::to_string(d.components[c].exterior.count()) + " > " +
                 std::to_string(n - min_degree - 1) + " vertices");
        break;
      }
  }
  return r;
}

}  // namespace powpath
