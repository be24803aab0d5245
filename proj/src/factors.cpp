#include "powpath/factors.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "powpath/errors.hpp"
#include "powpath/toolbox.hpp"

namespace powpath {

namespace {

constexpr std::uint64_t kHypothesisScanCap = 1u << 22;

long long floor_div(long long a, long long b) {  // b > 0
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

VertexSet to_set(int universe, const std::vector<int>& vs) {
  VertexSet s(universe);
  for (int v : vs) s.set(v);
  return s;
}

void check_partition(const Graph& g, const std::vector<const VertexSet*>& classes,
                     const char* clause) {
  VertexSet seen(g.order());
  long long total = 0;
  for (const VertexSet* c : classes) {
    if (c->universe() != g.order())
      throw hypothesis_violation(clause, "class universe does not match the graph order");
    if (seen.intersects(*c)) throw hypothesis_violation(clause, "classes overlap");
    seen |= *c;
    total += c->count();
  }
  if (total != g.order())
    throw hypothesis_violation(clause, "classes cover " + std::to_string(total) + " of " +
                                           std::to_string(g.order()) + " vertices");
}

void check_no_edges_between(const Graph& g, const VertexSet& a, const VertexSet& b,
                            const char* clause) {
  for (int v = a.first(); v >= 0; v = a.next(v))
    if (g.neighbors(v).intersects(b))
      throw hypothesis_violation(clause, "vertex " + std::to_string(v) +
                                             " has a neighbor across the cut");
}

int min_degree_in_domain(const Graph& g, int k) {
  const int n = g.order();
  const int delta = g.min_degree();
  if (static_cast<long long>(k) * delta <= static_cast<long long>(k - 1) * n)
    throw hypothesis_violation("minimum degree",
                               "need k*delta > (k-1)*n, got delta = " + std::to_string(delta));
  return delta;
}

void check_class_sizes(const std::vector<const VertexSet*>& classes, int bound,
                       const char* clause) {
  for (const VertexSet* c : classes)
    if (c->count() > bound)
      throw hypothesis_violation(clause, "extension class has " + std::to_string(c->count()) +
                                             " > " + std::to_string(bound) + " vertices");
}

// Shared component id of every K_k matching `shape`, or -1 when none does.
// Splitting across components violates `clause`.
template <typename Shape>
int shared_component(const CliqueComponentDecomposition& d, Shape&& shape, const char* clause) {
  int id = -1;
  for (std::size_t i = 0; i < d.kcliques.size(); ++i) {
    if (!shape(d.kcliques[i])) continue;
    if (id < 0)
      id = d.component_of[i];
    else if (d.component_of[i] != id)
      throw hypothesis_violation(clause, "qualifying cliques fall into several components");
  }
  return id;
}

int count_in(const std::vector<int>& clique, const VertexSet& cls) {
  int c = 0;
  for (int v : clique)
    if (cls.test(v)) ++c;
  return c;
}

bool inside(const std::vector<int>& clique, const VertexSet& allowed) {
  for (int v : clique)
    if (!allowed.test(v)) return false;
  return true;
}

// Every clique (all orders) whose vertices lie in `cand`, ascending.
template <typename Sink>
void all_cliques(const Graph& g, const VertexSet& cand, std::vector<int>& cur, Sink& sink) {
  VertexSet rest = cand;
  for (int v = cand.first(); v >= 0; v = cand.next(v)) {
    rest.reset(v);
    cur.push_back(v);
    sink(cur);
    all_cliques(g, rest & g.neighbors(v), cur, sink);
    cur.pop_back();
  }
}

// Clause (d)/(e) of the two-stage guarantees: for every index i in [k-2] and
// every clique of order >= i inside side ∪ X_1..X_{i-1} with at least two
// side vertices, the common neighborhood sliced to X_i is independent.
void check_slice_independence(const Graph& g, const VertexSet& side,
                              const std::vector<VertexSet>& xs, int upto, const char* clause) {
  std::uint64_t scanned = 0;
  for (int i = 1; i <= upto; ++i) {
    VertexSet universe = side;
    for (int h = 0; h + 1 < i; ++h) universe |= xs[h];
    std::vector<int> cur;
    auto sink = [&](const std::vector<int>& clique) {
      if (++scanned > kHypothesisScanCap)
        throw resource_exhausted("hypothesis scan budget exceeded");
      if (static_cast<int>(clique.size()) < std::max(i, 2)) return;
      if (count_in(clique, side) < 2) return;
      VertexSet slice = common_neighborhood(g, to_set(g.order(), clique), xs[i - 1]);
      if (!g.is_independent(slice))
        throw hypothesis_violation(
            clause, "neighborhood of a clique is not independent inside class " +
                        std::to_string(i));
    };
    all_cliques(g, universe, cur, sink);
  }
}

// Clause (d) of the matching guarantee: the same slice condition restricted
// to cliques made of one side edge plus one vertex from each of X_1..X_{i-1}.
void check_slice_independence_layered(const Graph& g, const VertexSet& side,
                                      const std::vector<VertexSet>& xs, int upto,
                                      const char* clause) {
  std::uint64_t scanned = 0;
  std::vector<int> cur;
  auto layer = [&](auto&& self, int next, int i) -> void {
    if (++scanned > kHypothesisScanCap)
      throw resource_exhausted("hypothesis scan budget exceeded");
    if (next == i) {
      VertexSet slice = common_neighborhood(g, to_set(g.order(), cur), xs[i - 1]);
      if (!g.is_independent(slice))
        throw hypothesis_violation(
            clause, "neighborhood of a layered clique is not independent inside class " +
                        std::to_string(i));
      return;
    }
    VertexSet cand = common_neighborhood(g, to_set(g.order(), cur), xs[next - 1]);
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
      cur.push_back(v);
      self(self, next + 1, i);
      cur.pop_back();
    }
  };
  for (int i = 1; i <= upto; ++i)
    for (int u = side.first(); u >= 0; u = side.next(u)) {
      VertexSet partners = g.neighbors(u) & side;
      for (int v = partners.next(u); v >= 0; v = partners.next(v)) {
        cur.assign({u, v});
        layer(layer, 1, i);
      }
    }
}

// Validates vertex-disjoint same-order seed cliques inside `home` and
// returns their order; 0 for an empty seed list.
int check_seed_cliques(const Graph& g, const std::vector<std::vector<int>>& seed,
                       const VertexSet& home, int k, const char* clause) {
  if (seed.empty()) return 0;
  const int b = static_cast<int>(seed[0].size());
  if (b < 2 || b > k)
    throw hypothesis_violation(clause, "seed cliques must have between 2 and k vertices");
  VertexSet used(g.order());
  for (const std::vector<int>& s : seed) {
    if (static_cast<int>(s.size()) != b)
      throw hypothesis_violation(clause, "seed cliques differ in order");
    VertexSet bits = to_set(g.order(), s);
    if (bits.count() != b || !bits.is_subset_of(home))
      throw hypothesis_violation(clause, "seed clique not inside its home class");
    if (!g.is_clique(bits)) throw hypothesis_violation(clause, "seed is not a clique");
    if (bits.intersects(used)) throw hypothesis_violation(clause, "seed cliques overlap");
    used |= bits;
  }
  return b;
}

// The interleaved growth schedule shared by the one- and two-process
// builders: grow each seed inside its home class while possible, then walk
// the combined ascending-size order through the shared classes and one
// final outside step.
struct ScheduleInput {
  int k = 0;
  int b = 0;  // seed order, U process
  int c = 0;  // seed order, V process
  const VertexSet* u1 = nullptr;
  const VertexSet* v1 = nullptr;
  std::vector<const VertexSet*> shared_x;  // k-2 interior classes
  VertexSet final_pool;                    // complement of u1, v1 and shared_x
  std::vector<std::vector<int>> seeds_u;
  std::vector<std::vector<int>> seeds_v;
};

struct GrowingClique {
  std::vector<int> verts;
  int seed_index = 0;
  bool u_side = true;
  bool growing = true;
};

std::vector<std::vector<int>> run_two_stage_schedule(const Graph& g, const ScheduleInput& in) {
  const int k = in.k;
  VertexSet used(g.order());
  std::vector<GrowingClique> procs;
  auto admit = [&](const std::vector<std::vector<int>>& seeds, bool u_side) {
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      procs.push_back({seeds[i], static_cast<int>(i), u_side, true});
      for (int v : seeds[i]) used.set(v);
    }
  };
  admit(in.seeds_u, true);
  admit(in.seeds_v, false);

  auto try_grow = [&](GrowingClique& p, const VertexSet& pool) {
    VertexSet cand = pool;
    cand -= used;
    for (int v : p.verts) cand &= g.neighbors(v);
    int v = cand.first();
    if (v < 0) return false;
    p.verts.push_back(v);
    used.set(v);
    return true;
  };

  // Stage one: grow inside the home class, both processes in tandem, the
  // V process joining once its seeds match the U-side order.
  for (int step = 1; step <= k - in.b + 1; ++step) {
    const int expected = in.b + step - 1;
    for (GrowingClique& p : procs)
      if (p.u_side && p.growing && static_cast<int>(p.verts.size()) == expected &&
          !try_grow(p, *in.u1))
        p.growing = false;
    if (step > in.c - in.b)
      for (GrowingClique& p : procs)
        if (!p.u_side && p.growing && static_cast<int>(p.verts.size()) == expected &&
            !try_grow(p, *in.v1))
          p.growing = false;
  }

  // Stage two order: U side before V side, ascending size, ties by seed.
  std::vector<GrowingClique*> order;
  for (int u_side = 1; u_side >= 0; --u_side)
    for (GrowingClique& p : procs)
      if (p.u_side == (u_side == 1)) order.push_back(&p);
  std::stable_sort(order.begin(), order.end(), [](const GrowingClique* a, const GrowingClique* b) {
    if (a->u_side != b->u_side) return a->u_side;
    if (a->verts.size() != b->verts.size()) return a->verts.size() < b->verts.size();
    return a->seed_index < b->seed_index;
  });

  for (int step = 1; step <= k - 1; ++step) {
    const VertexSet& pool = step <= k - 2 ? *in.shared_x[step - 1] : in.final_pool;
    for (GrowingClique* p : order) {
      const int sz = static_cast<int>(p->verts.size());
      if (sz > k) continue;
      if (sz < step + 1)
        throw extension_failure("clique fell behind the extension schedule at step " +
                                std::to_string(step));
      bool grown = try_grow(*p, pool);
      if (!grown && sz == step + 1)
        throw extension_failure("no extension vertex available at step " +
                                std::to_string(step));
    }
  }
  std::vector<std::vector<int>> out;
  out.reserve(procs.size());
  for (GrowingClique& p : procs) {
    if (static_cast<int>(p.verts.size()) != k + 1)
      throw extension_failure("clique finished short of k+1 vertices");
    std::sort(p.verts.begin(), p.verts.end());
    out.push_back(std::move(p.verts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConnectedCliqueFactor assemble(const Graph& g, const CliqueComponentDecomposition& d,
                               std::vector<std::vector<int>> cliques, int component_id) {
  ConnectedCliqueFactor f;
  f.cliques = std::move(cliques);
  f.component_id = f.cliques.empty() ? -1 : component_id;
  assert(validate_connected_factor(g, d, f));
  (void)g;
  (void)d;
  return f;
}

}  // namespace

ConnectedCliqueFactor greedy_factor_two_stage(const Graph& g, const FactorPartition& part,
                                              const std::vector<std::vector<int>>& seed) {
  const int k = static_cast<int>(part.x.size()) + 1;
  if (k < 2) throw hypothesis_violation("vertex partition", "no extension classes supplied");
  std::vector<const VertexSet*> classes{&part.u1, &part.u2};
  for (const VertexSet& x : part.x) classes.push_back(&x);
  classes.push_back(&part.a);
  check_partition(g, classes, "vertex partition");

  const int n = g.order();
  const int delta = min_degree_in_domain(g, k);
  check_no_edges_between(g, part.u1, part.u2, "no edges between U_1 and U_2");
  std::vector<const VertexSet*> xs;
  for (const VertexSet& x : part.x) xs.push_back(&x);
  check_class_sizes(xs, n - delta, "class size bound");

  CliqueComponentDecomposition d = decompose(g, k);
  VertexSet xprefix(n);
  for (int h = 0; h + 2 < k; ++h) xprefix |= part.x[h];
  VertexSet u1_or_prefix = part.u1 | xprefix;
  int comp = shared_component(
      d,
      [&](const std::vector<int>& c) {
        return count_in(c, part.u1) >= 2 && inside(c, u1_or_prefix);
      },
      "connected qualifying cliques");
  check_slice_independence(g, part.u1, part.x, k - 2, "neighborhood slice independence");

  const int b = check_seed_cliques(g, seed, part.u1, k, "seed cliques");
  if (b == 0) return {};

  const long long surplus =
      static_cast<long long>(k) * delta - static_cast<long long>(k - 1) * n;
  const long long s1 =
      floor_div(surplus + static_cast<long long>(b - 1) * part.u2.count() - part.a.count(),
                2 * b - 1);
  long long cap = std::min<long long>(static_cast<long long>(seed.size()),
                                      std::min<long long>(part.u2.count() / 2, s1));
  if (cap <= 0) return {};

  ScheduleInput s;
  s.k = k;
  s.b = b;
  s.c = b;
  s.u1 = &part.u1;
  VertexSet empty_side(n);
  s.v1 = &empty_side;
  for (int h = 0; h + 2 < k; ++h) s.shared_x.push_back(&part.x[h]);
  s.final_pool = g.all_vertices() - part.u1 - xprefix;
  s.seeds_u.assign(seed.begin(), seed.begin() + cap);
  return assemble(g, d, run_two_stage_schedule(g, s), comp);
}

ConnectedCliqueFactor greedy_factor_parallel(const Graph& g, const ParallelFactorInput& in) {
  const int k = static_cast<int>(in.u.x.size()) + 1;
  if (k < 2) throw hypothesis_violation("vertex partition", "no extension classes supplied");
  std::vector<const VertexSet*> classes{&in.u.u1, &in.u.u2};
  for (const VertexSet& x : in.u.x) classes.push_back(&x);
  classes.push_back(&in.u.a);
  check_partition(g, classes, "vertex partition");
  std::vector<const VertexSet*> classes2{&in.v1, &in.v2};
  for (int h = 0; h + 2 < k; ++h) classes2.push_back(&in.u.x[h]);
  classes2.push_back(&in.x_prime);
  classes2.push_back(&in.a_prime);
  check_partition(g, classes2, "second vertex partition");

  const int n = g.order();
  const int delta = min_degree_in_domain(g, k);
  if (in.u.u1.intersects(in.v1))
    throw hypothesis_violation("U_1 and V_1 disjoint", "process home classes overlap");
  check_no_edges_between(g, in.u.u1, in.u.u2, "no edges between U_1 and U_2");
  check_no_edges_between(g, in.v1, in.v2, "no edges between V_1 and V_2");
  std::vector<const VertexSet*> xs;
  for (const VertexSet& x : in.u.x) xs.push_back(&x);
  xs.push_back(&in.x_prime);
  check_class_sizes(xs, n - delta, "class size bound");
  if (in.d1 < 0 || in.d2 < 0 || in.v2.count() < 2LL * in.d2 + in.d1)
    throw hypothesis_violation("process caps", "need |V_2| >= 2*d2 + d1 with d1, d2 >= 0");

  CliqueComponentDecomposition d = decompose(g, k);
  VertexSet xprefix(n);
  for (int h = 0; h + 2 < k; ++h) xprefix |= in.u.x[h];
  VertexSet u_side = in.u.u1 | xprefix;
  VertexSet v_side = in.v1 | xprefix;
  int comp = shared_component(
      d,
      [&](const std::vector<int>& c) {
        return (count_in(c, in.u.u1) >= 2 && inside(c, u_side)) ||
               (count_in(c, in.v1) >= 2 && inside(c, v_side));
      },
      "connected qualifying cliques");
  check_slice_independence(g, in.u.u1, in.u.x, k - 2, "neighborhood slice independence");
  check_slice_independence(g, in.v1, in.u.x, k - 2, "neighborhood slice independence");

  const int b = check_seed_cliques(g, in.seed_u, in.u.u1, k, "seed cliques");
  const int c = check_seed_cliques(g, in.seed_v, in.v1, k, "seed cliques");
  if (b > 0 && c > 0 && b > c)
    throw hypothesis_violation("seed cliques", "U seeds must not be larger than V seeds");

  const long long surplus =
      static_cast<long long>(k) * delta - static_cast<long long>(k - 1) * n;
  long long cap_u = 0;
  long long cap_v = 0;
  if (b > 0) {
    const long long s1 = floor_div(
        surplus + static_cast<long long>(b - 1) * in.u.u2.count() - in.u.a.count(), 2 * b - 1);
    const long long s2 = floor_div(
        surplus + static_cast<long long>(b - 1) * in.u.u2.count() - in.v1.count(), 2 * b - 1);
    cap_u = std::min({static_cast<long long>(in.seed_u.size()),
                      static_cast<long long>(in.u.u2.count() / 2),
                      static_cast<long long>(in.d1), s1, s2});
  }
  if (c > 0) {
    const long long base = surplus + static_cast<long long>(c - 1) * in.v2.count();
    const long long hang = static_cast<long long>(c - 1) * in.u.u1.count();
    const long long denom = static_cast<long long>(b > 0 ? b : 1) * (2 * c - 1);
    const long long scale = b > 0 ? b : 1;
    const long long t1 = floor_div(scale * (base - in.a_prime.count()) - hang, denom);
    const long long t2 = floor_div(scale * (base - in.u.u1.count()) - hang, denom);
    cap_v = std::min({static_cast<long long>(in.seed_v.size()), static_cast<long long>(in.d2),
                      t1, t2});
  }
  cap_u = std::max<long long>(cap_u, 0);
  cap_v = std::max<long long>(cap_v, 0);
  if (cap_u + cap_v == 0) return {};

  ScheduleInput s;
  s.k = k;
  s.b = cap_u > 0 ? b : (c > 0 ? c : 2);
  s.c = cap_v > 0 ? c : s.b;
  s.u1 = &in.u.u1;
  s.v1 = &in.v1;
  for (int h = 0; h + 2 < k; ++h) s.shared_x.push_back(&in.u.x[h]);
  s.final_pool = g.all_vertices() - in.u.u1 - in.v1 - xprefix;
  if (cap_u > 0) s.seeds_u.assign(in.seed_u.begin(), in.seed_u.begin() + cap_u);
  if (cap_v > 0) s.seeds_v.assign(in.seed_v.begin(), in.seed_v.begin() + cap_v);
  return assemble(g, d, run_two_stage_schedule(g, s), comp);
}

ConnectedCliqueFactor greedy_factor_matching(const Graph& g, const FactorPartition& part,
                                             const Matching& f) {
  const int k = static_cast<int>(part.x.size()) + 1;
  if (k < 2) throw hypothesis_violation("vertex partition", "no extension classes supplied");
  std::vector<const VertexSet*> classes{&part.u1, &part.u2};
  for (const VertexSet& x : part.x) classes.push_back(&x);
  classes.push_back(&part.a);
  check_partition(g, classes, "vertex partition");

  const int n = g.order();
  const int delta = min_degree_in_domain(g, k);
  check_no_edges_between(g, part.u1, part.u2, "no edges between U_1 and U_2");
  std::vector<const VertexSet*> xs;
  for (const VertexSet& x : part.x) xs.push_back(&x);
  check_class_sizes(xs, n - delta, "class size bound");

  CliqueComponentDecomposition d = decompose(g, k);
  int comp = shared_component(
      d,
      [&](const std::vector<int>& c) {
        if (count_in(c, part.u1) != 2) return false;
        for (int h = 0; h + 2 < k; ++h)
          if (count_in(c, part.x[h]) != 1) return false;
        VertexSet allowed = part.u1;
        for (int h = 0; h + 2 < k; ++h) allowed |= part.x[h];
        return inside(c, allowed);
      },
      "connected layered cliques");
  check_slice_independence_layered(g, part.u1, part.x, k - 2,
                                   "neighborhood slice independence");

  if (!f.valid_in(g))
    throw hypothesis_violation("matching inside U_1", "seed is not a matching of the graph");
  if (!f.vertices(n).is_subset_of(part.u1))
    throw hypothesis_violation("matching inside U_1", "matched vertex outside U_1");

  const long long q = static_cast<long long>(k) * delta - static_cast<long long>(k - 1) * n +
                      part.u2.count() - part.u1.count() - part.a.count();
  const long long cap = std::min<long long>(f.size(), q);
  if (cap <= 0) return {};

  VertexSet used(n);
  std::vector<std::vector<int>> cliques;
  for (long long i = 0; i < cap; ++i) {
    auto [a, bb] = f.pairs[i];
    cliques.push_back({a, bb});
    used.set(a);
    used.set(bb);
  }
  for (int step = 1; step <= k - 1; ++step) {
    for (std::vector<int>& cl : cliques) {
      VertexSet cand = part.x[step - 1];
      cand -= used;
      for (int v : cl) cand &= g.neighbors(v);
      int v = cand.first();
      if (v < 0)
        throw extension_failure("no extension vertex available at step " + std::to_string(step));
      cl.push_back(v);
      used.set(v);
    }
  }
  for (std::vector<int>& cl : cliques) std::sort(cl.begin(), cl.end());
  std::sort(cliques.begin(), cliques.end());
  return assemble(g, d, std::move(cliques), comp);
}

int HallExtensionResult::size() const {
  int total = 0;
  for (const auto& c : cliques) total += static_cast<int>(c.size());
  return total;
}

HallExtensionResult hall_extension_factor(const Graph& g, const VertexSet& exterior,
                                          const std::vector<VertexSet>& independent_sets,
                                          const Matching& seed) {
  const int n = g.order();
  if (exterior.universe() != n)
    throw hypothesis_violation("seed inside exterior", "exterior universe mismatch");
  VertexSet seen = exterior;
  for (const VertexSet& s : independent_sets) {
    if (s.universe() != n)
      throw hypothesis_violation("independent sets", "set universe mismatch");
    if (!g.is_independent(s))
      throw hypothesis_violation("independent sets", "a supplied set spans an edge");
    if (seen.intersects(s))
      throw hypothesis_violation("independent sets",
                                 "sets must be pairwise disjoint and avoid the exterior");
    seen |= s;
  }
  if (!seed.valid_in(g))
    throw hypothesis_violation("seed inside exterior", "seed is not a matching of the graph");
  if (!seed.vertices(n).is_subset_of(exterior))
    throw hypothesis_violation("seed inside exterior", "matched vertex outside the exterior");

  HallExtensionResult res;
  for (auto [a, b] : seed.pairs) res.cliques.push_back({std::min(a, b), std::max(a, b)});
  std::sort(res.cliques.begin(), res.cliques.end());

  for (std::size_t step = 0; step < independent_sets.size(); ++step) {
    const VertexSet& pool = independent_sets[step];
    const std::vector<int> members = pool.to_vector();
    const int left = static_cast<int>(res.cliques.size());
    const int right = static_cast<int>(members.size());

    std::vector<VertexSet> cand(static_cast<std::size_t>(left));
    for (int i = 0; i < left; ++i)
      cand[i] = common_neighborhood(g, to_set(n, res.cliques[i]), pool);

    HallStepAudit audit;
    audit.step = static_cast<int>(step) + 1;
    audit.factor_before = left;
    audit.set_size = right;
    int min_left = left > 0 ? n : 0;
    for (int i = 0; i < left; ++i) min_left = std::min(min_left, cand[i].count());
    std::vector<int> right_deg(static_cast<std::size_t>(right), 0);
    for (int i = 0; i < left; ++i)
      for (int r = 0; r < right; ++r)
        if (cand[i].test(members[r])) ++right_deg[r];
    int min_right = right > 0 ? left + 1 : 0;
    for (int r = 0; r < right; ++r) min_right = std::min(min_right, right_deg[r]);
    audit.min_left_degree = left > 0 ? min_left : 0;
    audit.min_right_degree = right > 0 ? min_right : 0;
    audit.guaranteed = std::max(
        0, std::min({audit.min_left_degree + audit.min_right_degree, left, right}));

    std::vector<std::vector<int>> extended;
    if (left > 0 && right > 0) {
      Graph aux(left + right);
      VertexSet aux_left(left + right);
      VertexSet aux_right(left + right);
      for (int i = 0; i < left; ++i) aux_left.set(i);
      for (int r = 0; r < right; ++r) aux_right.set(left + r);
      for (int i = 0; i < left; ++i)
        for (int r = 0; r < right; ++r)
          if (cand[i].test(members[r])) aux.add_edge(i, left + r);
      Matching m = bipartite_min_degree_matching(aux, aux_left, aux_right,
                                                 audit.min_left_degree,
                                                 audit.min_right_degree);
      for (auto [x, y] : m.pairs) {
        int i = std::min(x, y);
        int r = std::max(x, y) - left;
        std::vector<int> grown = res.cliques[i];
        grown.push_back(members[r]);
        std::sort(grown.begin(), grown.end());
        extended.push_back(std::move(grown));
      }
      std::sort(extended.begin(), extended.end());
    }
    audit.achieved = static_cast<int>(extended.size());
    assert(audit.achieved >= audit.guaranteed);
    res.audit.push_back(audit);
    res.cliques = std::move(extended);
  }

  res.complete = !independent_sets.empty();
  if (res.complete && !res.cliques.empty()) {
    const int k = static_cast<int>(independent_sets.size()) + 1;
    CliqueComponentDecomposition d = decompose(g, k);
    int comp = -1;
    bool uniform = true;
    std::vector<int> facet;
    for (const std::vector<int>& cl : res.cliques)
      for (int drop = 0; drop <= k && uniform; ++drop) {
        facet.clear();
        for (int i = 0; i <= k; ++i)
          if (i != drop) facet.push_back(cl[i]);
        int id = d.component_of_clique(facet);
        if (comp < 0) comp = id;
        uniform = uniform && id == comp && id >= 0;
      }
    if (uniform && comp >= 0) {
      res.connected = true;
      res.component_id = comp;
    }
  }
  return res;
}

bool validate_connected_factor(const Graph& g, const CliqueComponentDecomposition& d,
                               const ConnectedCliqueFactor& factor) {
  if (factor.cliques.empty()) return factor.component_id == -1;
  if (factor.component_id < 0 || factor.component_id >= d.count()) return false;
  VertexSet used(g.order());
  std::vector<int> facet;
  for (const std::vector<int>& cl : factor.cliques) {
    if (static_cast<int>(cl.size()) != d.k + 1) return false;
    VertexSet bits = to_set(g.order(), cl);
    if (bits.count() != d.k + 1) return false;
    if (bits.intersects(used)) return false;
    used |= bits;
    if (!g.is_clique(bits)) return false;
    for (int drop = 0; drop <= d.k; ++drop) {
      facet.clear();
      for (int i = 0; i <= d.k; ++i)
        if (i != drop) facet.push_back(cl[i]);
      if (d.component_of_clique(facet) != factor.component_id) return false;
    }
  }
  return true;
}

}  // namespace powpath
