#include "powpath/harness.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "powpath/errors.hpp"
#include "powpath/extremal.hpp"
#include "powpath/powersearch.hpp"

namespace powpath {

namespace {

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    out.push_back(c);
    if (c == '"') out.push_back('"');
  }
  out.push_back('"');
  return out;
}

std::string param_string(int k, long long n, long long delta) {
  return "k=" + std::to_string(k) + " n=" + std::to_string(n) +
         " delta=" + std::to_string(delta);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed ^ (salt * 0x9e3779b97f4a7c15ULL);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::counterexample_at_small_n: return "counterexample-at-small-n";
    case Outcome::budget: return "budget";
  }
  return "unknown";
}

std::string records_csv(const std::vector<VerificationRecord>& records) {
  std::string out = "claim,params,generator,graph6,outcome,detail\n";
  for (const VerificationRecord& r : records) {
    out += csv_quote(r.claim) + ',' + csv_quote(r.params) + ',' + csv_quote(r.generator) +
           ',' + csv_quote(r.graph6) + ',' + outcome_name(r.outcome) + ',' +
           csv_quote(r.detail) + '\n';
  }
  return out;
}

std::string records_json(const std::vector<VerificationRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const VerificationRecord& r : records) {
    arr.push_back({{"claim", r.claim},
                   {"params", r.params},
                   {"generator", r.generator},
                   {"graph6", r.graph6},
                   {"outcome", outcome_name(r.outcome)},
                   {"detail", r.detail}});
  }
  return arr.dump(2) + "\n";
}

std::vector<Figure1Row> figure1_data(int k, long long n) {
  if (n < k + 2)
    throw domain_error("figure data requires n >= k+2, got n = " + std::to_string(n));
  std::vector<Figure1Row> rows;
  for (const auto& [delta, profile] : threshold_table(k, n)) {
    Figure1Row row;
    row.delta = delta;
    row.pp = profile.pp;
    row.pc = profile.pc;
    row.guess = static_cast<long long>(k + 1) *
                (k * delta - static_cast<long long>(k - 1) * n);
    rows.push_back(row);
  }
  return rows;
}

std::string figure1_csv(int k, long long n) {
  std::string out = "delta,pp,pc,guess\n";
  for (const Figure1Row& row : figure1_data(k, n)) {
    out += std::to_string(row.delta) + ',' + std::to_string(row.pp) + ',' +
           std::to_string(row.pc) + ',' + std::to_string(row.guess) + '\n';
  }
  return out;
}

VerificationRecord verify_tightness(int k, long long n, long long delta,
                                    std::uint64_t budget) {
  PowerParams params{k, n, delta};
  validate_params(params);
  const ThresholdProfile profile = compute_profile(params);

  VerificationRecord rec;
  rec.claim = "extremal tightness";
  rec.params = param_string(k, n, delta);
  rec.generator = "extremal";

  auto [gp, layout_p] = build_G_p(params);
  rec.graph6 = to_graph6(gp);
  try {
    PowerPathWitness longest = longest_power_path_exact(gp, k, budget);
    if (!validate_power_path(gp, longest) || longest.length() != profile.pp) {
      rec.outcome = Outcome::fail;
      rec.detail = "longest path power has " + std::to_string(longest.length()) +
                   " vertices, profile says " + std::to_string(profile.pp);
      return rec;
    }
    if (!certify_upper_bound(gp, layout_p, k, longest)) {
      rec.outcome = Outcome::fail;
      rec.detail = "counting certificate rejected the longest witness";
      return rec;
    }
  } catch (const search_budget_exceeded& e) {
    rec.outcome = Outcome::budget;
    rec.detail = "path search interrupted after " + std::to_string(e.nodes) +
                 " nodes; best seen " + std::to_string(e.best.length()) + " of " +
                 std::to_string(profile.pp);
    return rec;
  }

  auto [gc, layout_c] = build_G_c(params);
  long long present = 0;
  long long absent = 0;
  try {
    for (long long len = k + 1; len <= profile.pc + k + 1; ++len) {
      if (power_cycle_chromatic(k, static_cast<int>(len)) > k + 2) continue;
      std::optional<PowerCycleWitness> witness =
          find_power_cycle(gc, k, static_cast<int>(len), budget);
      if (len <= profile.pc) {
        if (!witness || !validate_power_cycle(gc, *witness)) {
          rec.outcome = Outcome::fail;
          rec.graph6 = to_graph6(gc);
          rec.detail = "cycle power on " + std::to_string(len) +
                       " vertices missing below the guarantee " +
                       std::to_string(profile.pc);
          return rec;
        }
        ++present;
      } else {
        if (witness) {
          rec.outcome = Outcome::fail;
          rec.graph6 = to_graph6(gc);
          rec.detail = "cycle power on " + std::to_string(len) +
                       " vertices found beyond the guarantee " +
                       std::to_string(profile.pc);
          return rec;
        }
        ++absent;
      }
    }
  } catch (const search_budget_exceeded& e) {
    rec.outcome = Outcome::budget;
    rec.graph6 = to_graph6(gc);
    rec.detail = "cycle search interrupted after " + std::to_string(e.nodes) + " nodes";
    return rec;
  }

  rec.outcome = Outcome::pass;
  rec.detail = "path length " + std::to_string(profile.pp) + "; " +
               std::to_string(present) + " embeddable cycle lengths present, " +
               std::to_string(absent) + " beyond the guarantee absent";
  return rec;
}

std::vector<Graph> sample_min_degree_graphs(int n, int min_degree, int count,
                                            std::uint64_t seed) {
  if (n < 1) throw domain_error("graph sampling requires n >= 1");
  if (min_degree > n - 1)
    throw domain_error("minimum degree " + std::to_string(min_degree) +
                       " unreachable on " + std::to_string(n) + " vertices");
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(n > 1 ? std::min(1.0, static_cast<double>(min_degree) /
                                                             (n - 1))
                                         : 0.0);
  for (int sample = 0; sample < count; ++sample) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (edge(rng)) g.add_edge(u, v);
    while (true) {
      int worst = -1;
      for (int v = 0; v < n; ++v)
        if (worst < 0 || g.degree(v) < g.degree(worst)) worst = v;
      if (g.degree(worst) >= min_degree) break;
      std::vector<int> candidates;
      for (int u = 0; u < n; ++u)
        if (u != worst && !g.has_edge(worst, u)) candidates.push_back(u);
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      g.add_edge(worst, candidates[pick(rng)]);
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<VerificationRecord> probe_theorem(
    int k, int n_min, int n_max, const std::function<long long(int)>& delta_rule,
    int samples, std::uint64_t seed, std::uint64_t budget) {
  std::vector<VerificationRecord> records;
  for (int n = n_min; n <= n_max; ++n) {
    PowerParams params{k, n, 0};
    if (delta_rule) {
      params.delta = delta_rule(n);
    } else {
      if (static_cast<long long>(k) * (n - 1) <= static_cast<long long>(k - 1) * n)
        continue;  // no in-domain minimum degree at this n
      params.delta = domain_min_delta(k, n);
    }
    if (!params_in_domain(params)) continue;
    const ThresholdProfile profile = compute_profile(params);
    const std::uint64_t cell_seed =
        mix_seed(seed, static_cast<std::uint64_t>(n) * 131u + static_cast<std::uint64_t>(k));
    std::vector<Graph> cell =
        sample_min_degree_graphs(n, static_cast<int>(params.delta), samples, cell_seed);
    for (int i = 0; i < static_cast<int>(cell.size()); ++i) {
      const Graph& g = cell[i];
      VerificationRecord rec;
      rec.claim = "guaranteed path power present";
      rec.params = param_string(k, params.n, params.delta);
      rec.generator = "random(seed=" + std::to_string(cell_seed) +
                      ",index=" + std::to_string(i) + ")";
      rec.graph6 = to_graph6(g);
      try {
        PowerPathWitness longest = longest_power_path_exact(g, k, budget);
        if (longest.length() >= profile.pp) {
          rec.outcome = Outcome::pass;
          rec.detail = "longest " + std::to_string(longest.length()) + " >= guaranteed " +
                       std::to_string(profile.pp);
        } else {
          rec.outcome = Outcome::counterexample_at_small_n;
          rec.detail = "longest " + std::to_string(longest.length()) + " < guaranteed " +
                       std::to_string(profile.pp);
        }
      } catch (const search_budget_exceeded& e) {
        if (e.best.length() >= profile.pp) {
          rec.outcome = Outcome::pass;
          rec.detail = "witness of length " + std::to_string(e.best.length()) +
                       " found before the budget";
        } else {
          rec.outcome = Outcome::budget;
          rec.detail = "undecided after " + std::to_string(e.nodes) + " nodes";
        }
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::vector<VerificationRecord> run_probe_campaign(const CampaignConfig& config) {
  if (config.k_min > config.k_max || config.n_min > config.n_max)
    throw domain_error("campaign ranges must be non-empty");
  std::vector<VerificationRecord> records;
  for (int k = config.k_min; k <= config.k_max; ++k) {
    std::vector<VerificationRecord> part =
        probe_theorem(k, config.n_min, config.n_max, nullptr, config.samples_per_cell,
                      config.seed, config.budget);
    records.insert(records.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
  }
  return records;
}

namespace {

// Iterated degree refinement: vertex colors start as degrees and are
// re-ranked by (color, sorted neighbor colors) until the partition stops
// splitting.  Colors depend only on the isomorphism type.
std::vector<int> refined_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = 0;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> around;
      const VertexSet& nb = g.neighbors(v);
      for (int u = nb.first(); u >= 0; u = nb.next(u)) around.push_back(color[u]);
      std::sort(around.begin(), around.end());
      sig[v] = {color[v], std::move(around)};
    }
    std::vector<std::pair<int, std::vector<int>>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    const int now = static_cast<int>(distinct.size());
    if (now == classes) break;
    classes = now;
  }
  return color;
}

// Lexicographically smallest adjacency bit string over vertex orders that
// list the refinement classes in color order; backtracking with prefix
// pruning.  Isomorphic graphs produce identical strings.
std::string canonical_code(const Graph& g) {
  const int n = g.order();
  std::string head = std::to_string(n) + ":";
  if (n == 0) return head;
  const std::vector<int> color = refined_colors(g);
  const int classes = *std::max_element(color.begin(), color.end()) + 1;
  std::vector<std::vector<int>> members(static_cast<std::size_t>(classes));
  for (int v = 0; v < n; ++v) members[color[v]].push_back(v);
  std::vector<int> class_at;  // class providing the vertex at each position
  for (int c = 0; c < classes; ++c)
    class_at.insert(class_at.end(), members[c].size(), c);

  std::string best;
  std::string cur;
  cur.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  std::vector<int> order;
  order.reserve(n);
  std::vector<char> used(n, 0);
  auto walk = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      if (best.empty() || cur < best) best = cur;
      return;
    }
    for (int v : members[class_at[pos]]) {
      if (used[v]) continue;
      const std::size_t mark = cur.size();
      for (int i = 0; i < pos; ++i) cur.push_back(g.has_edge(order[i], v) ? '1' : '0');
      if (best.empty() || cur.compare(0, cur.size(), best, 0, cur.size()) <= 0) {
        used[v] = 1;
        order.push_back(v);
        self(self, pos + 1);
        order.pop_back();
        used[v] = 0;
      }
      cur.resize(mark);
    }
  };
  walk(walk, 0);
  return head + best;
}

Graph graph_from_code(const std::string& code) {
  const std::size_t colon = code.find(':');
  const int n = std::stoi(code.substr(0, colon));
  Graph g(n);
  std::size_t at = colon + 1;
  for (int pos = 1; pos < n; ++pos)
    for (int i = 0; i < pos; ++i, ++at)
      if (code[at] == '1') g.add_edge(i, pos);
  return g;
}

}  // namespace

std::vector<Graph> enumerate_small_graphs(int n, int min_degree) {
  if (n < 1 || n > 8)
    throw domain_error("orderly enumeration supports 1 <= n <= 8, got n = " +
                       std::to_string(n));
  std::set<std::string> level;
  level.insert(canonical_code(Graph(1)));
  for (int m = 2; m <= n; ++m) {
    std::set<std::string> next;
    for (const std::string& code : level) {
      const Graph base = graph_from_code(code);
      for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
        Graph g(m);
        for (int u = 0; u < m - 1; ++u) {
          const VertexSet& nb = base.neighbors(u);
          for (int v = nb.next(u); v >= 0; v = nb.next(v)) g.add_edge(u, v);
          if (mask & (1u << u)) g.add_edge(u, m - 1);
        }
        next.insert(canonical_code(g));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (const std::string& code : level) {
    Graph g = graph_from_code(code);
    if (g.min_degree() >= min_degree) out.push_back(std::move(g));
  }
  return out;
}

StabilityReport stability_probe(int k, const Graph& g, std::uint64_t budget) {
  const int n = g.order();
  const int delta = g.min_degree();
  if (k < 2) throw domain_error("stability probe requires k >= 2");
  if (static_cast<long long>(k) * delta <= static_cast<long long>(k - 1) * n)
    throw domain_error("stability probe requires k*delta > (k-1)*n");

  StabilityReport rep;
  rep.k = k;
  rep.n = n;
  rep.min_degree = delta;
  rep.surplus = static_cast<long long>(k) * delta - static_cast<long long>(k - 1) * n;
  rep.large_factor_threshold = static_cast<long long>(k + 1) * rep.surplus;
  PowerParams params{k, n, delta};
  rep.target_cover = params_in_domain(params) ? compute_profile(params).pp : 0;

  CliqueComponentDecomposition d = decompose(g, k);
  rep.component_count = d.count();
  for (const auto& comp : d.components) rep.exterior_sizes.push_back(comp.exterior.count());
  const VertexSet interior = d.interior();
  rep.interior_size = interior.count();

  int best = 0;
  for (int c = 0; c < d.count(); ++c)
    best = std::max(best, ck_factor_exact(g, d, c, budget).size());
  rep.connected_factor_cover = best;
  rep.large_factor = best >= rep.large_factor_threshold;
  rep.target_factor = rep.target_cover > 0 && best >= rep.target_cover;

  if (rep.interior_size > 0) rep.interior_chromatic = chromatic_number_exact(g.induced(interior));

  VertexSet rest = g.all_vertices() - interior;
  VertexSet pending = rest;
  while (!pending.empty()) {
    VertexSet frontier(n);
    frontier.set(pending.first());
    VertexSet comp(n);
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet grown(n);
      for (int v = frontier.first(); v >= 0; v = frontier.next(v))
        grown |= g.neighbors(v) & rest;
      grown -= comp;
      frontier = grown;
    }
    rep.residual_component_sizes.push_back(comp.count());
    pending -= comp;
  }
  std::sort(rep.residual_component_sizes.begin(), rep.residual_component_sizes.end());

  // Residual components must stay below 1.9x the degree surplus, rounded up
  // so that integral sizes sitting on the constant are still accepted.
  bool residual_small = true;
  for (int size : rep.residual_component_sizes)
    if (10LL * size > 19LL * rep.surplus + 9) residual_small = false;
  rep.extremal_like = rep.interior_size > 0 && rep.interior_chromatic <= k - 1 &&
                      residual_small;

  std::ostringstream verdict;
  if (rep.large_factor) verdict << "large-factor ";
  if (rep.target_factor) verdict << "target-factor ";
  if (rep.extremal_like) {
    verdict << "extremal-shape(interior=" << rep.interior_size << " in "
            << rep.interior_chromatic << " classes, residuals<=";
    verdict << (rep.residual_component_sizes.empty()
                    ? 0
                    : rep.residual_component_sizes.back());
    verdict << ") ";
  }
  std::string s = verdict.str();
  if (s.empty()) s = "none at this scale ";
  s += "(advisory)";
  rep.classification = s;
  return rep;
}

}  // namespace powpath
