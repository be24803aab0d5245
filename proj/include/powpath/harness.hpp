// Verification campaigns over the rest of the library: tightness checks of
// the length profiles against the exact oracles, randomized and exhaustive
// graph generation, the structural trichotomy probe, and flat CSV/JSON record
// emission for external plotting.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "powpath/components.hpp"
#include "powpath/graphs.hpp"
#include "powpath/thresholds.hpp"

namespace powpath {

inline constexpr std::uint64_t kDefaultOracleBudget = 200'000'000;

// One campaign: a rectangle of (k, n) cells, a per-cell sample count, and a
// single 64-bit seed making the whole run replayable bit for bit.
struct CampaignConfig {
    int k_min = 2;
    int k_max = 2;
    int n_min = 0;
    int n_max = 0;
    int samples_per_cell = 0;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultOracleBudget;
    std::string output_path;  // empty: caller prints
};

enum class Outcome {
    pass,
    fail,
    counterexample_at_small_n,
    budget,
};

const char* outcome_name(Outcome o);

// One checked claim on one graph.  Counterexamples always carry the graph6
// encoding so they can be replayed; in fact every record does.
struct VerificationRecord {
    std::string claim;
    std::string params;     // "k=3 n=20 delta=14"
    std::string generator;  // "extremal", "random(seed=..,index=..)", ...
    std::string graph6;
    Outcome outcome = Outcome::pass;
    std::string detail;     // witness summary or gap description
};

// claim,params,generator,graph6,outcome,detail with RFC-4180 quoting.
std::string records_csv(const std::vector<VerificationRecord>& records);
std::string records_json(const std::vector<VerificationRecord>& records);

// One row per in-domain minimum degree: the guaranteed path and cycle power
// lengths next to the naive linear guess (k+1)(k*delta - (k-1)n), which the
// true profile tracks only between its staircase jumps.
struct Figure1Row {
    long long delta = 0;
    long long pp = 0;
    long long pc = 0;
    long long guess = 0;
};

std::vector<Figure1Row> figure1_data(int k, long long n);
std::string figure1_csv(int k, long long n);  // header: delta,pp,pc,guess

// Builds both extremal graphs for (k, n, delta) and checks them against the
// exact oracles: the longest k-th power of a path in the path-extremal graph
// has exactly the guaranteed length, and the cycle-extremal graph contains
// C^k_l exactly for the chromatically embeddable lengths l <= pc (and none
// of the chromatically embeddable lengths in (pc, pc + k + 1]).
VerificationRecord verify_tightness(int k, long long n, long long delta,
                                    std::uint64_t budget = kDefaultOracleBudget);

// `count` random graphs on n vertices conditioned on minimum degree >= d:
// independent edges at density d/(n-1), then repair passes that add an edge
// from a minimum-degree vertex to a uniformly random non-neighbor until the
// condition holds.  Deterministic under `seed`.
std::vector<Graph> sample_min_degree_graphs(int n, int min_degree, int count,
                                            std::uint64_t seed);

// Samples graphs in each cell n in [n_min, n_max] at delta = delta_rule(n)
// (default: the smallest in-domain minimum degree) and oracle-checks that a
// k-th power of a path of the guaranteed length is present.  Failures are
// recorded as counterexample-at-small-n — the guarantee is asymptotic, so a
// small-n violation is data, not an error.  Cells whose delta falls outside
// the domain are skipped.
std::vector<VerificationRecord> probe_theorem(
    int k, int n_min, int n_max, const std::function<long long(int)>& delta_rule,
    int samples, std::uint64_t seed, std::uint64_t budget = kDefaultOracleBudget);

// probe_theorem over every k in the config's range.
std::vector<VerificationRecord> run_probe_campaign(const CampaignConfig& config);

// All non-isomorphic graphs on n <= 8 vertices with minimum degree at least
// min_degree, by orderly generation: grow one vertex at a time, keeping one
// representative per isomorphism class under a canonical form (iterated
// degree refinement followed by backtracking minimization of the adjacency
// bit string).  Output is sorted by canonical form, hence deterministic.
std::vector<Graph> enumerate_small_graphs(int n, int min_degree);

// The structural trichotomy probe: the exact best single-component clique
// factor against its two lower-bound targets, plus the partite shape of the
// interior.  Constants in the extremal-shape clause are asymptotic, so the
// verdict line is advisory.
struct StabilityReport {
    int k = 0;
    int n = 0;
    int min_degree = 0;
    long long surplus = 0;                  // k*delta - (k-1)*n
    int connected_factor_cover = 0;         // vertices in the best factor
    long long large_factor_threshold = 0;   // (k+1)*surplus
    long long target_cover = 0;             // guaranteed path power length
    bool large_factor = false;              // cover >= threshold
    bool target_factor = false;             // cover >= target
    int component_count = 0;
    std::vector<int> exterior_sizes;
    int interior_size = 0;
    int interior_chromatic = 0;             // 0 when the interior is empty
    std::vector<int> residual_component_sizes;  // components of g - interior
    bool extremal_like = false;             // interior (k-1)-partite and small residuals
    std::string classification;
};

StabilityReport stability_probe(int k, const Graph& g,
                                std::uint64_t budget = kDefaultSearchBudget);

}  // namespace powpath
