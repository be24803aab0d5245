// Clique-walk component structure. Two K_k copies are joined when some
// K_{k+1} contains both; the transitive closure splits all K_k copies into
// components whose vertex sets overlap in an "interior" (vertices shared by
// more than one component) and per-component "exterior" (vertices private to
// one component). On top of the decomposition this header offers an exact
// maximum disjoint K_{k+1} packing inside one component, a search for the
// replaced-clique configuration used by the structural analysis, and a
// checker for the component size/degree facts valid above minimum degree
// (k-1)n/k.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "powpath/graphs.hpp"

namespace powpath {

struct CliqueComponentDecomposition {
  struct Component {
    VertexSet vertices;  // covered by at least one K_k of the component
    VertexSet interior;  // also covered by some other component
    VertexSet exterior;  // vertices ∖ interior
  };

  int k = 1;
  int order = 0;                           // vertex count of the decomposed graph
  std::vector<std::vector<int>> kcliques;  // every K_k, sorted; list in lex order
  std::vector<int> component_of;           // kcliques index -> component id
  std::vector<Component> components;

  int count() const { return static_cast<int>(components.size()); }

  // Union of all component interiors (equivalently: vertices covered by K_k's
  // of two distinct components).
  VertexSet interior() const;

  // Index of a sorted K_k in `kcliques`, or -1 when absent.
  int find_clique(const std::vector<int>& sorted_clique) const;

  // Component id of a sorted K_k, or -1 when the clique is absent.
  int component_of_clique(const std::vector<int>& sorted_clique) const;
};

// Disjoint K_{k+1} copies whose K_k subsets all lie in one component.
struct ConnectedCliqueFactor {
  std::vector<std::vector<int>> cliques;  // each sorted, pairwise disjoint
  int component_id = -1;                  // -1 for the empty factor

  int count() const { return static_cast<int>(cliques.size()); }
  int size() const;  // vertices covered = (k+1) * count()
};

inline constexpr std::size_t kDefaultCliqueLimit = 4u << 20;
inline constexpr std::uint64_t kDefaultSearchBudget = 20'000'000;

// Enumerates every K_k of `g` (recursive ascending bitset scan) and unites
// the k+1 facets of every K_{k+1}. Throws resource_exhausted when the K_k
// count exceeds `max_cliques`, domain_error for k < 1.
CliqueComponentDecomposition decompose(const Graph& g, int k,
                                       std::size_t max_cliques = kDefaultCliqueLimit);

// First-fit packing of the K_{k+1} copies belonging to component
// `component_id`, in lexicographic candidate order: a fast lower bound the
// exact search seeds from and must dominate. Throws domain_error for an
// unknown component id.
ConnectedCliqueFactor ck_factor_greedy(const Graph& g, const CliqueComponentDecomposition& d,
                                       int component_id);

// Maximum-cardinality disjoint packing of the K_{k+1} copies belonging to
// component `component_id`: branch and bound seeded by the greedy packing and
// pruned with a counting bound (available vertices per independent slice).
// Throws domain_error for an unknown component id, resource_exhausted past
// `budget` search nodes.
ConnectedCliqueFactor ck_factor_exact(const Graph& g, const CliqueComponentDecomposition& d,
                                      int component_id,
                                      std::uint64_t budget = kDefaultSearchBudget);

// Witness of the replaced-clique configuration with parameters (j, ell):
// a central K_k u_1..u_k in component `component_id`, a replacement block
// v_{j+1}..v_ell such that u_1..u_j v_{j+1}..v_ell u_{ell+1}..u_k is a K_k
// outside the component, and for every p in (j, ell] a block w_{p,1..ell-1}
// such that u_p w_{p,1}..w_{p,ell-1} u_{ell+1}..u_k is a K_k outside the
// component. Vertices of different blocks may coincide.
struct ConfigurationWitness {
  int j = 0;
  int ell = 0;
  int k = 0;
  std::vector<int> u;                // u_1..u_k
  std::vector<int> v;                // v_{j+1}..v_ell (ell-j entries)
  std::vector<std::vector<int>> w;   // rows p = j+1..ell, each ell-1 entries
  int component_id = -1;             // component of the central K_k
};

// Exhaustive search for the configuration, pruning by component membership.
// Returns std::nullopt when no witness exists. Requires 1 <= j < ell <= k
// (domain_error otherwise); throws resource_exhausted past `budget` nodes.
// A found witness is re-verified before it is returned.
std::optional<ConfigurationWitness> detect_configuration(
    const Graph& g, const CliqueComponentDecomposition& d, int j, int ell,
    std::uint64_t budget = kDefaultSearchBudget);

// Checks a ConfigurationWitness against the graph and decomposition.
bool verify_configuration(const Graph& g, const CliqueComponentDecomposition& d,
                          const ConfigurationWitness& w);

// Component facts valid for min degree > (k-1)n/k: every component has more
// than min_degree vertices; exteriors of distinct components span no edge;
// for every K_{k-1} inside a component the set of vertices completing it to
// a K_k of that component induces minimum degree >= k*min_degree-(k-1)n and
// has more than k*min_degree-(k-1)n vertices. With more than one component,
// the interior holds at least 2*min_degree-n+2 vertices and every exterior
// at most n-min_degree-1.
struct ComponentFactsReport {
  bool component_size_ok = true;         // |C| > min_degree for every C
  bool exterior_edges_ok = true;         // no exterior-to-exterior edges
  bool extension_degree_ok = true;       // completion sets: min degree and size
  bool interior_size_applicable = false; // more than one component present
  bool interior_size_ok = true;          // |interior| >= 2*min_degree-n+2
  bool exterior_size_ok = true;          // |exterior(C)| <= n-min_degree-1
  std::string detail;                    // first failure, empty when all pass

  bool all_ok() const {
    return component_size_ok && exterior_edges_ok && extension_degree_ok &&
           interior_size_ok && exterior_size_ok;
  }
};

// Evaluates the facts above. `min_degree` must satisfy
// k*min_degree > (k-1)*n and be at most the true minimum degree of `g`
// (domain_error otherwise).
ComponentFactsReport check_component_facts(const Graph& g,
                                           const CliqueComponentDecomposition& d,
                                           int min_degree);

}  // namespace powpath
