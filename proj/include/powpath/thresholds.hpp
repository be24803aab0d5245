// Arithmetic of the guaranteed path/cycle power lengths at a given minimum
// degree: the clique-count parameters r, the clique sizes s, and the length
// profiles pp/pc, together with the sanity inequalities they satisfy. All
// computation is exact integer arithmetic; fractional comparisons are done by
// cross-multiplication.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "powpath/errors.hpp"

namespace powpath {

// Parameter triple (k, n, delta). Valid when k >= 2, n >= k+2 and
// (k-1)n/k < delta <= n-1; outside that range the derived quantities are
// undefined and computations throw domain_error rather than extrapolate.
struct PowerParams {
    int k = 2;
    long long n = 0;
    long long delta = 0;
};

struct ThresholdProfile {
    long long r_p = 0; // clique count, floor variant (paths)
    long long r_c = 0; // clique count, ceiling variant (cycles)
    long long s_p = 0; // largest clique size, path variant
    long long s_c = 0; // largest clique size, cycle variant
    long long pp = 0;  // guaranteed power-of-path length (capped at n)
    long long pc = 0;  // guaranteed power-of-cycle length (capped at n)
};

enum class Variant { path, cycle };

// Throws domain_error when the params invariants fail.
void validate_params(const PowerParams& p);
bool params_in_domain(const PowerParams& p);

// a = (k-1)delta - (k-2)n: the number of vertices outside the independent
// sets. t = k*delta - (k-1)n: the degree surplus; in-domain t >= 1.
long long clique_part_size(const PowerParams& p);
long long degree_surplus(const PowerParams& p);

// Largest r with floor(a/r) > t (path) or ceil(a/r) > t (cycle). The
// predicate is monotone decreasing in r and holds at r = 1, so an upward
// scan terminates at the first failure.
long long compute_r(const PowerParams& p, Variant variant);

ThresholdProfile compute_profile(const PowerParams& p);

// The two bracketing inequalities tying r_p to (k, n, delta): the bound on r
// by the degree surplus, and the induced bracket on delta for that r. True
// across the whole domain; exposed as a checkable validator.
bool validate_r_inequalities(const PowerParams& p);

// One row per integer delta in the domain, ascending.
std::vector<std::pair<long long, ThresholdProfile>> threshold_table(int k, long long n);

// CSV with header k,n,delta,r_p,r_c,s_p,s_c,pp,pc.
std::string threshold_table_csv(int k, long long n);

// Smallest and largest in-domain delta for (k, n).
long long domain_min_delta(int k, long long n);
long long domain_max_delta(int k, long long n);

} // namespace powpath
