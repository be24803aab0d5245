#include "powpath/thresholds.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace powpath {

bool params_in_domain(const PowerParams& p) {
    if (p.k < 2) return false;
    if (p.n < p.k + 2) return false;
    // (k-1)n/k < delta <= n-1, compared by cross-multiplication.
    if (static_cast<long long>(p.k) * p.delta <= static_cast<long long>(p.k - 1) * p.n) {
        return false;
    }
    return p.delta <= p.n - 1;
}

void validate_params(const PowerParams& p) {
    if (p.k < 2) throw domain_error("power must be at least 2");
    if (p.n < p.k + 2) throw domain_error("host order must be at least k+2");
    if (!params_in_domain(p)) {
        std::ostringstream os;
        os << "delta=" << p.delta << " outside ((k-1)n/k, n-1] for k=" << p.k << ", n=" << p.n;
        throw domain_error(os.str());
    }
}

long long clique_part_size(const PowerParams& p) {
    return static_cast<long long>(p.k - 1) * p.delta - static_cast<long long>(p.k - 2) * p.n;
}

long long degree_surplus(const PowerParams& p) {
    return static_cast<long long>(p.k) * p.delta - static_cast<long long>(p.k - 1) * p.n;
}

long long compute_r(const PowerParams& p, Variant variant) {
    validate_params(p);
    const long long a = clique_part_size(p);
    const long long t = degree_surplus(p);
    assert(t >= 1 && a >= t + 1); // a - t = n - delta >= 1 in-domain
    auto holds = [&](long long r) {
        long long q = variant == Variant::path ? a / r : (a + r - 1) / r;
        return q > t;
    };
    long long r = 1;
    assert(holds(1));
    while (holds(r + 1)) r += 1;
    return r;
}

ThresholdProfile compute_profile(const PowerParams& p) {
    validate_params(p);
    const long long a = clique_part_size(p);
    ThresholdProfile t;
    t.r_p = compute_r(p, Variant::path);
    t.r_c = compute_r(p, Variant::cycle);
    t.s_p = (a + t.r_p - 1) / t.r_p;
    t.s_c = (a + t.r_c - 1) / t.r_c;
    t.pp = std::min<long long>((p.k - 1) * (t.s_p / 2 + 1) + t.s_p, p.n);
    t.pc = std::min<long long>((p.k - 1) * (t.s_c / 2) + t.s_c, p.n);
    assert(t.r_c >= t.r_p);
    assert(t.pc <= t.pp);
    return t;
}

bool validate_r_inequalities(const PowerParams& p) {
    validate_params(p);
    const long long k = p.k;
    const long long n = p.n;
    const long long d = p.delta;
    const long long a = clique_part_size(p);
    const long long t = degree_surplus(p);
    const long long r = compute_r(p, Variant::path);

    // (n-d-1)/(t+1) < r <= a/(t+1), cross-multiplied by t+1 > 0.
    if (!(n - d - 1 < r * (t + 1))) return false;
    if (!(r * (t + 1) <= a)) return false;

    // ((k-1)r+1)n - (r+1) < d(kr+1)  and  d(k(r-1)+1) <= ((k-1)(r-1)+1)n - r.
    if (!(((k - 1) * r + 1) * n - (r + 1) < d * (k * r + 1))) return false;
    if (!(d * (k * (r - 1) + 1) <= ((k - 1) * (r - 1) + 1) * n - r)) return false;
    return true;
}

long long domain_min_delta(int k, long long n) {
    // smallest integer delta with k*delta > (k-1)*n
    return (static_cast<long long>(k - 1) * n) / k + 1;
}

long long domain_max_delta(int /*k*/, long long n) { return n - 1; }

std::vector<std::pair<long long, ThresholdProfile>> threshold_table(int k, long long n) {
    if (k < 2) throw domain_error("power must be at least 2");
    if (n < k + 2) throw domain_error("host order must be at least k+2");
    std::vector<std::pair<long long, ThresholdProfile>> rows;
    for (long long d = domain_min_delta(k, n); d <= domain_max_delta(k, n); ++d) {
        rows.emplace_back(d, compute_profile({k, n, d}));
    }
    return rows;
}

std::string threshold_table_csv(int k, long long n) {
    std::ostringstream os;
    os << "k,n,delta,r_p,r_c,s_p,s_c,pp,pc\n";
    for (const auto& [d, t] : threshold_table(k, n)) {
        os << k << ',' << n << ',' << d << ',' << t.r_p << ',' << t.r_c << ',' << t.s_p << ','
           << t.s_c << ',' << t.pp << ',' << t.pc << '\n';
    }
    return os.str();
}

} // namespace powpath
