#include "powpath/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>

namespace powpath {

namespace {
constexpr int kWordBits = 64;
int word_count(int n) { return (n + kWordBits - 1) / kWordBits; }
} // namespace

VertexSet::VertexSet(int universe) : n_(universe), w_(word_count(universe), 0) {
    assert(universe >= 0);
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> members) {
    VertexSet s(universe);
    for (int v : members) s.set(v);
    return s;
}

bool VertexSet::test(int v) const {
    assert(v >= 0 && v < n_);
    return (w_[v / kWordBits] >> (v % kWordBits)) & 1u;
}

void VertexSet::set(int v) {
    assert(v >= 0 && v < n_);
    w_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::reset(int v) {
    assert(v >= 0 && v < n_);
    w_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

void VertexSet::clear() { std::fill(w_.begin(), w_.end(), 0); }

int VertexSet::count() const {
    int c = 0;
    for (std::uint64_t word : w_) c += std::popcount(word);
    return c;
}

int VertexSet::first() const { return next(-1); }

int VertexSet::next(int v) const {
    int start = v + 1;
    if (start >= n_) return -1;
    int wi = start / kWordBits;
    std::uint64_t word = w_[wi] >> (start % kWordBits);
    if (word != 0) return start + std::countr_zero(word);
    for (wi += 1; wi < static_cast<int>(w_.size()); ++wi) {
        if (w_[wi] != 0) return wi * kWordBits + std::countr_zero(w_[wi]);
    }
    return -1;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
}

bool VertexSet::intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (w_[i] & o.w_[i]) return true;
    }
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (w_[i] & ~o.w_[i]) return false;
    }
    return true;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool sep = false;
    for (int v = first(); v >= 0; v = next(v)) {
        if (sep) os << ", ";
        os << v;
        sep = true;
    }
    os << '}';
    return os.str();
}

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
        throw domain_error("graph order out of range: " + std::to_string(n));
    }
    adj_.assign(n, VertexSet(n));
}

void Graph::add_edge(int u, int v) {
    assert(u >= 0 && u < n_ && v >= 0 && v < n_);
    if (u == v) throw domain_error("loops are not representable");
    adj_[u].set(v);
    adj_[v].set(u);
}

void Graph::remove_edge(int u, int v) {
    assert(u >= 0 && u < n_ && v >= 0 && v < n_ && u != v);
    adj_[u].reset(v);
    adj_[v].reset(u);
}

bool Graph::has_edge(int u, int v) const {
    assert(u >= 0 && u < n_ && v >= 0 && v < n_);
    if (u == v) return false;
    return adj_[u].test(v);
}

const VertexSet& Graph::neighbors(int v) const {
    assert(v >= 0 && v < n_);
    return adj_[v];
}

int Graph::degree_in(int v, const VertexSet& within) const {
    return (adj_[v] & within).count();
}

int Graph::min_degree() const {
    assert(n_ > 0);
    int best = n_;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

VertexSet Graph::all_vertices() const {
    VertexSet s(n_);
    for (int v = 0; v < n_; ++v) s.set(v);
    return s;
}

Graph Graph::complement() const {
    Graph h(n_);
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (!has_edge(u, v)) h.add_edge(u, v);
        }
    }
    return h;
}

Graph Graph::induced(const VertexSet& within, std::vector<int>* back_map) const {
    assert(within.universe() == n_);
    std::vector<int> verts = within.to_vector();
    std::vector<int> fwd(n_, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) fwd[verts[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (has_edge(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    if (back_map != nullptr) *back_map = std::move(verts);
    return h;
}

bool Graph::is_clique(const VertexSet& s) const {
    for (int u = s.first(); u >= 0; u = s.next(u)) {
        for (int v = s.next(u); v >= 0; v = s.next(v)) {
            if (!has_edge(u, v)) return false;
        }
    }
    return true;
}

bool Graph::is_independent(const VertexSet& s) const {
    for (int u = s.first(); u >= 0; u = s.next(u)) {
        if (adj_[u].intersects(s)) return false;
    }
    return true;
}

bool Matching::valid_in(const Graph& g) const {
    VertexSet seen(g.order());
    for (const auto& [u, v] : pairs) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) return false;
        if (!g.has_edge(u, v)) return false;
        if (seen.test(u) || seen.test(v)) return false;
        seen.set(u);
        seen.set(v);
    }
    return true;
}

VertexSet Matching::vertices(int universe) const {
    VertexSet s(universe);
    for (const auto& [u, v] : pairs) {
        s.set(u);
        s.set(v);
    }
    return s;
}

} // namespace powpath
